"""Hot scan kernels: a compiled Cython fast path with a NumPy fallback.

The compiled backend is used when its extension module is importable.
Set ``Z2Z4_KERNELS=python`` to force the fallback or ``Z2Z4_KERNELS=c``
to insist on the compiled one (ImportError if it is missing).
"""

import importlib
import os

from . import pure as _pure

_requested = os.environ.get("Z2Z4_KERNELS", "").strip().lower()

_speed = None
if _requested not in ("python", "pure", "py"):
    try:
        _speed = importlib.import_module("._speed", __name__)
    except ImportError:
        if _requested in ("c", "compiled", "speed"):
            raise ImportError(
                "Z2Z4_KERNELS requested the compiled kernels but the "
                "z2z4.kernels._speed extension is not built"
            )
        _speed = None

if _speed is not None:
    _impl = _speed
    BACKEND = "compiled"
else:
    _impl = _pure
    BACKEND = "python"

lee_weights = _impl.lee_weights
ambient_orthogonal = _impl.ambient_orthogonal
permuted_equals = _impl.permuted_equals


def available_backends() -> dict:
    """Importable backend modules keyed by name."""
    out = {"python": _pure}
    if _speed is not None:
        out["compiled"] = _speed
    return out
