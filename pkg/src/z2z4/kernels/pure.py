"""NumPy implementations of the scan kernels (fallback backend).

Word matrices are C-contiguous uint8 arrays of shape (n, alpha + beta):
binary coordinates first, quaternary after.  Row order is lexicographic
wherever a function promises canonical output.
"""

from __future__ import annotations

import numpy as np

_LEE = np.array([0, 1, 2, 1], dtype=np.int64)


def lee_weights(mat: np.ndarray, alpha: int) -> np.ndarray:
    """Lee weight of every row."""
    mat = np.asarray(mat, dtype=np.uint8)
    out = (mat[:, :alpha] != 0).sum(axis=1, dtype=np.int64)
    out += _LEE[mat[:, alpha:]].sum(axis=1, dtype=np.int64)
    return out


def ambient_orthogonal(
    gens: np.ndarray, alpha: int, beta: int, chunk: int = 1 << 16
) -> np.ndarray:
    """Every ambient word orthogonal to all generator rows, in lex order.

    Scans all 2^alpha * 4^beta words; the caller enforces the size cap.
    With no generators the whole ambient space comes back.
    """
    gens = np.asarray(gens, dtype=np.uint8)
    width = alpha + beta
    total = (2**alpha) * (4**beta)
    radix = np.array([2] * alpha + [4] * beta, dtype=np.int64)
    stride = np.empty(width, dtype=np.int64)
    acc = 1
    for j in range(width - 1, -1, -1):
        stride[j] = acc
        acc *= int(radix[j])
    coeffs = gens.astype(np.int64)
    if len(coeffs):
        coeffs[:, :alpha] *= 2  # binary entries enter the form doubled
    kept = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // stride[None, :]) % radix[None, :]
        if len(coeffs):
            forms = (digits @ coeffs.T) % 4
            digits = digits[(forms == 0).all(axis=1)]
        kept.append(digits.astype(np.uint8))
    return np.vstack(kept)


def permuted_equals(mat: np.ndarray, perm: np.ndarray, target: np.ndarray) -> bool:
    """Does permuting the columns of ``mat`` by ``perm`` give the row set of ``target``?

    ``target`` must be lex-sorted with distinct rows; ``mat`` must have
    distinct rows.  Column j of the image is column perm[j] of the input.
    """
    mat = np.asarray(mat, dtype=np.uint8)
    target = np.asarray(target, dtype=np.uint8)
    if mat.shape != target.shape:
        return False
    image = mat[:, perm]
    order = np.lexsort(image.T[::-1])
    return bool(np.array_equal(image[order], target))
