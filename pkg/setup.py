from setuptools import Extension, setup

# The scan kernels have a Cython fast path; the package falls back to the
# NumPy implementation at import time if the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("z2z4.kernels._speed", ["src/z2z4/kernels/_speed.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
