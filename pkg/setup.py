"""Build script for the optional compiled Metropolis kernel.

The package is fully functional without the extension: ringtst.kernels
falls back to a pure-Python implementation at import time.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ringtst._ring_kernels", ["src/ringtst/_ring_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
