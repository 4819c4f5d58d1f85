"""Build script for the optional compiled kernel module.

The package works without the extension; strongcover._kernels falls back to
the pure-Python implementation when strongcover._speedups is not importable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("strongcover._speedups", ["src/strongcover/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
