"""Build script: compiles the optional Cython kernels.

If Cython is missing or the compiler fails, the package still installs and
falls back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("softroot._kernels", ["src/softroot/_kernels.pyx"], extra_compile_args=["-O2"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
