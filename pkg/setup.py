import os

from setuptools import Extension, setup

# The compiled staircase kernel is optional: without Cython (or with
# LCTK_NO_EXT=1) the package installs pure-Python and selects the fallback
# lane at import time.
ext_modules = []
if os.environ.get("LCTK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lctk._staircase", ["src/lctk/_staircase.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
