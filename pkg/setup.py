"""Build script: compiles the optional kernel extension when Cython is present.

Set CHARCORR_NO_EXT=1 to skip the extension entirely; the package then runs
on the pure-Python kernels.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CHARCORR_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("charcorr._speedups", ["src/charcorr/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
