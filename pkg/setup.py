"""Build script: compiles the optional search kernel.

The package is fully functional without the extension (a pure-Python
engine with identical behaviour is selected at import time), so the
build tolerates a missing compiler or Cython. Set DDMOG_PURE=1 to skip
the extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("DDMOG_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("ddmog._search_cy", ["src/ddmog/_search_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
