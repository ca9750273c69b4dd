"""Build script: compiles the enumeration core when Cython is available.

The extension is optional; without it the package transparently uses the
pure-Python core.  Set FSTCHAR_NO_EXT=1 to skip the extension build.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FSTCHAR_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fstchar._enumcore",
                    ["src/fstchar/_enumcore.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
