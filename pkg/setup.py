"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any failure here downgrades to a warning instead of
aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hurmod/_kernels/_speed.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    sys.stderr.write(
        "hurmod: skipping Cython kernel build (%s); "
        "the pure-Python fallback will be used\n" % exc
    )

setup(ext_modules=ext_modules)
