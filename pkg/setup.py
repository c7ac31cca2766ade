"""Build script: compiles the optional Cython solver kernel.

The package works without the extension (pure-Python fallback is selected at
import time), so any build failure here is demoted to a warning.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hamlat/solver/_speedups.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write(f"hamlat: skipping Cython extension ({exc})\n")

setup(ext_modules=ext_modules)
