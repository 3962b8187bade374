"""Build script for the optional compiled kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the extension only accelerates the
hot kernels.  Build failures therefore degrade to a warning instead of
aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernel build: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


ext = Extension("finframe._kernel", ["src/finframe/_kernel.pyx"])

try:
    from Cython.Build import cythonize

    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
