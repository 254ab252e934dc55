"""Build hook for the optional compiled counting core.

The package is pure Python except for ``pattgf._core``, a Cython
translation of the brute-force counting kernel.  If Cython or a C
compiler is unavailable the build quietly skips the extension and the
package falls back to ``pattgf._kernel_py`` at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: compiled kernel skipped ({exc}); using the pure-Python fallback")


ext_modules = []
cmdclass = {}
if os.environ.get("PATTGF_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("pattgf._core", ["src/pattgf/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print("warning: Cython not available; building without the compiled kernel")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
