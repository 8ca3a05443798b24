"""Build script for the optional compiled kernel extension.

The package is pure Python plus one Cython extension holding the hot
loops (lattice enumeration and batch segment metrics).  If Cython or a
C compiler is unavailable the extension is skipped and the package
falls back to the pure-Python kernels at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to the pure-Python fallback on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the compiled kernels failed ({exc}); "
            "installing with the pure-Python fallback only.",
            file=sys.stderr,
        )


extensions = [
    Extension(
        "bezout_bezier._kernels",
        ["src/bezout_bezier/_kernels.pyx"],
        # -ffp-contract=off keeps float results bit-identical to the
        # pure-Python kernels (no FMA contraction).
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
]

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print(
        "WARNING: Cython not available; skipping the compiled kernels.",
        file=sys.stderr,
    )
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
