"""Build script: compiles the optional Cython kernel.

The compiled module is an accelerator only; if Cython or a C compiler is
missing the build falls back to a pure-Python install (wreathdet._kernels
selects the backend at import time).
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the C accelerator failed ({exc}); "
            "installing pure-Python fallback only.",
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "wreathdet._kernels._cycore",
                ["src/wreathdet/_kernels/_cycore.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("WARNING: Cython not available; skipping the C accelerator.", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
