"""Build script: compiles the optional C extension for the hot kernels.

The package works without the extension (a numpy fallback is selected at
import time), so a failed compile only costs speed.  Set FHT_SKIP_EXT=1 to
skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Degrade to the pure-Python fallback when the compiler is unusable."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"warning: skipping C extension build ({exc}); "
                  "fasthough will use the numpy fallback kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "fasthough will use the numpy fallback kernels")


def extensions():
    if os.environ.get("FHT_SKIP_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the C kernels")
        return []
    ext = Extension("fasthough._core", ["src/fasthough/_core.pyx"])
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
