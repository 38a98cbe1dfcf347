"""Build script: compiles the optional C extension for the hot kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so any build failure here downgrades to a warning instead
of aborting the install.  Set VTSYNC_NO_EXT=1 to skip the extension build.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: C extension build failed ({exc}); "
                  "falling back to pure Python", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure Python", file=sys.stderr)


ext_modules = []
cmdclass = {}
if os.environ.get("VTSYNC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("vtsync._core", ["src/vtsync/_core.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
        cmdclass = {"build_ext": optional_build_ext}
    except ImportError:
        print("warning: Cython not available; building without the C extension",
              file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass=cmdclass)
