"""Build script: compiles the optional translation-scan extension.

The extension is a pure speedup. If Cython or a C++ toolchain is missing
the build degrades to the pure-Python scan in coinflip._scan, which the
package selects automatically at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install over the optional extension."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing or broken
            print(f"warning: skipping compiled scan extension ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc})")


def extensions():
    if os.environ.get("COINFLIP_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "coinflip._scan_cy",
                sources=["src/coinflip/_scan_cy.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
