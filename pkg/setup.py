"""Build hooks for the optional compiled scan kernel.

The package is pure Python plus one Cython extension for the hot
brute-force circle scan.  The extension is strictly optional: when Cython
or a C compiler is missing, or the build fails, installation proceeds and
the pure-Python fallback kernel is selected at import time.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extension_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython unavailable; using the pure-Python scan kernel")
        return []
    from setuptools import Extension

    return cythonize(
        [
            Extension(
                "mhsverify._cubescan",
                ["src/mhsverify/_cubescan.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


class optional_build_ext(build_ext):
    """Degrade to the pure-Python kernel when compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            warnings.warn(f"compiled scan kernel skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled scan kernel skipped: {exc}")


setup(
    ext_modules=extension_modules(),
    cmdclass={"build_ext": optional_build_ext},
)
