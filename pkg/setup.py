"""Build script for the compiled kernel extension.

The extension is optional at runtime: if the build is unavailable the
package falls back to the pure-numpy kernels in sgadam._kernels_py.
-ffp-contract=off keeps the C loops bit-identical to the numpy fallback
(no FMA contraction of the update expressions).
"""

from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "sgadam._kernels",
        sources=["src/sgadam/_kernels.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
