"""Build the optional compiled kernel; the package falls back to pure Python without it."""
import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("STEINER_SPARSE_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "steiner_sparse._ckernels",
                ["src/steiner_sparse/_ckernels.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
            "embedsignature": True,
        },
    )

setup(ext_modules=ext_modules)
