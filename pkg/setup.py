"""Build script for the compiled eigenvalue kernels.

The package is fully functional without the extension (a NumPy fallback is
selected at import time); set OPRADIUS_NO_EXT=1 to skip compilation.
"""

import os

import numpy as np
from setuptools import Extension, setup

if os.environ.get("OPRADIUS_NO_EXT"):
    ext_modules = []
else:
    from Cython.Build import cythonize

    ext = Extension(
        "opradius._kernels._jacobi",
        sources=["src/opradius/_kernels/_jacobi.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
