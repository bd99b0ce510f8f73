"""Build the optional Cython kernel; the package falls back to pure Python without it."""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QUASIRANDIC_NO_EXT"):
    try:
        from Cython.Build import cythonize
        import numpy as np
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "quasirandic._ckernels",
                    ["src/quasirandic/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
