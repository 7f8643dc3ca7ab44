import os

from setuptools import setup

ext_modules = []
if os.environ.get("GEX_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "gex._kernels",
                    ["src/gex/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-Python fallback in gex._kernels_py is used at import time
        ext_modules = []

setup(ext_modules=ext_modules)
