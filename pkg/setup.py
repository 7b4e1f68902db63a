import os

import numpy as np
from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BUCHIGAMES_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("buchigames._ckernels",
                       ["src/buchigames/_ckernels.pyx"],
                       include_dirs=[np.get_include()],
                       extra_compile_args=["-O3"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
