import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SP4GT_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(["src/sp4gt/_kernels.pyx"], language_level=3, quiet=True)
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
