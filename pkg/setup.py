from setuptools import setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        ["src/tweedmg/_ckernels.pyx"],
        language_level=3,
    ),
)
