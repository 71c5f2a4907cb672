from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("lfclass._twistkernel",
                   ["src/lfclass/_twistkernel.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
)
