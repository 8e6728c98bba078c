import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

openmp = os.environ.get("CLUTTERBEI_NO_OPENMP") is None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "clutterbei.kernels._ckernels",
                ["src/clutterbei/kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"] + (["-fopenmp"] if openmp else []),
                extra_link_args=["-fopenmp"] if openmp else [],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
