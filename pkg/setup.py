import numpy
from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = cythonize(
    [
        Extension(
            "robinsq._labelext",
            ["src/robinsq/_labelext.pyx"],
            extra_compile_args=["-O3"],
            include_dirs=[numpy.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        )
    ],
    compiler_directives={"language_level": 3},
)

setup(ext_modules=extensions)
