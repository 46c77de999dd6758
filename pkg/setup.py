import numpy
from setuptools import setup
from setuptools.extension import Extension

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in episcan._cd_py when the extension is unavailable.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "episcan._cd",
                ["src/episcan/_cd.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
