"""Build script. The compiled kernel extension is optional: if Cython or a C
compiler is unavailable the package still installs and falls back to the
pure-numpy kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qlorentz._kernels._core",
                ["src/qlorentz/_kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("Cython/numpy not available at build time; skipping compiled kernels.")

setup(ext_modules=ext_modules)
