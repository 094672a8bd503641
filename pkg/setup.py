"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-numpy fallback is selected
at import time), so a failed compile only costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy as np

    ext_modules = cythonize(
        [
            Extension(
                "condens._kernels",
                ["src/condens/_kernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
