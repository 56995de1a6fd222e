"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import); set SLB_DECIDER_NO_EXT=1 to skip the
build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SLB_DECIDER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "slb_decider._kernels.cashflow_cy",
                    ["src/slb_decider/_kernels/cashflow_cy.pyx"],
                    # No -ffast-math / -march=native: the compiled kernels must
                    # produce bit-identical IEEE results to the Python fallback.
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
