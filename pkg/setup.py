"""Build script: compiles the GF(2) kernel extension when Cython is available.

The package works without the extension (booldim._kernels_py is a complete
pure-Python fallback), so a failed extension build only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "booldim._kernels_cy",
                ["src/booldim/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
