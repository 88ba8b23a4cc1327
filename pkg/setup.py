"""Build script for the optional compiled channel kernel.

The package is pure Python plus one Cython extension that fuses the
per-element distance/phase/amplitude loop of the channel builder.  If
Cython or a C compiler is unavailable the extension is skipped and the
package falls back to the numpy kernel at import time.
"""

from setuptools import Extension, setup


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "nfprecode.kernels._spherical_cy",
        ["src/nfprecode/kernels/_spherical_cy.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
