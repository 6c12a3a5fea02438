"""Build hook for the optional compiled kernels.

If Cython or a C compiler is missing the package still installs and falls
back to the pure-Python kernels.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("fanbundle._kernels", ["src/fanbundle/_kernels.pyx"],
                   include_dirs=[numpy.get_include()],
                   define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")])],
        language_level=3,
    )
except Exception as exc:  # noqa: BLE001 - any failure means "no extension"
    print(f"fanbundle: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
