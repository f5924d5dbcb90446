"""Build the optional compiled kernels.

The package is fully functional without them; if Cython or a C compiler is
unavailable the extension is simply skipped and the pure-Python kernels in
``asymhecke._kernels_py`` are used.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/asymhecke/_kernels.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"asymhecke: skipping compiled kernels ({exc})")

setup(ext_modules=ext_modules)
