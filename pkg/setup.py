import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PACKEDGE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("packedge._kernel", ["src/packedge/_kernel.pyx"])],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # No Cython at build time: install the pure-Python package only.
        # The solver falls back to packedge._kernel_py at import.
        ext_modules = []

setup(ext_modules=ext_modules)
