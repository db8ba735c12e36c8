import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("QUASIKOORN_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("quasikoorn._ckernel", ["src/quasikoorn/_ckernel.pyx"])],
            compiler_directives={"language_level": "3", "cdivision": False},
        )

setup(ext_modules=ext_modules)
