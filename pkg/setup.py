import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    cythonize = None

ext_modules = []
if cythonize is not None and os.environ.get("BELLGRAPH_PURE_PYTHON") != "1":
    ext_modules = cythonize(
        [
            Extension(
                "bellgraph._ckernels",
                ["src/bellgraph/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
