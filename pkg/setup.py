import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("REACALC_NO_EXT", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
    except ImportError:  # build without the compiled kernel
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("reacalc._ratfunc", ["src/reacalc/_ratfunc.pyx"])],
            compiler_directives={"language_level": 3},
            quiet=True,
        )

setup(ext_modules=ext_modules)
