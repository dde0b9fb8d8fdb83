import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PLOTKIN_WEF_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "plotkin_wef._kernel_cy",
                    ["src/plotkin_wef/_kernel_cy.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install the pure-Python package only.
        pass

setup(ext_modules=ext_modules)
