"""Build hooks: compile the optional GF(p) elimination kernel when Cython and
a C toolchain are available, otherwise fall back to the pure-Python twin.

The package is fully functional without the extension; markedbases.kernels
picks whichever backend imported.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/markedbases/_modp_cy.pyx"],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # no Cython / no compiler: fine, pure fallback exists
    print(f"markedbases: building without compiled kernel ({exc!r})")

setup(ext_modules=ext_modules)
