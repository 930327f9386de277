"""Build script: compiles the optional subset-engine extension.

The package is pure Python plus one Cython extension; if Cython or a C
compiler is missing the build falls back to the interpreted engine.
"""

from setuptools import Extension, setup

extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("surfpoly._subsets_c", ["src/surfpoly/_subsets_c.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=extensions)
