"""Build hooks for the optional compiled exponent kernel.

The package is pure Python; `skewpbw._kernel_c` is a Cython twin of
`skewpbw._kernel_py` built opportunistically. When Cython or a C toolchain
is missing the extension is skipped and the pure kernel is used at runtime.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("skewpbw._kernel_c", ["src/skewpbw/_kernel_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
