"""Build script: compiles the optional fast-kernel extension.

The extension is marked optional so the package installs (and falls back to
the pure-Python kernels) on machines without a C compiler. Set QRR_NO_EXT=1
to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QRR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "qrr._kernels_c",
                    ["src/qrr/_kernels_c.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
