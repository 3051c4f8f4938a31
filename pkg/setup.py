"""Build the optional compiled engine.

The package works without it: ``memotab._backend`` falls back to the
pure-Python kernel when the extension cannot be imported.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("MEMOTAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("memotab._engine_ext", ["src/memotab/_engine_ext.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
