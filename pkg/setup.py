import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MATCHSIGN_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("matchsign._core", ["src/matchsign/_core.pyx"])],
            compiler_directives={"language_level": 3, "embedsignature": True},
        )

setup(ext_modules=ext_modules)
