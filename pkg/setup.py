import os

from setuptools import Extension, setup

# The compiled census kernels are an optional fast path; the package
# falls back to pure Python when they are absent.  Set QYT_NO_EXTENSION=1
# to skip the build entirely.
ext_modules = []
if os.environ.get("QYT_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("qyt._qhit", ["src/qyt/_qhit.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
