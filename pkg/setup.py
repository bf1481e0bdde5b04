from setuptools import Extension, setup

# The quaternion kernels compile to a C extension when Cython is available.
# The package falls back to the pure-Python twin (scenesync._kernels_py) at
# import time if the extension is missing, so a failed build is not fatal.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("scenesync._kernels", ["src/scenesync/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
