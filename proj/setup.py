import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

vendor = "vendor" if os.path.exists("vendor/json.hpp") else "/opt/vendor"

ext = Pybind11Extension(
    "hrpairs._hrpairs",
    sources=[
        "bindings/py_module.cpp",
        "src/rational.cpp",
        "src/shapes.cpp",
        "src/family.cpp",
        "src/isosceles.cpp",
        "src/oracle.cpp",
        "src/serialize.cpp",
    ],
    include_dirs=["include", vendor],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
