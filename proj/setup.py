import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_path = Path.cwd() / self.get_ext_fullpath(ext.name)
        extdir = ext_path.parent.resolve()
        cfg = "Debug" if int(os.environ.get("DEBUG", 0)) else "Release"
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        import pybind11

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}{os.sep}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            "-DSWIPTNET_BUILD_PYTHON=ON",
            "-DSWIPTNET_BUILD_TESTS=OFF",
        ]
        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_core"], cwd=build_temp, check=True)
        built = build_temp / "python" / "swiptnet"
        for lib in built.glob("_core*"):
            target = extdir / lib.name
            target.parent.mkdir(parents=True, exist_ok=True)
            if target.exists():
                target.unlink()
            lib.rename(target)


setup(
    packages=["swiptnet"],
    package_dir={"swiptnet": "python/swiptnet"},
    ext_modules=[CMakeExtension("swiptnet._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
