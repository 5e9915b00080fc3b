"""Build script for the compiled stepping kernel.

The extension is optional: if Cython or a C compiler is unavailable the
package installs anyway and falls back to the pure-Python kernel twin
(see pwamrac._backend).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pwamrac._core",
                ["src/pwamrac/_core.pyx"],
                # -ffp-contract=off keeps double arithmetic bit-identical
                # to the pure-Python twin (no FMA contraction).
                extra_compile_args=["-O2", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
