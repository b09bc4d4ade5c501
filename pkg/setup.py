"""Build hook: compile the hot modules with Cython when possible.

The sources are plain Python (Cython pure mode), so the package works
uncompiled too. A failed extension build must not fail the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            "src/spillsim/_kernel.py",
            "src/spillsim/_fctstep.py",
        ],
        language_level=3,
    )
except Exception as exc:  # no Cython or no compiler: install pure
    print(f"spillsim: building without compiled core ({exc})")

setup(ext_modules=ext_modules)
