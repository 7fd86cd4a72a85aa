from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("rank2greedy._kernel", ["src/rank2greedy/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the package works without the compiled kernel (pure-Python fallback)
    extensions = []

setup(ext_modules=extensions)
