"""
poalgebra
Poset morphisms, poalgebra terms and the machine verification of their presentation
"""
import sys
from setuptools import setup, find_packages

short_description = __doc__.split("\n")

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except OSError:
    long_description = "\n".join(short_description[2:])

version = {}
with open("poalgebra/_version.py") as handle:
    exec(handle.read(), version)


setup(
    name='poalgebra',
    description=short_description[1],
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version['__version__'],
    license='MIT',

    packages=find_packages(),

    include_package_data=True,

    # Allows `setup.py test` to work correctly with pytest
    setup_requires=[] + pytest_runner,

    install_requires=[
        'graphviz',
        'networkx>=2.6',
        'numpy',
        'pyyaml',
    ],
    tests_require=[
        'hypothesis',
        'pytest',
    ],
    entry_points={
        'console_scripts': ['poalgebra = poalgebra.cli:main'],
    },
    python_requires=">=3.7",
)
