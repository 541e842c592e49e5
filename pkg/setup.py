# -*- coding: utf-8 -*-
import os

from setuptools import setup, find_packages


def read_version():
    version_file = os.path.join(os.path.dirname(__file__), 'renergy', '__init__.py')
    with open(version_file) as f:
        for line in f:
            if line.startswith('__version__'):
                return line.split('=')[1].strip().strip("'\"")
    raise RuntimeError('__version__ not found')


requires = [
'numpy',
'pandas',
'scipy',
]

setup(
    name="renergy",
    version=read_version(),
    description="Renormalized energy of random point processes: exact limits, "
            "Monte Carlo estimates and the minimization functional",
    long_description="",
    packages = find_packages(exclude=['examples', 'examples.*']),
    install_requires = requires,
    extras_require = {
        'test': ['hypothesis'],
    },
    entry_points={
        'console_scripts': ['renergy=renergy.cli:main'],
    },
    zip_safe=False,
)
