"""A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
https://github.com/pypa/sampleproject
"""

# Always prefer setuptools over distutils
from setuptools import setup, find_packages
# To use a consistent encoding
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='pwpy',

    version='0.0.1',

    description='Dynamic programming over nice path decompositions',
    long_description=long_description,

    license='MIT',

    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: MIT License',

        'Programming Language :: Python :: 3.6',
    ],

    keywords='pathwidth dynamic programming graph algorithms',

    packages=find_packages(exclude=['contrib', 'docs', 'tests']),

    # pyevents carries the per-node table notifications of the dynamic program
    install_requires=['pandas', 'numpy', 'numba', 'networkx', 'pyevents==0.0.1'],

    dependency_links=[
        "git+https://github.com/ivan-vasilev/pyevents#egg=pyevents-0.0.1",
    ],

    scripts=['scripts/pwpy_solve.py', 'scripts/oracle_equivalence.py'],

    entry_points={
        'console_scripts': [
            'pwpy=pwpy.cli:main',
        ],
    },
)
