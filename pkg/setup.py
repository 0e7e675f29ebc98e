from pybell.version import VERSION

from setuptools import setup

requirements = [
    'numpy>=1.17.0',
    'pandas>=0.25.0',
    'scipy>=1.3.0',
    'semver>=2.10.0',
    'sphinx-argparse>=0.2.1',
]

long_description = '''
pybell
======

The ``pybell`` package computes quantum and hidden-variable bounds for
bipartite Bell inequalities defined by a real weight matrix, searches for
the quantum observables that attain them, and analyzes the extremes found.

Core functionality
------------------

* Operator, Schmidt and hidden-variable norms of weight matrices, quantum
  gaps and zero-gap certificates.

* Generation, validation and reduction of Bell matrices, whose quantum and
  hidden-variable norms are known in closed form.

* Bell operators for finite-dimensional observables: spectra, correlation
  matrices, entanglement entropy and locality checks.

* A seeded genetic algorithm that maximizes the norm of the Bell operator,
  optionally under structural constraints on the observables.

* Monte Carlo checks of hidden-variable models against the Bell threshold.

* The ``bt`` ("Bell tool") script, whose sub-commands write reproducible
  JSON, CSV or markdown records.

* Customization through a layered configuration system.
'''

setup(
    name='pybell',
    version=VERSION,
    description='Quantum and hidden-variable bounds for Bell inequalities',
    long_description=long_description,
    platforms=['Windows', 'MacOS', 'Linux'],

    packages=['pybell', 'pybell.built_ins'],
    package_data={'pybell': ['etc/*.cfg']},
    entry_points={'console_scripts': ['bt = pybell.tool:main']},
    install_requires=requirements,
    python_requires='>=3.6',
    include_package_data = True,

    license='MIT License',

    classifiers=[
          'Development Status :: 4 - Beta',
          'License :: OSI Approved :: MIT License',
          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering :: Physics',
          ],

    zip_safe=True,
    test_suite='tests',
)
