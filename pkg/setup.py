import os
import sys

from setuptools import setup

readme_path = os.path.join(os.path.dirname(
    os.path.abspath(__file__)),
    'README.md',
)
long_description = open(readme_path).read()

needs_pytest = {'pytest', 'test', 'ptr'}.intersection(sys.argv)
pytest_runner = ['pytest-runner'] if needs_pytest else []

setup(
    name='twotorsion',
    packages=['twotorsion', 'twotorsion.cli', 'twotorsion.cli.verify'],
    description="Exact quadratic refinements of the Weil pairing on the "
                "2-torsion of split hyperelliptic Jacobians over Q",
    long_description=long_description,
    long_description_content_type='text/markdown',
    zip_safe=False,
    classifiers=[
        'Intended Audience :: Science/Research',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    install_requires=[
        'sympy',
        'numpy',
        'dataclasses;python_version<"3.7"'
    ],
    extras_require={
        'cli': ['click']
    },
    entry_points={
        'console_scripts': ['twotorsion-cli=twotorsion.cli.__main__:cli'],
    },
    test_suite='twotorsion_tests',
    setup_requires=[] + pytest_runner,
    tests_require=['pytest', 'hypothesis', 'click'],
)
