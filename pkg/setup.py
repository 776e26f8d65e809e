#!/usr/bin/env python

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = [
    'numpy>=1.22',
    'pandas>=1.5',
]

test_requirements = [
    'pytest>=7',
    'hypothesis>=6.50',
    'networkx>=2.8',
]

setup(
    author="satya_pati",
    author_email='audreyr@example.com',
    python_requires='>=3.10',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Kruskal-Katona bounds on complete-subgraph counts, extremal constructions and clique counting.",
    entry_points={
        'console_scripts': [
            'kkclique=kkclique.api.cli:main',
        ],
    },
    install_requires=requirements,
    extras_require={'test': test_requirements},
    license="MIT license",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='kkclique kruskal-katona clique turan extremal graph theory',
    name='kkclique',
    packages=find_packages(include=['kkclique', 'kkclique.*']),
    test_suite='tests',
    tests_require=test_requirements,
    url='https://github.com/audreyr/kkclique',
    version='0.2.0',
    zip_safe=False,
)
