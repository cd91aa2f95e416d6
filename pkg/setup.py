#!/usr/bin/env python
#
# Copywright (C) 2025 DigitPhilia INC
# LICENSE: MIT License

from setuptools import setup
from setuptools import find_packages

import qubicle as qb

setup(
    name = "qubicle",
    version = qb.__version__,
    author = "DigitPhilia INC. Developers",
    author_email = "john.doe@example.com",
    description = "Mixed State (Density Operator) Quantum Circuit Simulation",
    long_description = open("README.md", "r").read(),
    long_description_content_type = "text/markdown",
    url = "https://github.com/digitphilia/qubicle",
    packages = find_packages(exclude = ["tests", "tests.*"]),
    classifiers = [
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Developers",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "Operating System :: Unix",
        "Operating System :: POSIX",
        "Operating System :: Microsoft :: Windows",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Physics",
        "License :: OSI Approved :: MIT License"
    ],
    project_urls = {
        "Issue Tracker" : "https://github.com/digitphilia/qubicle/issues",
        "Code Documentations" : "",
        "Org. Homepage" : "https://github.com/digitphilia"
    },
    keywords = [
        # main keywords for package indexing
        "quantum computing", "density matrix", "partial trace",
        "partial transpose", "negativity", "fidelity", "shor"
    ],
    python_requires = ">=3.10",
    install_requires = [
        "numpy>=1.24",
        "scipy>=1.10",
        "pydantic>=2.5",
        "PyYAML>=6.0"
    ],
    extras_require = {
        "test" : ["pytest>=7.0"]
    },
    entry_points = {
        "console_scripts" : ["qubicle = qubicle.cli:main"]
    },

    # check package data details from manifest file
    include_package_data = True,
    package_data = {"qubicle" : ["VERSION"]}
)
