#!/usr/bin/env python3
"""
Script de instalação para o projeto de renormalização de q-séries.
"""
from setuptools import setup, find_packages

setup(
    name="qrenorm",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    install_requires=[
        "pandas>=1.3.0",
        "numpy>=1.20.0",
        "click>=8.0.0",
        "tqdm>=4.62.0",
        "loguru>=0.6.0",
        "python-dotenv>=0.19.0",
        "mpmath>=1.2.0",
        "sympy>=1.9",
    ],
    extras_require={
        "test": ["pytest>=7.0"],
    },
    entry_points={
        "console_scripts": [
            "qrenorm=src.main:cli",
        ],
    },
)
