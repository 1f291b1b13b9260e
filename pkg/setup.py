#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from setuptools import setup


with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="hkrcheck",
    version="0.1.0",
    author="Joed Lopes da Silva",
    author_email="joedlopes@github.com",
    description="Exact checks of excess intersection, fixed locus and orbifold HKR formulas on linear examples",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=["numpy", "sympy"],
    extras_require={"test": ["pytest"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=[
        "hkrcheck",
        "hkrcheck.core",
        "hkrcheck.complexes",
        "hkrcheck.geometry",
        "hkrcheck.oracle",
        "hkrcheck.cli",
        "hkrcheck.helpers",
    ],
    entry_points={
        "console_scripts": ["hkrcheck=hkrcheck.cli.main:main"],
    },
    python_requires=">=3.8",
)
