from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="momentpoly",
    description="Exact and asymptotic coefficients of the unitary moment polynomials",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=[
        "momentpoly",
        "momentpoly.poly",
        "momentpoly.exact",
        "momentpoly.series",
        "momentpoly.asymptotics",
    ],
    entry_points={
        "console_scripts": ["momentpoly=momentpoly:main"],
    },
    python_requires="~=3.8",
    use_scm_version=True,
    setup_requires=["setuptools_scm"],
    install_requires=[
        "python-json-logger~=2.0.2",
        "gmpy2>=2.1",
        "numpy>=1.20",
        "scipy>=1.7",
    ],
    extras_require={
        "test": ["pytest>=7.0", "mpmath>=1.2"],
    },
)
