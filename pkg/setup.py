from setuptools import setup, find_packages

setup(
    name="gac-framework",
    version="0.1.0",
    description="Generalized arc consistency questions, propagators and NP-hardness gadgets for global constraints",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        # Instance file schema
        'pydantic>=2.0.0',

        # Configuration
        'python-dotenv>=1.0.0',

        # Command line and suite progress
        'click>=8.0.0',
        'tqdm>=4.60.0',

        # Matching, flows and graph walks
        'networkx>=3.0',
    ],
    extras_require={
        "test": ["pytest>=7.0.0"],
    },
    entry_points={
        "console_scripts": [
            "gac-framework=gac_framework.harness.cli:main",
        ],
    },
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
)
