from setuptools import setup, find_packages

setup(
    name="fourtree",
    version="0.1",
    package_dir={"": "src"},
    packages=find_packages("src"),
    entry_points={
        "console_scripts": [
            "fourtree=fourtree.cli:main"
        ]
    },
    install_requires=[
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "python-dotenv>=1.0.0",
        "networkx>=3.2",
        "plotly>=5.18.0",
        "pandas>=2.1.4",
        "numpy>=1.24.0"
    ],
    extras_require={
        "test": [
            "pytest>=7.4.0",
            "hypothesis>=6.90.0"
        ]
    }
)
