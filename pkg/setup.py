# Python is swapping distutils with setuptools.
try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

setup(
    name = "pde_nudging",
    version = "1.0",
    description = "Feedback control of 1-D dissipative PDEs with "
                  "finite-rank interpolant operators",
    python_requires = ">=3.8",
    install_requires = [
        "numpy",
        "scipy",
        "pandas",
        "matplotlib",
        "ruamel.yaml",
        "sympy",
    ],
    extras_require = {"test": ["pytest"]},
    packages=[
        "pde_nudging",
        "pde_nudging.control",
        "pde_nudging.diagnostics",
        "pde_nudging.integrators",
        "pde_nudging.interpolants",
        "pde_nudging.models",
        "pde_nudging.plotting_scripts",
        "pde_nudging.scenarios",
        "pde_nudging.tools"
    ],
    entry_points = {
        "console_scripts": [
            "pde-nudging = pde_nudging.scenarios.cli:main",
        ],
    },
)
