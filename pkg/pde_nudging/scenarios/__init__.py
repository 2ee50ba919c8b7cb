"""
    Purpose:
        Reproducible scenarios: presets of the published experiments,
        named initial conditions, YAML configuration with overrides, the
        run and sweep drivers, and the command line interface.

    Dependencies:
        #. numpy
        #. pandas
        #. ruamel.yaml
        #. sympy
"""

from .presets import DEFAULTS, PRESET_NAMES, preset
from .initial_conditions import (
    INITIAL_CONDITIONS,
    initial_field,
    parse_expression,
    time_function,
)
from .config import (
    ConfigError,
    apply_overrides,
    dump_config,
    load_config,
    resolve_config,
    validate_config,
)
from .runner import RunReport, estimate_r2, run_scenario, sweep
