"""

:Purpose:
    Scenario presets reproducing the published experiments. Each preset
    is a plain nested dictionary with the same sections as a YAML
    scenario file; anything a preset leaves out comes from DEFAULTS.

    Table values are kept as published even where the run is not
    expected to stabilise (fig6 and fig7: four mean-zero actuators
    cannot control the four unstable real modes of nu = 0.2).
"""

import copy

from ..tools import error_check

DEFAULTS = {
    "name": None,
    "model": None,
    "grid": {"n": None, "length": None, "boundary": None},
    "params": {},
    "integrator": {
        "dt": None,
        "t_end": None,
        "snapshot_stride": 4,
        "norm_stride": 1,
        "fold_control": False,
        "dealias": False,
    },
    "control": {
        "family": "finite_volume",
        "n_actuators": 1,
        "mu": 0.0,
        "t_on": 0.0,
        "mean_zero": False,
        "node_rule": "midpoint",
        "node_offsets": None,
        "c_est": None,
    },
    "initial_condition": "zero",
    "reference": None,
    "outputs": {
        "norms": True,
        "snapshots": True,
        "verdicts": True,
        "summary": True,
        "onset_threshold": 0.5,
        "energy_monitor": False,
    },
}

_CI = {
    "model": "ci",
    "grid": {"n": 101, "length": 1.0, "boundary": "neumann"},
    "params": {"nu": 1.0, "alpha": 100.0},
    # 0.4 dx^2 / nu
    "integrator": {"dt": 4.0e-5, "t_end": 1.0, "snapshot_stride": 250,
                   "norm_stride": 25},
    "initial_condition": "ci_cos3",
}

_KSE = {
    "model": "kse",
    "grid": {"n": 128, "length": 6.283185307179586, "boundary": "periodic"},
    "integrator": {"dt": 0.25, "snapshot_stride": 4},
}

_ROD = {
    "model": "rod",
    "grid": {"n": 21, "length": 3.141592653589793, "boundary": "dirichlet"},
    "params": {"beta_T": 50.0, "beta_U": 2.0, "gamma_act": 4.0,
               "uncertainty": None},
    "integrator": {"dt": 0.006, "t_end": 6.0, "snapshot_stride": 10},
    "initial_condition": "rod_sin2",
}

_PRESETS = {
    "fig1": [_CI, {}],
    "fig2": [_CI, {
        "integrator": {"t_end": 0.2},
        "control": {"family": "finite_volume", "n_actuators": 10,
                    "mu": 300.0},
    }],
    "fig3": [_KSE, {
        "params": {"nu": 1.1},
        "integrator": {"t_end": 100.0},
        "initial_condition": "kse_small",
    }],
    "fig4": [_KSE, {
        "params": {"nu": 0.26666666666666666},
        "integrator": {"t_end": 150.0},
        "initial_condition": "kse_small",
    }],
    "fig5": [_KSE, {
        "params": {"nu": 0.26666666666666666},
        "integrator": {"dt": 0.05, "t_end": 80.0, "snapshot_stride": 20},
        "control": {"family": "fourier_modes", "n_actuators": 4,
                    "mu": 20.0, "t_on": 40.0, "mean_zero": True},
        "initial_condition": "kse_cos",
    }],
    "fig6": [_KSE, {
        "params": {"nu": 0.2},
        "integrator": {"dt": 0.05, "t_end": 80.0, "snapshot_stride": 20},
        "control": {"family": "finite_volume", "n_actuators": 4,
                    "mu": 20.0, "t_on": 0.0, "mean_zero": True},
        "initial_condition": "kse_multi",
    }],
    "fig7": [_KSE, {
        "params": {"nu": 0.2},
        "integrator": {"dt": 0.05, "t_end": 80.0, "snapshot_stride": 20},
        "control": {"family": "nodal", "n_actuators": 4, "mu": 20.0,
                    "t_on": 40.0, "mean_zero": True,
                    "node_rule": "midpoint"},
        "initial_condition": "kse_small",
    }],
    "fig8": [_ROD, {}],
    "fig9": [_ROD, {
        "control": {"family": "finite_volume", "n_actuators": 1,
                    "mu": 30.0},
    }],
    "fig9_nodal": [_ROD, {
        "control": {"family": "nodal", "n_actuators": 1, "mu": 30.0,
                    "node_rule": "midpoint"},
    }],
    "fig10": [_ROD, {
        "params": {"uncertainty": "sin(0.524*t)"},
        "control": {"family": "finite_volume", "n_actuators": 1,
                    "mu": 30.0},
    }],
    "twin": [_KSE, {
        "params": {"nu": 0.26666666666666666},
        "integrator": {"dt": 0.025, "t_end": 40.0, "snapshot_stride": 40},
        "control": {"family": "finite_volume", "n_actuators": 32,
                    "mu": 40.0, "t_on": 0.0, "mean_zero": True},
        "initial_condition": "zero",
        "reference": {"truth_initial": "kse_cos", "spinup": 100.0},
    }],
    "energy_check": [_KSE, {
        "params": {"nu": 0.5},
        "integrator": {"dt": 0.02, "t_end": 10.0, "snapshot_stride": 50},
        "control": {"family": "finite_volume", "n_actuators": 32,
                    "mu": 16.0, "t_on": 0.0, "mean_zero": True},
        "initial_condition": "kse_cos",
        "outputs": {"energy_monitor": True},
    }],
}

PRESET_NAMES = tuple(_PRESETS)


def deep_update(base, update):
    """Recursively merge ``update`` into ``base`` in place."""
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            deep_update(base[key], value)
        else:
            base[key] = copy.deepcopy(value)
    return base


def preset(name):
    """Fully resolved configuration dictionary of a preset."""
    error_check.check_choice(name, PRESET_NAMES, "name", "preset")
    config = copy.deepcopy(DEFAULTS)
    for layer in _PRESETS[name]:
        deep_update(config, layer)
    config["name"] = name
    return config
