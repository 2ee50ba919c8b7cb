"""

:Purpose:
    Scenario configuration: YAML loading with line numbers, ``base:``
    presets, ``key=value`` overrides, validation, and construction of the
    model, grid, schedule and controller of a run.

:Dependencies:
    #. numpy
    #. ruamel.yaml
"""

import copy
import io
import logging
import math

from ruamel.yaml import YAML
from ruamel.yaml.comments import CommentedMap, CommentedSeq
from ruamel.yaml.error import YAMLError

from ..control import ControlConfig
from ..integrators import Schedule
from ..integrators.simulation import STEP_TOL
from ..interpolants import FAMILIES, NODE_RULES, Grid1D, InterpolantSpec
from ..models import (
    MODEL_IDS,
    CatalyticRodParams,
    ChafeeInfanteParams,
    KSEParams,
    build_model,
)
from .initial_conditions import time_function
from .presets import DEFAULTS, PRESET_NAMES, deep_update, preset

logger = logging.getLogger(__name__)

PARAM_NAMES = {
    "ci": ("nu", "alpha"),
    "kse": ("nu", "gamma"),
    "rod": ("beta_T", "beta_U", "gamma_act", "uncertainty"),
}
MODEL_BOUNDARY = {"ci": "neumann", "kse": "periodic", "rod": "dirichlet"}
SECTIONS = ("grid", "integrator", "control", "outputs")


class ConfigError(ValueError):
    """
    Invalid scenario configuration.

    Attributes
        :key (*str*): Dotted key at fault.
        :line (*int*): Line in the YAML file, when known.
    """
    def __init__(self, key, message, line=None, source=None):
        self.key = key
        self.line = line
        self.source = source
        where = ""
        if line is not None:
            where = "%s:%d: " % (source or "<config>", line)
        ValueError.__init__(self, "%s%s: %s" % (where, key, message))


def _plain(node, prefix, lines):
    """CommentedMap tree to plain dicts, recording 1-based key lines."""
    if isinstance(node, CommentedMap):
        out = {}
        for key in node:
            path = key if not prefix else "%s.%s" % (prefix, key)
            try:
                lines[path] = node.lc.key(key)[0] + 1
            except (AttributeError, KeyError, TypeError):
                pass
            out[str(key)] = _plain(node[key], path, lines)
        return out
    elif isinstance(node, (CommentedSeq, list)):
        return [_plain(item, prefix, lines) for item in node]
    return node


def parse_scalar(text):
    """Value of an override string, read as a YAML scalar."""
    try:
        value = YAML(typ="safe").load(io.StringIO(text))
    except YAMLError:
        return text
    return text if value is None and text.strip() not in ("null", "~") \
        else value


def _check_known(config, lines, source):
    for key in config:
        if key not in DEFAULTS and key != "base":
            raise ConfigError(key, "unknown section.", lines.get(key),
                              source)
    for section in SECTIONS:
        if section not in config:
            continue
        entries = config[section]
        if not isinstance(entries, dict):
            raise ConfigError(section, "must be a mapping.",
                              lines.get(section), source)
        for key in entries:
            if key not in DEFAULTS[section]:
                path = "%s.%s" % (section, key)
                raise ConfigError(path, "unknown key.", lines.get(path),
                                  source)


def load_config(path, overrides=None):
    """
    Read a YAML scenario, merge it over its ``base`` preset (or over
    DEFAULTS) and apply overrides.

    Arguments
        :path (*str*): YAML file.

    Keyword Arguments
        :overrides (*list*): ``key=value`` strings.

    Returns
        :config (*dict*): Validated configuration.

    Raises
        :ConfigError: Unreadable file, unknown keys or invalid values,
            with the line of the offending key.
    """
    source = str(path)
    try:
        with open(path, "r") as fh:
            raw = YAML(typ="rt").load(fh)
    except OSError as err:
        raise ConfigError("<file>", "cannot read: %s" % err)
    except YAMLError as err:
        mark = getattr(err, "problem_mark", None)
        raise ConfigError("<file>", "YAML syntax error: %s"
                          % getattr(err, "problem", err),
                          None if mark is None else mark.line + 1, source)
    if not isinstance(raw, CommentedMap):
        raise ConfigError("<root>", "scenario file must be a mapping.",
                          1, source)

    lines = {}
    data = _plain(raw, "", lines)
    base = data.pop("base", None)
    if base is not None:
        if base not in PRESET_NAMES:
            raise ConfigError("base", "unknown preset '%s'." % base,
                              lines.get("base"), source)
        config = preset(base)
    else:
        config = copy.deepcopy(DEFAULTS)
    _check_known(data, lines, source)
    deep_update(config, data)
    if config.get("name") is None:
        config["name"] = base or "custom"

    apply_overrides(config, overrides or ())
    validate_config(config, lines, source)
    return config


def resolve_config(scenario=None, config_path=None, overrides=None):
    """Configuration of a preset name or of a YAML file."""
    if config_path is not None:
        return load_config(config_path, overrides)
    if scenario is None:
        raise ConfigError("scenario", "give a preset name or --config.")
    if scenario not in PRESET_NAMES:
        raise ConfigError("scenario", "unknown preset '%s'. Known: %s"
                          % (scenario, ", ".join(PRESET_NAMES)))
    config = preset(scenario)
    apply_overrides(config, overrides or ())
    validate_config(config)
    return config


def _locate(config, key):
    """(mapping, leaf) addressed by a dotted or unique undotted key."""
    parts = key.split(".")
    if len(parts) == 1:
        if key in config and key not in SECTIONS + ("params",):
            return config, key
        hits = [section for section in SECTIONS + ("params",)
                if isinstance(config.get(section), dict)
                and key in config[section]]
        if not hits:
            raise ConfigError(key, "no configuration entry has this name.")
        if len(hits) > 1:
            raise ConfigError(key, "ambiguous; use one of %s."
                              % ", ".join("%s.%s" % (h, key) for h in hits))
        return config[hits[0]], key

    target = config
    for segment in parts[:-1]:
        if not isinstance(target.get(segment), dict):
            if segment == "reference" and target is config:
                target[segment] = {}
            else:
                raise ConfigError(key, "'%s' is not a section." % segment)
        target = target[segment]
    leaf = parts[-1]
    if leaf not in target and parts[0] not in ("params", "reference"):
        raise ConfigError(key, "unknown key.")
    return target, leaf


def apply_overrides(config, overrides):
    """Apply ``key=value`` strings in order; values are YAML scalars."""
    for item in overrides:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(item, "override must look like key=value.")
        target, leaf = _locate(config, key)
        target[leaf] = parse_scalar(value.strip())
        logger.info("override %s = %r", key, target[leaf])
    return config


def _number(config, section, key, kind, lines, source, positive=True,
            allow_none=False):
    path = "%s.%s" % (section, key) if section else key
    holder = config[section] if section else config
    value = holder.get(key)
    if value is None and allow_none:
        return None
    try:
        if isinstance(value, bool):
            raise TypeError
        number = kind(value)
        if kind is int and number != float(value):
            raise ValueError
    except (TypeError, ValueError):
        raise ConfigError(path, "expected %s, got %r." % (kind.__name__,
                                                          value),
                          lines.get(path), source)
    if not math.isfinite(number) or (positive and number <= 0) or \
            number < 0:
        raise ConfigError(path, "must be %s. Got %r."
                          % ("positive" if positive else "non-negative",
                             value), lines.get(path), source)
    holder[key] = number
    return number


def _flag(config, section, key, lines, source):
    path = "%s.%s" % (section, key)
    value = config[section].get(key)
    if not isinstance(value, bool):
        raise ConfigError(path, "expected true or false, got %r." % (value,),
                          lines.get(path), source)
    return value


def validate_config(config, lines=None, source=None):
    """
    Check a merged configuration in place; numbers are normalised to
    float or int.

    Raises
        :ConfigError: First invalid entry found.
    """
    lines = lines or {}
    model = config.get("model")
    if model not in MODEL_IDS:
        raise ConfigError("model", "must be one of %s. Got %r."
                          % (", ".join(MODEL_IDS), model),
                          lines.get("model"), source)

    grid = config["grid"]
    _number(config, "grid", "n", int, lines, source)
    _number(config, "grid", "length", float, lines, source)
    if grid["n"] < 3:
        raise ConfigError("grid.n", "need at least 3 points.",
                          lines.get("grid.n"), source)
    if grid.get("boundary") is None:
        grid["boundary"] = MODEL_BOUNDARY[model]
    if grid["boundary"] != MODEL_BOUNDARY[model]:
        raise ConfigError("grid.boundary", "model '%s' needs '%s'."
                          % (model, MODEL_BOUNDARY[model]),
                          lines.get("grid.boundary"), source)

    params = config.get("params")
    if not isinstance(params, dict):
        raise ConfigError("params", "must be a mapping.",
                          lines.get("params"), source)
    for key in params:
        if key not in PARAM_NAMES[model]:
            raise ConfigError("params.%s" % key, "not a parameter of model "
                              "'%s' (expected %s)."
                              % (model, ", ".join(PARAM_NAMES[model])),
                              lines.get("params.%s" % key), source)
    for key in PARAM_NAMES[model]:
        if key == "uncertainty":
            continue
        if key == "gamma" and key not in params:
            params[key] = 1.0
        if key not in params:
            raise ConfigError("params.%s" % key, "missing.",
                              lines.get("params"), source)
        _number(config, "params", key, float, lines, source)

    _number(config, "integrator", "dt", float, lines, source)
    _number(config, "integrator", "t_end", float, lines, source)
    steps = config["integrator"]["t_end"] / config["integrator"]["dt"]
    if abs(steps - round(steps)) > STEP_TOL * max(1.0, steps):
        raise ConfigError("integrator.t_end", "must be a whole number of "
                          "steps of dt = %r. Got %r."
                          % (config["integrator"]["dt"],
                             config["integrator"]["t_end"]),
                          lines.get("integrator.t_end"), source)
    _number(config, "integrator", "snapshot_stride", int, lines, source)
    _number(config, "integrator", "norm_stride", int, lines, source)
    _flag(config, "integrator", "fold_control", lines, source)
    _flag(config, "integrator", "dealias", lines, source)

    control = config["control"]
    if control.get("family") not in FAMILIES:
        raise ConfigError("control.family", "must be one of %s. Got %r."
                          % (", ".join(FAMILIES), control.get("family")),
                          lines.get("control.family"), source)
    if control.get("node_rule") not in NODE_RULES:
        raise ConfigError("control.node_rule", "must be one of %s."
                          % ", ".join(NODE_RULES),
                          lines.get("control.node_rule"), source)
    _number(config, "control", "n_actuators", int, lines, source)
    _number(config, "control", "mu", float, lines, source, positive=False)
    _number(config, "control", "t_on", float, lines, source,
            positive=False)
    _number(config, "control", "c_est", float, lines, source,
            allow_none=True)
    _flag(config, "control", "mean_zero", lines, source)

    for key in ("norms", "snapshots", "verdicts", "summary",
                "energy_monitor"):
        _flag(config, "outputs", key, lines, source)
    _number(config, "outputs", "onset_threshold", float, lines, source)
    if config["outputs"]["energy_monitor"] and (
            model != "kse" or control["mu"] == 0.0
            or control["t_on"] > 0.0 or config.get("reference") is not None):
        raise ConfigError("outputs.energy_monitor", "needs a controlled kse "
                          "run with t_on = 0 and no reference.",
                          lines.get("outputs.energy_monitor"), source)

    if not isinstance(config.get("initial_condition"), str):
        raise ConfigError("initial_condition", "expected a preset name or "
                          "an expression in x.",
                          lines.get("initial_condition"), source)

    ref = config.get("reference")
    if ref is not None:
        if not isinstance(ref, dict) or "truth_initial" not in ref:
            raise ConfigError("reference", "needs truth_initial.",
                              lines.get("reference"), source)
        ref.setdefault("spinup", 0.0)
        _number(config, "reference", "spinup", float, lines, source,
                positive=False)
    return config


def build_grid(config):
    grid = config["grid"]
    return Grid1D(grid["length"], grid["n"], grid["boundary"])


def build_params(config):
    model = config["model"]
    params = config["params"]
    length = config["grid"]["length"]
    if model == "ci":
        return ChafeeInfanteParams(params["nu"], params["alpha"], length)
    elif model == "kse":
        return KSEParams(params["nu"], params.get("gamma", 1.0), length)
    uncertainty = params.get("uncertainty")
    if uncertainty is not None:
        uncertainty = time_function(str(uncertainty))
    return CatalyticRodParams(params["beta_T"], params["beta_U"],
                              params["gamma_act"], uncertainty, length)


def build_model_from_config(config):
    return build_model(config["model"], build_params(config),
                       dealias=config["integrator"]["dealias"])


def build_schedule(config, snapshot_stride=None):
    integ = config["integrator"]
    return Schedule(integ["t_end"], integ["dt"],
                    snapshot_stride or integ["snapshot_stride"],
                    integ["norm_stride"])


def build_spec(config):
    control = config["control"]
    return InterpolantSpec(
        control["family"], control["n_actuators"],
        mean_zero=control["mean_zero"],
        node_rule=control["node_rule"],
        node_offsets=control["node_offsets"],
        c_est=control["c_est"],
    )


def build_control(config, reference=None):
    """ControlConfig of a run, None when mu is zero."""
    control = config["control"]
    if control["mu"] == 0.0:
        return None
    return ControlConfig(control["mu"], build_spec(config), control["t_on"],
                         reference)


def dump_config(config, path):
    """Write the resolved configuration as YAML."""
    yaml = YAML(typ="rt")
    yaml.default_flow_style = False
    with open(path, "w") as fh:
        yaml.dump(copy.deepcopy(config), fh)
    return path
