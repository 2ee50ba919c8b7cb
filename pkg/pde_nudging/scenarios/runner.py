"""

:Purpose:
    Runs one scenario end to end (simulation, stability verdicts, decay
    fit, output files) and sweeps a configuration key over a list of
    values, optionally in parallel worker processes.

:Dependencies:
    #. numpy
    #. pandas
"""

import copy
import logging
import os
import re
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

import numpy as np
import pandas as pd

from ..control import (
    check_ci_condition,
    check_kse_reference_condition,
    check_kse_zero_condition,
    recommended_actuators,
)
from ..diagnostics import (
    energy_inequality_monitor,
    estimate_attractor_bound,
    fit_decay_rate,
    gronwall_holds,
    monitor_violations,
)
from ..integrators import run_simulation, run_twin_experiment
from ..interpolants import estimate_interpolation_constant
from ..models import count_unstable_modes
from ..tools import write_history_dict, write_output_files
from .config import (
    ConfigError,
    apply_overrides,
    build_control,
    build_grid,
    build_model_from_config,
    build_params,
    build_schedule,
    build_spec,
    dump_config,
    validate_config,
)
from .initial_conditions import initial_field

logger = logging.getLogger(__name__)

# Below this fraction of the activation-time norm the series is
# round-off.
DECAY_FLOOR = 1.0e-12
STABILIZED_RATIO = 1.0e-3
C_SAMPLES = 200
C_SEED = 0


class RunReport(NamedTuple):
    summary: dict
    outfiles: dict
    trajectory: object
    verdicts: list
    twin: object = None


def _activation_time(config):
    control = config["control"]
    if control["mu"] > 0.0:
        return control["t_on"]
    return 0.0


def decay_summary(diag, t_on):
    """
    Fitted L2 decay rate from t_on up to the round-off floor.

    Returns
        :(rate, r_squared, l2_on): NaN rate when the window is too short.
    """
    after = np.flatnonzero(diag.t >= t_on - 1.0e-9 * max(1.0, t_on))
    if after.size == 0:
        return np.nan, np.nan, np.nan
    l2 = diag.l2[after]
    l2_on = float(l2[0])
    below = np.flatnonzero(l2 < DECAY_FLOOR * l2_on)
    stop = below[0] if below.size else l2.size
    try:
        fit = fit_decay_rate(diag.t[after][:stop], l2[:stop])
    except ValueError as err:
        logger.info("no decay fit: %s", str(err).strip().splitlines()[-1])
        return np.nan, np.nan, l2_on
    return fit.rate, fit.r_squared, l2_on


def onset_time(diag, threshold):
    """First record time with max|u| above threshold, else None."""
    hits = np.flatnonzero(diag.max_abs > threshold)
    if hits.size == 0:
        return None
    return float(diag.t[hits[0]])


def interpolation_constant(config):
    """c from the configuration, or estimated from random samples."""
    spec = build_spec(config)
    if spec.c_est is None:
        return estimate_interpolation_constant(spec, C_SAMPLES, C_SEED)
    return spec.c_est


def stability_verdicts(config, r2=None):
    """Condition checks that apply to the configured run."""
    control = config["control"]
    if control["mu"] == 0.0:
        return []
    model = config["model"]
    params = config["params"]
    length = config["grid"]["length"]
    h = length / control["n_actuators"]
    if model == "ci":
        if control["family"] != "finite_volume":
            return []
        return [check_ci_condition(params["nu"], params["alpha"], length,
                                   control["n_actuators"], control["mu"])]
    elif model == "kse":
        c = interpolation_constant(config)
        if r2 is None:
            return [check_kse_zero_condition(params["nu"], control["mu"], h,
                                             c)]
        return [check_kse_reference_condition(params["nu"], control["mu"],
                                              h, c, r2, length)]
    return []


def energy_summary(config, traj):
    """
    Energy inequality and Gronwall bound along a controlled KSE run that
    starts with the control on.

    Returns
        :dict: c used, violation count, largest residual, Gronwall flag.
    """
    nu = config["params"]["nu"]
    mu = config["control"]["mu"]
    h = config["grid"]["length"] / config["control"]["n_actuators"]
    c = interpolation_constant(config)
    residual = energy_inequality_monitor(traj, nu, mu, h, c)
    bad = monitor_violations(traj, residual)
    return {
        "energy_c": c,
        "energy_violations": int(bad.size),
        "energy_max_residual": float(np.max(residual)),
        "gronwall_holds": gronwall_holds(traj, nu, mu),
    }


def _simulate(config, snapshot_stride):
    grid = build_grid(config)
    model = build_model_from_config(config)
    schedule = build_schedule(config, snapshot_stride)
    initial = initial_field(config["initial_condition"], grid)
    control = build_control(config)
    ref = config.get("reference")

    if ref is None:
        traj = run_simulation(
            model, initial, schedule, control,
            fold_control=config["integrator"]["fold_control"]
        )
        return traj, None

    if control is None:
        raise ConfigError("control.mu", "a twin experiment needs mu > 0.")
    truth = initial_field(ref["truth_initial"], grid)
    twin = run_twin_experiment(model, truth, initial, schedule, control,
                               spinup=ref["spinup"])
    return twin.nudged, twin


def run_scenario(config, out_dir, snapshot_stride=None, overrides=None):
    """
    Run a validated configuration and write its output files.

    Arguments
        :config (*dict*): Scenario configuration.
        :out_dir (*str*): Run directory.

    Keyword Arguments
        :snapshot_stride (*int*): Replaces integrator.snapshot_stride.
        :overrides (*list*): Recorded in the processing history only.

    Returns
        :RunReport: Summary, written files, trajectory and verdicts.
    """
    name = config.get("name") or "custom"
    logger.info("scenario %s -> %s", name, out_dir)
    traj, twin = _simulate(config, snapshot_stride)
    diag = traj.diagnostics

    r2 = None
    if twin is not None and not twin.truth.blew_up:
        r2 = estimate_attractor_bound(twin.truth, 0.0).value
    verdicts = stability_verdicts(config, r2)
    for verdict in verdicts:
        if not verdict.satisfied:
            logger.warning("%s is not satisfied; the run may still "
                           "stabilise", verdict.condition)

    t_on = _activation_time(config)
    # A twin run converges to the truth, not to zero.
    fit_diag = diag if twin is None else twin.error
    rate, r_squared, l2_on = decay_summary(fit_diag, t_on)
    params = build_params(config)
    threshold = config["outputs"]["onset_threshold"]
    l2_final = float(diag.l2[-1]) if len(diag) else np.nan
    fit_final = float(fit_diag.l2[-1]) if len(fit_diag) else np.nan
    stabilized = bool(
        (not traj.blew_up) and np.isfinite(l2_on)
        and fit_final <= STABILIZED_RATIO * l2_on
    )

    summary = {
        "scenario": name,
        "model": config["model"],
        "status": "blew_up" if traj.blew_up else "completed",
        "blowup_time": traj.blowup_time,
        "t_final": float(diag.t[-1]) if len(diag) else np.nan,
        "l2_initial": float(diag.l2[0]) if len(diag) else np.nan,
        "l2_at_activation": l2_on,
        "l2_final": l2_final,
        "max_abs_final": float(diag.max_abs[-1]) if len(diag) else np.nan,
        "decay_rate": rate,
        "decay_r_squared": r_squared,
        "onset_threshold": threshold,
        "onset_time": onset_time(diag, threshold),
        "stabilized": stabilized,
        "unstable_modes": count_unstable_modes(config["model"], params),
        "recommended_actuators":
            recommended_actuators(config["model"], params).recommended,
        "n_actuators": config["control"]["n_actuators"],
        "mu": config["control"]["mu"],
        "conditions_satisfied": all(v.satisfied for v in verdicts)
        if verdicts else None,
    }
    if twin is not None:
        summary["twin_error_l2_final"] = float(twin.error_l2[-1])
        summary["twin_error_h1_semi_final"] = float(twin.error_h1_semi[-1])
        summary["r2"] = r2
    if config["outputs"]["energy_monitor"] and not traj.blew_up:
        summary.update(energy_summary(config, traj))
    if traj.blew_up:
        logger.warning("scenario %s blew up at t = %.6g", name,
                       traj.blowup_time)

    summary["history"] = write_history_dict(
        {"scenario": name}, {"overrides": list(overrides or ())}, __file__
    )

    outputs = config["outputs"]
    records = {
        "NORMS": diag if outputs["norms"] else None,
        "SNAPSHOTS": traj if outputs["snapshots"] else None,
        "VERDICTS": verdicts if outputs["verdicts"] else None,
        "SUMMARY": summary if outputs["summary"] else None,
    }
    outfiles = write_output_files(records, out_dir)
    outfiles["CONFIG"] = dump_config(config,
                                     os.path.join(out_dir, "config.yaml"))
    return RunReport(summary, outfiles, traj, verdicts, twin)


def _directory_name(key, value):
    text = "%s_%s" % (key.split(".")[-1], value)
    return re.sub(r"[^A-Za-z0-9_.+-]", "_", text)


def _failed_row(key, value, out_dir, error=""):
    return {"key": key, "value": value, "status": "failed",
            "decay_rate": np.nan, "decay_r_squared": np.nan,
            "l2_final": np.nan, "stabilized": False, "blew_up": False,
            "error": error, "out_dir": out_dir}


def _sweep_entry(job):
    """Worker for one sweep value; never raises."""
    key, value, config, out_dir, snapshot_stride = job
    row = _failed_row(key, value, out_dir)
    try:
        report = run_scenario(config, out_dir, snapshot_stride,
                              ["%s=%s" % (key, value)])
    except Exception as err:
        row["error"] = str(err).strip().splitlines()[-1].strip()
        return row
    summary = report.summary
    row.update(status=summary["status"],
               decay_rate=summary["decay_rate"],
               decay_r_squared=summary["decay_r_squared"],
               l2_final=summary["l2_final"],
               stabilized=summary["stabilized"],
               blew_up=summary["status"] == "blew_up")
    return row


def sweep(config, key, values, out_dir, jobs=1, snapshot_stride=None):
    """
    Run the configuration once per value of ``key``.

    A failing value is recorded in the aggregate and does not stop the
    sweep.

    Arguments
        :config (*dict*): Base configuration.
        :key (*str*): Override key, dotted or unique undotted.
        :values (*list*): Values, as accepted on the command line.
        :out_dir (*str*): Parent directory; one sub-directory per value.

    Keyword Arguments
        :jobs (*int*): Worker processes; 1 runs in this process.

    Returns
        :pd.DataFrame: Aggregate also written to ``sweep.csv``.
    """
    if not values:
        raise ConfigError(key, "sweep needs at least one value.")
    apply_overrides(copy.deepcopy(config), ["%s=%s" % (key, values[0])])

    jobs_list = []
    seen = {}
    for value in values:
        entry = copy.deepcopy(config)
        name = _directory_name(key, value)
        if name in seen:
            raise ConfigError(key, "values %r and %r share the run "
                              "directory %s." % (seen[name], value, name))
        seen[name] = value
        run_dir = os.path.join(out_dir, name)
        try:
            apply_overrides(entry, ["%s=%s" % (key, value)])
            validate_config(entry)
        except ConfigError as err:
            logger.warning("sweep value %s=%s rejected: %s", key, value, err)
            jobs_list.append((key, value, None, run_dir, snapshot_stride))
            continue
        jobs_list.append((key, value, entry, run_dir, snapshot_stride))

    runnable = [job for job in jobs_list if job[2] is not None]
    if jobs > 1 and len(runnable) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = dict(zip([job[3] for job in runnable],
                            pool.map(_sweep_entry, runnable)))
    else:
        rows = {job[3]: _sweep_entry(job) for job in runnable}

    table = []
    for key_, value, entry, run_dir, _ in jobs_list:
        if entry is None:
            row = _failed_row(key_, value, run_dir, "invalid value")
        else:
            row = rows[run_dir]
        if row["status"] == "failed":
            logger.warning("sweep %s=%s failed: %s", key_, value,
                           row["error"])
        table.append(row)

    frame = pd.DataFrame(table)
    os.makedirs(out_dir, exist_ok=True)
    frame.to_csv(os.path.join(out_dir, "sweep.csv"), index=False)
    return frame


def estimate_r2(config, burn_in):
    """R_2 of an uncontrolled run of the configuration."""
    grid = build_grid(config)
    model = build_model_from_config(config)
    traj = run_simulation(model,
                          initial_field(config["initial_condition"], grid),
                          build_schedule(config))
    return estimate_attractor_bound(traj, burn_in)
