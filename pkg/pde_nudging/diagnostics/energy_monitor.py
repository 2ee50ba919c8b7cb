"""

:Purpose:
    Runtime check of the L2 energy inequality of the controlled KSE,

        1/2 d/dt ||u||^2 + (3 nu/4 - mu c h^4/4) ||u_xx||^2
            <= (1/nu - mu/4) ||u||^2,

    and of its Gronwall consequence
    ||u(t)||^2 <= exp((1/nu - mu/4) t) ||u(0)||^2.

:Dependencies:
    #. numpy
"""

import logging

import numpy as np

from ..tools import error_check

logger = logging.getLogger(__name__)

MONITOR_SLACK = 1.0e-6


def energy_inequality_monitor(traj, nu, mu, h, c):
    """
    Residual LHS - RHS of the energy inequality at every record, with
    d/dt ||u||^2 by centered differences (second order one-sided at the
    ends). The residuals are also stored on traj.diagnostics.

    Arguments
        :traj (*Trajectory*): Run to inspect.
        :nu, mu, h, c (*float*): Model, gain, mesh width and interpolation
            constant.

    Returns
        :residual (*np.ndarray*): Nonpositive, up to the slack, whenever
            mu > 4/nu and nu > mu c h^4.
    """
    fname = "energy_inequality_monitor"
    if c is None:
        raise error_check.domain_error(
            fname, "the interpolation constant c is required."
        )
    diag = traj.diagnostics
    t = diag.t
    energy = diag.l2 ** 2
    if t.size < 3:
        raise error_check.domain_error(
            fname, "need at least three records, got %d." % t.size
        )

    d_energy = np.gradient(energy, t, edge_order=2)
    residual = 0.5 * d_energy \
        + (0.75 * nu - 0.25 * mu * c * h ** 4) * diag.uxx_l2 ** 2 \
        - (1.0 / nu - 0.25 * mu) * energy

    diag.energy_monitor = residual
    return residual


def monitor_tolerance(traj, slack=MONITOR_SLACK):
    """Per-record slack: slack * max(||u||^2, dt)."""
    diag = traj.diagnostics
    return slack * np.maximum(diag.l2 ** 2, traj.dt)


def monitor_violations(traj, residual, slack=MONITOR_SLACK):
    """Indices where the residual exceeds the slack."""
    bad = np.flatnonzero(residual > monitor_tolerance(traj, slack))
    if bad.size:
        logger.warning("energy inequality violated at %d records, first "
                       "at t = %.6g", bad.size, traj.diagnostics.t[bad[0]])
    return bad


def gronwall_envelope(traj, nu, mu):
    """exp((1/nu - mu/4)(t - t0)) ||u(t0)||^2 at every record."""
    diag = traj.diagnostics
    rate = 1.0 / nu - 0.25 * mu
    return np.exp(rate * (diag.t - diag.t[0])) * diag.l2[0] ** 2


def gronwall_holds(traj, nu, mu, rtol=MONITOR_SLACK):
    envelope = gronwall_envelope(traj, nu, mu)
    energy = traj.diagnostics.l2 ** 2
    return bool(np.all(energy <= envelope * (1.0 + rtol)
                       + rtol * traj.dt * np.finfo(float).eps))
