"""

:Purpose:
    Empirical R_2 for a reference trajectory: the square root of the
    long time average of ||u_xx||^2, which enters the gain condition for
    tracking a nonzero reference.

:Dependencies:
    #. numpy
    #. scipy
"""

import logging
from typing import NamedTuple

import numpy as np
from scipy.integrate import trapezoid

from ..tools import error_check

logger = logging.getLogger(__name__)


class AttractorBound(NamedTuple):
    """
    Attributes
        :value (*float*): R_2 over [burn_in, t_end].
        :drift (*float*): (R_2 over the last quarter - value) / value,
            signed; zero when value is zero.
        :t_start, t_stop (*float*): Averaging window.
    """
    value: float
    drift: float
    t_start: float
    t_stop: float


def _time_average(t, y):
    if t[-1] == t[0]:
        return float(y[0])
    return float(trapezoid(y, t) / (t[-1] - t[0]))


def estimate_attractor_bound(traj, burn_in):
    """
    R_2 = sqrt( (1/T) int ||u_xx||^2 dt ) over the records after burn_in.

    Arguments
        :traj (*Trajectory*): Run with recorded ||u_xx|| series.
        :burn_in (*float*): Records before this time are discarded.

    Raises
        :ValueError: Blown-up trajectory, or fewer than 8 records after
            the burn-in.
    """
    fname = "estimate_attractor_bound"
    if traj.blew_up:
        raise error_check.domain_error(
            fname, "trajectory blew up at t = %.6g; no attractor average "
            "exists." % traj.blowup_time
        )

    diag = traj.diagnostics
    mask = diag.t >= burn_in
    t = diag.t[mask]
    uxx_sq = diag.uxx_l2[mask] ** 2
    if t.size < 8:
        raise error_check.domain_error(
            fname,
            "only %d records after burn-in %.6g (run ends at t = %.6g)."
            % (t.size, burn_in, diag.t[-1] if diag.t.size else np.nan)
        )

    full = np.sqrt(_time_average(t, uxx_sq))
    quarter = t >= t[0] + 0.75 * (t[-1] - t[0])
    last = np.sqrt(_time_average(t[quarter], uxx_sq[quarter]))

    drift = 0.0
    if full > 0.0:
        drift = (last - full) / full
    logger.info("R2 = %.6g over [%.6g, %.6g], drift %.3g", full, t[0],
                t[-1], drift)
    return AttractorBound(float(full), float(drift), float(t[0]),
                          float(t[-1]))
