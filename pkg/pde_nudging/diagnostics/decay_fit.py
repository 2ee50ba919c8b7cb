"""

:Purpose:
    Exponential rate of a positive series by least squares on its
    logarithm.

:Dependencies:
    #. numpy
    #. scipy
"""

import logging
from typing import NamedTuple

import numpy as np
from scipy import stats

from ..tools import error_check

logger = logging.getLogger(__name__)

MIN_SAMPLES = 10


class DecayFit(NamedTuple):
    rate: float
    r_squared: float
    n_samples: int = 0
    t_start: float = np.nan
    t_stop: float = np.nan


def fit_decay_rate(t, values, window=None):
    """
    Slope of log(values) against t.

    Arguments
        :t (*np.ndarray*): Sample times.
        :values (*np.ndarray*): Series, positive on the window.

    Keyword Arguments
        :window (*tuple*): (t_start, t_stop); default is the whole series.

    Returns
        :DecayFit: rate, r_squared and the samples actually used. A
            constant series has rate 0 and r_squared 1.

    Raises
        :ValueError: Fewer than 10 usable samples. The window is cut just
            before the first non-positive value.
    """
    fname = "fit_decay_rate"
    t = np.asarray(t, dtype=float)
    values = np.asarray(values, dtype=float)
    if t.shape != values.shape:
        raise error_check.domain_error(
            fname, "t and values must have the same shape."
        )

    mask = np.ones(t.size, dtype=bool)
    if window is not None:
        mask = (t >= window[0]) & (t <= window[1])
    t = t[mask]
    values = values[mask]

    bad = np.flatnonzero(~(values > 0.0))
    if bad.size:
        logger.debug("%s: truncating window at t = %.6g", fname, t[bad[0]])
        t = t[:bad[0]]
        values = values[:bad[0]]

    if t.size < MIN_SAMPLES:
        raise error_check.domain_error(
            fname,
            "need at least %d positive samples in the window, got %d."
            % (MIN_SAMPLES, t.size)
        )

    logv = np.log(values)
    if np.ptp(logv) == 0.0:
        return DecayFit(0.0, 1.0, t.size, t[0], t[-1])

    fit = stats.linregress(t, logv)
    return DecayFit(float(fit.slope), float(fit.rvalue ** 2), t.size,
                    t[0], t[-1])
