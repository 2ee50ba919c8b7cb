"""

:Purpose:
    Norms of fields and the per-step diagnostics record of a run.

        ||u||_{L2}^2  = int u^2 dx                 (trapezoid)
        ||u||_{H1}^2  = (1/L^2) int u^2 + int u_x^2

    Derivatives come from the grid: spectral on periodic grids, central
    differences on bounded ones.

:Dependencies:
    #. numpy
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..interpolants import Field
from ..tools import error_check


def _l2(grid, values):
    return float(np.sqrt(grid.integrate(values * values)))


def l2_norm(u):
    error_check.check_type(u, Field, "u", "l2_norm")
    return _l2(u.grid, u.values)


def h1_seminorm(u):
    error_check.check_type(u, Field, "u", "h1_seminorm")
    return _l2(u.grid, u.grid.derivative(u.values))


def h1_norm(u):
    """Square root of (1/L^2) ||u||^2 + ||u_x||^2."""
    error_check.check_type(u, Field, "u", "h1_norm")
    l2 = _l2(u.grid, u.values)
    semi = _l2(u.grid, u.grid.derivative(u.values))
    return float(np.sqrt(l2 * l2 / u.grid.length ** 2 + semi * semi))


def uxx_norm(u):
    error_check.check_type(u, Field, "u", "uxx_norm")
    return _l2(u.grid, u.grid.derivative(u.values, order=2))


def state_norms(values, grid):
    """
    (l2, h1_semi, max_abs, mean, uxx_l2) of a raw state array.
    """
    return (
        _l2(grid, values),
        _l2(grid, grid.derivative(values)),
        float(np.max(np.abs(values))),
        float(grid.mean(values)),
        _l2(grid, grid.derivative(values, order=2)),
    )


@dataclass
class RunDiagnostics:
    """
    Time series recorded along a run. All arrays share one length.

    Attributes
        :t (*np.ndarray*): Record times.
        :l2, h1_semi, max_abs, mean, uxx_l2 (*np.ndarray*): Norms.
        :control_active (*np.ndarray*): Control applied on the step
            starting at t.
        :length (*float*): Domain length, used by the H1 norm.
        :energy_monitor (*np.ndarray*): Residuals filled in on demand.
    """
    t: np.ndarray
    l2: np.ndarray
    h1_semi: np.ndarray
    max_abs: np.ndarray
    mean: np.ndarray
    control_active: np.ndarray
    uxx_l2: np.ndarray
    length: float
    energy_monitor: Optional[np.ndarray] = None

    def __post_init__(self):
        for name in ("t", "l2", "h1_semi", "max_abs", "mean", "uxx_l2"):
            setattr(self, name, np.asarray(getattr(self, name), dtype=float))
        self.control_active = np.asarray(self.control_active, dtype=bool)
        sizes = {getattr(self, name).size for name in
                 ("t", "l2", "h1_semi", "max_abs", "mean", "uxx_l2",
                  "control_active")}
        if len(sizes) != 1:
            raise error_check.domain_error(
                "RunDiagnostics", "all series must have the same length."
            )

    @property
    def h1(self):
        return np.sqrt(self.l2 ** 2 / self.length ** 2 + self.h1_semi ** 2)

    def __len__(self):
        return self.t.size

    def window(self, t_start=-np.inf, t_stop=np.inf):
        """Boolean mask of the records with t in [t_start, t_stop]."""
        return (self.t >= t_start) & (self.t <= t_stop)


class DiagnosticsRecorder(object):
    """Accumulates rows during a run and freezes them into RunDiagnostics."""

    def __init__(self, grid):
        self.grid = grid
        self._rows = []
        self._active = []

    def record(self, t, values, active):
        self._rows.append((t,) + state_norms(values, self.grid))
        self._active.append(bool(active))

    def finish(self):
        if self._rows:
            cols = np.array(self._rows, dtype=float).T
        else:
            cols = np.zeros((6, 0))
        return RunDiagnostics(
            t=cols[0], l2=cols[1], h1_semi=cols[2], max_abs=cols[3],
            mean=cols[4], uxx_l2=cols[5],
            control_active=np.array(self._active, dtype=bool),
            length=self.grid.length,
        )
