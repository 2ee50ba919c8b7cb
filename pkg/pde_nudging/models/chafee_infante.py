"""

:Purpose:
    Chafee-Infante reaction-diffusion equation

        u_t = nu u_xx + alpha u - u^3 (+ control),   u_x(0) = u_x(L) = 0,

    discretised with three point differences and ghost point reflection
    at both ends.

:Dependencies:
    #. numpy
"""

from dataclasses import dataclass

import numpy as np

from ..interpolants import Field, Grid1D
from ..tools import error_check


@dataclass(frozen=True)
class ChafeeInfanteParams:
    """
    Arguments
        :nu (*float*): Diffusion coefficient.
        :alpha (*float*): Linear instability parameter.

    Keyword Arguments
        :length (*float*): Domain length L.
    """
    nu: float
    alpha: float
    length: float = 1.0

    def __post_init__(self):
        fname = "ChafeeInfanteParams"
        for name in ("nu", "alpha", "length"):
            value = error_check.check_type_and_convert(
                getattr(self, name), float, name, fname
            )
            error_check.check_positive(value, name, fname)
            object.__setattr__(self, name, value)


def neumann_laplacian(values, dx):
    """
    Three point Laplacian along the last axis with u_{-1} = u_1 and
    u_{n} = u_{n-2}.
    """
    lap = np.empty_like(values)
    lap[..., 1:-1] = values[..., 2:] - 2.0 * values[..., 1:-1] \
        + values[..., :-2]
    lap[..., 0] = 2.0 * (values[..., 1] - values[..., 0])
    lap[..., -1] = 2.0 * (values[..., -2] - values[..., -1])
    return lap / (dx * dx)


def ci_tendency(values, grid, p, control=None):
    """Array version of ci_rhs; works on stacked states."""
    out = p.nu * neumann_laplacian(values, grid.dx) + p.alpha * values \
        - values * values * values
    if control is not None:
        out = out + control
    return out


def _check_grid(grid, length, boundary, fname):
    if grid.boundary != boundary:
        raise error_check.domain_error(
            fname, "grid boundary must be '%s'. Got '%s'."
            % (boundary, grid.boundary)
        )
    if not np.isclose(grid.length, length, rtol=1.0e-12):
        raise error_check.domain_error(
            fname, "grid length %.12g does not match model length %.12g."
            % (grid.length, length)
        )


def ci_rhs(u, p, control=None):
    """
    Tendency nu u_xx + alpha u - u^3 + control.

    Arguments
        :u (*Field*): State on a Neumann grid.
        :p (*ChafeeInfanteParams*): Model parameters.

    Keyword Arguments
        :control (*Field*): Feedback term, already multiplied by -mu.
    """
    fname = "ci_rhs"
    error_check.check_type(u, Field, "u", fname)
    _check_grid(u.grid, p.length, "neumann", fname)
    ctrl = None
    if control is not None:
        error_check.check_type(control, Field, "control", fname)
        ctrl = control.values
    return u.with_values(ci_tendency(u.values, u.grid, p, ctrl))


def ci_growth_rate(k, p, n_points=None):
    """
    Linear growth rate of cos(k pi x / L) about u = 0.

    With ``n_points`` the rate of the discrete three point operator on
    that Neumann grid is returned instead of the continuum value.
    """
    k = np.asarray(k, dtype=float)
    if n_points is None:
        return p.alpha - p.nu * (k * np.pi / p.length) ** 2

    dx = p.length / (n_points - 1)
    lam = 4.0 / dx ** 2 * np.sin(k * np.pi * dx / (2.0 * p.length)) ** 2
    return p.alpha - p.nu * lam


class ChafeeInfante(object):
    """
    Model object consumed by the simulation driver.
    """
    name = "ci"
    boundary = "neumann"
    spectral = False

    def __init__(self, params):
        error_check.check_type(params, ChafeeInfanteParams, "params",
                               "ChafeeInfante")
        self.params = params
        self.length = params.length
        self.diffusion = params.nu
        self.control_gain = 1.0

    def check_grid(self, grid):
        _check_grid(grid, self.length, self.boundary, "ChafeeInfante")

    def tendency(self, values, grid, t, control=None):
        return ci_tendency(values, grid, self.params, control)

    def growth_rate(self, k):
        return ci_growth_rate(k, self.params)

    def default_grid(self):
        return Grid1D(self.length, 101, self.boundary)
