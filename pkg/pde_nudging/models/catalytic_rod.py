"""

:Purpose:
    Catalytic rod: temperature of a long thin rod with an exothermic
    first order reaction, in deviation variables,

        u_t = u_xx + beta_T(t) (exp(-gamma/(1+u)) - exp(-gamma))
              + beta_U (control - u),      u(0) = u(pi) = 0,

    where control is the feedback term -mu I_h(u) (zero uncontrolled)
    and beta_T(t) = beta_T + theta(t) when a parameter uncertainty is
    given.

:Dependencies:
    #. numpy
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..interpolants import Field, Grid1D
from ..tools import error_check

UNCERTAINTY_FREQUENCY = 0.524


def sinusoidal_uncertainty(t):
    """theta(t) = sin(0.524 t)."""
    return np.sin(UNCERTAINTY_FREQUENCY * t)


@dataclass(frozen=True)
class CatalyticRodParams:
    """
    Arguments
        :beta_T (*float*): Dimensionless heat of reaction.
        :beta_U (*float*): Dimensionless heat transfer coefficient.
        :gamma_act (*float*): Dimensionless activation energy.

    Keyword Arguments
        :uncertainty (*callable*): Bounded theta(t) added to beta_T.
        :length (*float*): Rod length, pi in the scaled model.
    """
    beta_T: float
    beta_U: float
    gamma_act: float
    uncertainty: Optional[Callable] = None
    length: float = np.pi

    def __post_init__(self):
        fname = "CatalyticRodParams"
        for name in ("beta_T", "beta_U", "gamma_act", "length"):
            value = error_check.check_type_and_convert(
                getattr(self, name), float, name, fname
            )
            error_check.check_positive(value, name, fname)
            object.__setattr__(self, name, value)
        if (self.uncertainty is not None) and not callable(self.uncertainty):
            raise error_check.domain_error(
                fname, "uncertainty must be a callable theta(t)."
            )

    def beta_T_at(self, t):
        if self.uncertainty is None:
            return self.beta_T
        return self.beta_T + float(self.uncertainty(t))


def dirichlet_laplacian(values, dx):
    """Three point Laplacian in the interior, zero at both ends."""
    lap = np.zeros_like(values)
    lap[..., 1:-1] = (values[..., 2:] - 2.0 * values[..., 1:-1]
                      + values[..., :-2]) / (dx * dx)
    return lap


def rod_tendency(values, grid, p, t, control=None):
    """Array version of rod_rhs; works on stacked states."""
    fname = "rod_rhs"
    if np.any(1.0 + values <= 0.0):
        idx = np.unravel_index(np.argmax(1.0 + values <= 0.0), values.shape)
        raise error_check.domain_error(
            fname,
            "1 + u <= 0 at x = %.6g (u = %.6g); the reaction term is "
            "singular there." % (grid.x[idx[-1]], values[idx])
        )

    beta_T = p.beta_T_at(t)
    gamma = p.gamma_act
    # u = 0 gives exp(-gamma / 1.0) == exp(-gamma) bit for bit.
    reaction = beta_T * np.exp(-gamma / (1.0 + values)) \
        - beta_T * np.exp(-gamma)

    drive = -values
    if control is not None:
        drive = control - values

    out = dirichlet_laplacian(values, grid.dx) + reaction + p.beta_U * drive
    out[..., 0] = 0.0
    out[..., -1] = 0.0
    return out


def rod_rhs(u, p, t, control=None):
    """
    Tendency of the catalytic rod.

    Arguments
        :u (*Field*): State on a Dirichlet grid.
        :p (*CatalyticRodParams*): Model parameters.
        :t (*float*): Time, used by the uncertainty theta(t).

    Keyword Arguments
        :control (*Field*): Feedback term, already multiplied by -mu.
    """
    fname = "rod_rhs"
    error_check.check_type(u, Field, "u", fname)
    if u.grid.boundary != "dirichlet":
        raise error_check.domain_error(
            fname, "grid boundary must be 'dirichlet'. Got '%s'."
            % u.grid.boundary
        )
    ctrl = None
    if control is not None:
        error_check.check_type(control, Field, "control", fname)
        ctrl = control.values
    return u.with_values(rod_tendency(u.values, u.grid, p, t, ctrl))


def rod_growth_rate(k, p, n_points=None):
    """
    Linear growth rate of sin(k pi x / L) about u = 0 with theta = 0:
    -(k pi / L)^2 + beta_T gamma exp(-gamma) - beta_U.
    """
    k = np.asarray(k, dtype=float)
    source = p.beta_T * p.gamma_act * np.exp(-p.gamma_act) - p.beta_U
    if n_points is None:
        return source - (k * np.pi / p.length) ** 2
    dx = p.length / (n_points - 1)
    lam = 4.0 / dx ** 2 * np.sin(k * np.pi * dx / (2.0 * p.length)) ** 2
    return source - lam


class CatalyticRod(object):
    """
    Model object consumed by the simulation driver.
    """
    name = "rod"
    boundary = "dirichlet"
    spectral = False
    diffusion = 1.0

    def __init__(self, params):
        error_check.check_type(params, CatalyticRodParams, "params",
                               "CatalyticRod")
        self.params = params
        self.length = params.length
        # control enters as beta_U * (control - u)
        self.control_gain = params.beta_U

    def check_grid(self, grid):
        if grid.boundary != self.boundary:
            raise error_check.domain_error(
                "CatalyticRod", "grid boundary must be 'dirichlet'."
            )
        if not np.isclose(grid.length, self.length, rtol=1.0e-12):
            raise error_check.domain_error(
                "CatalyticRod",
                "grid length %.12g does not match model length %.12g."
                % (grid.length, self.length)
            )

    def tendency(self, values, grid, t, control=None):
        return rod_tendency(values, grid, self.params, t, control)

    def growth_rate(self, k):
        return rod_growth_rate(k, self.params)

    def default_grid(self):
        # dx = pi/20
        return Grid1D(self.length, 21, self.boundary)
