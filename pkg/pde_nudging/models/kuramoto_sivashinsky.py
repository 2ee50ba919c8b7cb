"""

:Purpose:
    Kuramoto-Sivashinsky equation on a periodic domain of length L,

        u_t = -gamma u_xx - nu u_xxxx - u u_x,

    in the pseudo-spectral form used by the exponential integrator: the
    state is the real FFT of u, the linear part is the diagonal symbol
    gamma q^2 - nu q^4 and the nonlinearity is -(1/2) d/dx (u^2).

:Dependencies:
    #. numpy
"""

from dataclasses import dataclass

import numpy as np

from ..interpolants import Field, Grid1D
from ..tools import error_check


@dataclass(frozen=True)
class KSEParams:
    """
    Arguments
        :nu (*float*): Fourth order (dissipation) coefficient.

    Keyword Arguments
        :gamma (*float*): Second order (anti-diffusion) coefficient.
        :length (*float*): Period L.
    """
    nu: float
    gamma: float = 1.0
    length: float = 2.0 * np.pi

    def __post_init__(self):
        fname = "KSEParams"
        for name in ("nu", "gamma", "length"):
            value = error_check.check_type_and_convert(
                getattr(self, name), float, name, fname
            )
            error_check.check_positive(value, name, fname)
            object.__setattr__(self, name, value)


def kse_linear_symbol(k, p):
    """
    Growth rate of the Fourier mode with integer wavenumber k,
    gamma q^2 - nu q^4 with q = 2 pi k / L. On the 2 pi domain this is
    k^2 - nu k^4.
    """
    q = 2.0 * np.pi * np.asarray(k, dtype=float) / p.length
    return p.gamma * q * q - p.nu * q ** 4


def kse_symbol(grid, p):
    """Linear symbol on every rfft mode of ``grid``."""
    return kse_linear_symbol(np.arange(grid.n_points // 2 + 1), p)


def dealias_mask(n_points):
    """Two-thirds rule: keep wavenumbers k <= n/3."""
    return np.arange(n_points // 2 + 1) <= n_points // 3


def kse_nonlinear(u_hat, grid, dealias=False):
    """
    Spectral transform of -(1/2) (u^2)_x.

    The mean mode is exactly zero, and on even grids the Nyquist mode is
    dropped so the output stays the transform of a real field.

    Arguments
        :u_hat (*np.ndarray*): rfft of u along the last axis.
        :grid (*Grid1D*): Periodic grid the transform refers to.

    Keyword Arguments
        :dealias (*bool*): Apply the two-thirds rule before squaring.
    """
    n = grid.n_points
    q = grid.wavenumbers.copy()
    if n % 2 == 0:
        q[-1] = 0.0
    if dealias:
        u_hat = np.where(dealias_mask(n), u_hat, 0.0)
    u = np.fft.irfft(u_hat, n=n, axis=-1)
    return -0.5j * q * np.fft.rfft(u * u, axis=-1)


class KuramotoSivashinsky(object):
    """
    Model object consumed by the simulation driver.
    """
    name = "kse"
    boundary = "periodic"
    spectral = True

    def __init__(self, params, dealias=False):
        error_check.check_type(params, KSEParams, "params",
                               "KuramotoSivashinsky")
        self.params = params
        self.length = params.length
        self.dealias = bool(dealias)

    def check_grid(self, grid):
        if not grid.is_periodic:
            raise error_check.domain_error(
                "KuramotoSivashinsky", "grid must be periodic."
            )
        if not np.isclose(grid.length, self.length, rtol=1.0e-12):
            raise error_check.domain_error(
                "KuramotoSivashinsky",
                "grid length %.12g does not match model length %.12g."
                % (grid.length, self.length)
            )

    def symbol(self, grid):
        return kse_symbol(grid, self.params)

    def nonlinear(self, u_hat, grid):
        return kse_nonlinear(u_hat, grid, self.dealias)

    def rhs(self, u):
        """Physical space tendency of a Field, for linearisation checks."""
        error_check.check_type(u, Field, "u", "KuramotoSivashinsky.rhs")
        self.check_grid(u.grid)
        u_hat = np.fft.rfft(u.values)
        total = self.symbol(u.grid) * u_hat + self.nonlinear(u_hat, u.grid)
        return u.with_values(np.fft.irfft(total, n=u.grid.n_points))

    def growth_rate(self, k):
        return kse_linear_symbol(k, self.params)

    def default_grid(self):
        return Grid1D(self.length, 128, self.boundary)
