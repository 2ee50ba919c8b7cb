"""

:Purpose:
    Uniform one dimensional grids and the fields sampled on them. The
    grid owns everything that depends only on geometry: coordinates,
    quadrature weights and the discrete derivative used by the norms
    and the interpolation-error harness.

:Dependencies:
    #. numpy
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..tools import error_check

BOUNDARIES = ("periodic", "neumann", "dirichlet")


@dataclass(frozen=True)
class Grid1D:
    """
    Uniform grid on [0, L].

    Periodic grids exclude the point x = L so that the spacing is L/n.
    Neumann and Dirichlet grids include both end points, with spacing
    L/(n - 1).

    Arguments
        :length (*float*): Domain length L.
        :n_points (*int*): Number of grid points.
        :boundary (*str*): One of 'periodic', 'neumann', 'dirichlet'.
    """
    length: float
    n_points: int
    boundary: str = "periodic"

    def __post_init__(self):
        fname = "Grid1D"
        length = error_check.check_type_and_convert(
            self.length, float, "length", fname
        )
        n_points = error_check.check_type_and_convert(
            self.n_points, int, "n_points", fname
        )
        error_check.check_positive(length, "length", fname)
        error_check.check_finite(length, "length", fname)
        error_check.check_choice(self.boundary, BOUNDARIES, "boundary", fname)
        if n_points < 3:
            raise error_check.domain_error(
                fname, "n_points must be at least 3. Got %d." % n_points
            )
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "n_points", n_points)

    @property
    def is_periodic(self):
        return self.boundary == "periodic"

    @property
    def dx(self):
        if self.is_periodic:
            return self.length / self.n_points
        return self.length / (self.n_points - 1)

    @cached_property
    def x(self):
        if self.is_periodic:
            return np.arange(self.n_points) * self.dx
        return np.linspace(0.0, self.length, self.n_points)

    @cached_property
    def weights(self):
        """Composite trapezoid weights."""
        w = np.full(self.n_points, self.dx)
        if not self.is_periodic:
            w[0] *= 0.5
            w[-1] *= 0.5
        return w

    @cached_property
    def wavenumbers(self):
        """Angular wavenumbers 2*pi*k/L of the rfft modes (periodic only)."""
        return 2.0 * np.pi / self.length * np.arange(self.n_points // 2 + 1)

    def integrate(self, values):
        return np.asarray(values) @ self.weights

    def mean(self, values):
        return self.integrate(values) / self.length

    def derivative(self, values, order=1):
        """
        Discrete derivative along the last axis.

        Spectral on periodic grids (Nyquist mode dropped for odd orders),
        second order central differences with one-sided second order end
        stencils on bounded grids. Order two on bounded grids applies the
        first derivative twice.
        """
        values = np.asarray(values, dtype=float)
        if self.is_periodic:
            k = self.wavenumbers
            mult = (1j * k) ** order
            if (order % 2 == 1) and (self.n_points % 2 == 0):
                mult[-1] = 0.0
            v_hat = np.fft.rfft(values, axis=-1)
            return np.fft.irfft(mult * v_hat, n=self.n_points, axis=-1)

        out = values
        for _ in range(order):
            out = np.gradient(out, self.dx, edge_order=2, axis=-1)
        return out

    def sample(self, func):
        """Evaluate a callable f(x) on the grid and wrap it as a Field."""
        return Field(self, np.broadcast_to(func(self.x), self.x.shape))

    def zeros(self):
        return Field(self, np.zeros(self.n_points))


@dataclass(frozen=True, eq=False)
class Field:
    """
    Real values sampled on a grid. NaN or Inf entries are rejected.
    """
    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        fname = "Field"
        error_check.check_type(self.grid, Grid1D, "grid", fname)
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.n_points,):
            raise error_check.domain_error(
                fname,
                "values must have shape (%d,). Got %s."
                % (self.grid.n_points, values.shape)
            )
        error_check.check_finite(values, "values", fname)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def with_values(self, values):
        return Field(self.grid, values)

    def __add__(self, other):
        return self.with_values(self.values + _values_of(other))

    def __sub__(self, other):
        return self.with_values(self.values - _values_of(other))

    def __mul__(self, scalar):
        return self.with_values(self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return self.with_values(-self.values)

    def __len__(self):
        return self.grid.n_points


def _values_of(other):
    if isinstance(other, Field):
        return other.values
    return other
