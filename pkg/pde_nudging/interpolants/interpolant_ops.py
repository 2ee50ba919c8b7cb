"""

:Purpose:
    The three finite-rank interpolant operators used as observers and
    actuators: projection onto the first N Fourier modes, averages over
    N finite volumes, and values at one node per volume.

    Each family is built once per (grid, spec) as an operator object whose
    ``apply`` works on plain arrays along the last axis, so the time
    steppers can call it on stacked states without wrapping Fields.

:Dependencies:
    #. numpy
    #. scipy
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.fft

from ..tools import error_check
from .grid import Field, Grid1D

logger = logging.getLogger(__name__)

FAMILIES = ("fourier_modes", "finite_volume", "nodal")
NODE_RULES = ("midpoint", "left", "custom")

# Grid coordinates sitting on a cell edge belong to the cell on the right.
_EDGE_TOL = 1.0e-9


@dataclass
class InterpolantSpec:
    """
    Controller family and its size.

    Arguments
        :family (*str*): 'fourier_modes', 'finite_volume' or 'nodal'.
        :n_actuators (*int*): Number of modes, volumes or nodes, N.

    Keyword Arguments
        :mean_zero (*bool*): Subtract the spatial mean of I_h(u).
        :node_rule (*str*): Node placement for the nodal family.
        :node_offsets (*tuple*): Per-cell offsets in [0, 1] for the
            'custom' rule, x_k* = (k + offset_k) h.
        :c_est (*float*): Empirical interpolation constant, filled in by
            estimate_interpolation_constant.
    """
    family: str
    n_actuators: int
    mean_zero: bool = False
    node_rule: str = "midpoint"
    node_offsets: tuple = None
    c_est: float = None

    def __post_init__(self):
        fname = "InterpolantSpec"
        error_check.check_choice(self.family, FAMILIES, "family", fname)
        self.n_actuators = error_check.check_type_and_convert(
            self.n_actuators, int, "n_actuators", fname
        )
        error_check.check_positive(self.n_actuators, "n_actuators", fname)
        error_check.check_type(self.mean_zero, bool, "mean_zero", fname)
        error_check.check_choice(self.node_rule, NODE_RULES, "node_rule", fname)

        if self.node_rule == "custom":
            if self.node_offsets is None:
                raise error_check.domain_error(
                    fname, "node_rule 'custom' requires node_offsets."
                )
            offsets = tuple(float(t) for t in self.node_offsets)
            if len(offsets) != self.n_actuators:
                raise error_check.domain_error(
                    fname,
                    "node_offsets must have n_actuators = %d entries. Got %d."
                    % (self.n_actuators, len(offsets))
                )
            self.node_offsets = offsets
        elif self.node_offsets is not None:
            self.node_offsets = tuple(float(t) for t in self.node_offsets)

        if self.c_est is not None:
            self.c_est = float(self.c_est)
            error_check.check_positive(self.c_est, "c_est", fname)

    def mesh_width(self, length):
        """Control mesh width h = L/N."""
        return length / self.n_actuators

    def offsets(self):
        if self.node_rule == "midpoint":
            return np.full(self.n_actuators, 0.5)
        elif self.node_rule == "left":
            return np.zeros(self.n_actuators)
        return np.asarray(self.node_offsets, dtype=float)

    def cache_key(self):
        offsets = None
        if self.node_rule == "custom":
            offsets = self.node_offsets
        return (self.family, self.n_actuators, self.mean_zero,
                self.node_rule, offsets)


class InterpolantOperator(object):
    """
    Base class. Subclasses fill in ``_project`` acting on the last axis.
    """
    family = None

    def __init__(self, grid, n_actuators, mean_zero=False):
        self.grid = grid
        self.n_actuators = n_actuators
        self.mean_zero = mean_zero
        self.h = grid.length / n_actuators

    def apply(self, values):
        out = self._project(np.asarray(values, dtype=float))
        if self.mean_zero:
            out = out - np.asarray(self.grid.mean(out))[..., None]
        return out

    def __call__(self, field):
        error_check.check_type(field, Field, "field", "InterpolantOperator")
        if field.grid != self.grid:
            raise error_check.domain_error(
                "InterpolantOperator",
                "field lives on a different grid than the operator."
            )
        return field.with_values(self.apply(field.values))

    def _project(self, values):
        raise NotImplementedError


class FourierProjection(InterpolantOperator):
    """
    Low-mode truncation keeping wavenumbers k = 0..N.

    Periodic grids use the real FFT, Neumann grids the type-I cosine
    transform (basis cos(k pi x / L)), Dirichlet grids the type-I sine
    transform of the interior values (basis sin(k pi x / L)).
    """
    family = "fourier_modes"

    def __init__(self, grid, n_actuators, mean_zero=False):
        InterpolantOperator.__init__(self, grid, n_actuators, mean_zero)
        if 2 * n_actuators >= grid.n_points:
            raise error_check.domain_error(
                "fourier_projection",
                "N = %d is too large for a grid of %d points "
                "(need N < n_points/2)." % (n_actuators, grid.n_points)
            )

    def _project(self, values):
        n_keep = self.n_actuators
        if self.grid.boundary == "periodic":
            v_hat = np.fft.rfft(values, axis=-1)
            v_hat[..., n_keep + 1:] = 0.0
            return np.fft.irfft(v_hat, n=self.grid.n_points, axis=-1)

        elif self.grid.boundary == "neumann":
            coef = scipy.fft.dct(values, type=1, axis=-1)
            coef[..., n_keep + 1:] = 0.0
            return scipy.fft.idct(coef, type=1, axis=-1)

        out = np.zeros_like(values)
        coef = scipy.fft.dst(values[..., 1:-1], type=1, axis=-1)
        coef[..., n_keep:] = 0.0
        out[..., 1:-1] = scipy.fft.idst(coef, type=1, axis=-1)
        return out


class _CellOperator(InterpolantOperator):
    """Shared cell bookkeeping for the piecewise constant families."""

    def __init__(self, grid, n_actuators, mean_zero=False):
        InterpolantOperator.__init__(self, grid, n_actuators, mean_zero)
        cell = np.floor(grid.x / self.h + _EDGE_TOL).astype(int)
        self.cell_of_node = np.clip(cell, 0, n_actuators - 1)

        counts = np.bincount(self.cell_of_node, minlength=n_actuators)
        if np.any(counts == 0):
            raise error_check.domain_error(
                "interpolant",
                "N = %d leaves cell %d without grid points on a grid of %d "
                "points." % (n_actuators, int(np.argmin(counts)),
                             grid.n_points)
            )

        self.membership = np.zeros((grid.n_points, n_actuators))
        self.membership[np.arange(grid.n_points), self.cell_of_node] = 1.0

    def spread(self, cell_values):
        """Piecewise constant field from one value per cell."""
        return cell_values[..., self.cell_of_node]


class FiniteVolumeAverage(_CellOperator):
    """
    Cell averages with trapezoid weights restricted to the nodes each
    cell owns. The result is the weighted orthogonal projection onto
    piecewise constants.
    """
    family = "finite_volume"

    def __init__(self, grid, n_actuators, mean_zero=False):
        _CellOperator.__init__(self, grid, n_actuators, mean_zero)
        self.cell_weight = grid.weights @ self.membership

    def cell_averages(self, values):
        sums = (np.asarray(values, dtype=float) * self.grid.weights) \
            @ self.membership
        return sums / self.cell_weight

    def _project(self, values):
        return self.spread(self.cell_averages(values))


class NodalSampling(_CellOperator):
    """
    One node per cell, x_k* = (k + offset_k) h, sampled by linear
    interpolation between the neighbouring grid points.
    """
    family = "nodal"

    def __init__(self, grid, n_actuators, offsets, mean_zero=False):
        _CellOperator.__init__(self, grid, n_actuators, mean_zero)
        offsets = np.asarray(offsets, dtype=float)
        if np.any(offsets < 0.0) or np.any(offsets > 1.0):
            bad = int(np.flatnonzero((offsets < 0.0) | (offsets > 1.0))[0])
            raise error_check.domain_error(
                "nodal_interpolant",
                "node %d lies outside its cell (offset %.6g not in [0, 1])."
                % (bad, offsets[bad])
            )
        self.nodes = (np.arange(n_actuators) + offsets) * self.h

        pos = self.nodes / grid.dx
        snapped = np.round(pos)
        pos = np.where(np.abs(pos - snapped) < _EDGE_TOL, snapped, pos)
        n = grid.n_points
        if grid.is_periodic:
            j0 = np.floor(pos).astype(int)
            frac = pos - j0
            j1 = (j0 + 1) % n
            j0 = j0 % n
        else:
            j0 = np.clip(np.floor(pos).astype(int), 0, n - 2)
            frac = pos - j0
            j1 = j0 + 1

        self.sampler = np.zeros((n_actuators, n))
        rows = np.arange(n_actuators)
        np.add.at(self.sampler, (rows, j0), 1.0 - frac)
        np.add.at(self.sampler, (rows, j1), frac)

    def node_values(self, values):
        return np.asarray(values, dtype=float) @ self.sampler.T

    def _project(self, values):
        return self.spread(self.node_values(values))


@lru_cache(maxsize=64)
def _cached_operator(grid, family, n_actuators, mean_zero, node_rule,
                     offsets):
    spec = InterpolantSpec(family, n_actuators, mean_zero=mean_zero,
                           node_rule=node_rule, node_offsets=offsets)
    if family == "fourier_modes":
        return FourierProjection(grid, n_actuators, mean_zero)
    elif family == "finite_volume":
        return FiniteVolumeAverage(grid, n_actuators, mean_zero)
    return NodalSampling(grid, n_actuators, spec.offsets(), mean_zero)


def build_interpolant(grid, spec):
    """
    Operator for ``spec`` on ``grid``. Operators are immutable and cached.
    """
    error_check.check_type(grid, Grid1D, "grid", "build_interpolant")
    error_check.check_type(spec, InterpolantSpec, "spec", "build_interpolant")
    if spec.n_actuators > grid.n_points:
        raise error_check.domain_error(
            "build_interpolant",
            "N = %d exceeds the %d grid points."
            % (spec.n_actuators, grid.n_points)
        )
    return _cached_operator(grid, *spec.cache_key())


def fourier_projection(field, N):
    return build_interpolant(
        field.grid, InterpolantSpec("fourier_modes", N)
    )(field)


def finite_volume_interpolant(field, N):
    return build_interpolant(
        field.grid, InterpolantSpec("finite_volume", N)
    )(field)


def nodal_interpolant(field, N, rule="midpoint", offsets=None):
    spec = InterpolantSpec("nodal", N, node_rule=rule, node_offsets=offsets)
    return build_interpolant(field.grid, spec)(field)


def mean_zero_shift(field):
    """Subtract the trapezoid mean over the whole domain."""
    error_check.check_type(field, Field, "field", "mean_zero_shift")
    return field.with_values(field.values - field.grid.mean(field.values))


def interpolate(field, spec):
    """Apply the operator described by ``spec`` to ``field``."""
    return build_interpolant(field.grid, spec)(field)
