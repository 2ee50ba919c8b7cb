"""

:Purpose:
    Test harness for the approximation property of the interpolants,
    ||phi - I_h phi|| <= c h ||phi_x||, and the volume-average identity
    built on gamma^2(phi) = sum of squared cell averages.

:Dependencies:
    #. numpy
"""

import logging
from typing import NamedTuple

import numpy as np

from ..tools import error_check
from .grid import Field, Grid1D
from .interpolant_ops import InterpolantSpec, build_interpolant

logger = logging.getLogger(__name__)


class InterpolationError(NamedTuple):
    l2_error: float
    h1_seminorm: float
    ratio: float


class GammaInequality(NamedTuple):
    lhs: float
    rhs: float
    holds: bool


def _l2(grid, values):
    return float(np.sqrt(grid.integrate(values * values)))


def interpolation_error(field, spec):
    """
    Error of I_h on one field, scaled by h ||phi_x||.

    Arguments
        :field (*Field*): Test function.
        :spec (*InterpolantSpec*): Interpolant family and size.

    Returns
        :InterpolationError: (l2_error, h1_seminorm, ratio). The ratio is
            zero whenever the error vanishes to round-off.

    Raises
        :ValueError: Nonzero error with a vanishing derivative.
    """
    fname = "interpolation_error"
    error_check.check_type(field, Field, "field", fname)
    error_check.check_type(spec, InterpolantSpec, "spec", fname)

    grid = field.grid
    op = build_interpolant(grid, spec)
    err = _l2(grid, field.values - op.apply(field.values))
    semi = _l2(grid, grid.derivative(field.values))
    scale = max(_l2(grid, field.values), np.finfo(float).tiny)

    if err <= 1.0e-12 * scale:
        return InterpolationError(err, semi, 0.0)

    if semi <= 1.0e-12 * scale:
        raise error_check.domain_error(
            fname,
            "degenerate input: ||phi - I_h phi|| = %.3e but ||phi_x|| "
            "vanishes." % err
        )

    h = spec.mesh_width(grid.length)
    return InterpolationError(err, semi, err / (h * semi))


def default_sample_grid(spec, boundary="periodic", length=2.0 * np.pi):
    """
    Grid used when estimating c without a caller supplied grid. The point
    count is a multiple of N so every volume owns the same nodes.
    """
    n_act = spec.n_actuators
    n_points = n_act * int(np.ceil(256.0 / n_act))
    n_points = max(n_points, 16 * n_act)
    if boundary != "periodic":
        n_points += 1
    return Grid1D(length, n_points, boundary)


def random_trig_samples(grid, band_limit, sample_count, rng):
    """
    Mean-zero random trigonometric polynomials with wavenumbers 1..K,
    one sample per row. The basis follows the grid's boundary condition.
    """
    k = np.arange(1, band_limit + 1)
    x = grid.x
    if grid.is_periodic:
        arg = 2.0 * np.pi / grid.length * np.outer(k, x)
        basis = np.vstack([np.cos(arg), np.sin(arg)])
    elif grid.boundary == "neumann":
        basis = np.cos(np.pi / grid.length * np.outer(k, x))
    else:
        basis = np.sin(np.pi / grid.length * np.outer(k, x))

    coef = rng.standard_normal((sample_count, basis.shape[0]))
    return coef @ basis


def estimate_interpolation_constant(spec, sample_count, seed, grid=None,
                                    band_limit=None):
    """
    Empirical constant c = max over random samples of
    ||phi - I_h phi|| / (h ||phi_x||). The result is also stored on
    ``spec.c_est``.

    Arguments
        :spec (*InterpolantSpec*): Interpolant family and size.
        :sample_count (*int*): Number of random samples.
        :seed (*int*): Seed for numpy's default generator.

    Keyword Arguments
        :grid (*Grid1D*): Sampling grid. Defaults to a periodic grid on
            [0, 2 pi] whose size is a multiple of N.
        :band_limit (*int*): Highest wavenumber in the samples. Defaults
            to 2N so that modes above a Fourier cutoff are present.

    Returns
        :c_est (*float*): The estimate.
    """
    fname = "estimate_interpolation_constant"
    error_check.check_type(spec, InterpolantSpec, "spec", fname)
    sample_count = error_check.check_type_and_convert(
        sample_count, int, "sample_count", fname
    )
    error_check.check_positive(sample_count, "sample_count", fname)
    seed = error_check.check_type_and_convert(seed, int, "seed", fname)

    if grid is None:
        grid = default_sample_grid(spec)
    if band_limit is None:
        band_limit = 2 * spec.n_actuators
    band_limit = min(int(band_limit), grid.n_points // 2 - 1)

    rng = np.random.default_rng(seed)
    samples = random_trig_samples(grid, band_limit, sample_count, rng)

    op = build_interpolant(grid, spec)
    residual = samples - op.apply(samples)
    err = np.sqrt(grid.integrate(residual * residual))
    semi = np.sqrt(grid.integrate(grid.derivative(samples) ** 2))
    h = spec.mesh_width(grid.length)

    c_est = float(np.max(err / (h * semi)))
    spec.c_est = c_est
    logger.info(
        "c estimate for %s, N=%d over %d samples: %.6g",
        spec.family, spec.n_actuators, sample_count, c_est
    )
    return c_est


def cell_averages(field, N):
    spec = InterpolantSpec("finite_volume", N)
    return build_interpolant(field.grid, spec).cell_averages(field.values)


def gamma_squared(field, N):
    """Sum of the squared local averages over the N volumes."""
    error_check.check_type(field, Field, "field", "gamma_squared")
    avg = cell_averages(field, N)
    return float(np.sum(avg * avg))


def gamma_inequality(field, N, poincare="sharp"):
    """
    h gamma^2 + C ||phi_x||^2 >= ||phi||^2.

    ``poincare='sharp'`` uses C = (h/pi)^2, the Poincare-Wirtinger constant
    on a cell, which makes the inequality true for every H^1 function.
    ``poincare='loose'`` uses C = (h/(2 pi))^2, which fails for some
    fields (sin x with N = 16 on [0, 2 pi] is one).
    """
    error_check.check_choice(poincare, ("sharp", "loose"), "poincare",
                             "gamma_inequality")
    grid = field.grid
    h = grid.length / N
    if poincare == "sharp":
        const = (h / np.pi) ** 2
    else:
        const = (h / (2.0 * np.pi)) ** 2

    semi_sq = float(grid.integrate(grid.derivative(field.values) ** 2))
    lhs = h * gamma_squared(field, N) + const * semi_sq
    rhs = float(grid.integrate(field.values ** 2))
    return GammaInequality(lhs, rhs, lhs >= rhs * (1.0 - 1.0e-10))
