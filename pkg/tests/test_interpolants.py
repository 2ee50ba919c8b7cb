"""
Tests for the interpolant operators.

Validates:
- Fourier truncation for periodic, Neumann and Dirichlet grids
- Finite volume averages and their projection property
- Nodal sampling at cell midpoints and custom offsets
- Mean-zero shift
- Idempotence and linearity of every family
- Argument checks on InterpolantSpec and operator sizes
"""

import numpy as np
import pytest

from pde_nudging.interpolants import (
    Grid1D,
    InterpolantSpec,
    build_interpolant,
    finite_volume_interpolant,
    fourier_projection,
    interpolate,
    mean_zero_shift,
    nodal_interpolant,
)


class TestFourierProjection:
    """Low-mode truncation."""

    def test_periodic_truncation(self, periodic_grid):
        """Modes above N are removed, modes up to N are kept."""
        u = periodic_grid.sample(lambda x: np.cos(x) + np.sin(3 * x)
                                 + np.cos(5 * x))
        out = fourier_projection(u, 3)
        x = periodic_grid.x
        assert np.allclose(out.values, np.cos(x) + np.sin(3 * x),
                           atol=1e-12)

    def test_neumann_cosine_basis(self):
        """Neumann grids truncate in cos(k pi x / L)."""
        grid = Grid1D(1.0, 65, "neumann")
        x = grid.x
        u = grid.sample(lambda x: np.cos(np.pi * x) + np.cos(5 * np.pi * x))
        out = fourier_projection(u, 3)
        assert np.allclose(out.values, np.cos(np.pi * x), atol=1e-12)

    def test_dirichlet_sine_basis(self):
        """Dirichlet grids truncate in sin(k pi x / L), ends stay zero."""
        grid = Grid1D(np.pi, 65, "dirichlet")
        x = grid.x
        u = grid.sample(lambda x: np.sin(x) + np.sin(5 * x))
        out = fourier_projection(u, 3)
        assert np.allclose(out.values, np.sin(x), atol=1e-12)
        assert out.values[0] == 0.0 and out.values[-1] == 0.0

    def test_idempotent(self, periodic_grid, rng):
        u = periodic_grid.zeros().with_values(rng.standard_normal(128))
        once = fourier_projection(u, 6)
        twice = fourier_projection(once, 6)
        assert np.allclose(once.values, twice.values, atol=1e-12)

    def test_too_many_modes(self, periodic_grid):
        """N must stay below half the grid size."""
        with pytest.raises(ValueError):
            fourier_projection(periodic_grid.zeros(), 64)


class TestFiniteVolume:
    """Cell averages spread back to piecewise constants."""

    def test_linear_field_averages(self):
        """Averages of u = x over ten cells of [0, 1] sit at the midpoints."""
        grid = Grid1D(1.0, 1001, "neumann")
        spec = InterpolantSpec("finite_volume", 10)
        op = build_interpolant(grid, spec)
        avg = op.cell_averages(grid.x)
        assert np.allclose(avg, (np.arange(10) + 0.5) / 10.0, atol=1e-3)

    def test_constant_is_preserved(self, periodic_grid):
        u = periodic_grid.sample(lambda x: 0.0 * x + 3.0)
        out = finite_volume_interpolant(u, 8)
        assert np.allclose(out.values, 3.0)

    def test_projection(self, periodic_grid, rng):
        """Applying the operator twice changes nothing."""
        u = periodic_grid.zeros().with_values(rng.standard_normal(128))
        once = finite_volume_interpolant(u, 8)
        twice = finite_volume_interpolant(once, 8)
        assert np.allclose(once.values, twice.values, atol=1e-13)

    def test_piecewise_constant(self, periodic_grid):
        """Each of the N cells carries a single value."""
        u = periodic_grid.sample(np.sin)
        out = finite_volume_interpolant(u, 4)
        assert np.count_nonzero(np.diff(out.values)) <= 3

    def test_mean_preserved(self, periodic_grid):
        """Weighted averages conserve the integral."""
        u = periodic_grid.sample(lambda x: 1.0 + np.sin(x) * np.cos(2 * x))
        out = finite_volume_interpolant(u, 16)
        assert np.isclose(periodic_grid.integrate(out.values),
                          periodic_grid.integrate(u.values))

    def test_more_cells_than_points(self):
        grid = Grid1D(1.0, 11, "neumann")
        with pytest.raises(ValueError):
            build_interpolant(grid, InterpolantSpec("finite_volume", 12))


class TestNodal:
    """Values at one node per cell."""

    def test_midpoints_on_grid_nodes(self, periodic_grid):
        """N = 4 on 128 points puts every midpoint on a grid node."""
        u = periodic_grid.sample(lambda x: np.sin(x) + 0.3 * np.cos(3 * x))
        op = build_interpolant(periodic_grid,
                               InterpolantSpec("nodal", 4))
        nodes = op.node_values(u.values)
        assert np.allclose(nodes, u.values[[16, 48, 80, 112]])

    def test_left_rule(self, periodic_grid):
        u = periodic_grid.sample(np.cos)
        out = nodal_interpolant(u, 4, rule="left")
        assert np.allclose(out.values[:32], 1.0)

    def test_custom_offsets(self, periodic_grid):
        """A custom offset between grid nodes interpolates linearly."""
        u = periodic_grid.sample(lambda x: x)
        offsets = (0.25, 0.5, 0.75, 0.1)
        op = build_interpolant(periodic_grid,
                               InterpolantSpec("nodal", 4, node_rule="custom",
                                               node_offsets=offsets))
        h = 2.0 * np.pi / 4
        expected = (np.arange(4) + np.array(offsets)) * h
        assert np.allclose(op.node_values(u.values), expected, atol=1e-12)

    def test_custom_needs_offsets(self):
        with pytest.raises(ValueError):
            InterpolantSpec("nodal", 4, node_rule="custom")

    def test_custom_offset_count(self):
        with pytest.raises(ValueError):
            InterpolantSpec("nodal", 4, node_rule="custom",
                            node_offsets=(0.5, 0.5))

    def test_offset_outside_cell(self, periodic_grid):
        spec = InterpolantSpec("nodal", 2, node_rule="custom",
                               node_offsets=(0.5, 1.5))
        with pytest.raises(ValueError):
            build_interpolant(periodic_grid, spec)


class TestMeanZero:
    """Mean-zero variants of the operators."""

    @pytest.mark.parametrize("family", ["fourier_modes", "finite_volume",
                                        "nodal"])
    def test_zero_mean_output(self, periodic_grid, family):
        u = periodic_grid.sample(lambda x: 2.0 + np.sin(x) + np.cos(4 * x))
        out = interpolate(u, InterpolantSpec(family, 4, mean_zero=True))
        assert abs(periodic_grid.mean(out.values)) < 1e-12

    def test_mean_zero_shift(self, neumann_grid):
        u = neumann_grid.sample(lambda x: x)
        assert abs(neumann_grid.mean(mean_zero_shift(u).values)) < 1e-14


_CASES = [
    ("fourier_modes", "periodic", False),
    ("fourier_modes", "neumann", False),
    ("fourier_modes", "dirichlet", False),
    ("finite_volume", "periodic", True),
    ("finite_volume", "neumann", False),
    ("nodal", "periodic", False),
    ("nodal", "neumann", True),
]


def _grid(boundary):
    if boundary == "periodic":
        return Grid1D(2.0 * np.pi, 128, "periodic")
    return Grid1D(1.0, 101, boundary)


class TestOperatorProperties:
    """Projection and linearity for every family and boundary."""

    @pytest.mark.parametrize("family, boundary, mean_zero", _CASES)
    def test_idempotent(self, family, boundary, mean_zero, rng):
        grid = _grid(boundary)
        op = build_interpolant(grid, InterpolantSpec(family, 5,
                                                     mean_zero=mean_zero))
        once = op.apply(rng.standard_normal(grid.n_points))
        assert np.allclose(op.apply(once), once, rtol=0.0, atol=1e-12)

    @pytest.mark.parametrize("family, boundary, mean_zero", _CASES)
    def test_linear(self, family, boundary, mean_zero, rng):
        """I_h(a phi + b psi) = a I_h(phi) + b I_h(psi)."""
        grid = _grid(boundary)
        op = build_interpolant(grid, InterpolantSpec(family, 5,
                                                     mean_zero=mean_zero))
        phi, psi = rng.standard_normal((2, grid.n_points))
        a, b = rng.standard_normal(2)
        assert np.allclose(op.apply(a * phi + b * psi),
                           a * op.apply(phi) + b * op.apply(psi),
                           rtol=0.0, atol=1e-12)

    @pytest.mark.parametrize("family", ["fourier_modes", "finite_volume",
                                        "nodal"])
    def test_mean_zero_annihilates_constants(self, periodic_grid, family):
        op = build_interpolant(periodic_grid,
                               InterpolantSpec(family, 4, mean_zero=True))
        out = op.apply(np.full(periodic_grid.n_points, 3.0))
        assert np.allclose(out, 0.0, atol=1e-12)


class TestInterpolantSpec:
    """Validation of the controller description."""

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            InterpolantSpec("wavelet", 4)

    def test_nonpositive_size(self):
        with pytest.raises(ValueError):
            InterpolantSpec("finite_volume", 0)

    def test_mesh_width(self):
        assert np.isclose(InterpolantSpec("nodal", 4).mesh_width(np.pi),
                          np.pi / 4)

    def test_operator_is_cached(self, periodic_grid):
        """Equal specs on equal grids share one operator."""
        a = build_interpolant(periodic_grid, InterpolantSpec("nodal", 4))
        b = build_interpolant(Grid1D(2.0 * np.pi, 128, "periodic"),
                              InterpolantSpec("nodal", 4))
        assert a is b

    def test_field_on_other_grid(self, periodic_grid, neumann_grid):
        op = build_interpolant(periodic_grid,
                               InterpolantSpec("finite_volume", 4))
        with pytest.raises(ValueError):
            op(neumann_grid.zeros())
