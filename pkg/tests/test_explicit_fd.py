"""
Tests for forward Euler stepping, its guards and linear growth rates.
"""

import numpy as np
import pytest

from pde_nudging.integrators import (
    CFL_LIMIT,
    Schedule,
    cfl_ratio,
    check_cfl,
    check_euler_gain,
    euler_update,
    explicit_fd_step,
    run_simulation,
)
from pde_nudging.interpolants import Grid1D
from pde_nudging.models import (
    ChafeeInfante,
    ChafeeInfanteParams,
    ci_growth_rate,
    ci_rhs,
    neumann_laplacian,
)
from pde_nudging.tools import NonFiniteStateError


class TestCFL:
    """r = nu dt / dx^2 must stay below 1/2."""

    def test_ratio(self):
        assert np.isclose(cfl_ratio(1.0, 4e-5, 0.01), 0.4)

    def test_accepts_below_limit(self):
        assert np.isclose(check_cfl(1.0, 4e-5, 0.01), 0.4)

    def test_rejects_limit(self):
        """The bound is strict."""
        with pytest.raises(ValueError):
            check_cfl(1.0, CFL_LIMIT * 1e-4, 0.01)

    def test_euler_gain(self):
        check_euler_gain(60.0, 0.006)
        with pytest.raises(ValueError):
            check_euler_gain(400.0, 0.006)


class TestEuler:
    """u + dt f(u)."""

    def test_update(self):
        out = euler_update(np.ones(3), np.array([1.0, -1.0, 0.0]), 0.5)
        assert np.allclose(out, [1.5, 0.5, 1.0])

    def test_non_finite(self):
        with pytest.raises(NonFiniteStateError):
            euler_update(np.ones(3), np.array([np.inf, 0.0, 0.0]), 0.1,
                         step=4, t=0.4)

    def test_field_step(self, neumann_grid, ci_model):
        """A constant state follows u' = alpha u - u^3 exactly."""
        u = neumann_grid.sample(lambda x: 0.0 * x + 1.0)
        out = explicit_fd_step(u, lambda f: ci_rhs(f, ci_model.params),
                               1e-3)
        assert np.allclose(out.values, 1.0 + 1e-3 * 99.0)


class TestLinearRates:
    """Growth of single cosine modes under forward Euler."""

    def test_heat_discrete_eigenvalue(self):
        """cos(pi x) is an eigenvector of the ghost point Laplacian."""
        grid = Grid1D(1.0, 101, "neumann")
        nu, dt, n_steps = 1.0, 4e-5, 200
        u = grid.sample(lambda x: np.cos(np.pi * x))
        u0 = u.values.copy()
        for n in range(n_steps):
            u = explicit_fd_step(
                u, lambda f: nu * neumann_laplacian(f.values, grid.dx), dt, n
            )
        symbol = 4.0 / grid.dx ** 2 * np.sin(np.pi * grid.dx / 2.0) ** 2
        expected = (1.0 - nu * dt * symbol) ** n_steps * u0
        assert np.allclose(u.values, expected, rtol=0.0, atol=1e-10)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_ci_growth_rate(self, k):
        """A 1e-6 cos(k pi x) grows at alpha - nu (k pi / L)^2."""
        grid = Grid1D(1.0, 401, "neumann")
        model = ChafeeInfante(ChafeeInfanteParams(nu=1.0, alpha=100.0))
        u0 = grid.sample(lambda x: 1e-6 * np.cos(k * np.pi * x))
        t_end = 0.01
        traj = run_simulation(model, u0, Schedule(t_end, 2e-6,
                                                  snapshot_stride=10000))
        rate = np.log(traj.final_field.values[0] / u0.values[0]) / t_end
        expected = ci_growth_rate(k, model.params)
        assert abs(rate - expected) <= 1e-3 * abs(expected)
