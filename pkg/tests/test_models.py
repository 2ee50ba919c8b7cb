"""
Tests for the model right-hand sides.

Validates:
- Chafee-Infante tendency and ghost point Laplacian
- Kuramoto-Sivashinsky symbol and nonlinearity
- Catalytic rod reaction term, singularity guard and uncertainty
- Unstable-mode counts and grid checks
"""

import numpy as np
import pytest

from pde_nudging.interpolants import Grid1D
from pde_nudging.models import (
    CatalyticRodParams,
    ChafeeInfanteParams,
    KSEParams,
    build_model,
    ci_growth_rate,
    ci_rhs,
    count_unstable_modes,
    dealias_mask,
    kse_linear_symbol,
    kse_nonlinear,
    neumann_laplacian,
    rod_growth_rate,
    rod_rhs,
    sinusoidal_uncertainty,
    unstable_wavenumber_bound,
)


class TestChafeeInfante:
    """u_t = nu u_xx + alpha u - u^3."""

    def test_zero_is_steady(self, neumann_grid, ci_model):
        out = ci_rhs(neumann_grid.zeros(), ci_model.params)
        assert np.all(out.values == 0.0)

    def test_constant_state(self, neumann_grid, ci_model):
        """The Laplacian of a constant vanishes, leaving alpha c - c^3."""
        u = neumann_grid.sample(lambda x: 0.0 * x + 2.0)
        out = ci_rhs(u, ci_model.params)
        assert np.allclose(out.values, 100.0 * 2.0 - 8.0)

    def test_saturated_state(self, neumann_grid, ci_model):
        """u = sqrt(alpha) is an equilibrium."""
        u = neumann_grid.sample(lambda x: 0.0 * x + 10.0)
        assert np.allclose(ci_rhs(u, ci_model.params).values, 0.0,
                           atol=1e-10)

    def test_neumann_laplacian(self):
        grid = Grid1D(1.0, 401, "neumann")
        u = np.cos(np.pi * grid.x)
        lap = neumann_laplacian(u, grid.dx)
        assert np.allclose(lap, -np.pi ** 2 * u, atol=1e-3)

    def test_control_is_added(self, neumann_grid, ci_model):
        u = neumann_grid.zeros()
        ctrl = neumann_grid.sample(lambda x: 0.0 * x - 3.0)
        out = ci_rhs(u, ci_model.params, ctrl)
        assert np.allclose(out.values, -3.0)

    def test_growth_rates(self, ci_model):
        """Wavenumbers 1-3 grow, 4 decays for alpha = 100."""
        rates = ci_growth_rate(np.arange(1, 5), ci_model.params)
        assert np.all(rates[:3] > 0.0) and rates[3] < 0.0
        assert np.isclose(rates[2], 100.0 - 9.0 * np.pi ** 2)

    def test_wrong_grid(self, periodic_grid, ci_model):
        with pytest.raises(ValueError):
            ci_rhs(periodic_grid.zeros(), ci_model.params)

    def test_bad_params(self):
        with pytest.raises(ValueError):
            ChafeeInfanteParams(nu=-1.0, alpha=1.0)


class TestKuramotoSivashinsky:
    """u_t = -gamma u_xx - nu u_xxxx - u u_x."""

    def test_symbol(self):
        """On [0, 2 pi] the symbol is k^2 - nu k^4."""
        p = KSEParams(nu=4.0 / 15.0)
        assert np.isclose(kse_linear_symbol(1, p), 11.0 / 15.0)
        assert np.isclose(kse_linear_symbol(2, p), 4.0 - 64.0 / 15.0)
        assert kse_linear_symbol(0, p) == 0.0

    def test_symbol_rescales_with_length(self):
        p = KSEParams(nu=1.0, length=4.0 * np.pi)
        assert np.isclose(kse_linear_symbol(2, p), 0.0)

    def test_nonlinear_of_sine(self, periodic_grid):
        """-(1/2)(sin^2 x)_x = -(1/2) sin 2x."""
        u_hat = np.fft.rfft(np.sin(periodic_grid.x))
        out = np.fft.irfft(kse_nonlinear(u_hat, periodic_grid), n=128)
        assert np.allclose(out, -0.5 * np.sin(2.0 * periodic_grid.x),
                           atol=1e-12)

    def test_nonlinear_conserves_mean(self, periodic_grid, rng):
        u_hat = np.fft.rfft(rng.standard_normal(128))
        assert kse_nonlinear(u_hat, periodic_grid)[0] == 0.0

    def test_nonlinear_is_energy_neutral(self, periodic_grid, rng):
        """<u, N(u)> = 0 for fields whose cube is resolved on the grid."""
        for _ in range(5):
            u_hat = np.zeros(65, dtype=complex)
            u_hat[1:11] = rng.standard_normal(10) \
                + 1j * rng.standard_normal(10)
            u = np.fft.irfft(u_hat, n=128)
            u = u / np.sqrt(periodic_grid.integrate(u * u))
            n_u = np.fft.irfft(kse_nonlinear(np.fft.rfft(u), periodic_grid),
                               n=128)
            assert abs(periodic_grid.integrate(u * n_u)) < 1e-10

    def test_dealias_mask(self):
        mask = dealias_mask(128)
        assert mask.size == 65
        assert mask[42] and not mask[43]

    def test_rhs_linear_regime(self, periodic_grid, kse_chaotic):
        """A tiny cos x grows at 11/15 per unit time."""
        u = periodic_grid.sample(lambda x: 1e-8 * np.cos(x))
        out = kse_chaotic.rhs(u)
        assert np.allclose(out.values, 11.0 / 15.0 * u.values, atol=1e-15)

    def test_needs_periodic_grid(self, neumann_grid, kse_chaotic):
        with pytest.raises(ValueError):
            kse_chaotic.check_grid(neumann_grid)


class TestCatalyticRod:
    """Reaction-diffusion rod with Dirichlet ends."""

    def test_zero_is_steady(self, rod_grid, rod_model):
        out = rod_rhs(rod_grid.zeros(), rod_model.params, 0.0)
        assert np.all(out.values == 0.0)

    def test_growth_rates(self, rod_model):
        """Linear source beta_T gamma e^-gamma - beta_U = 1.663."""
        source = 200.0 * np.exp(-4.0) - 2.0
        rates = rod_growth_rate(np.array([1, 2]), rod_model.params)
        assert np.allclose(rates, [source - 1.0, source - 4.0])
        assert rates[0] > 0.0 > rates[1]

    def test_ends_stay_zero(self, rod_grid, rod_model):
        u = rod_grid.sample(lambda x: 0.01 * np.sin(x))
        out = rod_rhs(u, rod_model.params, 0.0)
        assert out.values[0] == 0.0 and out.values[-1] == 0.0

    def test_singular_reaction(self, rod_grid, rod_model):
        """1 + u <= 0 anywhere is reported, not evaluated."""
        values = np.zeros(21)
        values[7] = -1.0
        u = rod_grid.zeros().with_values(values)
        with pytest.raises(ValueError):
            rod_rhs(u, rod_model.params, 0.0)

    def test_control_enters_through_beta_u(self, rod_grid, rod_model):
        """At u = 0 the tendency is beta_U times the control."""
        ctrl = rod_grid.sample(lambda x: 0.0 * x - 1.5)
        out = rod_rhs(rod_grid.zeros(), rod_model.params, 0.0, ctrl)
        assert np.allclose(out.values[1:-1], -3.0)

    def test_uncertainty(self):
        p = CatalyticRodParams(50.0, 2.0, 4.0,
                               uncertainty=sinusoidal_uncertainty)
        t = np.pi / (2.0 * 0.524)
        assert np.isclose(p.beta_T_at(t), 51.0)
        assert p.beta_T_at(0.0) == 50.0

    def test_uncertainty_must_be_callable(self):
        with pytest.raises(ValueError):
            CatalyticRodParams(50.0, 2.0, 4.0, uncertainty=1.0)


class TestUnstableModes:
    """Counts of growing wavenumbers."""

    def test_counts(self):
        assert count_unstable_modes(
            "ci", ChafeeInfanteParams(1.0, 100.0)) == 3
        assert count_unstable_modes("kse", KSEParams(1.1)) == 0
        assert count_unstable_modes("kse", KSEParams(0.2)) == 2
        assert count_unstable_modes(
            "rod", CatalyticRodParams(50.0, 2.0, 4.0)) == 1

    def test_boundary_wavenumber_is_neutral(self):
        """nu = 1/4 makes k = 2 neutral, so only k = 1 counts."""
        p = KSEParams(0.25)
        assert np.isclose(unstable_wavenumber_bound("kse", p), 2.0)
        assert count_unstable_modes("kse", p) == 1

    def test_stable_rod(self):
        assert count_unstable_modes(
            "rod", CatalyticRodParams(1.0, 2.0, 4.0)) == 0

    def test_unknown_model(self):
        with pytest.raises(ValueError):
            build_model("burgers", KSEParams(1.0))
