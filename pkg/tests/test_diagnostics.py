"""
Tests for norms, decay fits, the attractor bound and the energy monitor.
"""

import numpy as np
import pytest

from pde_nudging.diagnostics import (
    DiagnosticsRecorder,
    RunDiagnostics,
    energy_inequality_monitor,
    estimate_attractor_bound,
    fit_decay_rate,
    gronwall_holds,
    h1_norm,
    h1_seminorm,
    l2_norm,
    monitor_violations,
    uxx_norm,
)
from pde_nudging.integrators import Trajectory


def _trajectory(grid, t, l2=None, uxx=None, blew_up=False):
    """Trajectory carrying only a diagnostics record."""
    t = np.asarray(t, dtype=float)
    zeros = np.zeros_like(t)
    diag = RunDiagnostics(
        t=t, l2=zeros if l2 is None else l2, h1_semi=zeros, max_abs=zeros,
        mean=zeros, control_active=np.ones(t.size, dtype=bool),
        uxx_l2=zeros if uxx is None else uxx, length=grid.length,
    )
    return Trajectory(grid, t[-1:], np.zeros((1, grid.n_points)), diag,
                      dt=float(t[1] - t[0]), blew_up=blew_up,
                      blowup_time=float(t[-1]) if blew_up else None)


class TestNorms:
    """Norms of sin x on [0, 2 pi]."""

    def test_l2(self, periodic_grid):
        assert np.isclose(l2_norm(periodic_grid.sample(np.sin)),
                          np.sqrt(np.pi))

    def test_h1_seminorm(self, periodic_grid):
        u = periodic_grid.sample(lambda x: np.sin(2 * x))
        assert np.isclose(h1_seminorm(u), 2.0 * np.sqrt(np.pi))

    def test_h1(self, periodic_grid):
        """||u||_H1^2 = ||u||^2 / L^2 + ||u_x||^2."""
        u = periodic_grid.sample(np.sin)
        expected = np.sqrt(np.pi / (2.0 * np.pi) ** 2 + np.pi)
        assert np.isclose(h1_norm(u), expected)

    def test_uxx(self, periodic_grid):
        u = periodic_grid.sample(lambda x: np.cos(3 * x))
        assert np.isclose(uxx_norm(u), 9.0 * np.sqrt(np.pi))

    def test_recorder(self, periodic_grid):
        rec = DiagnosticsRecorder(periodic_grid)
        rec.record(0.0, np.sin(periodic_grid.x), False)
        rec.record(0.5, 2.0 * np.sin(periodic_grid.x), True)
        diag = rec.finish()
        assert len(diag) == 2
        assert np.allclose(diag.l2, [np.sqrt(np.pi), 2.0 * np.sqrt(np.pi)])
        assert np.allclose(diag.max_abs, [1.0, 2.0], atol=1e-3)
        assert list(diag.control_active) == [False, True]

    def test_mismatched_series(self):
        with pytest.raises(ValueError):
            RunDiagnostics(t=[0.0, 1.0], l2=[1.0], h1_semi=[0.0, 0.0],
                           max_abs=[0.0, 0.0], mean=[0.0, 0.0],
                           control_active=[True, True], uxx_l2=[0.0, 0.0],
                           length=1.0)


class TestDecayFit:
    """Least squares slope of the log series."""

    def test_exponential(self):
        t = np.linspace(0.0, 5.0, 51)
        fit = fit_decay_rate(t, 3.0 * np.exp(-2.0 * t))
        assert np.isclose(fit.rate, -2.0)
        assert np.isclose(fit.r_squared, 1.0)
        assert fit.n_samples == 51

    def test_window(self):
        t = np.linspace(0.0, 10.0, 101)
        values = np.where(t < 5.0, 1.0, np.exp(-(t - 5.0)))
        fit = fit_decay_rate(t, values, window=(5.0, 10.0))
        assert np.isclose(fit.rate, -1.0)

    def test_constant_series(self):
        fit = fit_decay_rate(np.arange(20.0), np.full(20, 0.7))
        assert fit.rate == 0.0 and fit.r_squared == 1.0

    def test_truncates_at_zero(self):
        """Samples from the first non-positive value on are dropped."""
        t = np.arange(30.0)
        values = np.exp(-0.5 * t)
        values[20:] = 0.0
        fit = fit_decay_rate(t, values)
        assert fit.n_samples == 20
        assert np.isclose(fit.rate, -0.5)

    def test_too_few_samples(self):
        with pytest.raises(ValueError):
            fit_decay_rate(np.arange(5.0), np.ones(5))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            fit_decay_rate(np.arange(12.0), np.ones(11))


class TestAttractorBound:
    """R_2 from the time average of ||u_xx||^2."""

    def test_constant_series(self, periodic_grid):
        t = np.linspace(0.0, 10.0, 41)
        traj = _trajectory(periodic_grid, t, uxx=np.full(41, 3.0))
        bound = estimate_attractor_bound(traj, 2.0)
        assert np.isclose(bound.value, 3.0)
        assert bound.drift == 0.0
        assert np.isclose(bound.t_start, 2.0)

    def test_drift_sign(self, periodic_grid):
        """A growing series has positive drift."""
        t = np.linspace(0.0, 10.0, 41)
        traj = _trajectory(periodic_grid, t, uxx=1.0 + t)
        assert estimate_attractor_bound(traj, 0.0).drift > 0.0

    def test_blown_up_run(self, periodic_grid):
        t = np.linspace(0.0, 1.0, 20)
        traj = _trajectory(periodic_grid, t, blew_up=True)
        with pytest.raises(ValueError):
            estimate_attractor_bound(traj, 0.0)

    def test_burn_in_too_long(self, periodic_grid):
        t = np.linspace(0.0, 1.0, 20)
        traj = _trajectory(periodic_grid, t)
        with pytest.raises(ValueError):
            estimate_attractor_bound(traj, 0.9)


class TestEnergyMonitor:
    """Residual of the L2 energy inequality and its Gronwall bound."""

    nu = 0.5
    mu = 16.0

    def test_fast_decay_satisfies(self, periodic_grid):
        """||u||^2 = e^{-5t} decays faster than the required e^{-4t}."""
        t = np.linspace(0.0, 1.0, 201)
        traj = _trajectory(periodic_grid, t, l2=np.exp(-2.5 * t))
        residual = energy_inequality_monitor(traj, self.nu, self.mu, 0.2,
                                             0.3)
        assert residual.shape == t.shape
        assert monitor_violations(traj, residual).size == 0
        assert traj.diagnostics.energy_monitor is residual
        assert gronwall_holds(traj, self.nu, self.mu)

    def test_slow_decay_violates(self, periodic_grid):
        t = np.linspace(0.0, 1.0, 201)
        traj = _trajectory(periodic_grid, t, l2=np.exp(-0.5 * t))
        residual = energy_inequality_monitor(traj, self.nu, self.mu, 0.2,
                                             0.3)
        assert monitor_violations(traj, residual).size > 0
        assert not gronwall_holds(traj, self.nu, self.mu)

    def test_needs_c(self, periodic_grid):
        traj = _trajectory(periodic_grid, np.linspace(0.0, 1.0, 10))
        with pytest.raises(ValueError):
            energy_inequality_monitor(traj, self.nu, self.mu, 0.2, None)
