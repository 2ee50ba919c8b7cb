"""

:Purpose:
    The feedback term -mu (I_h(u) - I_h(u*)) with its activation time,
    for the zero reference (stabilisation) and for a nonzero reference
    u* given as a steady field or as a stored trajectory.

:Dependencies:
    #. numpy
"""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..interpolants import Field, InterpolantSpec, build_interpolant
from ..tools import error_check

logger = logging.getLogger(__name__)

# Step times are n*dt; this keeps t_on = n*dt from missing by round-off.
ACTIVATION_TOL = 1.0e-9


class ReferenceTrajectory(object):
    """
    Reference u*(t) stored as snapshots, looked up by linear
    interpolation in time. Times outside the stored range are rejected.

    Arguments
        :grid (*Grid1D*): Grid of the snapshots.
        :times (*np.ndarray*): Strictly increasing snapshot times.
        :states (*np.ndarray*): One snapshot per row.
    """
    def __init__(self, grid, times, states):
        fname = "ReferenceTrajectory"
        times = np.array(times, dtype=float)
        states = np.array(states, dtype=float)
        if states.ndim != 2 or states.shape != (times.size, grid.n_points):
            raise error_check.domain_error(
                fname, "states must have shape (%d, %d). Got %s."
                % (times.size, grid.n_points, states.shape)
            )
        if times.size < 1 or np.any(np.diff(times) <= 0.0):
            raise error_check.domain_error(
                fname, "times must be strictly increasing."
            )
        error_check.check_finite(states, "states", fname)
        times.setflags(write=False)
        states.setflags(write=False)
        self.grid = grid
        self.times = times
        self.states = states

    @classmethod
    def from_trajectory(cls, traj, t_offset=0.0):
        """Wrap a simulated Trajectory, optionally shifting its clock."""
        return cls(traj.grid, np.asarray(traj.times) + t_offset,
                   traj.snapshots)

    def covers(self, t):
        slack = ACTIVATION_TOL * max(1.0, abs(t))
        return (self.times[0] - slack <= t <= self.times[-1] + slack)

    def at(self, t):
        if not self.covers(t):
            raise error_check.domain_error(
                "ReferenceTrajectory.at",
                "reference covers t in [%.6g, %.6g]; requested t = %.6g."
                % (self.times[0], self.times[-1], t)
            )
        if self.times.size == 1:
            return self.states[0]
        idx = int(np.searchsorted(self.times, t, side="right")) - 1
        idx = min(max(idx, 0), self.times.size - 2)
        t0, t1 = self.times[idx], self.times[idx + 1]
        w = min(max((t - t0) / (t1 - t0), 0.0), 1.0)
        return (1.0 - w) * self.states[idx] + w * self.states[idx + 1]


@dataclass
class ControlConfig:
    """
    Arguments
        :mu (*float*): Gain, mu >= 0.
        :spec (*InterpolantSpec*): Interpolant family and size.

    Keyword Arguments
        :t_on (*float*): Activation time t_c.
        :reference (*Field or ReferenceTrajectory*): Target u*. None
            means the zero steady state.
    """
    mu: float
    spec: InterpolantSpec
    t_on: float = 0.0
    reference: Any = None

    def __post_init__(self):
        fname = "ControlConfig"
        self.mu = error_check.check_type_and_convert(self.mu, float, "mu",
                                                     fname)
        error_check.check_non_negative(self.mu, "mu", fname)
        self.t_on = error_check.check_type_and_convert(self.t_on, float,
                                                       "t_on", fname)
        error_check.check_non_negative(self.t_on, "t_on", fname)
        error_check.check_type(self.spec, InterpolantSpec, "spec", fname)
        if self.reference is not None:
            error_check.check_type(
                self.reference, (Field, ReferenceTrajectory), "reference",
                fname
            )


class FeedbackController(object):
    """
    Array level feedback term for one grid. The interpolant and the
    interpolated steady reference are built once.
    """
    def __init__(self, grid, cfg):
        fname = "FeedbackController"
        error_check.check_type(cfg, ControlConfig, "cfg", fname)
        self.grid = grid
        self.cfg = cfg
        self.mu = cfg.mu
        self.t_on = cfg.t_on
        self.spec = cfg.spec
        self.operator = build_interpolant(grid, cfg.spec)

        self._steady_ref = None
        self._trajectory_ref = None
        ref = cfg.reference
        if ref is not None:
            if ref.grid != grid:
                raise error_check.domain_error(
                    fname, "reference grid does not match the model grid."
                )
            if isinstance(ref, Field):
                self._steady_ref = self.operator.apply(ref.values)
            else:
                self._trajectory_ref = ref

    @property
    def mean_zero(self):
        return self.spec.mean_zero

    @property
    def has_reference(self):
        return (self._steady_ref is not None) or \
            (self._trajectory_ref is not None)

    def is_active(self, t, dt=0.0):
        if self.mu == 0.0:
            return False
        return t >= self.t_on - ACTIVATION_TOL * dt

    def reference_interpolant(self, t):
        if self._steady_ref is not None:
            return self._steady_ref
        elif self._trajectory_ref is not None:
            return self.operator.apply(self._trajectory_ref.at(t))
        return None

    def term(self, values, t):
        """-mu (I_h(u) - I_h(u*(t)))."""
        obs = self.operator.apply(values)
        ref = self.reference_interpolant(t)
        if ref is not None:
            obs = obs - ref
        return -self.mu * obs

    def term_against(self, values, ref_values):
        """Feedback towards a reference state supplied by the caller."""
        return -self.mu * (self.operator.apply(values)
                           - self.operator.apply(ref_values))


def feedback_term(u, cfg, t):
    """
    Feedback forcing at time t: zero before t_on, otherwise
    -mu (I_h(u) - I_h(u*(t))), with the mean removed when the
    InterpolantSpec asks for a mean-zero interpolant.

    Arguments
        :u (*Field*): Current state.
        :cfg (*ControlConfig*): Gain, interpolant, schedule, reference.
        :t (*float*): Time.
    """
    error_check.check_type(u, Field, "u", "feedback_term")
    error_check.check_type(cfg, ControlConfig, "cfg", "feedback_term")
    if (t < cfg.t_on) or (cfg.mu == 0.0):
        return u.grid.zeros()
    controller = FeedbackController(u.grid, cfg)
    return u.with_values(controller.term(u.values, t))
