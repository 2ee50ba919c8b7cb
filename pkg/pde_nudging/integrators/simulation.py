"""

:Purpose:
    Simulation driver: marches a model from an initial field with either
    ETDRK4 (spectral models) or forward Euler (finite difference models),
    applies the feedback control from its activation time on, and
    records norms and strided snapshots. A blow-up ends the run early
    and is flagged on the returned trajectory.

    The twin experiment integrates an uncontrolled truth and a copy
    nudged towards it as one stacked state.

:Dependencies:
    #. numpy
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..control import ControlConfig, FeedbackController
from ..diagnostics import DiagnosticsRecorder, RunDiagnostics
from ..interpolants import Field, Grid1D
from ..tools import error_check
from ..tools.error_check import NonFiniteStateError
from .etdrk4 import etdrk4_coefficients, etdrk4_step
from .explicit_fd import check_cfl, euler_update

logger = logging.getLogger(__name__)

INTEGRATORS = ("etdrk4", "explicit_fd")
BLOWUP_THRESHOLD = 1.0e10

# Unfolded control is explicit inside ETDRK4; it loses stability near
# mu*dt = 2.78.
EXPLICIT_CONTROL_LIMIT = 2.5

# Forward Euler on u' = -g u is stable for g dt <= 2.
EULER_GAIN_LIMIT = 2.0
# Relative slack on t_end / dt being an integer.
STEP_TOL = 1.0e-9


@dataclass(frozen=True)
class Schedule:
    """
    Arguments
        :t_end (*float*): Final time.
        :dt (*float*): Step size.

    Keyword Arguments
        :snapshot_stride (*int*): Steps between stored fields.
        :norm_stride (*int*): Steps between diagnostics records.
    """
    t_end: float
    dt: float
    snapshot_stride: int = 4
    norm_stride: int = 1

    def __post_init__(self):
        fname = "Schedule"
        for name in ("t_end", "dt"):
            value = error_check.check_type_and_convert(
                getattr(self, name), float, name, fname
            )
            error_check.check_positive(value, name, fname)
            object.__setattr__(self, name, value)
        for name in ("snapshot_stride", "norm_stride"):
            value = error_check.check_type_and_convert(
                getattr(self, name), int, name, fname
            )
            error_check.check_positive(value, name, fname)
            object.__setattr__(self, name, value)
        if self.n_steps < 1:
            raise error_check.domain_error(
                fname, "t_end = %.6g is shorter than one step dt = %.6g."
                % (self.t_end, self.dt)
            )
        steps = self.t_end / self.dt
        if abs(steps - self.n_steps) > STEP_TOL * steps:
            raise error_check.domain_error(
                fname, "t_end = %.10g is not a whole number of steps of "
                "dt = %.10g." % (self.t_end, self.dt)
            )

    @property
    def n_steps(self):
        return int(round(self.t_end / self.dt))


@dataclass
class Trajectory:
    """
    Result of run_simulation.

    Attributes
        :grid (*Grid1D*): Grid of the snapshots.
        :times (*np.ndarray*): Snapshot times, strictly increasing.
        :snapshots (*np.ndarray*): One stored field per row.
        :diagnostics (*RunDiagnostics*): Norm series.
        :dt (*float*): Step size.
        :blew_up (*bool*): The run stopped on max|u| > 1e10 or a
            non-finite state.
        :blowup_time (*float*): Time of the offending step, else None.
    """
    grid: Grid1D
    times: np.ndarray
    snapshots: np.ndarray
    diagnostics: RunDiagnostics
    dt: float
    blew_up: bool = False
    blowup_time: Optional[float] = None

    def __len__(self):
        return self.times.size

    def field(self, index):
        return Field(self.grid, self.snapshots[index])

    @property
    def final_field(self):
        return self.field(-1)

    @property
    def t_final(self):
        return float(self.times[-1])


@dataclass
class TwinResult:
    """
    Attributes
        :truth (*Trajectory*): Uncontrolled reference run.
        :nudged (*Trajectory*): Copy driven towards the truth.
        :error (*RunDiagnostics*): Norms of nudged - truth.
    """
    truth: Trajectory
    nudged: Trajectory
    error: RunDiagnostics

    @property
    def t(self):
        return self.error.t

    @property
    def error_l2(self):
        return self.error.l2

    @property
    def error_h1_semi(self):
        return self.error.h1_semi


def check_explicit_control(mu, dt):
    """Reject an unfolded ETDRK4 control term with mu*dt above 2.5."""
    if mu * dt > EXPLICIT_CONTROL_LIMIT:
        raise error_check.domain_error(
            "check_explicit_control",
            "mu*dt = %.6g exceeds %.2f for control evaluated inside the "
            "ETDRK4 stages (mu = %.6g, dt = %.6g). Reduce dt or fold "
            "Fourier control into the symbol."
            % (mu * dt, EXPLICIT_CONTROL_LIMIT, mu, dt)
        )


def check_euler_gain(gain, dt):
    if gain * dt > EULER_GAIN_LIMIT:
        raise error_check.domain_error(
            "check_euler_gain",
            "effective gain times dt = %.6g exceeds %.1f for forward Euler."
            % (gain * dt, EULER_GAIN_LIMIT)
        )


def _select_integrator(model, integrator):
    default = "etdrk4" if model.spectral else "explicit_fd"
    if integrator is None:
        return default
    error_check.check_choice(integrator, INTEGRATORS, "integrator",
                             "run_simulation")
    if integrator != default:
        raise error_check.domain_error(
            "run_simulation", "model '%s' is integrated with '%s', not '%s'."
            % (model.name, default, integrator)
        )
    return integrator


def _control_reaches(controller, schedule):
    if controller is None or controller.mu == 0.0:
        return False
    return controller.t_on <= schedule.n_steps * schedule.dt


def _fold_shift(controller, grid):
    """Diagonal -mu on the rfft modes the Fourier projection keeps."""
    fname = "run_simulation"
    if controller.spec.family != "fourier_modes" or not grid.is_periodic:
        raise error_check.domain_error(
            fname, "fold_control needs Fourier control on a periodic grid."
        )
    if controller.has_reference:
        raise error_check.domain_error(
            fname, "fold_control cannot track a reference."
        )
    k = np.arange(grid.n_points // 2 + 1)
    kept = k <= controller.spec.n_actuators
    if controller.mean_zero:
        kept &= (k > 0)
    return controller.mu * kept


def _spectral_stepper(model, grid, dt, forcing, controller, fold):
    n = grid.n_points
    symbol = model.symbol(grid)
    plain = etdrk4_coefficients(symbol, dt)
    folded = None
    if fold:
        folded = etdrk4_coefficients(symbol - _fold_shift(controller, grid),
                                     dt)
        logger.warning("Fourier control folded into the linear symbol")
    mean_zero = controller is not None and controller.mean_zero

    def free(v, t):
        return model.nonlinear(v, grid)

    def forced(v, t):
        f_hat = np.fft.rfft(forcing(np.fft.irfft(v, n=n, axis=-1), t),
                            axis=-1)
        if mean_zero:
            f_hat[..., 0] = 0.0
        return model.nonlinear(v, grid) + f_hat

    def step(u_hat, t, index, active):
        if not active:
            return etdrk4_step(u_hat, plain, free, t, index)
        elif folded is not None:
            return etdrk4_step(u_hat, folded, free, t, index)
        return etdrk4_step(u_hat, plain, forced, t, index)

    def to_physical(u_hat):
        return np.fft.irfft(u_hat, n=n, axis=-1)

    def from_physical(values):
        return np.fft.rfft(values, axis=-1)

    return step, to_physical, from_physical


def _fd_stepper(model, grid, dt, forcing):
    dirichlet = grid.boundary == "dirichlet"

    def step(values, t, index, active):
        ctrl = forcing(values, t) if active else None
        out = euler_update(values, model.tendency(values, grid, t, ctrl), dt,
                           index, t)
        if dirichlet:
            out[..., 0] = 0.0
            out[..., -1] = 0.0
        return out

    def identity(values):
        return values

    return step, identity, np.array


def _prepare(model, grid, schedule, controller, integrator, fold_control,
             forcing=None):
    """Validate a run and build its stepper."""
    fname = "run_simulation"
    integrator = _select_integrator(model, integrator)
    dt = schedule.dt
    reaches = _control_reaches(controller, schedule)
    if forcing is None and controller is not None:
        forcing = controller.term

    if integrator == "etdrk4":
        if reaches and not fold_control:
            check_explicit_control(controller.mu, dt)
        return _spectral_stepper(model, grid, dt, forcing, controller,
                                 fold_control and controller is not None)

    if fold_control:
        raise error_check.domain_error(
            fname, "fold_control applies to ETDRK4 only."
        )
    r = check_cfl(model.diffusion, dt, grid.dx)
    logger.debug("CFL ratio r = %.4g", r)
    if reaches:
        check_euler_gain(controller.mu * model.control_gain, dt)
    return _fd_stepper(model, grid, dt, forcing)


def _march(state, schedule, step, to_physical, is_active, observe):
    """
    Time loop shared by single runs and the twin experiment.

    Returns
        :blowup_time (*float*): None when the run completed.
    """
    dt = schedule.dt
    n_steps = schedule.n_steps
    observe(0, 0.0, to_physical(state), is_active(0.0))
    for index in range(n_steps):
        t = index * dt
        try:
            state = step(state, t, index, is_active(t))
        except NonFiniteStateError as err:
            logger.warning("non-finite state at step %d (t = %.6g); run "
                           "truncated", err.step, err.time)
            return t + dt
        values = to_physical(state)
        t_next = (index + 1) * dt
        peak = float(np.max(np.abs(values)))
        if peak > BLOWUP_THRESHOLD:
            logger.warning("blow-up: max|u| = %.3g at t = %.6g; run "
                           "truncated", peak, t_next)
            return t_next
        observe(index + 1, t_next, values, is_active(t_next))
        logger.debug("step %d t = %.6g max|u| = %.6g", index + 1, t_next,
                     peak)
    return None


class _Recorder(object):
    """Strided snapshots plus norms of one state row."""

    def __init__(self, grid, schedule):
        self.grid = grid
        self.schedule = schedule
        self.norms = DiagnosticsRecorder(grid)
        self.times = []
        self.snapshots = []

    def __call__(self, index, t, values, active):
        last = index == self.schedule.n_steps
        if last or index % self.schedule.norm_stride == 0:
            self.norms.record(t, values, active)
        if last or index % self.schedule.snapshot_stride == 0:
            self.times.append(t)
            self.snapshots.append(np.array(values, dtype=float))

    def trajectory(self, blowup_time):
        if self.snapshots:
            snaps = np.vstack(self.snapshots)
        else:
            snaps = np.zeros((0, self.grid.n_points))
        return Trajectory(
            grid=self.grid,
            times=np.array(self.times, dtype=float),
            snapshots=snaps,
            diagnostics=self.norms.finish(),
            dt=self.schedule.dt,
            blew_up=blowup_time is not None,
            blowup_time=blowup_time,
        )


def _initial_values(model, initial, fname):
    error_check.check_type(initial, Field, "initial", fname)
    grid = initial.grid
    model.check_grid(grid)
    values = np.array(initial.values, dtype=float)
    if grid.boundary == "dirichlet":
        values[0] = 0.0
        values[-1] = 0.0
    return grid, values


def run_simulation(model, initial, schedule, control=None, integrator=None,
                   fold_control=False):
    """
    Integrate a model from an initial field.

    Arguments
        :model: Model object from models.build_model.
        :initial (*Field*): Initial state, on the grid of the run.
        :schedule (*Schedule*): t_end, dt and strides.

    Keyword Arguments
        :control (*ControlConfig*): Feedback; None runs uncontrolled.
        :integrator (*str*): 'etdrk4' or 'explicit_fd'; defaults to the
            model's own.
        :fold_control (*bool*): Put Fourier control into the ETDRK4
            symbol after t_on instead of the stage evaluations.

    Returns
        :Trajectory: Truncated and flagged on blow-up.

    Raises
        :ValueError: CFL or gain guard violated, grid and model mismatch.
    """
    fname = "run_simulation"
    error_check.check_type(schedule, Schedule, "schedule", fname)
    grid, values = _initial_values(model, initial, fname)

    controller = None
    if control is not None:
        error_check.check_type(control, ControlConfig, "control", fname)
        controller = FeedbackController(grid, control)

    step, to_physical, from_physical = _prepare(
        model, grid, schedule, controller, integrator, fold_control
    )

    def is_active(t):
        return controller is not None and \
            controller.is_active(t, schedule.dt)

    logger.info("running %s: %d steps of dt = %.6g, control %s", model.name,
                schedule.n_steps, schedule.dt,
                "off" if controller is None else
                "%s N=%d mu=%.6g t_on=%.6g" % (
                    control.spec.family, control.spec.n_actuators,
                    control.mu, control.t_on))

    recorder = _Recorder(grid, schedule)
    blowup_time = _march(from_physical(values), schedule, step, to_physical,
                         is_active, recorder)
    return recorder.trajectory(blowup_time)


def run_twin_experiment(model, truth_initial, nudged_initial, schedule,
                        control, spinup=0.0):
    """
    Nudge a copy of the model towards an uncontrolled truth run.

    The truth is first integrated for ``spinup`` time units on its own,
    then both are integrated together for ``schedule.t_end``; the nudged
    copy feels -mu (I_h(u) - I_h(u_truth)) from control.t_on on.

    Arguments
        :model: Model object.
        :truth_initial, nudged_initial (*Field*): Initial states.
        :schedule (*Schedule*): Schedule of the coupled run.
        :control (*ControlConfig*): Gain and interpolant; its reference
            must be None.

    Keyword Arguments
        :spinup (*float*): Length of the truth-only run.
    """
    fname = "run_twin_experiment"
    error_check.check_type(schedule, Schedule, "schedule", fname)
    error_check.check_type(control, ControlConfig, "control", fname)
    if control.reference is not None:
        raise error_check.domain_error(
            fname, "the truth run is the reference; control.reference "
            "must be None."
        )
    spinup = error_check.check_type_and_convert(spinup, float, "spinup",
                                                fname)
    error_check.check_non_negative(spinup, "spinup", fname)

    grid, truth = _initial_values(model, truth_initial, fname)
    nudged_grid, nudged = _initial_values(model, nudged_initial, fname)
    if nudged_grid != grid:
        raise error_check.domain_error(
            fname, "truth and nudged initial states must share a grid."
        )

    if spinup > 0.0:
        warm = run_simulation(
            model, Field(grid, truth),
            Schedule(spinup, schedule.dt,
                     snapshot_stride=max(1, int(round(spinup /
                                                      schedule.dt)))),
        )
        if warm.blew_up:
            raise error_check.domain_error(
                fname, "truth blew up during spin-up at t = %.6g."
                % warm.blowup_time
            )
        truth = np.array(warm.final_field.values)
        logger.info("truth spun up for %.6g time units", spinup)

    controller = FeedbackController(grid, control)

    def forcing(values, t):
        out = np.zeros_like(values)
        out[1] = controller.term_against(values[1], values[0])
        return out

    step, to_physical, from_physical = _prepare(
        model, grid, schedule, controller, None, False, forcing
    )

    truth_rec = _Recorder(grid, schedule)
    nudged_rec = _Recorder(grid, schedule)
    error_rec = DiagnosticsRecorder(grid)

    def observe(index, t, values, active):
        truth_rec(index, t, values[0], False)
        nudged_rec(index, t, values[1], active)
        if index == schedule.n_steps or index % schedule.norm_stride == 0:
            error_rec.record(t, values[1] - values[0], active)

    def is_active(t):
        return controller.is_active(t, schedule.dt)

    state = from_physical(np.vstack([truth, nudged]))
    blowup_time = _march(state, schedule, step, to_physical, is_active,
                         observe)
    return TwinResult(
        truth=truth_rec.trajectory(blowup_time),
        nudged=nudged_rec.trajectory(blowup_time),
        error=error_rec.finish(),
    )
