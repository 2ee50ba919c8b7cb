"""

:Purpose:
    Fourth order exponential time differencing Runge-Kutta (ETDRK4) for
    semilinear problems v' = L v + N(v, t) with diagonal L.

    The phi-function combinations are evaluated by averaging over M
    points on a circle of given radius around each L dt value, which
    removes the cancellation near L dt = 0.

:Dependencies:
    #. numpy
"""

from dataclasses import dataclass

import numpy as np

from ..tools import error_check
from ..tools.error_check import NonFiniteStateError

DEFAULT_CONTOUR_POINTS = 32
DEFAULT_CONTOUR_RADIUS = 1.0


@dataclass(frozen=True, eq=False)
class EtdrkCoefficients:
    """
    Coefficient table for one (symbol, dt) pair. Immutable, so a single
    table can be shared between runs.

    Attributes
        :dt (*float*): Time step.
        :e_half (*np.ndarray*): exp(L dt / 2).
        :e_full (*np.ndarray*): exp(L dt).
        :q (*np.ndarray*): dt phi_1(L dt / 2) / 2 weight of the stages.
        :f1, f2, f3 (*np.ndarray*): Final stage weights.
        :contour_points (*int*): M.
        :contour_radius (*float*): Circle radius.
    """
    dt: float
    e_half: np.ndarray
    e_full: np.ndarray
    q: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    f3: np.ndarray
    contour_points: int
    contour_radius: float


def etdrk4_coefficients(symbol, dt, M=DEFAULT_CONTOUR_POINTS,
                        radius=DEFAULT_CONTOUR_RADIUS):
    """
    Build the ETDRK4 coefficient table.

    Arguments
        :symbol (*np.ndarray*): Diagonal of the linear operator.
        :dt (*float*): Time step.

    Keyword Arguments
        :M (*int*): Number of contour points, at least 16.
        :radius (*float*): Contour radius.

    Returns
        :EtdrkCoefficients: Real arrays when ``symbol`` is real.
    """
    fname = "etdrk4_coefficients"
    dt = error_check.check_type_and_convert(dt, float, "dt", fname)
    error_check.check_positive(dt, "dt", fname)
    M = error_check.check_type_and_convert(M, int, "M", fname)
    if M < 16:
        raise error_check.domain_error(
            fname, "M must be at least 16. Got %d." % M
        )
    radius = error_check.check_type_and_convert(radius, float, "radius",
                                                fname)
    error_check.check_positive(radius, "radius", fname)

    symbol = np.asarray(symbol)
    is_real = np.isrealobj(symbol)
    lin = dt * symbol

    # Full circle: the mean of a real-symbol entry is real up to round-off.
    roots = radius * np.exp(2j * np.pi * (np.arange(M) + 0.5) / M)
    lr = lin[..., None] + roots
    exp_lr = np.exp(lr)
    lr3 = lr ** 3

    q = dt * np.mean((np.exp(lr / 2.0) - 1.0) / lr, axis=-1)
    f1 = dt * np.mean(
        (-4.0 - lr + exp_lr * (4.0 - 3.0 * lr + lr * lr)) / lr3, axis=-1
    )
    f2 = dt * np.mean((2.0 + lr + exp_lr * (lr - 2.0)) / lr3, axis=-1)
    f3 = dt * np.mean(
        (-4.0 - 3.0 * lr - lr * lr + exp_lr * (4.0 - lr)) / lr3, axis=-1
    )

    if is_real:
        q, f1, f2, f3 = q.real, f1.real, f2.real, f3.real

    return EtdrkCoefficients(
        dt=dt,
        e_half=np.exp(lin / 2.0),
        e_full=np.exp(lin),
        q=q, f1=f1, f2=f2, f3=f3,
        contour_points=M,
        contour_radius=radius,
    )


def etdrk4_step(u_hat, coeffs, nonlinear=None, t=0.0, step=0):
    """
    Advance the spectral state by one step.

    Arguments
        :u_hat (*np.ndarray*): State, modes on the last axis.
        :coeffs (*EtdrkCoefficients*): Table for the step size.

    Keyword Arguments
        :nonlinear (*callable*): N(v, t). None means the purely linear
            problem, integrated exactly.
        :t (*float*): Time at the start of the step.
        :step (*int*): Step index, reported if the step fails.

    Raises
        :NonFiniteStateError: The new state contains NaN or Inf.
    """
    e_half = coeffs.e_half
    if nonlinear is None:
        out = coeffs.e_full * u_hat
    else:
        dt = coeffs.dt
        q = coeffs.q
        nv = nonlinear(u_hat, t)
        a = e_half * u_hat + q * nv
        na = nonlinear(a, t + 0.5 * dt)
        b = e_half * u_hat + q * na
        nb = nonlinear(b, t + 0.5 * dt)
        c = e_half * a + q * (2.0 * nb - nv)
        nc = nonlinear(c, t + dt)
        out = coeffs.e_full * u_hat + coeffs.f1 * nv \
            + 2.0 * coeffs.f2 * (na + nb) + coeffs.f3 * nc

    if not np.all(np.isfinite(out)):
        raise NonFiniteStateError(step, t, "etdrk4_step")
    return out
