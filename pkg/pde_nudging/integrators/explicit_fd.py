"""

:Purpose:
    Forward Euler stepping of the finite difference models, guarded by
    the diffusion CFL ratio r = nu dt / dx^2 < 1/2.

:Dependencies:
    #. numpy
"""

import numpy as np

from ..interpolants import Field
from ..tools import error_check
from ..tools.error_check import NonFiniteStateError

CFL_LIMIT = 0.5


def cfl_ratio(diffusion, dt, dx):
    return diffusion * dt / (dx * dx)


def check_cfl(diffusion, dt, dx):
    """
    Reject a configuration whose diffusion ratio is not below 1/2.

    Returns
        :r (*float*): The ratio, when accepted.
    """
    r = cfl_ratio(diffusion, dt, dx)
    if not (r < CFL_LIMIT):
        raise error_check.domain_error(
            "check_cfl",
            "CFL ratio r = nu*dt/dx^2 = %.6g must be below %.1f "
            "(nu = %.6g, dt = %.6g, dx = %.6g)."
            % (r, CFL_LIMIT, diffusion, dt, dx)
        )
    return r


def euler_update(values, tendency, dt, step=0, t=0.0):
    out = values + dt * tendency
    if not np.all(np.isfinite(out)):
        raise NonFiniteStateError(step, t, "explicit_fd_step")
    return out


def explicit_fd_step(u, rhs, dt, step=0, t=0.0):
    """
    One forward Euler step u + dt rhs(u).

    Arguments
        :u (*Field*): Current state.
        :rhs (*callable*): Tendency of a Field, returning a Field or array.
        :dt (*float*): Step size.
    """
    error_check.check_type(u, Field, "u", "explicit_fd_step")
    tend = rhs(u)
    if isinstance(tend, Field):
        tend = tend.values
    return u.with_values(euler_update(u.values, tend, dt, step, t))
