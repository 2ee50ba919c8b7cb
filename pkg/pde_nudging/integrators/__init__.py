"""
    Purpose:
        Time stepping: ETDRK4 for the pseudo-spectral KSE, forward Euler
        finite differences for Chafee-Infante and the catalytic rod, and
        the simulation driver recording diagnostics along a run.

    Dependencies:
        #. numpy
"""

from .etdrk4 import (
    EtdrkCoefficients,
    etdrk4_coefficients,
    etdrk4_step,
    DEFAULT_CONTOUR_POINTS,
    DEFAULT_CONTOUR_RADIUS,
)
from .explicit_fd import (
    CFL_LIMIT,
    cfl_ratio,
    check_cfl,
    euler_update,
    explicit_fd_step,
)
from .simulation import (
    Schedule,
    Trajectory,
    TwinResult,
    run_simulation,
    run_twin_experiment,
    check_explicit_control,
    check_euler_gain,
    BLOWUP_THRESHOLD,
    EXPLICIT_CONTROL_LIMIT,
    INTEGRATORS,
)
