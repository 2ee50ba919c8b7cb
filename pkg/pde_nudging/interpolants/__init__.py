"""
    Purpose:
        Grids, fields and the finite-rank interpolant operators I_h
        (Fourier modes, finite volume averages, nodal values) used as
        observers and actuators by the feedback controller, together with
        the harness that measures their approximation constant.

    Dependencies:
        #. numpy
        #. scipy
"""

from .grid import Grid1D, Field, BOUNDARIES
from .interpolant_ops import (
    InterpolantSpec,
    InterpolantOperator,
    FourierProjection,
    FiniteVolumeAverage,
    NodalSampling,
    FAMILIES,
    NODE_RULES,
    build_interpolant,
    interpolate,
    fourier_projection,
    finite_volume_interpolant,
    nodal_interpolant,
    mean_zero_shift,
)
from .approximation import (
    InterpolationError,
    interpolation_error,
    estimate_interpolation_constant,
    gamma_squared,
    gamma_inequality,
    cell_averages,
)
