"""
    License and Copyright:
        This program is free software: you  can redistribute it and/or modify it
        under the  terms of the GNU  General Public License as  published by the
        Free Software Foundation,  either version 3 of the License,  or (at your
        option) any later version.

        This  program  is distributed  in  the  hope  that  it will  be  useful,
        but WITHOUT  ANY  WARRANTY;  without   even  the  implied  warranty  of
        MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General
        Public License for more details.

        You should have received a copy  of the GNU General Public License along
        with this program. If not, see http://www.gnu.org/licenses/.

    Purpose:
        Simulate finite-dimensional feedback control (nudging) of
        one-dimensional dissipative equations. The control term
        -mu (I_h(u) - I_h(u*)) is built from one of three finite-rank
        interpolant operators (Fourier modes, finite volume averages,
        nodal values) and drives the Chafee-Infante equation, the
        Kuramoto-Sivashinsky equation or a catalytic rod model to a steady
        state or to a reference trajectory. The package contains the
        models, an ETDRK4 pseudo-spectral stepper and explicit finite
        difference steppers, checkers for the sufficient stability
        conditions, run diagnostics, and reproducible scenarios with a
        command line interface.

    Dependencies:
        #. numpy
        #. scipy
        #. pandas
        #. matplotlib
        #. ruamel.yaml
        #. sympy

    References:
        ..  A.-K. Kassam, L. N. Trefethen, "Fourth-order time-stepping for
            stiff PDEs". SIAM J. Sci. Comput., 26 (4), 2005, 1214-1233.
        ..  S. M. Cox, P. C. Matthews, "Exponential time differencing for
            stiff systems". J. Comput. Phys., 176 (2), 2002, 430-455.
        ..  P. D. Christofides, "Nonlinear and Robust Control of PDE
            Systems". Birkhauser, Boston, 2001.
        ..  https://en.wikipedia.org/wiki/Kuramoto-Sivashinsky_equation
        ..  https://en.wikipedia.org/wiki/Discrete_sine_transform
"""

from . import tools
from . import interpolants
from . import models
from . import control
from . import diagnostics
from . import integrators
from . import scenarios
from .interpolants import Grid1D, Field, InterpolantSpec
from .integrators import Schedule, run_simulation, run_twin_experiment
