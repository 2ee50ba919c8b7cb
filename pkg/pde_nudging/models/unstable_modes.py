"""

:Purpose:
    Counts of linearly unstable modes about u = 0, the heuristic lower
    bound on the number of actuators a controller needs.

:Dependencies:
    #. numpy
"""

import numpy as np

from ..tools import error_check
from .catalytic_rod import CatalyticRodParams
from .chafee_infante import ChafeeInfanteParams
from .kuramoto_sivashinsky import KSEParams

MODEL_IDS = ("ci", "kse", "rod")


def _strictly_below(bound):
    """Number of integers k >= 1 with k < bound."""
    if bound <= 1.0:
        return 0
    return int(np.ceil(bound)) - 1


def unstable_wavenumber_bound(model, params):
    """
    Real k* such that the mode with wavenumber k >= 1 grows iff k < k*.

        ci:  k* = sqrt(alpha L^2 / (pi^2 nu))
        kse: k* = sqrt(gamma / nu) L / (2 pi)
        rod: k* = sqrt(beta_T gamma e^{-gamma} - beta_U) L / pi
    """
    error_check.check_choice(model, MODEL_IDS, "model",
                             "unstable_wavenumber_bound")
    if model == "ci":
        error_check.check_type(params, ChafeeInfanteParams, "params",
                               "unstable_wavenumber_bound")
        return float(np.sqrt(params.alpha * params.length ** 2
                             / (np.pi ** 2 * params.nu)))
    elif model == "kse":
        error_check.check_type(params, KSEParams, "params",
                               "unstable_wavenumber_bound")
        return float(np.sqrt(params.gamma / params.nu)
                     * params.length / (2.0 * np.pi))

    error_check.check_type(params, CatalyticRodParams, "params",
                           "unstable_wavenumber_bound")
    source = params.beta_T * params.gamma_act * np.exp(-params.gamma_act) \
        - params.beta_U
    if source <= 0.0:
        return 0.0
    return float(np.sqrt(source) * params.length / np.pi)


def count_unstable_modes(model, params):
    """
    Largest wavenumber k >= 1 with a positive linear growth rate, i.e.
    the number of unstable wavenumbers (the k = 0 mode is not counted).

    Examples
        ci, alpha=100, nu=1, L=1 -> 3
        kse, nu=1.1 -> 0;  kse, nu=0.2 -> 2
        rod, beta_T=50, beta_U=2, gamma=4 -> 1
    """
    return _strictly_below(unstable_wavenumber_bound(model, params))
