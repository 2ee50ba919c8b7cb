"""
    Purpose:
        Right-hand sides, linear growth rates and unstable-mode counts of
        the three dissipative models: Chafee-Infante, Kuramoto-Sivashinsky
        and the catalytic rod.

    Dependencies:
        #. numpy
"""

from ..tools import error_check
from .chafee_infante import (
    ChafeeInfanteParams,
    ChafeeInfante,
    ci_rhs,
    ci_tendency,
    ci_growth_rate,
    neumann_laplacian,
)
from .kuramoto_sivashinsky import (
    KSEParams,
    KuramotoSivashinsky,
    kse_linear_symbol,
    kse_symbol,
    kse_nonlinear,
    dealias_mask,
)
from .catalytic_rod import (
    CatalyticRodParams,
    CatalyticRod,
    rod_rhs,
    rod_tendency,
    rod_growth_rate,
    dirichlet_laplacian,
    sinusoidal_uncertainty,
)
from .unstable_modes import (
    MODEL_IDS,
    count_unstable_modes,
    unstable_wavenumber_bound,
)


def build_model(model, params, dealias=False):
    """Model object for a model id and its parameter record."""
    if model == "ci":
        return ChafeeInfante(params)
    elif model == "kse":
        return KuramotoSivashinsky(params, dealias=dealias)
    elif model == "rod":
        return CatalyticRod(params)

    error_check.check_choice(model, MODEL_IDS, "model", "build_model")
