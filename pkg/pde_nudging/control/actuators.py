"""

:Purpose:
    Recommended number of actuators for each model, next to the strict
    count of unstable wavenumbers it must never undercut.

:Dependencies:
    #. numpy
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..models import count_unstable_modes, unstable_wavenumber_bound
from ..tools import error_check


@dataclass(frozen=True)
class ActuatorRecommendation:
    """
    Attributes
        :recommended (*int*): Suggested N.
        :unstable_modes (*int*): Strict count of unstable wavenumbers.
        :heuristic_bound (*float*): Real-valued bound the suggestion is
            the ceiling of (ci: sqrt(alpha L^2 / nu)).
        :dimension_bound (*float*): sqrt(alpha L^2 / (pi^2 nu)) for ci,
            the unstable wavenumber bound otherwise.
        :two_node_bound (*float*): sqrt(L^2 alpha / (4 pi^2 nu)) for ci.
    """
    model: str
    recommended: int
    unstable_modes: int
    heuristic_bound: float
    dimension_bound: float
    two_node_bound: Optional[float] = None

    def __int__(self):
        return self.recommended

    def describe(self):
        text = ("%s: recommended N = %d (bound %.6g), unstable wavenumbers "
                "= %d, unstable-dimension bound %.6g"
                % (self.model, self.recommended, self.heuristic_bound,
                   self.unstable_modes, self.dimension_bound))
        if self.two_node_bound is not None:
            text += ", two-node bound %.6g" % self.two_node_bound
        return text


def _ceil(value):
    return int(np.ceil(value - 1.0e-12))


def recommended_actuators(model, params):
    """
    ci:  ceil(sqrt(alpha L^2 / nu)), e.g. 10 for alpha=100, nu=1, L=1,
         with sqrt(alpha L^2/(pi^2 nu)) and sqrt(L^2 alpha/(4 pi^2 nu))
         reported alongside.
    kse: ceil(sqrt(gamma/nu) L / (2 pi)), 2 for nu = 4/15 on [0, 2 pi].
    rod: the number of unstable wavenumbers, at least 1.
    """
    fname = "recommended_actuators"
    unstable = count_unstable_modes(model, params)
    dim_bound = unstable_wavenumber_bound(model, params)

    if model == "ci":
        heuristic = float(np.sqrt(params.alpha * params.length ** 2
                                  / params.nu))
        two_node = float(np.sqrt(params.length ** 2 * params.alpha
                               / (4.0 * np.pi ** 2 * params.nu)))
        recommended = max(_ceil(heuristic), unstable)
        return ActuatorRecommendation(model, recommended, unstable,
                                      heuristic, dim_bound, two_node)
    elif model == "kse":
        recommended = max(_ceil(dim_bound), unstable)
        return ActuatorRecommendation(model, recommended, unstable,
                                      dim_bound, dim_bound)
    elif model == "rod":
        recommended = max(1, unstable)
        return ActuatorRecommendation(model, recommended, unstable,
                                      dim_bound, dim_bound)

    error_check.check_choice(model, ("ci", "kse", "rod"), "model", fname)
