"""

:Purpose:
    Sufficient stability conditions as arithmetic verdicts.

        Chafee-Infante, finite volumes:   mu >= nu (2 pi / h)^2 > alpha
        KSE, zero state:                  mu > 4/nu  and  nu > mu c h^4
        KSE, nonzero reference u*:        mu > 4/nu, nu >= mu c h^4 and
                                          mu/8 >= sqrt(L / 2 pi) R_2

    Each comparison is strict or non-strict as written above. Each
    verdict lists every sub-inequality with both sides and its margin
    lhs - rhs.

:Dependencies:
    #. numpy
"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

from ..tools import error_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: float
    relation: str
    rhs: float

    @property
    def holds(self):
        if self.relation == ">":
            return self.lhs > self.rhs
        return self.lhs >= self.rhs

    @property
    def margin(self):
        return self.lhs - self.rhs

    def describe(self):
        return "%-32s %.10g %s %.10g  [%s, margin %.6g]" % (
            self.name, self.lhs, self.relation, self.rhs,
            "holds" if self.holds else "FAILS", self.margin
        )


@dataclass(frozen=True)
class ConditionVerdict:
    """
    Attributes
        :satisfied (*bool*): Every sub-inequality holds.
        :inequalities (*list*): The sub-inequalities, in order.
        :margin (*float*): Smallest lhs - rhs over the sub-inequalities.
        :commentary (*str*): Human readable summary.
    """
    condition: str
    inequalities: List[Inequality] = field(default_factory=list)
    commentary: str = ""

    @property
    def satisfied(self):
        return all(ineq.holds for ineq in self.inequalities)

    @property
    def margin(self):
        return min(ineq.margin for ineq in self.inequalities)

    @property
    def lhs(self):
        return [ineq.lhs for ineq in self.inequalities]

    @property
    def rhs(self):
        return [ineq.rhs for ineq in self.inequalities]

    def report(self):
        lines = ["%s: %s" % (self.condition,
                             "SATISFIED" if self.satisfied else
                             "NOT SATISFIED")]
        for ineq in self.inequalities:
            lines.append("    " + ineq.describe())
        if self.commentary:
            lines.append("    " + self.commentary)
        return "\n".join(lines)


def _positive(fname, **values):
    out = []
    for name, value in values.items():
        value = error_check.check_type_and_convert(value, float, name, fname)
        error_check.check_positive(value, name, fname)
        out.append(value)
    return out


def _verdict(condition, inequalities, commentary):
    verdict = ConditionVerdict(condition, list(inequalities), commentary)
    if not verdict.satisfied:
        logger.info("%s not satisfied (margin %.6g)", condition,
                    verdict.margin)
    return verdict


def check_ci_condition(nu, alpha, length, n_actuators, mu):
    """
    Finite-volume stabilisation of Chafee-Infante:
    mu >= nu (2 pi / h)^2 > alpha with h = L/N.
    """
    fname = "check_ci_condition"
    nu, alpha, length, mu = _positive(fname, nu=nu, alpha=alpha,
                                      length=length, mu=mu)
    n_actuators = error_check.check_type_and_convert(
        n_actuators, int, "n_actuators", fname
    )
    error_check.check_positive(n_actuators, "n_actuators", fname)

    h = length / n_actuators
    threshold = nu * (2.0 * np.pi / h) ** 2
    ineqs = [
        Inequality("mu >= nu (2 pi/h)^2", mu, ">=", threshold),
        Inequality("nu (2 pi/h)^2 > alpha", threshold, ">", alpha),
    ]
    commentary = (
        "h = %.6g; the condition is sufficient only, smaller gains may "
        "stabilise in practice." % h
    )
    return _verdict("Chafee-Infante finite volume condition", ineqs,
                    commentary)


def _require_c(c, fname):
    if c is None:
        raise error_check.domain_error(
            fname,
            "The interpolation constant c is missing. Run "
            "estimate_interpolation_constant for the interpolant first, "
            "or pass c explicitly."
        )
    c = error_check.check_type_and_convert(c, float, "c", fname)
    error_check.check_positive(c, "c", fname)
    return c


def check_kse_zero_condition(nu, mu, h, c):
    """mu > 4/nu and nu > mu c h^4 (both strict)."""
    fname = "check_kse_zero_condition"
    c = _require_c(c, fname)
    nu, mu, h = _positive(fname, nu=nu, mu=mu, h=h)
    ineqs = [
        Inequality("mu > 4/nu", mu, ">", 4.0 / nu),
        Inequality("nu > mu c h^4", nu, ">", mu * c * h ** 4),
    ]
    commentary = "c = %.6g, h = %.6g" % (c, h)
    return _verdict("KSE zero-state condition", ineqs, commentary)


def check_kse_reference_condition(nu, mu, h, c, r2, length):
    """
    mu > 4/nu, nu >= mu c h^4 and mu/8 >= sqrt(L / 2 pi) R_2.
    """
    fname = "check_kse_reference_condition"
    c = _require_c(c, fname)
    nu, mu, h, length = _positive(fname, nu=nu, mu=mu, h=h, length=length)
    r2 = error_check.check_type_and_convert(r2, float, "r2", fname)
    error_check.check_non_negative(r2, "r2", fname)

    ineqs = [
        Inequality("mu > 4/nu", mu, ">", 4.0 / nu),
        Inequality("nu >= mu c h^4", nu, ">=", mu * c * h ** 4),
        Inequality("mu/8 >= sqrt(L/2pi) R2", mu / 8.0, ">=",
                   np.sqrt(length / (2.0 * np.pi)) * r2),
    ]
    commentary = "c = %.6g, h = %.6g, R2 = %.6g" % (c, h, r2)
    return _verdict("KSE reference-tracking condition", ineqs, commentary)
