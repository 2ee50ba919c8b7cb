"""

:Purpose:
    Named initial conditions, and arbitrary ones given as an expression
    in x (for example ``"0.1*sin(2*x)"``). Expressions are parsed with
    sympy and evaluated on the grid through ``lambdify``; the same
    machinery turns a time expression into the rod's parameter
    uncertainty theta(t).

:Dependencies:
    #. numpy
    #. sympy
"""

import logging

import numpy as np
import sympy as sp

from ..interpolants import Field
from ..tools import error_check

logger = logging.getLogger(__name__)

x, t = sp.symbols("x t", real=True)

_KSE_MULTI_TERMS = " + ".join(
    "sin(%d*x - %d*pi) + cos(%d*x - %d*pi)" % (n, n, n, n)
    for n in range(1, 6)
)

INITIAL_CONDITIONS = {
    "ci_cos3": "cos(3*x)",
    "kse_small": "1e-10*cos(x)*(1 + sin(x))",
    "kse_cos": "cos(x)*(1 + sin(x))",
    "kse_multi": "2.5/sqrt(5)*(%s)" % _KSE_MULTI_TERMS,
    "rod_sin2": "1e-3*sin(2*x)",
    "rod_sin1": "1e-3*sin(x)",
    "zero": "0",
}


def parse_expression(text, variable=x):
    """
    Parse ``text`` into a sympy expression of a single variable.

    Raises
        :ValueError: Unparsable text, or free symbols other than the
            variable.
    """
    fname = "parse_expression"
    error_check.check_type(text, str, "text", fname)
    try:
        expr = sp.sympify(text, locals={variable.name: variable})
    except (sp.SympifyError, SyntaxError, TypeError) as err:
        raise error_check.domain_error(
            fname, "cannot parse expression '%s': %s" % (text, err)
        )
    extra = expr.free_symbols - {variable}
    if extra:
        raise error_check.domain_error(
            fname, "expression '%s' may only depend on %s. Found: %s"
            % (text, variable.name,
               ", ".join(sorted(str(s) for s in extra)))
        )
    return expr


def expression_of(name_or_expr):
    """Preset expression text for a name, else the text itself."""
    return INITIAL_CONDITIONS.get(name_or_expr, name_or_expr)


def initial_field(name_or_expr, grid):
    """
    Sample a named initial condition or an expression in x on a grid.

    Arguments
        :name_or_expr (*str*): Key of INITIAL_CONDITIONS or expression.
        :grid (*Grid1D*): Target grid.

    Returns
        :Field: The sampled state.
    """
    expr = parse_expression(expression_of(name_or_expr))
    func = sp.lambdify(x, expr, modules="numpy")
    values = np.broadcast_to(np.asarray(func(grid.x), dtype=float),
                             grid.x.shape)
    logger.debug("initial condition %s = %s", name_or_expr, expr)
    return Field(grid, np.array(values))


def time_function(text):
    """
    theta(t) from an expression in t, returning floats.

    >>> theta = time_function("sin(0.524*t)")
    """
    expr = parse_expression(text, variable=t)
    func = sp.lambdify(t, expr, modules="numpy")

    def theta(time):
        return float(func(time))

    theta.expression = str(expr)
    return theta
