"""

:Purpose:
    Argument checks shared by every sub-package. Each check raises with
    the same banner so failures deep inside a sweep are easy to trace
    back to the routine that rejected its input.

:Dependencies:
    #. numpy
"""

import numpy


def _banner(f_name, message):
    return (
        """
        \r\tError Encountered: pde_nudging\n\r\t\t%s\n
        \r\t%s
        """ % (f_name, message)
    )


class NonFiniteStateError(FloatingPointError):
    """
    Raised when a time step produces NaN or Inf.

    Attributes
        :step (*int*): Index of the step that failed.
        :time (*float*): Simulation time at the start of that step.
    """
    def __init__(self, step, time, f_name="time_step"):
        self.step = step
        self.time = time
        FloatingPointError.__init__(
            self,
            _banner(
                f_name,
                "Non-finite state produced at step %d (t = %.6g)."
                % (step, time)
            )
        )


def check_type(input_var, input_type, input_var_name, f_name):
    if not isinstance(input_var, input_type):
        if isinstance(input_type, tuple):
            type_name = " or ".join(t.__name__ for t in input_type)
        else:
            type_name = input_type.__name__

        raise TypeError(
            _banner(
                f_name,
                "%s must have type: %s\n\r\tYour input has type: %s\n"
                % (input_var_name, type_name, type(input_var).__name__)
            )
        )
    else:
        return


def check_type_and_convert(input_var, input_type, input_var_name, f_name):
    if isinstance(input_var, bool) and input_type is not bool:
        raise TypeError(
            _banner(
                f_name,
                "%s must have type: %s\n\r\tYour input has type: bool\n"
                % (input_var_name, input_type.__name__)
            )
        )

    if not isinstance(input_var, input_type):
        try:
            return input_type(input_var)
        except (TypeError, ValueError):
            raise TypeError(
                _banner(
                    f_name,
                    "%s must have type: %s\n\r\tYour input has type: %s\n"
                    % (input_var_name, input_type.__name__,
                       type(input_var).__name__)
                )
            )
    else:
        return input_var


def check_positive(input_var, input_var_name, f_name):
    if (numpy.min(input_var) <= 0.0):
        raise ValueError(
            _banner(f_name, "%s must be positive." % input_var_name)
        )
    else:
        return


def check_non_negative(input_var, input_var_name, f_name):
    if (numpy.min(input_var) < 0.0):
        raise ValueError(
            _banner(f_name, "%s must be non-negative." % input_var_name)
        )
    else:
        return


def check_finite(input_var, input_var_name, f_name):
    if not numpy.all(numpy.isfinite(input_var)):
        bad = numpy.flatnonzero(~numpy.isfinite(numpy.ravel(input_var)))
        raise ValueError(
            _banner(
                f_name,
                "%s must be finite. First offending index: %d"
                % (input_var_name, bad[0])
            )
        )
    else:
        return


def check_choice(input_var, choices, input_var_name, f_name):
    if input_var not in choices:
        erm = ""
        for key in choices:
            erm = "%s\t\t'%s'\n" % (erm, key)
        raise ValueError(
            _banner(
                f_name,
                "%s must be one of the following:\n%s\r\tYour input: %r"
                % (input_var_name, erm, input_var)
            )
        )
    else:
        return


def domain_error(f_name, message):
    """Build a ValueError carrying the package banner."""
    return ValueError(_banner(f_name, message))
