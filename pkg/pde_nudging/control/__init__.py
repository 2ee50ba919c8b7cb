"""
    Purpose:
        Feedback control with interpolant operators: the forcing term
        -mu (I_h(u) - I_h(u*)), its activation schedule and reference,
        the recommended actuator counts, and the sufficient stability
        conditions as checkable verdicts.

    Dependencies:
        #. numpy
"""

from .feedback import (
    ControlConfig,
    FeedbackController,
    ReferenceTrajectory,
    feedback_term,
    ACTIVATION_TOL,
)
from .conditions import (
    ConditionVerdict,
    Inequality,
    check_ci_condition,
    check_kse_zero_condition,
    check_kse_reference_condition,
)
from .actuators import ActuatorRecommendation, recommended_actuators
