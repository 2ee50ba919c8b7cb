"""
    Purpose:
        Norms, per-run diagnostics series, decay rate fits, the
        attractor bound R_2 of a reference trajectory, and monitors for
        the energy inequality of the controlled KSE.

    Dependencies:
        #. numpy
        #. scipy
"""

from .norms import (
    RunDiagnostics,
    DiagnosticsRecorder,
    l2_norm,
    h1_norm,
    h1_seminorm,
    uxx_norm,
    state_norms,
)
from .decay_fit import DecayFit, fit_decay_rate
from .attractor_bound import AttractorBound, estimate_attractor_bound
from .energy_monitor import (
    energy_inequality_monitor,
    monitor_tolerance,
    monitor_violations,
    gronwall_envelope,
    gronwall_holds,
    MONITOR_SLACK,
)
