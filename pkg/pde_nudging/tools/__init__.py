"""
Purpose:
    Miscellaneous tools shared by the sub-packages: argument checks with
    a common error banner, processing history records, and the writers
    for the per-run output files.
"""

from . import error_check
from .error_check import NonFiniteStateError
from .history import write_history_dict
from .write_output_files import write_output_files
