"""

:Purpose:
    Functions related to recording processing history of a run.

    Run directories must be byte-identical for identical configurations,
    so the default record holds only what the configuration and the
    installed software determine. The user, host and date are added on
    request for interactive logs.

:Dependencies:
    #. os
    #. time
    #. getpass
    #. platform
"""
import os
import time
import getpass
import platform

PACKAGE_VERSION = "1.0"


def _user_name():
    # getuser fails without a login entry (containers, batch jobs).
    try:
        return getpass.getuser()
    except (KeyError, OSError):
        return "unknown"


def write_history_dict(input_vars, input_kwds, source_file, add_info=None,
                       machine_info=False):
    """
    This creates a dictionary of processing history for a run.

    Arguments:
        :input_vars (*dict*): Dictionary of all input variables to the run.
        :input_kwds (*dict*): Dictionary of all input keywords to the run.
        :source_file (*str*):  Full path to the script used to start the run.

    Keyword Arguments:
        :add_info (*dict*): Dictionary of additional info
        :machine_info (*bool*): Also record "User Name", "Host Name" and
                                "Run Date". These change between
                                invocations.

    Returns:
        :history (*dict*): Dictionary with keys: "pde_nudging Version",
                            "Python Version", "Operating System",
                            "Source File", "Positional Args",
                            "Keyword Args", "Additional Info"
    """
    history = {
            "pde_nudging Version": PACKAGE_VERSION,
            "Python Version": platform.python_version(),
            "Operating System": platform.system(),
            "Source File": os.path.basename(source_file),
            "Positional Args": input_vars,
            "Keyword Args": input_kwds,
            "Additional Info": add_info if add_info else '',
            }

    if machine_info:
        history["User Name"] = _user_name()
        history["Host Name"] = platform.node()
        history["Run Date"] = time.ctime() + ' ' + time.tzname[0]
    return history
