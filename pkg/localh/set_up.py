"""
Run at every start of the localh command line to make sure
all necessary user directories exist, and provide
get functions to query the correct path
on the user's machine.

The root defaults to ``~/.localh`` and can be relocated with the
``LOCALH_HOME`` environment variable.
"""

import os
from pathlib import Path
from typing import Dict

HOME_ENV_VAR = "LOCALH_HOME"
WORKERS_ENV_VAR = "LOCALH_WORKERS"


def get_log_dir() -> Path:
    """
    :return: Directory for logging output.
    :rtype: Path
    """
    return _make_user_dir_list()["homepath_log"]


def get_config_dir() -> Path:
    """
    :return: Directory searched for run configuration
     files given by name only.
    :rtype: Path
    """
    return _make_user_dir_list()["homepath_configs"]


def default_workers() -> int:
    """
    Number of worker processes for batch runs.

    Read from ``LOCALH_WORKERS``; falls back to the number of
    available cores.

    :return: Worker count, at least 1.
    :rtype: int
    """
    value = os.environ.get(WORKERS_ENV_VAR)
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1


def _make_user_dir_list() -> Dict[str, Path]:
    homepath = Path(os.environ.get(HOME_ENV_VAR, Path.home() / ".localh"))
    pathdict = {
        "homepath": homepath,
        "homepath_log": homepath / "log",
        "homepath_configs": homepath / "configs",
    }
    return pathdict


def make_userdirs() -> None:
    """
    Create all necessary user directories if they don't
    yet exist.
    """
    dirs = _make_user_dir_list()
    for directory in dirs.values():
        directory.mkdir(parents=True, exist_ok=True)
