# Copyright (C) 2025 Eisenflat contributors

# This file is part of Eisenflat.

# Eisenflat is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program; if not, see <https://www.gnu.org/licenses>.


"""Logger factory.

Every module asks for its logger through `get_logger(__name__)`; the first call
installs one stderr handler on the package logger with the "[Eisenflat]" prefix.
"""

from __future__ import annotations

import logging
import os
import sys
from threading import Lock
from typing import Optional

from .constants import LOG_LEVEL_ENV, LOG_PREFIX, TOOL

_configured = False
_lock = Lock()


def parse_level(raw: str) -> Optional[int]:
    """Level for a name such as "debug" or a number such as "10"; None if unknown."""
    raw = raw.strip()
    if raw.lstrip("-").isdigit():
        return int(raw)
    level = logging.getLevelName(raw.upper())
    return level if isinstance(level, int) else None


def _configure() -> None:
    global _configured
    with _lock:
        if _configured:
            return
        raw = os.environ.get(LOG_LEVEL_ENV)
        level = parse_level(raw) if raw else logging.WARNING
        root = logging.getLogger(TOOL)
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(f"{LOG_PREFIX} %(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
        root.setLevel(logging.WARNING if level is None else level)
        root.propagate = False
        _configured = True
    if level is None:
        root.warning("ignoring %s=%r: not a log level, using WARNING", LOG_LEVEL_ENV, raw)


def get_logger(name: str) -> logging.Logger:
    _configure()
    return logging.getLogger(name)


def set_verbosity(verbose: int) -> None:
    """Map a count of -v flags onto the package log level."""
    _configure()
    if verbose <= 0:
        return
    level = logging.INFO if verbose == 1 else logging.DEBUG
    logging.getLogger(TOOL).setLevel(level)


def reset() -> None:
    """Drop the installed handler so the next call re-reads the environment."""
    global _configured
    with _lock:
        root = logging.getLogger(TOOL)
        for handler in list(root.handlers):
            root.removeHandler(handler)
        _configured = False
