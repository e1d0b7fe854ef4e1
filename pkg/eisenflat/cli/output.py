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


"""JSON and CSV emission.

JSON is canonical: sorted keys, two-space indent and no floats. Integers under
the WIDE_INT_FIELDS keys are always decimal strings; any other integer that may
not survive a double round-trip is written as a string too.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Sequence

import numpy as np

from .. import __version__
from ..algebra.fields import FqElem
from ..algebra.upoly import UPoly
from ..constants import TOOL, WIDE_INT_FIELDS
from ..errors import InternalError, ParameterError

SAFE_INT = 2 ** 53


def canonical(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        value = int(obj)
        return value if abs(value) < SAFE_INT else str(value)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}" if obj.denominator != 1 else str(obj.numerator)
    if isinstance(obj, (FqElem, UPoly)):
        return str(obj)
    if isinstance(obj, float):
        raise InternalError("floating point values never enter the output")
    if isinstance(obj, Mapping):
        return {str(key): _wide(value) if key in WIDE_INT_FIELDS else canonical(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [canonical(item) for item in obj]
    raise InternalError(f"cannot serialize {type(obj).__name__}")


def _wide(value: Any) -> Any:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return canonical(value)


def envelope(params: Mapping[str, Any], results: Any) -> dict:
    return {"tool": TOOL, "version": __version__, "params": params, "results": results}


def to_json(params: Mapping[str, Any], results: Any) -> str:
    return json.dumps(canonical(envelope(params, results)), sort_keys=True, indent=2) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if cell is None else canonical(cell) for cell in row])
    return buf.getvalue()


def emit(text: str, out: Optional[str] = None) -> None:
    """Write to --out when given, stdout otherwise."""
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ParameterError(f"cannot write {out}: {exc.strerror or exc}") from exc
