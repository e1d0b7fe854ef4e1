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


"""Exception hierarchy shared by every eisenflat module."""

from __future__ import annotations

from typing import Optional


class EisenflatError(ValueError):
    """Base class for all errors raised by the library."""


class ParameterError(EisenflatError):
    """A precondition on the inputs does not hold."""


class NotPrimeError(ParameterError):
    pass


class FieldMismatchError(ParameterError):
    """Operands live over different coefficient fields or ramification degrees."""


class SizeBoundError(ParameterError):
    """The request exceeds the desk-scale bound of the operation."""


class PrecisionError(EisenflatError):
    """The requested p-adic precision cannot be justified.

    `achievable` is the precision that could be reported instead, or None when
    nothing can be said.
    """

    def __init__(self, message: str, achievable: Optional[int] = None) -> None:
        super().__init__(message)
        self.achievable = achievable


class NotIntegralError(PrecisionError):
    """The value is not p-integral."""


class VonStaudtPoleError(NotIntegralError):
    """(p - 1) divides the Bernoulli index, so p divides the denominator."""


class EchelonError(EisenflatError):
    """A basis that must be echelonizable turned out singular (internal bug)."""


class NonCommutativeError(EisenflatError):
    """Hecke operators failed to commute (internal bug)."""


class InternalError(EisenflatError):
    """An internal cross-check disagreed with itself."""
