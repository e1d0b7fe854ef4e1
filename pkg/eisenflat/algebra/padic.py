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


"""Residues modulo p^N that carry their precision N.

A PadicApprox never claims more precision than its inputs justify: sums and
products keep the minimum precision, division by p costs one digit. Equality is
only meaningful at the common precision, so instances compare through
`congruent` rather than `==`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import multiplicity

from ..errors import NotIntegralError, ParameterError, PrecisionError

Operand = Union[int, "PadicApprox"]


def p_adic_valuation(x: Union[int, Fraction], p: int) -> Union[int, float]:
    """v_p of a nonzero integer or rational; +inf for zero."""
    x = Fraction(x)
    if x == 0:
        return float("inf")
    return int(multiplicity(p, abs(x.numerator))) - int(multiplicity(p, x.denominator))


@dataclass(frozen=True, eq=False)
class PadicApprox:
    p: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise PrecisionError(f"precision {self.precision} below 1", achievable=0)
        if not 0 <= self.residue < self.p ** self.precision:
            raise ParameterError(f"residue {self.residue} outside [0, {self.p}^{self.precision})")

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    @classmethod
    def from_int(cls, p: int, precision: int, value: int) -> "PadicApprox":
        return cls(p, precision, value % p ** precision)

    @classmethod
    def from_fraction(cls, p: int, precision: int, value: Union[int, Fraction]) -> "PadicApprox":
        value = Fraction(value)
        if value.denominator % p == 0:
            raise NotIntegralError(f"{value} is not {p}-integral", achievable=None)
        mod = p ** precision
        return cls(p, precision, value.numerator * pow(value.denominator, -1, mod) % mod)

    def _coerce(self, other: Operand) -> "PadicApprox":
        if isinstance(other, int):
            return PadicApprox.from_int(self.p, self.precision, other)
        if other.p != self.p:
            raise ParameterError(f"mixing {self.p}-adic and {other.p}-adic residues")
        return other

    def __add__(self, other: Operand) -> "PadicApprox":
        other = self._coerce(other)
        return PadicApprox.from_int(self.p, min(self.precision, other.precision), self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self) -> "PadicApprox":
        return PadicApprox.from_int(self.p, self.precision, -self.residue)

    def __sub__(self, other: Operand) -> "PadicApprox":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "PadicApprox":
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> "PadicApprox":
        other = self._coerce(other)
        return PadicApprox.from_int(self.p, min(self.precision, other.precision), self.residue * other.residue)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PadicApprox":
        if n < 0:
            raise ParameterError("negative powers need div_unit")
        return PadicApprox(self.p, self.precision, pow(self.residue, n, self.modulus))

    def div_unit(self, d: Operand) -> "PadicApprox":
        """Divide by a p-adic unit; precision is unchanged (or the divisor's, if lower)."""
        d = self._coerce(d)
        if d.residue % self.p == 0:
            raise ParameterError(f"{d.residue} is divisible by p={self.p}; use div_p")
        n = min(self.precision, d.precision)
        mod = self.p ** n
        return PadicApprox(self.p, n, self.residue * pow(d.residue, -1, mod) % mod)

    def div_p(self) -> "PadicApprox":
        if self.residue % self.p != 0:
            raise NotIntegralError(f"p-division of a unit residue {self.residue} mod {self.p}^{self.precision}")
        if self.precision < 2:
            raise PrecisionError("dividing by p would leave no precision", achievable=0)
        return PadicApprox(self.p, self.precision - 1, self.residue // self.p)

    def reduce_to(self, precision: int) -> "PadicApprox":
        if precision > self.precision:
            raise PrecisionError(
                f"cannot raise precision from {self.precision} to {precision}", achievable=self.precision
            )
        return PadicApprox.from_int(self.p, precision, self.residue)

    def valuation(self) -> int:
        """v_p of the residue, capped at the precision (zero residue reports the precision)."""
        if self.residue == 0:
            return self.precision
        return int(p_adic_valuation(self.residue, self.p))

    def is_zero_mod_p(self) -> bool:
        return self.residue % self.p == 0

    def congruent(self, other: Operand) -> bool:
        """Equality at the minimum common precision."""
        other = self._coerce(other)
        mod = self.p ** min(self.precision, other.precision)
        return (self.residue - other.residue) % mod == 0

    def __repr__(self) -> str:
        return f"PadicApprox({self.residue} mod {self.p}^{self.precision})"


def padic_div_unit(x: PadicApprox, d: Operand) -> PadicApprox:
    return x.div_unit(d)


def padic_div_p(x: PadicApprox) -> PadicApprox:
    return x.div_p()
