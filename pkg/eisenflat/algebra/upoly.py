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


"""Truncated polynomials F_q[u]/u^{ep}, the coefficient ring of Breuil modules killed by p."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..errors import FieldMismatchError, ParameterError
from .fields import FqElem, FqField

Scalar = Union[int, FqElem]


@dataclass(frozen=True)
class UPoly:
    field: FqField
    e: int
    coeffs: Tuple[FqElem, ...]

    def __post_init__(self) -> None:
        if self.e < 1 or math.gcd(self.e, self.field.p) != 1:
            raise ParameterError(f"ramification degree e={self.e} must be positive and prime to p={self.field.p}")
        if len(self.coeffs) != self.length:
            raise ParameterError(f"expected {self.length} coefficients, got {len(self.coeffs)}")
        if any(c.field != self.field for c in self.coeffs):
            raise FieldMismatchError(f"coefficients must lie in {self.field}")

    @property
    def length(self) -> int:
        return self.e * self.field.p

    # constructors

    @classmethod
    def zero(cls, field: FqField, e: int) -> "UPoly":
        return cls(field, e, (field.zero(),) * (e * field.p))

    @classmethod
    def from_coeffs(cls, field: FqField, e: int, coeffs: Union[Sequence[Scalar], Mapping[int, Scalar]]) -> "UPoly":
        """Build from a dense sequence or a {degree: coefficient} map; degrees >= ep are dropped."""
        n = e * field.p
        out = [field.zero()] * n
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        for deg, c in items:
            if deg < 0:
                raise ParameterError(f"negative degree {deg}")
            if deg < n:
                out[deg] = field.element(c)
        return cls(field, e, tuple(out))

    @classmethod
    def monomial(cls, field: FqField, e: int, degree: int, c: Scalar = 1) -> "UPoly":
        return cls.from_coeffs(field, e, {degree: c})

    # inspection

    def __getitem__(self, degree: int) -> FqElem:
        if 0 <= degree < self.length:
            return self.coeffs[degree]
        return self.field.zero()

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def support(self) -> Iterator[int]:
        return (i for i, c in enumerate(self.coeffs) if c)

    def valuation(self) -> Optional[int]:
        """Lowest degree with a nonzero coefficient; None for the zero polynomial."""
        return next(self.support(), None)

    def in_ideal(self, r: int) -> bool:
        v = self.valuation()
        return v is None or v >= r

    def is_unit(self) -> bool:
        return bool(self.coeffs[0])

    # arithmetic

    def _check(self, other: "UPoly") -> None:
        if other.field != self.field or other.e != self.e:
            raise FieldMismatchError("truncated polynomials over different (F_q, e)")

    def __add__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        return UPoly(self.field, self.e, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "UPoly":
        return UPoly(self.field, self.e, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other: Union["UPoly", Scalar]) -> "UPoly":
        if not isinstance(other, UPoly):
            return self.scale(other)
        self._check(other)
        n = self.length
        out = [self.field.zero()] * n
        for i in self.support():
            a = self.coeffs[i]
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPoly(self.field, self.e, tuple(out))

    def __rmul__(self, other: Scalar) -> "UPoly":
        return self.scale(other)

    def scale(self, c: Scalar) -> "UPoly":
        c = self.field.element(c)
        return UPoly(self.field, self.e, tuple(c * a for a in self.coeffs))

    def shift(self, m: int) -> "UPoly":
        """Multiply by u^m (m >= 0), truncating at u^{ep}."""
        if m < 0:
            raise ParameterError("use div_u_power to divide by u")
        n = self.length
        zero = self.field.zero()
        return UPoly(self.field, self.e, (zero,) * min(m, n) + self.coeffs[: max(n - m, 0)])

    def div_u_power(self, r: int) -> "UPoly":
        """Divide an element of (u^r) by u^r.

        The top r coefficients of the quotient are unknown in F_q[u]/u^{ep}; the
        zero lift is returned. Composed with frobenius_twist the choice is
        invisible, since p(ep - r) >= ep whenever r <= e.
        """
        if not 0 <= r <= self.e:
            raise ParameterError(f"division by u^{r} requires 0 <= r <= e={self.e}")
        if not self.in_ideal(r):
            raise ParameterError(f"{self} does not lie in (u^{r})")
        zero = self.field.zero()
        return UPoly(self.field, self.e, self.coeffs[r:] + (zero,) * r)

    def frobenius_twist(self) -> "UPoly":
        """sum phi(c_i) u^{pi}, dropping terms with pi >= ep."""
        p, n = self.field.p, self.length
        out = [self.field.zero()] * n
        for i in self.support():
            if p * i >= n:
                break
            out[p * i] = self.coeffs[i].frobenius()
        return UPoly(self.field, self.e, tuple(out))

    def __str__(self) -> str:
        terms = []
        for i in self.support():
            c = self.coeffs[i]
            cs = str(c)
            if not c.in_prime_field():
                cs = f"({cs})"
            elif cs == "1" and i > 0:
                cs = ""
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            terms.append(f"{cs}{mono}")
        return " + ".join(terms) if terms else "0"


def frobenius_twist(f: UPoly) -> UPoly:
    return f.frobenius_twist()


def polys_from(field: FqField, e: int, rows: Iterable[Sequence[int]]) -> list[UPoly]:
    """Decode F_p coordinate vectors (length ep*f, coefficient-major) into polynomials."""
    out = []
    fdeg = field.f
    for row in rows:
        row = list(row)
        coeffs = [field.from_vector(row[i * fdeg:(i + 1) * fdeg]) for i in range(e * field.p)]
        out.append(UPoly(field, e, tuple(coeffs)))
    return out
