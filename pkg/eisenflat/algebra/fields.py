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


"""Prime fields and small extension fields F_q = F_{p^f}.

Elements are dense coefficient tuples in the power basis 1, x, ..., x^{f-1}
reduced modulo a monic irreducible polynomial. The modulus is the
lexicographically least monic irreducible of degree f when the tuple
(c_0, ..., c_{f-1}) of its lower coefficients is ordered with c_0 most
significant, so every run picks the same field.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

import numpy as np
from sympy import isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcd, gf_pow_mod, gf_sub

from ..constants import FIELD_DEGREE_LIMIT
from ..errors import FieldMismatchError, InternalError, NotPrimeError, ParameterError


@dataclass(frozen=True)
class FqField:
    p: int
    f: int
    modulus: Tuple[int, ...]  # ascending coefficients, length f + 1, monic

    @property
    def q(self) -> int:
        return self.p ** self.f

    def __str__(self) -> str:
        return f"F_{self.p}" if self.f == 1 else f"F_{self.p}^{self.f}"

    def element(self, value: Union[int, Sequence[int], "FqElem"]) -> "FqElem":
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.f - 1)
            return FqElem(self, tuple(coeffs))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.f:
            return FqElem(self, _reduce(coeffs, self))
        return FqElem(self, tuple(coeffs + [0] * (self.f - len(coeffs))))

    def zero(self) -> "FqElem":
        return self.element(0)

    def one(self) -> "FqElem":
        return self.element(1)

    def gen(self) -> "FqElem":
        """The class of x (equal to -c_0 in the prime field)."""
        return self.element([0, 1])

    def elements(self) -> Iterator["FqElem"]:
        """All q elements, ordered by coefficient tuple with c_0 most significant."""
        for coeffs in itertools.product(range(self.p), repeat=self.f):
            yield FqElem(self, tuple(coeffs))

    def units(self) -> Iterator["FqElem"]:
        return (x for x in self.elements() if x)

    def primitive_element(self) -> "FqElem":
        order = self.q - 1
        prime_factors = primefactors(order)
        for x in self.units():
            if all(x ** (order // ell) != self.one() for ell in prime_factors):
                return x
        raise InternalError(f"{self} has no primitive element")

    def from_vector(self, vector: Sequence[int]) -> "FqElem":
        return self.element([int(v) for v in vector])

    def mul_matrix(self, c: "FqElem") -> np.ndarray:
        """F_p-matrix (columns = images of the power basis) of y -> c*y."""
        c = self.element(c)
        cols = [(c * self.element([0] * j + [1])).coeffs for j in range(self.f)]
        return np.array(cols, dtype=np.int64).T

    def frobenius_matrix(self) -> np.ndarray:
        """F_p-matrix of y -> y^p; Frobenius is F_p-linear."""
        cols = [self.element([0] * j + [1]).frobenius().coeffs for j in range(self.f)]
        return np.array(cols, dtype=np.int64).T


@dataclass(frozen=True)
class FqElem:
    field: FqField
    coeffs: Tuple[int, ...]

    def _coerce(self, other: Union[int, "FqElem"]) -> "FqElem":
        if isinstance(other, int):
            return self.field.element(other)
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
        return other

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def __add__(self, other: Union[int, "FqElem"]) -> "FqElem":
        other = self._coerce(other)
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FqElem":
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: Union[int, "FqElem"]) -> "FqElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "FqElem":
        return self._coerce(other) - self

    def __mul__(self, other: Union[int, "FqElem"]) -> "FqElem":
        other = self._coerce(other)
        f = self.field.f
        if f == 1:
            return FqElem(self.field, ((self.coeffs[0] * other.coeffs[0]) % self.field.p,))
        prod = [0] * (2 * f - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FqElem(self.field, _reduce(prod, self.field))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FqElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FqElem":
        if not self:
            raise ZeroDivisionError("zero has no inverse in a field")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: Union[int, "FqElem"]) -> "FqElem":
        return self * self._coerce(other).inverse()

    def frobenius(self) -> "FqElem":
        return self ** self.field.p

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.in_prime_field():
            raise ParameterError(f"{self} does not lie in the prime field")
        return self.coeffs[0]

    def __str__(self) -> str:
        if self.in_prime_field():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coeff = str(c) if (c != 1 or i == 0) else ""
            terms.append(f"{coeff}{mono}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"FqElem({self}, {self.field})"


def _reduce(prod: Sequence[int], field: FqField) -> Tuple[int, ...]:
    p, f, mod = field.p, field.f, field.modulus
    prod = list(prod)
    for deg in range(len(prod) - 1, f - 1, -1):
        c = prod[deg] % p
        if c:
            for i in range(f):
                prod[deg - f + i] -= c * mod[i]
        prod[deg] = 0
    return tuple(c % p for c in prod[:f])


def _has_root(modulus: Sequence[int], p: int) -> bool:
    for t in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * t + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p (ascending coefficients)."""
    f = len(modulus) - 1
    if f == 1:
        return True
    if f <= 3:
        return not _has_root(modulus, p)
    dense = [ZZ(c) for c in reversed(modulus)]  # galoistools wants descending order
    x = [ZZ(1), ZZ(0)]
    for i in range(1, f // 2 + 1):
        frob = gf_pow_mod(x, p ** i, dense, p, ZZ)
        if gf_gcd(dense, gf_sub(frob, x, p, ZZ), p, ZZ) != [ZZ(1)]:
            return False
    return True


@functools.lru_cache(maxsize=None)
def fq_make(p: int, f: int) -> FqField:
    """Field descriptor for F_{p^f} with the deterministic least modulus."""
    if p < 2 or not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        raise NotPrimeError("the characteristic must be an odd prime")
    if not 1 <= f <= FIELD_DEGREE_LIMIT:
        raise ParameterError(f"extension degree {f} outside 1..{FIELD_DEGREE_LIMIT}")
    for lower in itertools.product(range(p), repeat=f):
        modulus = tuple(lower) + (1,)
        if is_irreducible(modulus, p):
            return FqField(p, f, modulus)
    raise InternalError(f"no monic irreducible of degree {f} found over F_{p}")


def is_pm1_power(x: FqElem) -> bool:
    """True iff x = c^(p-1) for some nonzero c in F_q."""
    if not x:
        raise ParameterError("0 is not a (p-1)-th power of a unit")
    field = x.field
    g = math.gcd(field.p - 1, field.q - 1)
    return x ** ((field.q - 1) // g) == field.one()
