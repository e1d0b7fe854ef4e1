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


"""Rank-one Breuil modules killed by p and the Oort-Tate dictionary.

A(r, a) is the free F_q[u]/u^{ep}-module on e with Fil^1 = u^r e and
phi_1(u^r e) = a e. Under the anti-equivalence with finite flat group schemes
it corresponds to the Oort-Tate scheme G_{r,a}: A(e, 1) is Z/pZ and A(0, 1) is
mu_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from ..algebra.fields import FqElem, FqField, is_pm1_power
from ..algebra.upoly import UPoly
from ..constants import KIND_ETALE, KIND_LOCAL_LOCAL, KIND_MULTIPLICATIVE
from ..errors import FieldMismatchError, InternalError, ParameterError


def check_ramification(field: FqField, e: int) -> None:
    if e < 1 or math.gcd(e, field.p) != 1:
        raise ParameterError(f"e = {e} must be positive and prime to p = {field.p}")


@dataclass(frozen=True)
class RankOneModule:
    field: FqField
    e: int
    r: int
    a: FqElem

    def __post_init__(self) -> None:
        check_ramification(self.field, self.e)
        if not 0 <= self.r <= self.e:
            raise ParameterError(f"r = {self.r} outside 0..e = {self.e}")
        if self.a.field != self.field:
            raise FieldMismatchError(f"a = {self.a} does not lie in {self.field}")
        if not self.a:
            raise ParameterError("a must be a unit")

    @classmethod
    def of(cls, field: FqField, e: int, r: int, a: Union[int, FqElem] = 1) -> "RankOneModule":
        return cls(field, e, r, field.element(a))

    @property
    def p(self) -> int:
        return self.field.p

    def phi1(self, poly: UPoly) -> UPoly:
        """phi_1(poly * e) for poly in (u^r), returned as a coefficient of e."""
        if poly.field != self.field or poly.e != self.e:
            raise FieldMismatchError("polynomial and module over different (F_q, e)")
        if not poly.in_ideal(self.r):
            raise ParameterError(f"{poly} is not in Fil^1 = (u^{self.r})")
        return poly.div_u_power(self.r).frobenius_twist().scale(self.a)

    def same_base(self, other: "RankOneModule") -> bool:
        return self.field == other.field and self.e == other.e

    def __str__(self) -> str:
        return f"A({self.r},{self.a})"


@dataclass(frozen=True)
class OortTateParams:
    e: int
    r: int
    a: FqElem
    affine_algebra_exponent: int

    @property
    def kind(self) -> str:
        if self.r == self.e:
            return KIND_ETALE
        if self.r == 0:
            return KIND_MULTIPLICATIVE
        return KIND_LOCAL_LOCAL

    @property
    def label(self) -> str:
        one = self.a == self.a.field.one()
        if self.kind == KIND_ETALE and one:
            return "Z/pZ"
        if self.kind == KIND_MULTIPLICATIVE and one:
            return "mu_p"
        return f"G_{{{self.r},{self.a}}}"

    def to_module(self) -> RankOneModule:
        return RankOneModule(self.a.field, self.e, self.r, self.a)


def oort_tate_of(m: RankOneModule) -> OortTateParams:
    return OortTateParams(e=m.e, r=m.r, a=m.a, affine_algebra_exponent=m.e - m.r)


@dataclass(frozen=True)
class HomWitness:
    """The map ebar_2 -> c u^m e_1 from src = A(s, b) to dst = A(r, a)."""

    src: RankOneModule
    dst: RankOneModule
    m: int
    c: FqElem

    def __post_init__(self) -> None:
        if not self.src.same_base(self.dst):
            raise FieldMismatchError("Hom between modules over different (F_q, e)")
        p = self.src.p
        if not self.c:
            raise ParameterError("a witness needs c != 0")
        if (p - 1) * self.m != p * (self.dst.r - self.src.r):
            raise ParameterError(f"degree m = {self.m} is not p(r-s)/(p-1)")
        if self.src.a * self.c != self.dst.a * self.c.frobenius():
            raise ParameterError(f"b*c != a*c^p for c = {self.c}")

    def image(self) -> UPoly:
        return UPoly.monomial(self.src.field, self.src.e, self.m, self.c)


@dataclass(frozen=True)
class HomSpace:
    dimension: int
    m: Optional[int]
    witnesses: Tuple[HomWitness, ...]

    def __bool__(self) -> bool:
        return self.dimension > 0


def hom_space(src: RankOneModule, dst: RankOneModule) -> HomSpace:
    """Hom(A(s, b), A(r, a)) in the killed-by-p category.

    phi_1-equivariance of ebar_2 -> c u^m e_1 forces m = p(r-s)/(p-1) and
    b c = a c^p; the nonzero c form the p-1 solutions of c^(p-1) = b/a, so the
    space is one-dimensional over F_p or zero.
    """
    if not src.same_base(dst):
        raise FieldMismatchError("Hom between modules over different (F_q, e)")
    p, e = src.p, src.e
    diff = dst.r - src.r
    empty = HomSpace(0, None, ())
    if diff < 0 or diff % (p - 1):
        return empty
    m = p * diff // (p - 1)
    if m > e * p - 1:
        return empty
    ratio = src.a / dst.a
    if not is_pm1_power(ratio):
        return empty
    witnesses = tuple(
        HomWitness(src, dst, m, c) for c in src.field.units() if c ** (p - 1) == ratio
    )
    if len(witnesses) != p - 1:
        raise InternalError(f"expected {p - 1} solutions of c^(p-1) = {ratio}, found {len(witnesses)}")
    return HomSpace(1, m, witnesses)
