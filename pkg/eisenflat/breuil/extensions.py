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


"""Order-p^2 extensions of rank-one Breuil modules.

Breuil side: 0 -> A(r, a) -> M -> A(s, b) -> 0, with M generated by e_1 and a
lift e_2 of ebar_2, Fil^1 M generated by u^r e_1 and u^s e_2 + x e_1, and the
ideal of p-torsion generated by p e_2 - eta e_1 (normalized so z = 0). On the
group-scheme side this is 0 -> G_{s,b} -> G -> G_{r,a} -> 0.

The extension data (x, eta) must satisfy, with y = eta - u^{e-s} x in (u^r),

    b eta = u^{ps} a phi(y / u^r) + a phi(x) u^{p(e-r)}

inside F_q[u]/u^{ep}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..algebra import linalg
from ..algebra.fields import FqElem, FqField, fq_make, is_pm1_power
from ..algebra.upoly import UPoly, polys_from
from ..constants import ORACLE_UNKNOWN_LIMIT
from ..errors import FieldMismatchError, InternalError, ParameterError, SizeBoundError
from ..logs import get_logger
from .modules import RankOneModule, check_ramification, hom_space, oort_tate_of

log = get_logger(__name__)

# p^rank of the oracle's eta-space is enumerated element by element
_ETA_SPAN_LIMIT = 100_000


@dataclass(frozen=True)
class ExtensionWitness:
    sub: RankOneModule
    quot: RankOneModule
    x: UPoly
    eta: UPoly

    def __post_init__(self) -> None:
        if not self.sub.same_base(self.quot):
            raise FieldMismatchError("sub and quotient over different (F_q, e)")
        for poly in (self.x, self.eta):
            if poly.field != self.sub.field or poly.e != self.sub.e:
                raise FieldMismatchError("extension data over a different (F_q, e)")

    @property
    def y(self) -> UPoly:
        return self.eta - self.x.shift(self.sub.e - self.quot.r)

    def __str__(self) -> str:
        return f"[{self.sub} -> M -> {self.quot}; x = {self.x}, eta = {self.eta}]"


@dataclass(frozen=True)
class ExtensionCheck:
    valid: bool
    diagnostic: str

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class NamedWitness:
    name: str
    case: int
    k: int
    witness: ExtensionWitness


@dataclass(frozen=True)
class OracleResult:
    dimension: int
    etas: frozenset

    def nonzero_etas(self) -> frozenset:
        return frozenset(eta for eta in self.etas if eta)


def _master_form(w: ExtensionWitness, y: UPoly) -> bool:
    p, e, r, s = w.sub.p, w.sub.e, w.sub.r, w.quot.r
    a, b = w.sub.a, w.quot.a
    lhs = w.eta.scale(b)
    rhs = y.div_u_power(r).frobenius_twist().shift(p * s).scale(a)
    rhs = rhs + w.x.frobenius_twist().shift(p * (e - r)).scale(a)
    return lhs == rhs


def _coefficient_form(w: ExtensionWitness) -> Tuple[bool, bool]:
    """(beta_k = 0 for k < r, every b gamma_k relation) from the coefficients alone."""
    p, e, r, s = w.sub.p, w.sub.e, w.sub.r, w.quot.r
    a, b = w.sub.a, w.quot.a
    alpha, gamma = w.x, w.eta
    n = e * p
    beta = [gamma[k] - alpha[k + s - e] for k in range(n)]

    def beta_at(k: int) -> FqElem:
        return beta[k] if 0 <= k < n else w.sub.field.zero()

    if any(beta[k] for k in range(r)):
        return False, False
    for k in range(n):
        if k % p:
            rhs = w.sub.field.zero()
        else:
            rhs = a * (beta_at(k // p + r - s) + alpha[k // p + r - e]).frobenius()
        if b * gamma[k] != rhs:
            return True, False
    return True, True


def validate_extension(w: ExtensionWitness) -> ExtensionCheck:
    """Check the master equation and the coefficient relations independently."""
    y = w.y
    in_fil = y.in_ideal(w.sub.r)
    coeff_fil, coeff_ok = _coefficient_form(w)
    if in_fil != coeff_fil:
        raise InternalError(f"Fil^1 membership of y disagrees between the two forms for {w}")
    if not in_fil:
        return ExtensionCheck(False, f"y = {y} does not lie in (u^{w.sub.r})")
    master_ok = _master_form(w, y)
    if master_ok != coeff_ok:
        raise InternalError(f"master equation and coefficient relations disagree for {w}")
    if not master_ok:
        return ExtensionCheck(False, "master equation fails")
    return ExtensionCheck(True, "ok")


def _check_params(e: int, r: int, s: int, a: FqElem, b: FqElem) -> FqField:
    if a.field != b.field:
        raise FieldMismatchError("a and b lie in different fields")
    check_ramification(a.field, e)
    if not (0 <= r <= e and 0 <= s <= e):
        raise ParameterError(f"(r, s) = ({r}, {s}) outside 0..e = {e}")
    if not a or not b:
        raise ParameterError("a and b must be units")
    return a.field


def _extension_degree(p: int, r: int, s: int) -> Optional[int]:
    diff = r - s
    if diff < 0 or diff % (p - 1):
        return None
    return diff // (p - 1)


def classify_eta(e: int, r: int, s: int, a: FqElem, b: FqElem) -> Tuple[UPoly, ...]:
    """Every admissible nonzero eta for sub A(r, a), quotient A(s, b).

    Nonzero eta exist iff r - s = k(p-1) with k >= min(s, e-r) and b/a is a
    (p-1)-th power; they are then c u^{pk} with c^(p-1) = b/a.
    """
    field = _check_params(e, r, s, a, b)
    p = field.p
    k = _extension_degree(p, r, s)
    if k is None or k < min(s, e - r) or p * k >= e * p:
        return ()
    ratio = b / a
    if not is_pm1_power(ratio):
        return ()
    return tuple(
        UPoly.monomial(field, e, p * k, c) for c in field.units() if c ** (p - 1) == ratio
    )


def solve_extensions_oracle(e: int, r: int, s: int, a: FqElem, b: FqElem) -> OracleResult:
    """Linear-algebra verifier for classify_eta.

    Unknowns are the F_p-coordinates of alpha_k (coefficients of x) and beta_k
    (coefficients of y, with beta_k = 0 for k < r dropped up front). Each
    relation b gamma_k = [p | k] a phi(beta_{k/p+r-s} + alpha_{k/p+r-e}), with
    gamma_k = beta_k + alpha_{k+s-e}, contributes f rows; Frobenius is
    F_p-linear so the system is linear over F_p.
    """
    field = _check_params(e, r, s, a, b)
    p, f = field.p, field.f
    n = e * p
    unknowns = (2 * n - r) * f
    if unknowns > ORACLE_UNKNOWN_LIMIT:
        raise SizeBoundError(f"{unknowns} unknowns exceed the oracle bound {ORACLE_UNKNOWN_LIMIT}")

    def alpha_col(k: int) -> Optional[int]:
        return k * f if 0 <= k < n else None

    def beta_col(k: int) -> Optional[int]:
        return n * f + (k - r) * f if r <= k < n else None

    mul_b = field.mul_matrix(b)
    a_frob = (field.mul_matrix(a) @ field.frobenius_matrix()) % p

    system = np.zeros((n * f, unknowns), dtype=np.int64)
    gamma_map = np.zeros((n * f, unknowns), dtype=np.int64)
    for k in range(n):
        rows = slice(k * f, (k + 1) * f)
        for col in (beta_col(k), alpha_col(k + s - e)):
            if col is not None:
                system[rows, col:col + f] += mul_b
                gamma_map[rows, col:col + f] += np.eye(f, dtype=np.int64)
        if k % p == 0:
            for col in (beta_col(k // p + r - s), alpha_col(k // p + r - e)):
                if col is not None:
                    system[rows, col:col + f] -= a_frob
    system %= p

    kernel = linalg.nullspace(system, p)
    dimension = kernel.shape[1]
    images = linalg.matmul(gamma_map, kernel, p).T
    span = linalg.SpanTracker(p, n * f)
    for vec in images:
        span.add(vec)
    if p ** len(span) > _ETA_SPAN_LIMIT:
        raise SizeBoundError(f"eta-space of dimension {len(span)} is too large to enumerate")
    etas = frozenset(polys_from(field, e, span.elements()))
    log.debug(
        "oracle p=%d e=%d r=%d s=%d: %d unknowns, kernel dim %d, eta dim %d",
        p, e, r, s, unknowns, dimension, len(span),
    )
    return OracleResult(dimension, etas)


def p2_extension_exists(e: int, quot_params: Tuple[int, FqElem], sub_params: Tuple[int, FqElem]) -> bool:
    """Is there a G, not killed by p, with 0 -> G_{s,b} -> G -> G_{r,a} -> 0?

    quot_params = (r, a) and sub_params = (s, b) are group-scheme side labels.
    Such a G exists iff there is a nonzero morphism G_{r,a} -> G_{s,b} and
    r >= ps or (e - s) >= p(e - r).
    """
    (r, a), (s, b) = quot_params, sub_params
    field = _check_params(e, r, s, a, b)
    p = field.p
    hom = hom_space(RankOneModule(field, e, s, b), RankOneModule(field, e, r, a))
    exists = bool(hom) and (r >= p * s or (e - s) >= p * (e - r))

    if hom:
        k = _extension_degree(p, r, s)
        if (r >= p * s) != (k >= s) or ((e - s) >= p * (e - r)) != (k >= e - r):
            raise InternalError(f"criterion equivalence fails at p={p}, e={e}, r={r}, s={s}")
    if exists != bool(classify_eta(e, r, s, a, b)):
        raise InternalError(f"existence criterion and eta classification disagree at e={e}, r={r}, s={s}")
    return exists


def canonical_examples(p: int, e: int, field: Optional[FqField] = None) -> list[NamedWitness]:
    """The explicit non-trivial extensions for every admissible (r, s, a, b).

    Case 1 (k >= s): x = 0, eta = c u^{pk}.
    Case 2 (k >= e - r): x = c u^{k-e+r}, eta = c u^{pk}, so y = 0.
    c is the first unit with c^(p-1) = b/a.
    """
    field = field or fq_make(p, 1)
    if field.p != p:
        raise FieldMismatchError(f"{field} does not have characteristic {p}")
    check_ramification(field, e)
    out: list[NamedWitness] = []
    for r in range(e + 1):
        for s in range(r + 1):
            k = _extension_degree(p, r, s)
            if k is None:
                continue
            for a in field.units():
                for b in field.units():
                    ratio = b / a
                    c = next((c for c in field.units() if c ** (p - 1) == ratio), None)
                    if c is None:
                        continue
                    sub = RankOneModule(field, e, r, a)
                    quot = RankOneModule(field, e, s, b)
                    eta = UPoly.monomial(field, e, p * k, c)
                    if k >= s:
                        w = ExtensionWitness(sub, quot, UPoly.zero(field, e), eta)
                        out.append(NamedWitness(f"case1 {sub} by {quot}", 1, k, w))
                    if k >= e - r:
                        x = UPoly.monomial(field, e, k - e + r, c)
                        w = ExtensionWitness(sub, quot, x, eta)
                        out.append(NamedWitness(f"case2 {sub} by {quot}", 2, k, w))
    return out


def is_killed_by_p(w: ExtensionWitness) -> bool:
    return w.eta.is_zero()


def p_torsion_is_finite_flat(w: ExtensionWitness) -> bool:
    """G[p] is finite flat iff G is killed by p or eta is a unit."""
    return w.eta.is_zero() or w.eta.is_unit()


def group_scheme_sequence(w: ExtensionWitness) -> Tuple[str, str]:
    """(subgroup, quotient) labels of 0 -> G_{s,b} -> G -> G_{r,a} -> 0."""
    return oort_tate_of(w.quot).label, oort_tate_of(w.sub).label
