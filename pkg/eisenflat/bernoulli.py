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


"""Bernoulli numbers, the Teichmuller character and the hypothesis predicates.

Conventions:
    bernoulli_exact follows the generating series t*e^t/(e^t - 1), so B_1 = +1/2.
    Even indices agree with every other convention, and only even indices feed
    the predicates.

    gen_bernoulli_omega sums over a = 1..p-1 (the a = 0 term vanishes since the
    character does) and expands the Bernoulli polynomial with the usual
    B_1 = -1/2, which is what the twisted series sum_a chi(a) t e^{at}/(e^{pt}-1)
    produces. For the trivial character it returns the imprimitive value
    (1 - p^{n-1}) B_n.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from sympy import bernoulli as sympy_bernoulli
from sympy import isprime

from .algebra.padic import PadicApprox, p_adic_valuation
from .constants import (
    BERNOULLI_INDEX_LIMIT,
    GEN_BERNOULLI_PRECISION_LIMIT,
    GUARD_DIGITS,
    LEVEL_GAMMA0_P2,
    LEVEL_GAMMA1,
)
from .errors import NotIntegralError, NotPrimeError, ParameterError, PrecisionError, SizeBoundError, VonStaudtPoleError
from .logs import get_logger

log = get_logger(__name__)

BigRational = Fraction


def _check_odd_prime(p: int) -> None:
    if p < 3 or not isprime(p):
        raise NotPrimeError(f"{p} is not an odd prime")


@functools.lru_cache(maxsize=None)
def _even_bernoulli(n: int) -> Fraction:
    value = sympy_bernoulli(n)
    return Fraction(int(value.p), int(value.q))


def bernoulli_exact(n: int) -> Fraction:
    """B_n as an exact rational, with B_1 = +1/2."""
    if n < 0:
        raise ParameterError(f"Bernoulli index {n} is negative")
    if n > BERNOULLI_INDEX_LIMIT:
        raise SizeBoundError(f"Bernoulli index {n} exceeds {BERNOULLI_INDEX_LIMIT}")
    if n == 1:
        return Fraction(1, 2)
    if n % 2:
        return Fraction(0)
    return _even_bernoulli(n)


def _bernoulli_standard(n: int) -> Fraction:
    return Fraction(-1, 2) if n == 1 else bernoulli_exact(n)


def bernoulli_mod(n: int, p: int, precision: int = 1) -> PadicApprox:
    """B_n reduced mod p^precision."""
    _check_odd_prime(p)
    if n >= 2 and n % 2 == 0 and n % (p - 1) == 0:
        raise VonStaudtPoleError(f"(p-1) = {p - 1} divides {n}; B_{n} is not {p}-integral")
    return PadicApprox.from_fraction(p, precision, bernoulli_exact(n))


def teichmuller(a: int, p: int, precision: int) -> PadicApprox:
    """omega(a) mod p^precision, as a^(p^(precision-1))."""
    if a % p == 0:
        raise ParameterError(f"omega is undefined at {a}, a multiple of {p}")
    if precision < 1:
        raise PrecisionError(f"precision {precision} below 1", achievable=None)
    mod = p ** precision
    return PadicApprox(p, precision, pow(a, p ** (precision - 1), mod))


@functools.lru_cache(maxsize=256)
def _teichmuller_table(p: int, precision: int) -> Tuple[int, ...]:
    return tuple(teichmuller(a, p, precision).residue for a in range(1, p))


def gen_bernoulli_omega(n: int, j: int, p: int, precision: int) -> PadicApprox:
    """B_{n, omega^j} mod p^precision.

    p * B_{n,chi} = sum_{a=1}^{p-1} chi(a) sum_i C(n,i) B_i a^(n-i) p^i, and every
    C(n,i) B_i p^i is p-integral, so the right-hand side is evaluated mod p^M at
    a guard precision M and divided by p once.
    """
    _check_odd_prime(p)
    if n < 1:
        raise ParameterError(f"generalized Bernoulli index {n} must be >= 1")
    if not 1 <= precision <= GEN_BERNOULLI_PRECISION_LIMIT:
        raise PrecisionError(
            f"precision {precision} outside 1..{GEN_BERNOULLI_PRECISION_LIMIT}",
            achievable=min(max(precision, 1), GEN_BERNOULLI_PRECISION_LIMIT),
        )
    j %= p - 1
    guard = precision + GUARD_DIGITS + 1
    mod = p ** guard

    inner = []  # sum_i C(n,i) B_i p^i as a polynomial in a: coefficient of a^(n-i)
    for i in range(n + 1):
        b = _bernoulli_standard(i)
        if b:
            term = math.comb(n, i) * b * p ** i
            inner.append((n - i, term.numerator * pow(term.denominator, -1, mod) % mod))

    total = 0
    for a, omega_a in enumerate(_teichmuller_table(p, guard), start=1):
        chi = pow(omega_a, j, mod)
        poly = sum(c * pow(a, deg, mod) for deg, c in inner) % mod
        total = (total + chi * poly) % mod

    if total % p:
        raise NotIntegralError(
            f"B_{n},omega^{j} is not {p}-integral", achievable=None
        )
    value = PadicApprox(p, guard - 1, total // p)
    log.debug("B_{%d,omega^%d} mod %d^%d = %d", n, j, p, precision, value.reduce_to(precision).residue)
    return value.reduce_to(precision)


def lang_congruence_check(p: int, k: int, n: int) -> bool:
    """(1/n) B_{n, omega^(k-n)} == (1/k) B_k mod p."""
    _check_odd_prime(p)
    if n < 1:
        raise ParameterError(f"n = {n} must be >= 1")
    if k % 2 or not 2 <= k < p - 1:
        raise ParameterError(f"k = {k} must be even with 2 <= k < p-1 = {p - 1}")

    v = int(p_adic_valuation(n, p))
    lhs = gen_bernoulli_omega(n, k - n, p, 1 + v)
    try:
        for _ in range(v):
            lhs = lhs.div_p()
    except NotIntegralError:
        return False
    lhs = lhs.div_unit(n // p ** v)
    rhs = bernoulli_mod(k, p, 1).div_unit(k)
    return lhs.congruent(rhs)


def irregular_pairs(p: int) -> list[int]:
    """Every even 2 <= k <= p-3 with p | B_k."""
    _check_odd_prime(p)
    return [k for k in range(2, p - 2, 2) if bernoulli_exact(k).numerator % p == 0]


@dataclass(frozen=True)
class HypothesisReport:
    p: int
    k: int
    level: str
    # Gamma_1(p)
    divides_Bk: Optional[bool] = None
    exactly_divides_Bk: Optional[bool] = None
    divides_B2_omega: Optional[bool] = None
    exactly_divides_B2_omega: Optional[bool] = None
    predicts_dvr: Optional[bool] = None
    predicts_monogenic: Optional[bool] = None
    # Gamma_0(p^2)
    k_prime: Optional[int] = None
    k_admissible: Optional[bool] = None
    coprime_B2k: Optional[bool] = None
    coprime_Bp1m2k: Optional[bool] = None
    tested_index_B2k: Optional[int] = None
    tested_index_Bp1m2k: Optional[int] = None
    gross_lubin_case: Optional[bool] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        out = {"p": self.p, "k": self.k, "level": self.level}
        names = (
            ("divides_Bk", "exactly_divides_Bk", "divides_B2_omega", "exactly_divides_B2_omega",
             "predicts_dvr", "predicts_monogenic")
            if self.level == LEVEL_GAMMA1
            else ("k_prime", "k_admissible", "coprime_B2k", "coprime_Bp1m2k", "tested_index_B2k",
                  "tested_index_Bp1m2k", "gross_lubin_case")
        )
        for name in names:
            out[name] = getattr(self, name)
        out["notes"] = list(self.notes)
        return out


def _coprime_to_bernoulli(p: int, m: int, notes: list[str]) -> bool:
    if m % (p - 1) == 0:
        notes.append(f"B_{m} is not {p}-integral ((p-1) | {m}); reported as not divisible")
        return True
    return bernoulli_exact(m).numerator % p != 0


def _exceptional_ks(p: int) -> set[int]:
    return {0, 1, (p - 1) // 2, (p + 1) // 2}


def hypothesis_report(p: int, k: int, which: str = LEVEL_GAMMA1) -> HypothesisReport:
    _check_odd_prime(p)
    notes: list[str] = []

    if which == LEVEL_GAMMA1:
        if k % 2 or not 2 < k < p - 1:
            raise ParameterError(f"Gamma_1 report needs even 2 < k < p-1, got k = {k}")
        vk = p_adic_valuation(bernoulli_exact(k), p)
        omega = gen_bernoulli_omega(2, k - 2, p, 2)
        divides_omega = omega.is_zero_mod_p()
        exactly_omega = divides_omega and omega.residue % (p * p) != 0
        exactly_k = vk == 1
        return HypothesisReport(
            p=p,
            k=k,
            level=which,
            divides_Bk=vk >= 1,
            exactly_divides_Bk=exactly_k,
            divides_B2_omega=divides_omega,
            exactly_divides_B2_omega=exactly_omega,
            predicts_dvr=exactly_omega,
            predicts_monogenic=exactly_omega or exactly_k,
            notes=tuple(notes),
        )

    if which == LEVEL_GAMMA0_P2:
        if not 0 < k < p - 1:
            raise ParameterError(f"Gamma_0(p^2) report needs 0 < k < p-1, got k = {k}")
        residue = ((p + 1) // 2 - k) % (p - 1)
        k_prime = residue or None
        m1 = 2 * k
        m2 = p + 1 - 2 * k
        if m2 <= 0:
            m2 += p - 1
            notes.append(f"B_{p + 1 - 2 * k} tested at the Kummer-equivalent index {m2}")
        gross_lubin = p % 4 == 3 and 4 * k == 3 * p - 1 and k_prime == k
        return HypothesisReport(
            p=p,
            k=k,
            level=which,
            k_prime=k_prime,
            k_admissible=k not in _exceptional_ks(p),
            coprime_B2k=_coprime_to_bernoulli(p, m1, notes),
            coprime_Bp1m2k=_coprime_to_bernoulli(p, m2, notes),
            tested_index_B2k=m1,
            tested_index_Bp1m2k=m2,
            gross_lubin_case=gross_lubin,
            notes=tuple(notes),
        )

    raise ParameterError(f"unknown level {which!r}; expected {LEVEL_GAMMA1!r} or {LEVEL_GAMMA0_P2!r}")
