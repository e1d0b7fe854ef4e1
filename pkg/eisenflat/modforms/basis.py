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


"""E4, E6, Delta and the Victor Miller echelon basis of level-one forms mod p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from sympy import isprime

from ..algebra import linalg
from ..errors import EchelonError, NotPrimeError, ParameterError, PrecisionError
from ..logs import get_logger
from .qseries import QSeries, divisor_power_sums

log = get_logger(__name__)


def _check_prime(p: int) -> None:
    if p < 2 or not isprime(p):
        raise NotPrimeError(f"{p} is not prime")


def dimension_modular_forms(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


def dimension_cusp_forms(k: int) -> int:
    if k < 4:
        return 0
    return max(0, dimension_modular_forms(k) - 1)


def euler_product(p: int, precision: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) by the pentagonal number theorem (weight 0)."""
    coeffs = np.zeros(precision, dtype=np.int64)
    m = 0
    while True:
        sign = -1 if m % 2 else 1
        lo, hi = m * (3 * m - 1) // 2, m * (3 * m + 1) // 2
        if lo >= precision:
            break
        coeffs[lo] += sign
        if m and hi < precision:
            coeffs[hi] += sign
        m += 1
    return QSeries(p, 0, coeffs)


def basis_forms(p: int, precision: int) -> Tuple[QSeries, QSeries, QSeries]:
    """(E4, E6, Delta) reduced mod p to the given precision."""
    _check_prime(p)
    if precision < 2:
        raise PrecisionError(f"precision {precision} below 2", achievable=None)
    e4 = 240 * divisor_power_sums(3, precision, p)
    e4[0] = 1
    e6 = -504 * divisor_power_sums(5, precision, p)
    e6[0] = 1
    delta = (euler_product(p, precision) ** 24).shift(1)
    return QSeries(p, 4, e4), QSeries(p, 6, e6), QSeries(p, 12, delta.coeffs)


@dataclass(frozen=True)
class VictorMillerBasis:
    p: int
    k: int
    forms: Tuple[QSeries, ...]

    @property
    def precision(self) -> int:
        return self.forms[0].precision if self.forms else 0

    @property
    def cuspidal(self) -> Tuple[QSeries, ...]:
        return self.forms[1:]


def _monomial_exponents(k: int, gamma: int) -> Tuple[int, int]:
    """(alpha, beta) with 4 alpha + 6 beta = k - 12 gamma and beta in {0, 1}."""
    w = k - 12 * gamma
    if w % 4 == 0:
        return w // 4, 0
    return (w - 6) // 4, 1


def victor_miller_basis(p: int, k: int, precision: int) -> VictorMillerBasis:
    """Echelon basis f_0..f_{d-1} of M_k mod p with a_i(f_j) = delta_ij for i < d.

    Rows are the monomials Delta^gamma E4^alpha E6^beta (gamma = 0..d-1), which
    start at q^gamma with leading coefficient 1; row reduction must find the
    pivots 0..d-1 or the basis is reported broken.
    """
    _check_prime(p)
    if p < 5:
        raise ParameterError(f"p = {p} must be at least 5")
    if k < 4 or k % 2:
        raise ParameterError(f"weight {k} must be even and at least 4")
    d = dimension_modular_forms(k)
    if precision < d + 1:
        raise PrecisionError(f"precision {precision} below dim M_{k} + 1 = {d + 1}", achievable=None)

    e4, e6, delta = basis_forms(p, precision)
    e4_powers = [QSeries.one(p, precision)]
    delta_powers = [QSeries.one(p, precision)]
    rows = []
    for gamma in range(d):
        alpha, beta = _monomial_exponents(k, gamma)
        while len(e4_powers) <= alpha:
            e4_powers.append(e4_powers[-1] * e4)
        while len(delta_powers) <= gamma:
            delta_powers.append(delta_powers[-1] * delta)
        mono = delta_powers[gamma] * e4_powers[alpha]
        if beta:
            mono = mono * e6
        if mono.weight != k:
            raise EchelonError(f"monomial of weight {mono.weight} in the weight {k} basis")
        rows.append(mono.coeffs)

    rref, pivots = linalg.row_reduce(np.vstack(rows), p)
    if pivots != tuple(range(d)):
        raise EchelonError(f"monomials for M_{k} mod {p} are not in echelon position: pivots {pivots}")
    log.debug("Victor Miller basis p=%d k=%d: dim %d at precision %d", p, k, d, precision)
    return VictorMillerBasis(p, k, tuple(QSeries(p, k, row) for row in rref))
