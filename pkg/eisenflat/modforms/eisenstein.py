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


"""The cuspidal Hecke algebra mod p localized at the Eisenstein maximal ideal.

The ideal is generated by T_ell - (1 + ell^{k-1}) for the listed ell != p. The
localized module is the common generalized kernel W of those operators; the
local algebra is the subalgebra of End(W) the restricted T_ell generate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from ..algebra import linalg
from ..algebra.padic import PadicApprox, p_adic_valuation
from ..bernoulli import bernoulli_exact
from ..constants import DEFAULT_GENERATOR_PRIMES, NON_MONOGENIC
from ..errors import NonCommutativeError, NotPrimeError, ParameterError, VonStaudtPoleError
from ..logs import get_logger
from ..timer_manager import timers
from .hecke import cuspidal_space
from .qseries import QSeries, divisor_power_sums

log = get_logger(__name__)


@dataclass(frozen=True)
class EisensteinLocalReport:
    p: int
    k: int
    generator_primes: Tuple[int, ...]
    cusp_dimension: int
    localized_dimension: int
    is_local: bool
    is_monogenic: bool
    nilpotency_index: int
    generator_label: Optional[str]
    structure_descriptor: str

    @property
    def declined(self) -> bool:
        return self.structure_descriptor == NON_MONOGENIC

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "generator_primes": list(self.generator_primes),
            "cusp_dimension": self.cusp_dimension,
            "localized_dimension": self.localized_dimension,
            "is_local": self.is_local,
            "is_monogenic": self.is_monogenic,
            "nilpotency_index": self.nilpotency_index,
            "generator_label": self.generator_label,
            "structure": self.structure_descriptor,
        }


def _check_weight(p: int, k: int) -> None:
    if p < 5 or not isprime(p):
        raise NotPrimeError(f"p = {p} must be a prime >= 5")
    if k < 4 or k % 2:
        raise ParameterError(f"weight {k} must be even and at least 4")


def _normalized_constant(p: int, k: int) -> Fraction:
    if k % (p - 1) == 0:
        raise VonStaudtPoleError(f"(p-1) = {p - 1} divides k = {k}; B_k/2k is not {p}-integral")
    return -bernoulli_exact(k) / (2 * k)


def eisenstein_series(p: int, k: int, precision: int) -> QSeries:
    """E_k normalized as -B_k/2k + sum sigma_{k-1}(n) q^n, reduced mod p."""
    _check_weight(p, k)
    constant = PadicApprox.from_fraction(p, 1, _normalized_constant(p, k)).residue
    coeffs = divisor_power_sums(k - 1, precision, p)
    coeffs[0] = constant
    return QSeries(p, k, coeffs)


def eisenstein_congruence_exists(p: int, k: int) -> bool:
    """Does E_k reduce to a cusp form mod p, i.e. p | B_k/2k?"""
    _check_weight(p, k)
    if not k < p - 1:
        log.warning("k = %d is outside 4 <= k < p-1 = %d; testing p | B_k/2k anyway", k, p - 1)
    return p_adic_valuation(_normalized_constant(p, k), p) >= 1


def _nilpotency_index(t: np.ndarray, p: int) -> Optional[int]:
    """Least n >= 1 with t^n = 0, or None if t is not nilpotent."""
    power = linalg.identity(t.shape[0])
    for n in range(1, t.shape[0] + 1):
        power = linalg.matmul(power, t, p)
        if not power.any():
            return n
    return None


def _generated_dimension(p: int, generators: Sequence[np.ndarray]) -> int:
    """Dimension of the unital algebra generated by commuting matrices."""
    for x, y in itertools.combinations(generators, 2):
        if not np.array_equal(linalg.matmul(x, y, p), linalg.matmul(y, x, p)):
            raise NonCommutativeError("restricted Hecke operators do not commute")
    w = generators[0].shape[0] if generators else 0
    span = linalg.SpanTracker(p, w * w)
    frontier = [linalg.identity(w)]
    span.add(frontier[0].ravel())
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = linalg.matmul(g, x, p)
                if span.add(y.ravel()):
                    nxt.append(y)
        frontier = nxt
    return len(span)


def _zero_report(p: int, k: int, primes: Tuple[int, ...], d: int) -> EisensteinLocalReport:
    return EisensteinLocalReport(
        p=p,
        k=k,
        generator_primes=primes,
        cusp_dimension=d,
        localized_dimension=0,
        is_local=False,
        is_monogenic=True,
        nilpotency_index=0,
        generator_label=None,
        structure_descriptor="F_p[x]/x^0",
    )


def _candidates(p: int, shifted: dict[int, np.ndarray]) -> Iterable[Tuple[str, np.ndarray]]:
    for ell, t in shifted.items():
        yield f"t_{ell}", t
    for l1, l2 in itertools.combinations(shifted, 2):
        for c in range(1, p):
            yield f"t_{l1} + {c}*t_{l2}", (shifted[l1] + c * shifted[l2]) % p


def eisenstein_local_structure(
    p: int, k: int, generator_primes: Sequence[int] = DEFAULT_GENERATOR_PRIMES
) -> EisensteinLocalReport:
    """Structure of T_m / p for the Eisenstein maximal ideal m at (p, k).

    t_ell denotes T_ell - (1 + ell^{k-1}) restricted to W.
    """
    _check_weight(p, k)
    primes = tuple(sorted(set(generator_primes)))
    if not primes:
        raise ParameterError("at least one generator prime is required")
    for ell in primes:
        if not isprime(ell):
            raise ParameterError(f"generator {ell} is not prime")
        if ell == p:
            raise ParameterError(f"T_p is excluded; drop {p} from the generator primes")

    space = cuspidal_space(p, k)
    d = space.dimension
    if d == 0:
        return _zero_report(p, k, primes, d)

    with timers.timeblock("modforms.localize"):
        operators = {ell: space.hecke_matrix(ell).operator() for ell in primes}
        eigen = {ell: (1 + pow(ell, k - 1, p)) % p for ell in primes}
        stacked = np.vstack([
            linalg.matrix_power((operators[ell] - eigen[ell] * linalg.identity(d)) % p, d, p)
            for ell in primes
        ])
        basis = linalg.nullspace(stacked, p)
        w = basis.shape[1]
        log.info("(p, k) = (%d, %d): dim S_k = %d, localized module has dimension %d", p, k, d, w)
        if w == 0:
            return _zero_report(p, k, primes, d)

        restricted = {
            ell: linalg.solve_restricted(basis, linalg.matmul(operators[ell], basis, p), p) for ell in primes
        }
        shifted = {ell: (restricted[ell] - eigen[ell] * linalg.identity(w)) % p for ell in primes}
        dim_algebra = _generated_dimension(p, list(restricted.values()))
        indices = {ell: _nilpotency_index(t, p) for ell, t in shifted.items()}
        is_local = all(n is not None for n in indices.values())

        best_label, best_index = None, 0
        monogenic = False
        if is_local:
            for label, t in _candidates(p, shifted):
                n = _nilpotency_index(t, p)
                if n is not None and n > best_index:
                    best_label, best_index = label, n
                if n == dim_algebra:
                    monogenic = True
                    break

    structure = f"F_p[x]/x^{best_index}" if monogenic else NON_MONOGENIC
    return EisensteinLocalReport(
        p=p,
        k=k,
        generator_primes=primes,
        cusp_dimension=d,
        localized_dimension=dim_algebra,
        is_local=is_local,
        is_monogenic=monogenic,
        nilpotency_index=best_index,
        generator_label=best_label,
        structure_descriptor=structure,
    )
