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


"""Hecke operators T_ell on level-one cusp forms mod p."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from threading import Lock
from typing import Optional, Tuple

import numpy as np
from sympy import isprime, primerange

from ..errors import ParameterError
from ..logs import get_logger
from ..timer_manager import timers
from .basis import VictorMillerBasis, dimension_cusp_forms, victor_miller_basis

log = get_logger(__name__)

BASIS_TAG = "victor-miller"


@dataclass(frozen=True, eq=False)
class HeckeMatrix:
    """Row j holds a_1..a_d of T_ell f_j on the cuspidal echelon basis."""

    ell: int
    p: int
    k: int
    matrix: np.ndarray
    basis_tag: str = BASIS_TAG

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    def operator(self) -> np.ndarray:
        """Column convention: column j is the image of f_j."""
        return self.matrix.T.copy()


class CuspidalSpace:
    """S_k mod p with its echelon basis, grown to whatever precision T_ell needs."""

    def __init__(self, p: int, k: int) -> None:
        self.p = p
        self.k = k
        self.dimension = dimension_cusp_forms(k)
        self._basis: Optional[VictorMillerBasis] = None
        self._lock = Lock()

    def basis(self, precision: int) -> VictorMillerBasis:
        with self._lock:
            if self._basis is None or self._basis.precision < precision:
                with timers.timeblock("modforms.basis"):
                    self._basis = victor_miller_basis(self.p, self.k, precision)
                log.debug("S_%d mod %d: basis rebuilt at precision %d", self.k, self.p, precision)
            return self._basis

    def forms(self, precision: int) -> Tuple:
        return self.basis(precision).cuspidal

    def hecke_matrix(self, ell: int) -> HeckeMatrix:
        if not isprime(ell):
            raise ParameterError(f"T_{ell}: {ell} is not prime")
        if ell == self.p:
            raise ParameterError(f"T_p is excluded (ell = p = {self.p})")
        d = self.dimension
        if d == 0:
            return HeckeMatrix(ell, self.p, self.k, np.zeros((0, 0), dtype=np.int64))
        rows = []
        for f in self.forms(ell * d + 1):
            image = f.hecke(ell)
            rows.append(image.coeffs[1:d + 1])
        return HeckeMatrix(ell, self.p, self.k, np.vstack(rows))


@functools.lru_cache(maxsize=64)
def cuspidal_space(p: int, k: int) -> CuspidalSpace:
    return CuspidalSpace(p, k)


def hecke_matrix(p: int, k: int, ell: int) -> HeckeMatrix:
    return cuspidal_space(p, k).hecke_matrix(ell)


def sturm_primes(k: int, p: int) -> Tuple[int, ...]:
    """Primes ell <= ceil(k/12) + 1 other than p."""
    bound = -(-k // 12) + 1
    return tuple(ell for ell in primerange(2, bound + 1) if ell != p)
