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


"""Truncated q-expansions with coefficients in F_p."""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from ..errors import ParameterError


class QSeries:
    """a_0 + a_1 q + ... + a_{P-1} q^{P-1} mod p, carrying a weight.

    Products add weights and truncate to the shorter precision; sums need equal
    weights.
    """

    __slots__ = ("p", "weight", "coeffs")

    def __init__(self, p: int, weight: int, coeffs: Union[np.ndarray, Iterable[int]]) -> None:
        arr = np.array(coeffs, dtype=np.int64) % p
        if arr.ndim != 1 or arr.size < 1:
            raise ParameterError("a q-series needs at least one coefficient")
        self.p = p
        self.weight = weight
        self.coeffs = arr

    @classmethod
    def one(cls, p: int, precision: int) -> "QSeries":
        coeffs = np.zeros(precision, dtype=np.int64)
        coeffs[0] = 1
        return cls(p, 0, coeffs)

    @property
    def precision(self) -> int:
        return int(self.coeffs.size)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n < self.precision:
            raise ParameterError(f"coefficient a_{n} is beyond the precision {self.precision}")
        return int(self.coeffs[n])

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self.coeffs[:6])
        return f"QSeries(p={self.p}, weight={self.weight}, prec={self.precision}, [{head}, ...])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.p == other.p
            and self.weight == other.weight
            and self.precision == other.precision
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def _check(self, other: "QSeries", same_weight: bool) -> int:
        if other.p != self.p:
            raise ParameterError(f"q-series mod {self.p} and mod {other.p} do not mix")
        if same_weight and other.weight != self.weight:
            raise ParameterError(f"cannot add weights {self.weight} and {other.weight}")
        return min(self.precision, other.precision)

    def __add__(self, other: "QSeries") -> "QSeries":
        n = self._check(other, True)
        return QSeries(self.p, self.weight, self.coeffs[:n] + other.coeffs[:n])

    def __sub__(self, other: "QSeries") -> "QSeries":
        n = self._check(other, True)
        return QSeries(self.p, self.weight, self.coeffs[:n] - other.coeffs[:n])

    def __neg__(self) -> "QSeries":
        return QSeries(self.p, self.weight, -self.coeffs)

    def scale(self, c: int) -> "QSeries":
        return QSeries(self.p, self.weight, self.coeffs * (c % self.p))

    def __mul__(self, other: Union["QSeries", int]) -> "QSeries":
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        n = self._check(other, False)
        prod = np.convolve(self.coeffs[:n], other.coeffs[:n])[:n]
        return QSeries(self.p, self.weight + other.weight, prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QSeries":
        if exponent < 0:
            raise ParameterError("negative powers of q-series are not supported")
        result = QSeries.one(self.p, self.precision)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def truncate(self, precision: int) -> "QSeries":
        if precision > self.precision:
            raise ParameterError(f"cannot extend precision {self.precision} to {precision}")
        return QSeries(self.p, self.weight, self.coeffs[:precision])

    def shift(self, m: int) -> "QSeries":
        """Multiply by q^m, keeping the precision."""
        out = np.zeros(self.precision, dtype=np.int64)
        if m < self.precision:
            out[m:] = self.coeffs[: self.precision - m]
        return QSeries(self.p, self.weight, out)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def valuation(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[0]) if nz.size else self.precision

    def hecke(self, ell: int) -> "QSeries":
        """T_ell on a weight-k expansion: (T f)_n = a_{n ell} + ell^{k-1} a_{n/ell}."""
        n_out = (self.precision + ell - 1) // ell
        out = self.coeffs[::ell][:n_out].copy()
        twist = pow(ell, self.weight - 1, self.p) if self.weight >= 1 else 0
        idx = np.arange(0, n_out, ell)
        out[idx] += twist * self.coeffs[idx // ell]
        return QSeries(self.p, self.weight, out)

    def tolist(self) -> list[int]:
        return [int(c) for c in self.coeffs]


def divisor_power_sums(exponent: int, precision: int, p: int) -> np.ndarray:
    """sigma_exponent(n) mod p for 0 <= n < precision (sigma(0) = 0)."""
    out = np.zeros(precision, dtype=np.int64)
    for d in range(1, precision):
        out[d::d] += pow(d, exponent, p)
        out[d::d] %= p
    return out
