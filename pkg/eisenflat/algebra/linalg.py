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


"""Dense linear algebra over F_p on numpy int64 arrays.

Pivoting is deterministic: the first row (from the top) with a nonzero entry in
the current column. Entries stay in [0, p), so products fit in int64 for every
prime this package handles.
"""

from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from ..errors import InternalError


def as_matrix(rows, p: int) -> np.ndarray:
    return np.array(rows, dtype=np.int64) % p


def row_reduce(matrix, p: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Reduced row echelon form mod p and the tuple of pivot columns."""
    m = as_matrix(matrix, p)
    if m.ndim != 2:
        raise ValueError("row_reduce expects a 2-d array")
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if others.size:
            m[others] = (m[others] - np.outer(col[others], m[r])) % p
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def rank(matrix, p: int) -> int:
    return len(row_reduce(matrix, p)[1])


def nullspace(matrix, p: int) -> np.ndarray:
    """Basis of {v : M v = 0} as the columns of a (cols x nullity) array."""
    rref, pivots = row_reduce(matrix, p)
    cols = rref.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, fc in enumerate(free):
        basis[fc, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-rref[i, fc]) % p
    return basis


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matrix_power(m: np.ndarray, exponent: int, p: int) -> np.ndarray:
    result = identity(m.shape[0])
    base = m % p
    while exponent:
        if exponent & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        exponent >>= 1
    return result


def solve_restricted(basis: np.ndarray, image: np.ndarray, p: int) -> np.ndarray:
    """X with basis @ X == image, for basis of full column rank.

    Used to restrict an operator A to an invariant subspace W: with basis the
    columns spanning W and image = A @ basis, X is the matrix of A|_W.
    """
    w = basis.shape[1]
    rref, pivots = row_reduce(np.hstack([basis, image]), p)
    if pivots[:w] != tuple(range(w)):
        raise InternalError("subspace basis is not of full column rank")
    if any(c >= w for c in pivots):
        raise InternalError("image does not lie in the subspace; it is not invariant")
    return rref[:w, w:].copy()


class SpanTracker:
    """Incrementally maintained row-echelon basis of a subspace of F_p^n."""

    def __init__(self, p: int, n: int) -> None:
        self.p = p
        self.n = n
        self._rows: list[np.ndarray] = []
        self._pivots: list[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[int]) -> np.ndarray:
        v = np.array(vector, dtype=np.int64).reshape(-1) % self.p
        for row, c in zip(self._rows, self._pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, vector: Sequence[int]) -> bool:
        return not self.reduce(vector).any()

    def add(self, vector: Sequence[int]) -> bool:
        """Insert a vector; return True when it enlarged the span."""
        v = self.reduce(vector)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * pow(int(v[c]), -1, self.p)) % self.p
        self._rows.append(v)
        self._pivots.append(c)
        return True

    def elements(self) -> list[np.ndarray]:
        """Every vector of the span (p^dim of them)."""
        out = [np.zeros(self.n, dtype=np.int64)]
        for row in self._rows:
            out = [(v + t * row) % self.p for v in out for t in range(self.p)]
        return out
