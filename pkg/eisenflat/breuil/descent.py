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


"""Generic fibre descent data to Q_p over the tame base with e = p + 1."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from ..algebra.fields import fq_make
from ..errors import InternalError, ParameterError
from .extensions import p2_extension_exists
from .modules import RankOneModule

SELF_EXT_NOTE = (
    "with_descent is quoted, not computed: extensions of A(r,a) by itself that are "
    "killed by p and carry descent data form a one-dimensional F_p-space. For k outside "
    "{0, 1, (p-1)/2, (p+1)/2}, every such self-extension of the group scheme with generic "
    "fibre F_p(omega^k) becomes split over a finite unramified extension of the base."
)


@dataclass(frozen=True)
class DescentInfo:
    r: int
    a: int
    character_exponents: Tuple[int, ...]


@dataclass(frozen=True)
class CharacterModules:
    k: int
    modules: Tuple[Tuple[int, int], ...]
    unique: bool


@dataclass(frozen=True)
class SelfExtDimensions:
    plain: int
    with_descent: Optional[int]
    with_descent_quoted: bool
    note: str


def exceptional_exponents(p: int) -> frozenset[int]:
    return frozenset({0, 1, (p - 1) // 2, (p + 1) // 2})


def descends_to_qp(m: RankOneModule) -> Optional[DescentInfo]:
    """DescentInfo iff r is even and a lies in F_p^x; k is only pinned down mod (p-1)/2."""
    p = m.p
    if m.e != p + 1:
        raise ParameterError(f"descent to Q_p needs e = p + 1 = {p + 1}, got e = {m.e}")
    if m.r % 2 or not m.a.in_prime_field():
        return None
    ks = tuple(k for k in range(p - 1) if (2 * k - (2 - m.r)) % (p - 1) == 0)
    return DescentInfo(r=m.r, a=int(m.a), character_exponents=ks)


def modules_for_character(p: int, k: int) -> CharacterModules:
    """Order-p group schemes over the e = p + 1 base with generic fibre F_p(omega^k)."""
    fq_make(p, 1)  # rejects p that is not an odd prime
    if not 0 <= k < p - 1:
        raise ParameterError(f"k = {k} outside 0..p-2")
    modules = tuple(
        (r, 1) for r in range(0, p + 2, 2) if (r - (2 - 2 * k)) % (p - 1) == 0
    )
    unique = len(modules) == 1
    if unique != (k not in exceptional_exponents(p)):
        raise InternalError(f"uniqueness at p={p}, k={k} contradicts the exceptional set")
    return CharacterModules(k=k, modules=modules, unique=unique)


def self_ext_dimensions(m: RankOneModule, descent: bool = False) -> SelfExtDimensions:
    """Dimensions of Ext^1(A(r,a), A(r,a)) killed by p.

    plain counts the h-parameters u^{max(0, 2r-e)} .. u^r. with_descent is the
    quoted value 1 whenever the module carries descent data.
    """
    plain = (m.r + 1) - max(0, 2 * m.r - m.e)
    available = m.e == m.p + 1 and descends_to_qp(m) is not None
    if descent and not available:
        raise ParameterError(f"{m} does not carry descent data to Q_p")
    return SelfExtDimensions(
        plain=plain,
        with_descent=1 if available else None,
        with_descent_quoted=available,
        note=SELF_EXT_NOTE,
    )


def theoremZ_check(p: int, k: int) -> bool:
    """Confirm that the group scheme attached to omega^k admits no extension by itself
    that fails to be killed by p."""
    if k in exceptional_exponents(p):
        raise ParameterError(f"k = {k} lies in the exceptional set for p = {p}")
    ((r, a),) = modules_for_character(p, k).modules
    field = fq_make(p, 1)
    unit = field.element(a)
    return not p2_extension_exists(p + 1, (r, unit), (r, unit))
