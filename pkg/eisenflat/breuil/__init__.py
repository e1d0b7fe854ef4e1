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


"""Breuil modules killed by p: rank one, extensions of order p^2, descent to Q_p."""

from .descent import (
    CharacterModules,
    DescentInfo,
    SelfExtDimensions,
    descends_to_qp,
    modules_for_character,
    self_ext_dimensions,
    theoremZ_check,
)
from .extensions import (
    ExtensionCheck,
    ExtensionWitness,
    NamedWitness,
    OracleResult,
    canonical_examples,
    classify_eta,
    group_scheme_sequence,
    is_killed_by_p,
    p2_extension_exists,
    p_torsion_is_finite_flat,
    solve_extensions_oracle,
    validate_extension,
)
from .modules import HomSpace, HomWitness, OortTateParams, RankOneModule, hom_space, oort_tate_of

__all__ = [
    "CharacterModules",
    "DescentInfo",
    "ExtensionCheck",
    "ExtensionWitness",
    "HomSpace",
    "HomWitness",
    "NamedWitness",
    "OortTateParams",
    "OracleResult",
    "RankOneModule",
    "SelfExtDimensions",
    "canonical_examples",
    "classify_eta",
    "descends_to_qp",
    "group_scheme_sequence",
    "hom_space",
    "is_killed_by_p",
    "modules_for_character",
    "oort_tate_of",
    "p2_extension_exists",
    "p_torsion_is_finite_flat",
    "self_ext_dimensions",
    "solve_extensions_oracle",
    "theoremZ_check",
    "validate_extension",
]
