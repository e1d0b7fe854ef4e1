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


"""Level-one modular forms mod p and the Eisenstein-localized Hecke algebra."""

from .basis import (
    VictorMillerBasis,
    basis_forms,
    dimension_cusp_forms,
    dimension_modular_forms,
    victor_miller_basis,
)
from .eisenstein import (
    EisensteinLocalReport,
    eisenstein_congruence_exists,
    eisenstein_local_structure,
    eisenstein_series,
)
from .hecke import CuspidalSpace, HeckeMatrix, cuspidal_space, hecke_matrix, sturm_primes
from .qseries import QSeries

__all__ = [
    "CuspidalSpace",
    "EisensteinLocalReport",
    "HeckeMatrix",
    "QSeries",
    "VictorMillerBasis",
    "basis_forms",
    "cuspidal_space",
    "dimension_cusp_forms",
    "dimension_modular_forms",
    "eisenstein_congruence_exists",
    "eisenstein_local_structure",
    "eisenstein_series",
    "hecke_matrix",
    "sturm_primes",
    "victor_miller_basis",
]
