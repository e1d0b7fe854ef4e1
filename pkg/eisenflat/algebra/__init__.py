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


"""Exact arithmetic substrate: F_q, F_q[u]/u^{ep}, p-adic residues, F_p linear algebra."""

from .fields import FqElem, FqField, fq_make, is_irreducible, is_pm1_power
from .padic import PadicApprox, p_adic_valuation, padic_div_p, padic_div_unit
from .upoly import UPoly, frobenius_twist, polys_from

__all__ = [
    "FqElem",
    "FqField",
    "PadicApprox",
    "UPoly",
    "fq_make",
    "frobenius_twist",
    "is_irreducible",
    "is_pm1_power",
    "p_adic_valuation",
    "padic_div_p",
    "padic_div_unit",
    "polys_from",
]
