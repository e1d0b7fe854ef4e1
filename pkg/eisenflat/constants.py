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


TOOL = "eisenflat"
LOG_PREFIX = "[Eisenflat]"
LOG_LEVEL_ENV = "EISENFLAT_LOG_LEVEL"

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DECLINED = 2

# Desk-scale bounds
BERNOULLI_INDEX_LIMIT = 5000
SCAN_PMAX_LIMIT = 1000
ORACLE_UNKNOWN_LIMIT = 10_000
FIELD_DEGREE_LIMIT = 8
GEN_BERNOULLI_PRECISION_LIMIT = 4
GUARD_DIGITS = 2

# Hecke defaults
DEFAULT_GENERATOR_PRIMES = (2, 3, 5, 7, 11, 13)

# Level sides for hypothesis reports
LEVEL_GAMMA1 = "gamma1"
LEVEL_GAMMA0_P2 = "gamma0p2"

# Oort-Tate kinds
KIND_ETALE = "etale"
KIND_MULTIPLICATIVE = "multiplicative"
KIND_LOCAL_LOCAL = "local-local"

# JSON fields written as decimal strings whatever their size
WIDE_INT_FIELDS = frozenset({"residue", "modulus", "mod"})

# Structure descriptors
NON_MONOGENIC = "non-monogenic within search class"

# CSV headers, one per mode
CSV_SCAN_HEADER = (
    "p",
    "k",
    "divides_Bk",
    "exactly_divides_Bk",
    "divides_B2_omega",
    "exactly_divides_B2_omega",
    "irregular",
    "localized_dimension",
    "structure",
)
CSV_BREUIL_TABLE_HEADER = (
    "r",
    "s",
    "a",
    "b",
    "hom_dimension",
    "hom_degree",
    "eta",
    "extension_not_killed_by_p",
)
CSV_BREUIL_DESCENT_HEADER = ("k", "modules", "unique")
