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


"""`eisenflat scan`: hypothesis flags and irregular pairs for every prime up to pmax."""

from __future__ import annotations

import argparse

from sympy import primerange

from ...bernoulli import hypothesis_report, irregular_pairs
from ...constants import CSV_SCAN_HEADER, DEFAULT_GENERATOR_PRIMES, EXIT_OK, LEVEL_GAMMA1, SCAN_PMAX_LIMIT
from ...errors import ParameterError
from ...logs import get_logger
from ...modforms import eisenstein_local_structure
from ...timer_manager import timers
from ..output import emit, to_csv, to_json

log = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    ap = subparsers.add_parser("scan", help="Bernoulli hypothesis flags and irregular pairs up to pmax")
    ap.add_argument("--pmax", type=int, required=True, help="largest prime scanned")
    ap.add_argument("--with-hecke", action="store_true", help="attach the Eisenstein local structure of irregular pairs")
    ap.add_argument("--out", type=str, default=None, help="write to FILE instead of stdout")
    ap.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    ap.add_argument("--force", action="store_true", help=f"allow pmax above {SCAN_PMAX_LIMIT}")
    ap.set_defaults(func=run)


def build_scan(pmax: int, with_hecke: bool) -> dict:
    """Primes ascending, k ascending over the range 2 < k < p-1 of the hypotheses."""
    rows = []
    pairs = []
    hecke = []
    for p in primerange(3, pmax + 1):
        for k in range(4, p - 1, 2):
            rows.append(hypothesis_report(p, k, LEVEL_GAMMA1).as_dict())
        for k in irregular_pairs(p):
            pairs.append([p, k])
            if with_hecke and k >= 4:
                primes = tuple(ell for ell in DEFAULT_GENERATOR_PRIMES if ell != p)
                hecke.append(eisenstein_local_structure(p, k, primes).as_dict())
    results = {
        "range": {"pmax": pmax, "primes": len(list(primerange(3, pmax + 1)))},
        "reports": rows,
        "irregular_pairs": pairs,
    }
    if with_hecke:
        results["hecke"] = hecke
    return results


def _csv_rows(results: dict):
    local = {(h["p"], h["k"]): h for h in results.get("hecke", [])}
    irregular = {tuple(pair) for pair in results["irregular_pairs"]}
    for row in results["reports"]:
        key = (row["p"], row["k"])
        h = local.get(key)
        yield [
            row["p"],
            row["k"],
            row["divides_Bk"],
            row["exactly_divides_Bk"],
            row["divides_B2_omega"],
            row["exactly_divides_B2_omega"],
            key in irregular,
            h["localized_dimension"] if h else None,
            h["structure"] if h else None,
        ]


def run(args: argparse.Namespace) -> int:
    if args.pmax < 3:
        raise ParameterError(f"--pmax {args.pmax} must be at least 3")
    if args.pmax > SCAN_PMAX_LIMIT:
        if not args.force:
            raise ParameterError(f"--pmax {args.pmax} exceeds {SCAN_PMAX_LIMIT}; pass --force to override")
        log.warning("scanning up to %d, above the usual bound %d", args.pmax, SCAN_PMAX_LIMIT)

    timers.start("cli.scan")
    results = build_scan(args.pmax, args.with_hecke)
    timers.report("cli.scan", log)
    log.info("%d irregular pairs below %d", len(results["irregular_pairs"]), args.pmax)

    if args.csv:
        text = to_csv(CSV_SCAN_HEADER, _csv_rows(results))
    else:
        text = to_json({"command": "scan", "pmax": args.pmax, "with_hecke": args.with_hecke}, results)
    emit(text, args.out)
    return EXIT_OK
