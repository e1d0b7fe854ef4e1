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


"""`eisenflat hecke`: structure of the Eisenstein-localized Hecke algebra mod p."""

from __future__ import annotations

import argparse

from ...constants import DEFAULT_GENERATOR_PRIMES, EXIT_DECLINED, EXIT_OK
from ...logs import get_logger
from ...modforms import eisenstein_local_structure, sturm_primes
from ...timer_manager import timers
from ..output import emit, to_json

log = get_logger(__name__)


def _prime_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated primes, got {text!r}") from exc


def register(subparsers: argparse._SubParsersAction) -> None:
    ap = subparsers.add_parser("hecke", help="T_m / p for the Eisenstein maximal ideal at (p, k)")
    ap.add_argument("--p", type=int, required=True)
    ap.add_argument("--k", type=int, required=True)
    group = ap.add_mutually_exclusive_group()
    group.add_argument("--sturm", action="store_true", help="generate by every T_ell with ell <= ceil(k/12) + 1")
    group.add_argument("--primes", type=_prime_list, default=None, help="comma-separated generator primes")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--out", type=str, default=None)
    ap.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if args.sturm:
        primes = sturm_primes(args.k, args.p)
    elif args.primes:
        primes = args.primes
    else:
        primes = tuple(ell for ell in DEFAULT_GENERATOR_PRIMES if ell != args.p)

    timers.start("cli.hecke")
    report = eisenstein_local_structure(args.p, args.k, primes)
    timers.report("cli.hecke", log)
    timers.report("modforms.basis", log)
    timers.report("modforms.localize", log)

    if args.json:
        params = {"command": "hecke", "p": args.p, "k": args.k, "generator_primes": list(report.generator_primes)}
        text = to_json(params, report.as_dict())
    else:
        text = (
            f"p={report.p} k={report.k} dim S_k={report.cusp_dimension} "
            f"d_m={report.localized_dimension} e={report.nilpotency_index} "
            f"structure={report.structure_descriptor}\n"
        )
    emit(text, args.out)
    if report.declined:
        log.warning("(p, k) = (%d, %d): %s", args.p, args.k, report.structure_descriptor)
        return EXIT_DECLINED
    return EXIT_OK
