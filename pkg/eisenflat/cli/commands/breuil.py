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


"""`eisenflat breuil`: extension tables, descent enumeration and the killed-by-p check."""

from __future__ import annotations

import argparse

from ...algebra.fields import fq_make
from ...breuil import (
    RankOneModule,
    classify_eta,
    hom_space,
    modules_for_character,
    p2_extension_exists,
    theoremZ_check,
)
from ...constants import CSV_BREUIL_DESCENT_HEADER, CSV_BREUIL_TABLE_HEADER, EXIT_OK
from ...errors import ParameterError
from ...logs import get_logger
from ...timer_manager import timers
from ..output import emit, to_csv, to_json

log = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    ap = subparsers.add_parser("breuil", help="order-p^2 extensions of rank-one Breuil modules")
    modes = ap.add_subparsers(dest="mode", required=True)

    table = modes.add_parser("table", help="hom, eta and existence for every (r, s, a, b)")
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--e", type=int, required=True)
    table.add_argument("--f", type=int, default=1, help="coefficients in F_{p^f}")
    table.set_defaults(func=run_table)

    descent = modes.add_parser("descent", help="order-p group schemes per character over e = p + 1")
    descent.add_argument("--p", type=int, required=True)
    descent.set_defaults(func=run_descent)

    check = modes.add_parser("check-k", help="confirm that self-extensions are killed by p")
    check.add_argument("--p", type=int, required=True)
    check.add_argument("--k", type=int, required=True)
    check.set_defaults(func=run_check_k)

    for sub in (table, descent, check):
        fmt = sub.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        fmt.add_argument("--csv", action="store_true")
        sub.add_argument("--out", type=str, default=None)


def table_rows(p: int, e: int, f: int = 1) -> list[dict]:
    field = fq_make(p, f)
    rows = []
    for r in range(e + 1):
        for s in range(e + 1):
            for a in field.elements():
                if not a:
                    continue
                for b in field.elements():
                    if not b:
                        continue
                    hom = hom_space(RankOneModule(field, e, s, b), RankOneModule(field, e, r, a))
                    rows.append({
                        "r": r,
                        "s": s,
                        "a": a,
                        "b": b,
                        "hom_dimension": hom.dimension,
                        "hom_degree": hom.m,
                        "eta": [str(eta) for eta in classify_eta(e, r, s, a, b)],
                        "extension_not_killed_by_p": p2_extension_exists(e, (r, a), (s, b)),
                    })
    return rows


def _render(args: argparse.Namespace, params: dict, results, header, csv_rows, lines) -> None:
    if args.json:
        text = to_json(params, results)
    elif args.csv:
        text = to_csv(header, csv_rows)
    else:
        text = "".join(line + "\n" for line in lines)
    emit(text, args.out)


def run_table(args: argparse.Namespace) -> int:
    timers.start("cli.breuil.table")
    rows = table_rows(args.p, args.e, args.f)
    timers.report("cli.breuil.table", log)
    csv_rows = (
        [row["r"], row["s"], row["a"], row["b"], row["hom_dimension"], row["hom_degree"],
         ";".join(row["eta"]), row["extension_not_killed_by_p"]]
        for row in rows
    )
    lines = [
        f"r={row['r']} s={row['s']} a={row['a']} b={row['b']} "
        f"hom={'yes' if row['hom_dimension'] else 'no'} "
        f"eta={{{', '.join(row['eta'])}}} not_killed_by_p={'yes' if row['extension_not_killed_by_p'] else 'no'}"
        for row in rows
    ]
    params = {"command": "breuil", "mode": "table", "p": args.p, "e": args.e, "f": args.f}
    _render(args, params, rows, CSV_BREUIL_TABLE_HEADER, csv_rows, lines)
    return EXIT_OK


def run_descent(args: argparse.Namespace) -> int:
    p = args.p
    fq_make(p, 1)
    rows = []
    for k in range(p - 1):
        info = modules_for_character(p, k)
        rows.append({"k": k, "modules": [list(m) for m in info.modules], "unique": info.unique})
    csv_rows = (
        [row["k"], ";".join(f"{r}:{a}" for r, a in row["modules"]), row["unique"]] for row in rows
    )
    lines = [
        f"k={row['k']} modules={' '.join(f'A({r},{a})' for r, a in row['modules'])}"
        f"{' unique' if row['unique'] else ''}"
        for row in rows
    ]
    params = {"command": "breuil", "mode": "descent", "p": p, "e": p + 1}
    _render(args, params, rows, CSV_BREUIL_DESCENT_HEADER, csv_rows, lines)
    return EXIT_OK


def run_check_k(args: argparse.Namespace) -> int:
    p, k = args.p, args.k
    if not 0 <= k < p - 1:
        raise ParameterError(f"k = {k} outside 0..p-2")
    confirmed = theoremZ_check(p, k)
    ((r, a),) = modules_for_character(p, k).modules
    result = {"k": k, "r": r, "a": a, "confirmed": confirmed}
    params = {"command": "breuil", "mode": "check-k", "p": p, "e": p + 1, "k": k}
    line = f"p={p} k={k} A({r},{a}): {'confirmed' if confirmed else 'NOT confirmed'}"
    _render(args, params, result, ("k", "r", "a", "confirmed"), [[k, r, a, confirmed]], [line])
    return EXIT_OK
