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


"""`eisenflat bernoulli`: exact B_n, or its residue mod p^N."""

from __future__ import annotations

import argparse

from ...bernoulli import bernoulli_exact, bernoulli_mod
from ...constants import EXIT_OK
from ...errors import ParameterError
from ..output import emit, to_json


def register(subparsers: argparse._SubParsersAction) -> None:
    ap = subparsers.add_parser("bernoulli", help="B_n with B_1 = +1/2")
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--mod", type=int, default=None, metavar="P", help="reduce mod P^prec")
    ap.add_argument("--prec", type=int, default=None, metavar="N")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--out", type=str, default=None)
    ap.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if args.prec is not None and args.mod is None:
        raise ParameterError("--prec needs --mod")
    params = {"command": "bernoulli", "n": args.n}
    if args.mod is None:
        value = bernoulli_exact(args.n)
        results = {"value": value}
        line = f"B_{args.n} = {value}"
    else:
        prec = 1 if args.prec is None else args.prec
        params.update({"mod": args.mod, "prec": prec})
        residue = bernoulli_mod(args.n, args.mod, prec)
        results = {"residue": residue.residue, "modulus": residue.modulus}
        line = f"B_{args.n} = {residue.residue} mod {args.mod}^{prec}"
    emit(to_json(params, results) if args.json else line + "\n", args.out)
    return EXIT_OK
