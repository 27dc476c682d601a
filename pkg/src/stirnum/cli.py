"""``stirnum``: exact tables, identity verification, and single evaluations.

Exit codes: 0 success, 1 verification failure, 2 usage or format error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import bernoulli as bn
from . import cauchy as cy
from . import polybernoulli as pb
from . import stirling as st
from .exactnum import format_rational, parse_rational, poly_eval
from .verify import IDENTITIES, Bounds, run_identity

LINEAR_MAX_N = 200
TRIANGLE_MAX_N = 100


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SequenceSpec:
    params: tuple[str, ...]
    compute: Callable[..., Fraction | int]
    triangle: bool = False
    optional: tuple[str, ...] = ()


def _bernoulli(n: int, x: Fraction | None = None) -> Fraction:
    if x is None:
        return bn.bernoulli_number(n)
    return poly_eval(bn.bernoulli_polynomial(n), x)


def _polybernoulli(n: int, q: int, x: Fraction | None = None) -> Fraction:
    if x is None:
        return pb.polybernoulli_number(n, q)
    return poly_eval(pb.polybernoulli_polynomial(n, q), x)


SEQUENCES: dict[str, SequenceSpec] = {
    "bernoulli": SequenceSpec(("n",), _bernoulli, optional=("x",)),
    "stirling2": SequenceSpec(("n", "k"), st.stirling2, triangle=True),
    "stirling1": SequenceSpec(("n", "k"), st.stirling1_signed, triangle=True),
    "stirling1u": SequenceSpec(("n", "k"), st.stirling1_unsigned, triangle=True),
    "rstirling2": SequenceSpec(("r", "n", "k"), st.rstirling2, triangle=True),
    "rstirling1": SequenceSpec(("r", "n", "k"), st.rstirling1_signed, triangle=True),
    "rstirling1u": SequenceSpec(("r", "n", "k"), st.rstirling1_unsigned, triangle=True),
    "polybernoulli": SequenceSpec(("n", "q"), _polybernoulli, optional=("x",)),
    "cauchy": SequenceSpec(("n",), cy.cauchy_number),
    "polycauchy": SequenceSpec(("n", "q"), cy.poly_cauchy_number),
    "cauchypoly": SequenceSpec(("n", "r"), cy.cauchy_polynomial_at_integer),
}


def make_record(sequence: str, params: dict, value: Fraction | int) -> dict:
    return {
        "sequence": sequence,
        "params": {k: format_rational(v) if isinstance(v, Fraction) else v for k, v in params.items()},
        "value": format_rational(value),
    }


def _table_cells(name: str, args: argparse.Namespace) -> Iterator[dict]:
    spec = SEQUENCES[name]
    cap = TRIANGLE_MAX_N if spec.triangle else LINEAR_MAX_N
    if args.max_n < 0 or args.max_n > cap:
        raise UsageError(f"--max-n for {name} must lie in [0, {cap}]")
    if "r" in spec.params:
        rs = [args.r] if args.r is not None else list(range(args.max_r + 1))
    else:
        rs = [None]
    if "q" in spec.params:
        qs = [args.q] if args.q is not None else list(range(1, args.max_q + 1))
    else:
        qs = [None]
    if any(r is not None and r < 0 for r in rs) or any(q is not None and q < 1 for q in qs):
        raise UsageError("r must be >= 0 and q must be >= 1")
    for r in rs:
        for q in qs:
            for n in range(args.max_n + 1):
                ks = range(min(n, args.max_k if args.max_k is not None else n) + 1) if spec.triangle else [None]
                for k in ks:
                    params: dict = {}
                    for p in spec.params:
                        params[p] = {"r": r, "q": q, "n": n, "k": k}[p]
                    yield {"params": params, "value": spec.compute(**params)}


def _render(name: str, rows: list[dict], fmt: str, pretty: bool, param_names: Sequence[str]) -> str:
    out = io.StringIO()
    if fmt == "json":
        records = [make_record(name, row["params"], row["value"]) for row in rows]
        if pretty:
            out.write(json.dumps(records, indent=2) + "\n")
        else:
            for rec in records:
                out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["sequence", *param_names, "value"])
        for row in rows:
            p = row["params"]
            writer.writerow([name, *(format_rational(p[n]) if isinstance(p.get(n), Fraction) else p.get(n, "")
                                     for n in param_names), format_rational(row["value"])])
    elif fmt == "bfile":
        for i, row in enumerate(rows):
            v = Fraction(row["value"])
            if v.denominator != 1:
                raise UsageError(f"b-file output needs integer values; {name} has {format_rational(v)}")
            index = row["params"]["n"] if len(rows[0]["params"]) == 1 else i
            out.write(f"{index} {v.numerator}\n")
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return out.getvalue()


def cmd_table(args: argparse.Namespace) -> int:
    if args.sequence not in SEQUENCES:
        raise UsageError(f"unknown sequence {args.sequence!r}; choose from {', '.join(SEQUENCES)}")
    rows = list(_table_cells(args.sequence, args))
    text = _render(args.sequence, rows, args.format, args.pretty, SEQUENCES[args.sequence].params)
    sys.stdout.write(text)
    return 0


def _parse_assignments(items: Sequence[str], spec: SequenceSpec, name: str) -> dict:
    params: dict = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise UsageError(f"expected key=value, got {item!r}")
        if key not in spec.params and key not in spec.optional:
            raise UsageError(f"{name} takes parameters {', '.join(spec.params + spec.optional)}; got {key!r}")
        if key in params:
            raise UsageError(f"parameter {key!r} given twice")
        try:
            value = parse_rational(raw)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if key in spec.params:
            if value.denominator != 1:
                raise UsageError(f"{key} must be an integer")
            value = value.numerator
        params[key] = value
    missing = [p for p in spec.params if p not in params]
    if missing:
        raise UsageError(f"{name} is missing parameter(s): {', '.join(missing)}")
    for p in spec.params:
        if p == "q" and params[p] < 1:
            raise UsageError("q must be >= 1")
        if p in ("n", "r") and params[p] < 0:
            raise UsageError(f"{p} must be >= 0")
    return params


def cmd_eval(args: argparse.Namespace) -> int:
    if args.sequence not in SEQUENCES:
        raise UsageError(f"unknown sequence {args.sequence!r}; choose from {', '.join(SEQUENCES)}")
    spec = SEQUENCES[args.sequence]
    params = _parse_assignments(args.params, spec, args.sequence)
    value = spec.compute(**params)
    names = [p for p in (*spec.params, *spec.optional) if p in params]
    text = _render(args.sequence, [{"params": params, "value": value}], args.format, args.pretty, names)
    sys.stdout.write(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ids = args.identities or ["all"]
    if ids == ["all"] or "all" in ids:
        ids = list(IDENTITIES)
    unknown = [i for i in ids if i not in IDENTITIES]
    if unknown:
        raise UsageError(f"unknown identity id(s): {', '.join(unknown)}; choose from all, {', '.join(IDENTITIES)}")
    if min(args.max_n, args.max_r) < 0 or args.max_q < 1 or (args.max_k is not None and args.max_k < 0):
        raise UsageError("bounds must be non-negative and --max-q at least 1")
    bounds = Bounds(max_n=args.max_n, max_k=args.max_k, max_q=args.max_q, max_r=args.max_r, order=args.order)
    if bounds.gf_order < bounds.max_n + 2:
        raise UsageError(f"--order must be at least max_n + 2 = {bounds.max_n + 2}")
    reports = [run_identity(i, bounds).to_dict() for i in ids]
    if args.pretty:
        sys.stdout.write(json.dumps(reports, indent=2) + "\n")
    else:
        for rep in reports:
            sys.stdout.write(json.dumps(rep) + "\n")
    failed = [r["identity"] for r in reports if r["status"] != "pass"]
    if failed:
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stirnum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def bounds_flags(p: argparse.ArgumentParser, max_n: int) -> None:
        p.add_argument("--max-n", type=int, default=max_n)
        p.add_argument("--max-k", type=int, default=None, help="cap on k (default: n)")
        p.add_argument("--max-r", type=int, default=4)
        p.add_argument("--max-q", type=int, default=4)
        p.add_argument("--pretty", action="store_true", help="emit one JSON array instead of JSON lines")

    t = sub.add_parser("table", help="emit a table of exact values")
    t.add_argument("sequence", help=", ".join(SEQUENCES))
    bounds_flags(t, max_n=10)
    t.add_argument("--r", type=int, default=None, help="fix r instead of ranging 0..max-r")
    t.add_argument("--q", type=int, default=None, help="fix q instead of ranging 1..max-q")
    t.add_argument("--format", choices=("json", "csv", "bfile"), default="json")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="cross-check identities between independent routes")
    v.add_argument("identities", nargs="*", help="all (default), or any of: " + ", ".join(IDENTITIES))
    bounds_flags(v, max_n=20)
    v.add_argument("--order", type=int, default=None, help="series truncation order (default: max-n + 2)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate one quantity, e.g. 'eval polybernoulli n=1 q=2'")
    e.add_argument("sequence")
    e.add_argument("params", nargs="*", metavar="key=value")
    e.add_argument("--format", choices=("json", "csv"), default="json")
    e.add_argument("--pretty", action="store_true")
    e.set_defaults(func=cmd_eval)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"stirnum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
