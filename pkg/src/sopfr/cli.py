"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage, 3 domain, 4 resource.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from decimal import Decimal, InvalidOperation

from . import __version__
from .aggregates import AUTO_DIRECT_LIMIT, Method, cross_check, summatory
from .asymptotics import mertens_table, ratio_table
from .errors import (
    DIRECT_BUDGET,
    PRIME_CONTRIB_BUDGET,
    SUBLINEAR_BUDGET,
    DomainError,
    ResourceError,
)
from .factor_core import factorize, sopf_block, sopfr_block
from .prime_sums import prime_count, prime_sum_direct, prime_sum_table
from .sieve_engine import SEGMENT_SIZE_ENV, iter_prime_segments

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 1, 2, 3, 4

FULL_SWEEP_LIMIT = 10**4
TABLE_LIMIT = 10**6

_TARGETS = {"B": "B", "Bdist": "B_dist", "P": "P", "pi": "pi"}
_BUDGETS = {
    Method.DIRECT: DIRECT_BUDGET,
    Method.PRIME_CONTRIB: PRIME_CONTRIB_BUDGET,
    Method.SUBLINEAR: SUBLINEAR_BUDGET,
}


def parse_int(text: str) -> int:
    """Exact integer from '1000', '10_000' or '1e6'; non-integral values are rejected."""
    try:
        d = Decimal(text.strip().replace("_", ""))
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not d.is_finite() or d != d.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(d)


def parse_int_list(text: str) -> list[int]:
    return [parse_int(part) for part in text.split(",") if part.strip()]


def _method(text: str) -> Method:
    try:
        return Method(text.replace("-", "_"))
    except ValueError:
        choices = ", ".join(m.value for m in Method)
        raise argparse.ArgumentTypeError(f"unknown method {text!r} (choose from {choices})") from None


class _Output:
    """Collects rows and renders them once as text, CSV or JSON."""

    def __init__(self, command: str, columns: list[str]):
        self.command = command
        self.columns = columns
        self.rows: list[dict] = []
        self.meta: dict = {"version": __version__}

    def add(self, **row):
        self.rows.append(row)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            doc = {"command": self.command, "rows": self.rows, "meta": self.meta}
            return json.dumps(doc, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([_cell(row[c]) for c in self.columns])
            return buf.getvalue()
        cells = [[_cell(row[c]) for c in self.columns] for row in self.rows]
        widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(self.columns)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(self.columns, widths))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
        return "\n".join(lines) + "\n"


def _cell(v) -> str:
    # repr gives the shortest round-trip form for floats
    return repr(v) if isinstance(v, float) else str(v)


def cmd_eval(args) -> tuple[_Output, int]:
    out = _Output("eval", ["n", args.function])
    for n in args.n:
        f = factorize(n)
        value = {"sopfr": f.sopfr, "sopf": f.sopf, "factor": lambda: str(f)}[args.function]()
        out.add(n=n, **{args.function: value})
    return out, EXIT_OK


def cmd_sum(args) -> tuple[_Output, int]:
    target = _TARGETS[args.target]
    x = args.x
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    method = args.method
    t0 = time.perf_counter()
    if target in ("B", "B_dist"):
        res = summatory(x, target, method, workers=args.workers, segment_size=args.segment_size)
        value, method = res.value, res.method
    else:
        if method is None:
            method = Method.DIRECT if x <= AUTO_DIRECT_LIMIT else Method.SUBLINEAR
        if method is Method.PRIME_CONTRIB:
            raise argparse.ArgumentTypeError(f"method prime_contrib does not apply to {target}")
        if method is Method.DIRECT:
            if target == "P":
                value = prime_sum_direct(x, segment_size=args.segment_size)
            else:
                if x > DIRECT_BUDGET:
                    raise ResourceError(f"direct prime count to {x} exceeds budget {DIRECT_BUDGET}")
                value = sum(int(s.size) for s in iter_prime_segments(x, args.segment_size))
        else:
            value = prime_sum_table(x)[x] if target == "P" else prime_count(x)
    elapsed = time.perf_counter() - t0
    out = _Output("sum", ["target", "x", "value", "method", "elapsed"])
    out.add(target=args.target, x=x, value=value, method=Method(method).value, elapsed=elapsed)
    return out, EXIT_OK


def _spot_points(x_max: int) -> list[int]:
    pts, p = [], 10 * FULL_SWEEP_LIMIT
    while p <= x_max:
        pts.append(p)
        p *= 10
    if x_max > FULL_SWEEP_LIMIT and x_max not in pts:
        pts.append(x_max)
    return pts


def cmd_check(args) -> tuple[_Output, int]:
    x_max = args.x_max
    if x_max < 1:
        raise DomainError(f"x_max must be >= 1, got {x_max}")
    out = _Output("check", ["x", "target", "methods", "value", "status"])
    status = EXIT_OK
    failing = None
    kw = dict(workers=args.workers, segment_size=args.segment_size)
    # full sweep at small x, then decade spot checks with every admissible method
    for target in ("B", "B_dist"):
        for x in range(1, min(x_max, FULL_SWEEP_LIMIT) + 1):
            rep = cross_check(x, target=target, **kw)
            if not rep.all_equal:
                failing = failing or (x, target)
                out.add(x=x, target=target, methods="+".join(m.value for m in rep.values),
                        value=";".join(str(v) for v in rep.values.values()), status="FAIL")
                status = EXIT_VERIFY
                break
        else:
            out.add(x=f"1..{min(x_max, FULL_SWEEP_LIMIT)}", target=target,
                    methods="+".join(m.value for m in Method), value="", status="PASS")
        for x in _spot_points(x_max):
            methods = [m for m in Method if x <= _BUDGETS[m]]
            rep = cross_check(x, methods, target=target, **kw)
            ok = rep.all_equal and len(rep.values) >= 2
            if not ok:
                failing = failing or (x, target)
                status = EXIT_VERIFY
            out.add(x=x, target=target, methods="+".join(m.value for m in rep.values),
                    value=rep.value if ok else ";".join(str(v) for v in rep.values.values()),
                    status="PASS" if ok else "FAIL")
    if failing:
        out.meta["first_failure"] = {"x": failing[0], "target": failing[1]}
    out.meta["result"] = "PASS" if status == EXIT_OK else "FAIL"
    return out, status


def cmd_table(args) -> tuple[_Output, int]:
    lo, hi = args.lo, args.hi
    if lo < 1 or hi < lo:
        raise DomainError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if hi - lo + 1 > TABLE_LIMIT:
        raise ResourceError(f"table of {hi - lo + 1} rows exceeds limit {TABLE_LIMIT}")
    out = _Output("table", ["n", "sopfr", "sopf"])
    for n, a, b in zip(range(lo, hi + 1), sopfr_block(lo, hi).tolist(), sopf_block(lo, hi).tolist()):
        out.add(n=n, sopfr=a, sopf=b)
    return out, EXIT_OK


def cmd_asym(args) -> tuple[_Output, int]:
    target = _TARGETS[args.target]
    if target == "pi":
        raise argparse.ArgumentTypeError("asym supports B, Bdist and P")
    for x in args.xs:
        if x < 2:
            raise DomainError(f"asymptotic rows need x >= 2, got {x}")
    out = _Output("asym", ["x", "exact", "model", "ratio", "scaled_error"])
    for row in ratio_table(args.xs, target):
        out.add(**row.as_dict())
    out.meta["target"] = args.target
    return out, EXIT_OK


def cmd_mertens(args) -> tuple[_Output, int]:
    for x in args.xs:
        if x < 2:
            raise DomainError(f"mertens rows need x >= 2, got {x}")
    cols = ["x", "sum_recip_p", "loglog_x", "difference", "sum_1_over_p_p_minus_1"]
    out = _Output("mertens", cols)
    for row in mertens_table(args.xs, segment_size=args.segment_size):
        out.add(**row.as_dict())
    return out, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--workers", type=parse_int, default=os.cpu_count() or 1)
    common.add_argument("--segment-size", type=parse_int, default=None,
                        help=f"sieve block length (default: ${SEGMENT_SIZE_ENV} or 2**22)")

    parser = argparse.ArgumentParser(
        prog="sopfr", description="Sums of prime factors: exact values and asymptotic checks."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="sopfr(n), sopf(n) or the factorization")
    p.add_argument("function", choices=("sopfr", "sopf", "factor"))
    p.add_argument("n", type=parse_int, nargs="+")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("sum", parents=[common], help="exact B(x), B_dist(x), P(x) or pi(x)")
    p.add_argument("target", choices=tuple(_TARGETS))
    p.add_argument("x", type=parse_int)
    p.add_argument("--method", type=_method, default=None)
    p.set_defaults(handler=cmd_sum)

    p = sub.add_parser("check", parents=[common], help="cross-validate all methods up to x_max")
    p.add_argument("x_max", type=parse_int)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("table", parents=[common], help="sopfr and sopf for n in [lo, hi]")
    p.add_argument("lo", type=parse_int)
    p.add_argument("hi", type=parse_int)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("asym", parents=[common], help="ratio of exact sums to the leading model")
    p.add_argument("target", choices=("B", "Bdist", "P"))
    p.add_argument("xs", type=parse_int_list, help="comma-separated x values, e.g. 1e4,1e5")
    p.set_defaults(handler=cmd_asym)

    p = sub.add_parser("mertens", parents=[common], help="reciprocal prime sums vs log log x")
    p.add_argument("xs", type=parse_int_list)
    p.set_defaults(handler=cmd_mertens)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    if args.segment_size is not None and args.segment_size < 1:
        parser.error("--segment-size must be >= 1")
    t0 = time.perf_counter()
    try:
        out, code = args.handler(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except DomainError as exc:
        print(f"sopfr: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"sopfr: resource limit: {exc}", file=sys.stderr)
        if args.command == "sum":
            print("hint: try --method sublinear", file=sys.stderr)
        return EXIT_RESOURCE
    out.meta["elapsed"] = time.perf_counter() - t0
    text = out.render(args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_VERIFY and "first_failure" in out.meta:
        ff = out.meta["first_failure"]
        print(f"sopfr: mismatch, first failing x = {ff['x']} ({ff['target']})", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
