"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
Fractions are always written as "num/den" strings in lowest terms; the
"approx" fields are 12-significant-digit conveniences and not authoritative.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .arith import is_prime
from .average import DEFAULT_CUTOFF, average
from .errors import (
    InvalidArgument,
    ResourceLimit,
    SingularSpecialization,
    UnsupportedPrime,
)
from .factors import REGIONS, local_factor, local_factor_region
from .family import check_s, invariants
from .verify import verify_factor

CSV_SCHEMA = "# schema=1"
CSV_HEADER = ["s", "parity_biased", "sign", "lo", "hi", "E2", "E3"]
SCAN_DEFAULT_CUTOFF = 1000


class UsageError(Exception):
    pass


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def approx(x: Fraction) -> float:
    return float(f"{float(x):.12g}")


def factor_entry(p: int, f: Fraction) -> dict:
    return {"p": p, "numerator": f.numerator, "denominator": f.denominator}


def _emit_json(record: dict, out) -> None:
    out.write(json.dumps(record, indent=2))
    out.write("\n")


def _csv_row(result) -> list[str]:
    return [
        str(result.s),
        "true" if result.parity_biased else "false",
        str(result.average_sign),
        fmt(result.lo),
        fmt(result.hi),
        fmt(result.factor(2)),
        fmt(result.factor(3)),
    ]


def _write_csv(rows, out) -> None:
    out.write(CSV_SCHEMA + "\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"p={p} is not a prime")


def cmd_avg(args, out) -> int:
    check_s(args.s)
    if args.cutoff < 5:
        raise UsageError("cutoff must be >= 5")
    start = time.perf_counter()
    result = average(args.s, args.cutoff)
    elapsed = (time.perf_counter() - start) * 1000
    if args.csv:
        _write_csv([_csv_row(result)], out)
        return 0
    record = {
        "command": "avg",
        "s": result.s,
        "cutoff": result.cutoff,
        "exceptional_factors": [factor_entry(p, f) for p, f in result.exceptional_factors],
        "generic_factors": [factor_entry(p, f) for p, f in result.generic_factors],
        "interval": {"lo": fmt(result.lo), "hi": fmt(result.hi)},
        "approx": {"lo": approx(result.lo), "hi": approx(result.hi)},
        "parity_biased": result.parity_biased,
        "sign": result.average_sign,
    }
    if not args.no_timing:
        record["timing_ms"] = round(elapsed, 3)
    _emit_json(record, out)
    return 0


def cmd_factor(args, out) -> int:
    check_s(args.s)
    _require_prime(args.p)
    start = time.perf_counter()
    value = local_factor(args.p, args.s)
    regions = {r.value: fmt(local_factor_region(args.p, args.s, r)) for r in REGIONS}
    elapsed = (time.perf_counter() - start) * 1000
    record = {
        "command": "factor",
        "s": args.s,
        "p": args.p,
        "value": fmt(value),
        "numerator": value.numerator,
        "denominator": value.denominator,
        "regions": regions,
        "approx": approx(value),
    }
    if not args.no_timing:
        record["timing_ms"] = round(elapsed, 3)
    _emit_json(record, out)
    return 0


def cmd_verify(args, out) -> int:
    check_s(args.s)
    _require_prime(args.p)
    if args.p < 5:
        raise UnsupportedPrime("pointwise w_p unavailable for p<5")
    if args.depth is not None and args.depth < 1:
        raise UsageError("depth must be positive")
    start = time.perf_counter()
    check = verify_factor(args.s, args.p, args.depth)
    elapsed = (time.perf_counter() - start) * 1000
    est = check.estimate
    record = {
        "command": "verify",
        "s": args.s,
        "p": args.p,
        "depth": check.depth,
        "interval": {"lo": fmt(est.lo), "hi": fmt(est.hi)},
        "width": fmt(est.width),
        "resolved_mass": fmt(est.resolved_mass),
        "closed_form": fmt(check.closed_form),
        "verdict": check.verdict,
    }
    if not args.no_timing:
        record["timing_ms"] = round(elapsed, 3)
    _emit_json(record, out)
    return 1 if check.verdict == "FAIL" else 0


def cmd_scan(args, out) -> int:
    if args.cutoff < 5:
        raise UsageError("cutoff must be >= 5")
    rows = [_csv_row(average(s, args.cutoff)) for s in range(args.from_, args.to + 1) if s != 0]
    buf = io.StringIO()
    _write_csv(rows, buf)
    if args.csv is None:
        out.write(buf.getvalue())
        return 0
    try:
        with open(args.csv, "w", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        raise UsageError(f"cannot write {args.csv}: {exc.strerror}") from exc
    return 0


def cmd_invariants(args, out) -> int:
    inv = invariants(args.s, args.t)
    record = {
        "command": "invariants",
        "s": args.s,
        "t": args.t,
        "c4": inv.c4,
        "c6": inv.c6,
        "disc": inv.disc,
        "j": None if inv.singular else fmt(inv.j_invariant),
        "singular": inv.singular,
    }
    _emit_json(record, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timing", action="store_true", help="omit the timing_ms field")

    parser = argparse.ArgumentParser(
        prog="rootavg",
        description="Average root number of y^2 = x^3 + 3t x^2 + 3s x + s t.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("avg", parents=[common], help="average root number with a rigorous interval")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    fmt_group = p.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true", help="JSON record (default)")
    fmt_group.add_argument("--csv", action="store_true", help="one CSV row with the scan schema")
    p.set_defaults(func=cmd_avg)

    p = sub.add_parser("factor", parents=[common], help="exact local factor E(p) with region breakdown")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", parents=[common], help="check E(p), p >= 5, against brute-force integration")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--depth", type=int, default=None, help="maximum refinement depth (default v_p(s)+12)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="tabulate a range of s as CSV")
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=SCAN_DEFAULT_CUTOFF)
    p.add_argument("--csv", default=None, metavar="PATH", help="output file (stdout if omitted)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("invariants", parents=[common], help="c4, c6, discriminant and j of F_s(t)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_invariants)
    return parser


def main(argv=None, out=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # exact endpoints can run to many thousands of digits
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, InvalidArgument, UnsupportedPrime, SingularSpecialization, ResourceLimit) as exc:
        print(f"rootavg {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
