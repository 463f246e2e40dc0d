"""Command line front end.

    kummer-euler table  --g 2 --r 0 --chi-y 1 --n-max 5
    kummer-euler verify --suite all --n-max 10
    kummer-euler oracle --m 4 --k-max 5 --strategy both
    kummer-euler dt     --n-max 3

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 data/integrity error. Numbers are written as decimal or ``p/q`` strings.
Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import partitions
from .errors import ConsistencyError, IntegrityError, ResourceLimitError, UsageError
from .kummer import KummerParams, dt_degree_zero, kummer_euler_table, kummer_euler_via_w
from .verify import SUITES, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3
SCHEMA_VERSION = 1
TABLE_COLUMNS = ("g", "r", "chi_y", "n", "chi_kn", "orbifold")

log = logging.getLogger("kummer_euler")


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "kummer_euler"


def fraction_str(x: Fraction) -> str:
    """Lossless ``p/q`` form; integers keep the ``/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _emit(doc: dict, rows: list[dict], columns, fmt: str, out):
    if fmt == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([row[c] for c in columns])
        out.write(buf.getvalue())


def cmd_table(args, out) -> int:
    try:
        params = KummerParams(args.g, args.r, args.chi_y, args.n_max)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if params.m >= 4:
        _note_brute_force(args.cache, params.m)
    try:
        table = kummer_euler_table(params, cache=args.cache)
        routes = ["log_series"]
        if args.cross_check:
            routes.append("w_partition_sum")
            for n, chi, _ in table.rows():
                other = kummer_euler_via_w(params, n, cache=args.cache)
                if other != chi:
                    raise ConsistencyError(f"routes disagree at n={n}: {chi} vs {other}")
    except (ConsistencyError, IntegrityError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    rows = [
        {
            "g": params.g,
            "r": params.r,
            "chi_y": params.chi_y,
            "n": n,
            "chi_kn": str(chi),
            "orbifold": fraction_str(orb),
            "routes": list(routes),
        }
        for n, chi, orb in table.rows()
    ]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "params": {"g": params.g, "r": params.r, "chi_y": params.chi_y, "m": params.m},
        "rows": [{k: row[k] for k in ("n", "chi_kn", "orbifold", "routes")} for row in rows],
    }
    _emit(doc, rows, TABLE_COLUMNS, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    try:
        report = verify_all(args.n_max, suites, cache=args.cache, seed=args.seed)
    except (IntegrityError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    if args.json:
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
    else:
        out.write(report.format_text() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args, out) -> int:
    strategies = ("tree", "dedup") if args.strategy == "both" else (args.strategy,)
    results = {}
    for s in strategies:
        print(f"note: enumerating order ideals in N^{args.m} with strategy {s}", file=sys.stderr)
        results[s] = partitions.order_ideal_counts(args.m, args.k_max, s)
    counts = results[strategies[0]]
    out.write(" ".join(str(c) for c in counts) + "\n")
    if len(strategies) == 2 and results["tree"] != results["dedup"]:
        bad = next(k for k, (a, b) in enumerate(zip(results["tree"], results["dedup"])) if a != b)
        print(f"error: strategies disagree at k={bad}", file=sys.stderr)
        return EXIT_FAIL
    if args.cache is not None:
        table = partitions.PartitionTable(args.m, counts, partitions.Source.BRUTE_FORCE)
        partitions.cache_store(table, partitions.cache_path(args.cache, args.m))
    return EXIT_OK


def cmd_dt(args, out) -> int:
    rows = [{"n": n, "dt": fraction_str(dt_degree_zero(n))} for n in range(1, args.n_max + 1)]
    doc = {"schema_version": SCHEMA_VERSION, "rows": rows}
    _emit(doc, rows, ("n", "dt"), args.format, out)
    return EXIT_OK


def _note_brute_force(cache, m):
    if cache is None or not partitions.cache_path(cache, m).exists():
        print(f"note: no cached P_{m} table, running brute-force enumeration", file=sys.stderr)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonnegative(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer-euler",
        description="Euler characteristics of generalized Kummer schemes K_n(A x Y).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cache(p, default):
        p.add_argument("--cache", type=Path, default=default, metavar="PATH",
                       help="directory holding cached P_m tables")

    p = sub.add_parser("table", help="chi(K_n) for n = 1..n-max")
    p.add_argument("--g", type=_positive, required=True, help="dimension of the abelian variety")
    p.add_argument("--r", type=_nonnegative, default=0, help="dimension of Y")
    p.add_argument("--chi-y", type=int, default=1, help="Euler characteristic of Y")
    p.add_argument("--n-max", type=_positive, default=10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--cross-check", action="store_true",
                   help="also evaluate the weighted partition-sum route and require agreement")
    add_cache(p, default_cache_dir())
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the cross-route consistency checks")
    p.add_argument("--n-max", type=_positive, default=12)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="structured report on stdout")
    add_cache(p, default_cache_dir())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force counts of m-dimensional partitions")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--k-max", type=_nonnegative, default=8)
    p.add_argument("--strategy", choices=("tree", "dedup", "both"), default="tree")
    add_cache(p, None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dt", help="degree-zero DT invariants of abelian 3-folds")
    p.add_argument("--n-max", type=_positive, default=10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_dt)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
