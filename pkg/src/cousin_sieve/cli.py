"""Command-line interface.

Usage:
    cousin-sieve sieve --limit 20 --format csv
    cousin-sieve classify 17
    cousin-sieve multirank 5 7 11 --format json
    cousin-sieve validate --pj 7 --windows 5 --seed 1

Records go to stdout as CSV (header always present) or a single JSON array;
diagnostics go to stderr. Exit codes: 0 success, 1 failed exact identity
(validate only), 2 bad arguments.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
from fractions import Fraction

from . import counting, multirank, nonrank, sieve
from .arith import is_prime, primes_from_5

__all__ = ["main", "build_parser", "SCHEMAS"]

SCHEMAS = {
    "sieve": ("m", "low", "high"),
    "classify": ("m", "verdict", "parent", "witness"),
    "multirank": ("modulus", "residue", "witnesses"),
    "validate": ("metric", "expected", "actual", "delta"),
}


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, str)):
        return v
    return str(v)


def emit(command: str, rows: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    fields = SCHEMAS[command]
    rows = [{k: _cell(r.get(k)) for k in fields} for r in rows]
    if fmt == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
    else:
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)


def cmd_sieve(args) -> tuple[list[dict], int]:
    ranks = sieve.twin4_ranks_upto(args.limit, segment_size=args.segment_size)
    return [{"m": m, "low": 3 * m - 2, "high": 3 * m + 2} for m in ranks], 0


def cmd_classify(args) -> tuple[list[dict], int]:
    c = nonrank.classify(args.m)
    if c.is_twin_rank:
        lo, hi = c.pair
        row = {"m": c.m, "verdict": "twin-rank", "parent": None, "witness": f"({lo}, {hi})"}
    else:
        d = nonrank.decompose(c.m)
        row = {
            "m": c.m,
            "verdict": "non-rank",
            "parent": c.parent,
            "witness": f"{d} (kappa={d.kappa}, sign={d.sign})",
        }
    return [row], 0


def _witness_text(pr: multirank.MultiRankProgression) -> str:
    parts = [f"{pr.primes[0]}{pr.signs[0]}"]
    for st in pr.steps:
        if len(pr.primes) == 2:
            parts.append(f"{st.prime}{st.sign} (r={st.mu}, r'={st.nu})")
        else:
            parts.append(f"{st.prime}{st.sign} (nu={st.nu}, mu={st.mu})")
    return "; ".join(parts)


def cmd_multirank(args) -> tuple[list[dict], int]:
    sol = multirank.mfold(args.primes)
    rows = [{"modulus": pr.modulus, "residue": pr.residue, "witnesses": _witness_text(pr)} for pr in sol]
    return rows, 0


def _row(metric, expected, actual, delta=None):
    if delta is None and expected is not None and isinstance(actual, (int, Fraction)) and isinstance(
        expected, (int, Fraction)
    ):
        delta = actual - expected
    return {"metric": metric, "expected": expected, "actual": actual, "delta": delta}


def validation_rows(p_j: int, windows: int, seed: int) -> tuple[list[dict], list[str]]:
    """Report rows plus the names of any failed exact identities."""
    rows: list[dict] = []
    failed: list[str] = []

    def exact(metric, expected, actual):
        rows.append(_row(metric, expected, actual))
        if expected != actual:
            failed.append(metric)

    st = counting.stats(p_j)
    for k in ("L", "M_next", "S", "Q", "R0", "x"):
        rows.append(_row(f"stats.{k}", None, getattr(st, k)))
    for p, qp in st.q.items():
        rows.append(_row(f"stats.q[{p}]", None, qp))
    exact("identity.Q+x", Fraction(1, 2), st.Q + st.x)
    prod = Fraction(1)
    for p in st.q:
        prod *= Fraction(p - 2, p)
    exact("identity.sum_q", (1 - prod) / 2, sum(st.q.values()))
    exact("identity.R0", Fraction(math.prod(p - 2 for p in st.q), 2), Fraction(st.L, 2) - st.S)

    if p_j <= counting.CENSUS_CAP:
        rng = random.Random(seed)
        for _ in range(windows):
            lo = rng.randrange(p_j, p_j + 50 * st.L)
            c = counting.window_census(p_j, lo)
            for p, exp in c.expected_parent.items():
                exact(f"census[{lo}].parent[{p}]", exp, c.parent_counts[p])
            exact(f"census[{lo}].supergroup", c.expected_supergroup, c.supergroup)
            exact(f"census[{lo}].remnants", c.expected_remnants, c.remnants)
    else:
        print(f"window census skipped: p_j > {counting.CENSUS_CAP}", file=sys.stderr)

    if p_j <= sieve.CONSTANTS_CAP:
        cs = sieve.constants_C(p_j)
        exact("constants.size", st.R0 * 2, len(cs))
        if p_j > 5:
            prev = primes_from_5(p_j)[-2]
            subset = set(sieve.constants_C(prev).constants) <= set(cs.constants)
            rows.append(_row(f"constants.C[{prev}]_subset_C[{p_j}]", None, subset))

    unmatched = 0
    ps = primes_from_5(p_j)
    for i, p in enumerate(ps):
        for q in ps[i + 1 :]:
            for pr in multirank.common_double(p, q):
                r, rp = pr.r_pair
                if multirank.pair_relation_case(p, q, *pr.signs, r, rp) is None:
                    unmatched += 1
    exact("multirank.witnesses_matching_no_form", 0, unmatched)

    if 7 <= p_j <= counting.LEGENDRE_CAP:
        rep = counting.legendre_report(p_j)
        rows.append(_row("legendre.oracle_twin_count", None, rep.oracle_twin_count))
        rows.append(_row("legendre.R", rep.oracle_twin_count, rep.R, float(rep.R) - rep.oracle_twin_count))
        rows.append(_row("legendre.R_M", rep.oracle_twin_count, rep.R_M, float(rep.R_M) - rep.oracle_twin_count))
        rows.append(_row("legendre.R_E", None, rep.R_E))
        rows.append(
            _row("legendre.R_M_product", float(rep.R_M), rep.R_M_product, rep.discrepancies["R_M_product-R_M"])
        )
        rows.append(_row("legendre.R_asym", rep.oracle_twin_count, rep.R_asym, rep.discrepancies["R_asym-oracle"]))
        rows.append(_row("legendre.R_asym/oracle", 1, rep.discrepancies["R_asym/oracle"]))
        metric = "identity.R=R_M+R_E"
        rows.append(_row(metric, rep.R, rep.R_M + rep.R_E, float(rep.R_M + rep.R_E) - float(rep.R)))
        if not rep.decomposition_holds():
            failed.append(metric)
    elif p_j > counting.LEGENDRE_CAP:
        print(f"Legendre report skipped: p_j > {counting.LEGENDRE_CAP}", file=sys.stderr)
    return rows, failed


def cmd_validate(args) -> tuple[list[dict], int]:
    rows, failed = validation_rows(args.pj, args.windows, args.seed)
    for f in failed:
        print(f"exact identity failed: {f}", file=sys.stderr)
    return rows, 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cousin-sieve", description="Cousin-prime sieve and counting tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("sieve", help="list twin-4 ranks m <= limit with their pairs")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--segment-size", type=int, default=sieve.DEFAULT_SEGMENT)
    fmt(p)

    p = sub.add_parser("classify", help="classify one odd number")
    p.add_argument("m", type=int)
    fmt(p)

    p = sub.add_parser("multirank", help="common non-rank progressions of 1-4 primes")
    p.add_argument("primes", type=int, nargs="+")
    fmt(p)

    p = sub.add_parser("validate", help="counting laws and formula-vs-oracle report")
    p.add_argument("--pj", type=int, required=True)
    p.add_argument("--windows", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    fmt(p)
    return parser


def _check(parser, args) -> None:
    if args.command == "sieve":
        if args.limit < 3:
            parser.error("--limit must be >= 3")
        if args.segment_size < 1:
            parser.error("--segment-size must be positive")
    elif args.command == "classify":
        if args.m < 3 or args.m % 2 == 0:
            parser.error("m must be odd and >= 3")
    elif args.command == "multirank":
        ps = args.primes
        if not 1 <= len(ps) <= 4:
            parser.error("give 1 to 4 primes")
        if len(set(ps)) != len(ps):
            parser.error("primes must be distinct")
        if any(p < 5 or not is_prime(p) for p in ps):
            parser.error("every argument must be a prime >= 5")
    elif args.command == "validate":
        if not (5 <= args.pj <= 31 and is_prime(args.pj)):
            parser.error("--pj must be a prime in 5..31")
        if args.windows < 1:
            parser.error("--windows must be >= 1")


COMMANDS = {
    "sieve": cmd_sieve,
    "classify": cmd_classify,
    "multirank": cmd_multirank,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check(parser, args)
    rows, code = COMMANDS[args.command](args)
    emit(args.command, rows, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
