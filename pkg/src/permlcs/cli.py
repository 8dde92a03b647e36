"""Command-line front end.

Subcommands: construct, verify, sample, distance, bench.  JSON reports on
stdout always carry the keys command/params/results/pass; bench emits CSV.
Exit codes: 0 all asserted bounds hold, 1 a bound is violated, 2 usage or
file-format error.

Outputs are byte-deterministic for fixed flags and seed: timing fields are
written as 0 unless --timing is given.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import os
import sys
import time
from typing import Optional, Sequence

from .algebraic import build_exact, build_general
from .arith import ceil_cbrt, ceil_root
from .bounds import check_probabilistic_bound, lcs_threshold, random_perm_set, sample_lis, trial_rng
from .codes import code_report
from .fileio import FormatError, read_permset, write_permset
from .hadamard import DEFAULT_SIZE_CAP, build_hadamard_set
from .subseq import LcsMatrix, lcs_all_pairs

BOUND_CHOICES = ("theorem2", "theorem1", "lower", "all")


def _threads_from_env() -> int:
    raw = os.environ.get("PERMLCS_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _print_report(command: str, params: dict, results: dict, passed: bool) -> None:
    report = {"command": command, "params": params, "results": results, "pass": passed}
    print(json.dumps(report, indent=2, sort_keys=True))


def _elapsed_ms(t0: float, timing: bool) -> int:
    return int(round((time.perf_counter() - t0) * 1000)) if timing else 0


def _slack_up(x: float) -> float:
    """One ulp upward, so a printed float threshold never understates a bound."""
    return math.nextafter(x, math.inf)


def _pairs_1based(matrix: LcsMatrix) -> list[list[int]]:
    return [[i + 1, j + 1, v] for i, j, v in matrix.off_diagonal()]


# -- bound predicates (exact integer comparisons; floats are display only) --

def _check_lower(n: int, k: int, max_lcs: int) -> dict:
    if k < 3:
        return {"applicable": False, "note": "needs k >= 3"}
    threshold = ceil_cbrt(n)
    return {"applicable": True, "threshold": threshold,
            "holds": max_lcs >= threshold, "direction": ">="}


def _check_theorem2(n: int, k: int, max_lcs: int) -> dict:
    threshold = _slack_up(32.0 * float(n * k) ** (1.0 / 3.0))
    return {"applicable": True, "threshold": threshold,
            "holds": max_lcs**3 <= 32**3 * n * k, "direction": "<="}


def _check_theorem1(n: int, k: int, max_lcs: int) -> dict:
    if k < 4 or k % 2 != 0:
        return {"applicable": False, "note": "needs even k >= 4"}
    digit_base = ceil_root(n, k - 1)
    threshold = digit_base ** (k // 2 - 1)
    return {"applicable": True, "threshold": threshold,
            "holds": max_lcs <= threshold, "direction": "<="}


_BOUND_FNS = {"lower": _check_lower, "theorem2": _check_theorem2, "theorem1": _check_theorem1}


def _cmd_construct(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    if args.kind == "algebraic":
        if args.n is None:
            raise ValueError("construct algebraic requires --n")
        if args.s is not None:
            raise ValueError("--s does not apply to the algebraic construction")
        made = build_general(args.n, args.k)
        p = made.params["p"]
        results = dict(made.params)
        results["lcs_bound"] = 2 * p - 1
        results["theorem2_threshold"] = _slack_up(32.0 * float(args.n * args.k) ** (1.0 / 3.0))
        params = {"kind": args.kind, "n": args.n, "k": args.k}
    else:
        if args.s is None:
            raise ValueError("construct hadamard requires --s")
        made = build_hadamard_set(args.k, args.s, n=args.n, max_size=args.max_size)
        results = dict(made.params)
        results["lcs_bound"] = args.s ** (args.k // 2 - 1) if args.k % 2 == 0 else None
        params = {"kind": args.kind, "k": args.k, "s": args.s}
        if args.n is not None:
            params["n"] = args.n
    if args.out:
        write_permset(made, args.out)
        results["out"] = args.out
    results["elapsed_ms"] = _elapsed_ms(t0, args.timing)
    _print_report("construct", params, results, True)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    s = read_permset(args.path)
    if s.k < 2:
        raise ValueError("verification needs at least two permutations")
    matrix = lcs_all_pairs(s, threads=_threads_from_env())
    max_lcs = matrix.max_pair
    requested = list(_BOUND_FNS) if args.bound == "all" else [args.bound]
    bounds = {name: _BOUND_FNS[name](s.n, s.k, max_lcs) for name in requested}
    if args.bound != "all" and not bounds[args.bound]["applicable"]:
        raise ValueError(f"bound {args.bound} not applicable: {bounds[args.bound]['note']}")
    passed = all(b["holds"] for b in bounds.values() if b["applicable"])
    results = {
        "n": s.n, "k": s.k,
        "pairwise_lcs": _pairs_1based(matrix),
        "max_pair_lcs": max_lcs, "min_pair_lcs": matrix.min_pair,
        "bounds": bounds,
        "elapsed_ms": _elapsed_ms(t0, args.timing),
    }
    _print_report("verify", {"path": args.path, "bound": args.bound}, results, passed)
    return 0 if passed else 1


def _cmd_sample(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    if args.trials < 1:
        raise ValueError("--trials must be at least 1")
    if args.k < 2:
        raise ValueError("--k must be at least 2")
    check = check_probabilistic_bound(args.n, args.k, args.trials, args.seed)
    results = {
        "threshold": check.threshold,
        "max_lcs_distribution": list(check.max_lcs_per_trial),
        "violations": check.violations,
        "min_max_lcs": check.min_max_lcs,
    }
    if args.lis_csv:
        with open(args.lis_csv, "w", encoding="ascii", newline="") as f:
            f.write(sample_lis(args.n, args.trials, args.seed).to_csv())
        results["lis_csv"] = args.lis_csv
    results["elapsed_ms"] = _elapsed_ms(t0, args.timing)
    params = {"n": args.n, "k": args.k, "trials": args.trials, "seed": args.seed}
    _print_report("sample", params, results, check.all_below)
    return 0 if check.all_below else 1


def _cmd_distance(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    s = read_permset(args.path)
    report = code_report(s)
    results = {"code": report.as_dict(), "elapsed_ms": _elapsed_ms(t0, args.timing)}
    _print_report("distance", {"path": args.path}, results, True)
    return 0


# -- bench --

_GRID_KEYS = {"algebraic": ("k", "s1"), "hadamard": ("k", "s"), "random": ("n", "k")}


def _parse_grid(spec: str) -> list[tuple[str, dict[str, int]]]:
    head, *parts = spec.split(":")
    if head not in _GRID_KEYS:
        raise ValueError(f"unknown grid construction {head!r}")
    wanted = _GRID_KEYS[head]
    lists: dict[str, list[int]] = {}
    for part in parts:
        key, sep, vals = part.partition("=")
        if not sep or key not in wanted:
            raise ValueError(f"bad grid component {part!r} for {head}")
        lists[key] = [int(v) for v in vals.split(",") if v]
    if set(lists) != set(wanted) or any(not v for v in lists.values()):
        raise ValueError(f"grid for {head} needs values for {wanted}")
    cells = []
    for combo in itertools.product(*(lists[key] for key in wanted)):
        cells.append((head, dict(zip(wanted, combo))))
    return cells


def _bench_row(kind: str, cell: dict[str, int], seed: int, row_idx: int, threads: int):
    if kind == "algebraic":
        k, s1 = cell["k"], cell["s1"]
        made = build_exact(k * k * s1**3, k)
        bound = 2 * made.params["p"] - 1
    elif kind == "hadamard":
        k, s = cell["k"], cell["s"]
        if k % 2 != 0:
            raise ValueError("hadamard bench rows need even k")
        made = build_hadamard_set(k, s)
        bound = s ** (k // 2 - 1)
    else:
        n, k = cell["n"], cell["k"]
        if k < 2:
            raise ValueError("random bench rows need k >= 2")
        made = random_perm_set(n, k, trial_rng(seed, row_idx))
        bound = lcs_threshold(n)
    max_lcs = lcs_all_pairs(made, threads=threads).max_pair
    return made.n, made.k, max_lcs, bound


def _cmd_bench(args: argparse.Namespace) -> int:
    cells = []
    for spec in args.grid:
        cells.extend(_parse_grid(spec))
    if not cells:
        raise ValueError("empty benchmark grid")

    def cell_n(kind: str, c: dict[str, int]) -> int:
        if kind == "algebraic":
            return c["k"] * c["k"] * c["s1"] ** 3
        if kind == "hadamard":
            return c["s"] ** (c["k"] - 1)
        return c["n"]

    cells.sort(key=lambda kc: (kc[0], cell_n(*kc), kc[1]["k"]))
    threads = _threads_from_env()
    print("construction,n,k,max_lcs,bound,elapsed_ms")
    violated = False
    for idx, (kind, cell) in enumerate(cells):
        t0 = time.perf_counter()
        n, k, max_lcs, bound = _bench_row(kind, cell, args.seed, idx, threads)
        elapsed = _elapsed_ms(t0, args.timing)
        bound_txt = repr(bound) if isinstance(bound, float) else str(bound)
        print(f"{kind},{n},{k},{max_lcs},{bound_txt},{elapsed}")
        if max_lcs > bound:
            violated = True
    return 1 if violated else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permlcs",
        description="Construct and verify permutation sets with short pairwise LCS.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a permutation set and write PERMSET v1")
    c.add_argument("kind", choices=("algebraic", "hadamard"))
    c.add_argument("--n", type=int, help="ground-set size (algebraic; optional restriction for hadamard)")
    c.add_argument("--k", type=int, required=True, help="number of permutations")
    c.add_argument("--s", type=int, help="digit base (hadamard only)")
    c.add_argument("--out", help="output PERMSET path")
    c.add_argument("--max-size", type=int, default=DEFAULT_SIZE_CAP,
                   help="reject hadamard builds with s**(k-1) above this")
    c.add_argument("--timing", action="store_true", help="report real elapsed times")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="check LCS bounds of a PERMSET file")
    v.add_argument("path")
    v.add_argument("--bound", choices=BOUND_CHOICES, default="all")
    v.add_argument("--timing", action="store_true")
    v.set_defaults(func=_cmd_verify)

    m = sub.add_parser("sample", help="max-pair LCS of seeded random k-sets vs 2e*sqrt(n)")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--trials", type=int, required=True)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--lis-csv", help="also write per-trial LIS lengths as CSV")
    m.add_argument("--timing", action="store_true")
    m.set_defaults(func=_cmd_sample)

    d = sub.add_parser("distance", help="deletion-code report of a PERMSET file")
    d.add_argument("path")
    d.add_argument("--timing", action="store_true")
    d.set_defaults(func=_cmd_distance)

    b = sub.add_parser("bench", help="max-pair LCS vs bound over a parameter grid (CSV)")
    b.add_argument("--grid", action="append", required=True, metavar="SPEC",
                   help="e.g. algebraic:k=3,4,5:s1=1,2 | hadamard:k=4:s=2,3 | random:n=100:k=3")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--timing", action="store_true")
    b.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (FormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
