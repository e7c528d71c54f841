"""Command-line interface: solve, gen, verify, and bench subcommands.

Output is line-oriented key=value text so runs diff cleanly; identical
invocations produce byte-identical stdout (bench timing columns aside).

Exit codes: 0 success, 1 verification mismatch, 2 input or usage error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import emit_csv, run_scaling
from .errors import Error, SizeError
from .heldkarp import DEFAULT_SIZE_CAP, solve
from .instance import generate_random, parse_instance, serialize_instance
from .oracle import BRUTE_FORCE_MAX_N, path_length, solve_brute_force

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SIZE = 3

_VERIFY_MAX_DIST = 100


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsppath",
        description="Exact fixed-endpoint traveling salesman path solver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a tspd instance file")
    p.add_argument("file", help="instance file in tspd format")
    p.add_argument("--path", action="store_true", help="also print an optimal path")
    p.add_argument(
        "--force",
        action="store_true",
        help=f"allow n > {DEFAULT_SIZE_CAP} (table memory grows as 2^n)",
    )

    p = sub.add_parser("gen", help="print a seeded random instance")
    p.add_argument("--n", type=int, required=True, help="city count")
    p.add_argument("--seed", type=int, required=True, help="generator seed")
    p.add_argument("--max-dist", type=int, default=100, help="largest distance (default 100)")

    p = sub.add_parser("verify", help="cross-check the solver against brute force")
    p.add_argument("--max-n", type=int, default=8, help="largest n to check (default 8)")
    p.add_argument("--count", type=int, default=20, help="instances per n (default 20)")
    p.add_argument("--seed", type=int, default=42, help="base seed (default 42)")

    p = sub.add_parser("bench", help="measure solve runtime scaling, emit CSV")
    p.add_argument("--min-n", type=int, required=True, help="smallest n")
    p.add_argument("--max-n", type=int, required=True, help="largest n")
    p.add_argument("--seed", type=int, default=42, help="base seed (default 42)")
    p.add_argument("--max-dist", type=int, default=100, help="largest distance (default 100)")
    p.add_argument("--reps", type=int, default=3, help="repetitions per n (default 3)")
    p.add_argument("--csv", help="write CSV here instead of stdout")
    return parser


def _cmd_solve(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    inst = parse_instance(text)
    sol = solve(inst, size_cap=None if args.force else DEFAULT_SIZE_CAP)
    print(f"length={sol.length} states={sol.states_computed}")
    if args.path:
        print("path=" + ",".join(str(c) for c in sol.path))
    return EXIT_OK


def _cmd_gen(args) -> int:
    inst = generate_random(args.n, args.max_dist, args.seed)
    sys.stdout.write(serialize_instance(inst))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.max_n < 2 or args.count < 1:
        raise Error(f"need --max-n >= 2 and --count >= 1, got {args.max_n}, {args.count}")
    if args.max_n > BRUTE_FORCE_MAX_N:
        raise SizeError(
            f"--max-n {args.max_n} exceeds the brute-force cap {BRUTE_FORCE_MAX_N}"
        )
    checked = 0
    mismatches = 0
    for n in range(2, args.max_n + 1):
        for k in range(args.count):
            inst = generate_random(n, _VERIFY_MAX_DIST, args.seed + k)
            got = solve(inst)
            want = solve_brute_force(inst)
            checked += 1
            ok = (
                got.length == want.length
                and path_length(inst, got.path) == got.length
                and path_length(inst, want.path) == want.length
            )
            if not ok:
                mismatches += 1
                print(
                    f"mismatch n={n} seed={args.seed + k}: "
                    f"solver={got.length} brute={want.length}"
                )
    print(
        f"verify: n=2..{args.max_n} count={args.count} seed={args.seed} "
        f"checked={checked} mismatches={mismatches}"
    )
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def _cmd_bench(args) -> int:
    report = run_scaling(args.min_n, args.max_n, args.seed, args.max_dist, args.reps)
    text = emit_csv(report)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def run_cli(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handlers = {
        "solve": _cmd_solve,
        "gen": _cmd_gen,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run_cli(sys.argv[1:]))
