"""Command-line interface: ``kerov compute | verify | convert | diagram | stanley``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import series
from .diagram import MultiRectangular, free_cumulants, s_functionals, transition_moments
from .kerov import default_threads, generalized_kerov
from .series import InsufficientOrder, TruncatedSeries
from .stanley import stanley_character
from .verification import DEFAULT_SEED, SUITES, run_suites


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("cycle lengths must be positive integers")
    return values


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def cmd_compute(args) -> int:
    parts = [args.k] if args.k is not None else args.cycles
    start = time.perf_counter()
    result = generalized_kerov(parts, threads=args.threads, backend=args.backend)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        out = result.to_json()
        if args.timing:
            out["seconds"] = round(elapsed, 3)
        print(_dump(out))
    elif args.format == "latex":
        print(result.polynomial.to_latex())
    else:
        print(result.polynomial.to_text())
    return 0


def cmd_verify(args) -> int:
    names = args.suites
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suites {unknown}; choose from {sorted(SUITES)}")
    report = run_suites(
        names,
        command=["verify"] + (args.argv or []),
        max_boxes=args.max_boxes,
        max_k=args.max_k,
        seed=args.seed,
    )
    if args.json:
        print(_dump(report.to_json()))
    else:
        for c in report.checks:
            verdict = "PASS" if c.passed else ("FAIL" if c.asserting else "NOTE")
            seed = f" seed={c.seed}" if c.seed is not None else ""
            print(f"{verdict} [{c.suite}] {c.name}{seed}")
            if not c.passed:
                print("  counterexample: " + json.dumps(c.detail, sort_keys=True))
        print(f"{report.counts['checks']} checks, {report.counts['failed']} failed, {report.seconds:.2f}s")
    return 0 if report.ok else 1


def cmd_convert(args) -> int:
    data = _read_json(args.input)
    try:
        s = TruncatedSeries.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid series JSON: {exc}")
    if s.role != args.source:
        raise UsageError(f"input series has role {s.role!r} but --from {args.source!r}")
    try:
        out = series.convert(s, args.to)
    except InsufficientOrder as exc:
        raise UsageError(str(exc))
    print(_dump(out.to_json()))
    return 0


def cmd_diagram(args) -> int:
    if args.partition is not None:
        d = MultiRectangular.from_partition(args.partition)
    else:
        try:
            d = MultiRectangular.from_json(_read_json(args.input))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"invalid diagram JSON: {exc}")
    producer = {
        "s-functionals": s_functionals,
        "moments": transition_moments,
        "free-cumulants": free_cumulants,
    }[args.to]
    print(_dump(producer(d, args.order).to_json()))
    return 0


def cmd_stanley(args) -> int:
    print(_dump(stanley_character(args.cycles, args.m, args.transitive).to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kerov", description="Kerov character polynomials by factorization counting.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute K_k or K_{k1,...,kl}")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--k", type=_positive)
    which.add_argument("--cycles", type=_int_list, help="comma-separated cycle lengths")
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.add_argument("--threads", type=_positive, default=None, help="default: $KEROV_THREADS or 1")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None, help="default: $KEROV_BACKEND or numba")
    p.add_argument("--timing", action="store_true", help="add wall time to JSON output (not byte-stable)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--max-boxes", type=_positive, default=8)
    p.add_argument("--max-k", type=_positive, default=6)
    p.add_argument("--suites", type=lambda s: [x.strip() for x in s.split(",") if x.strip()],
                   default=list(SUITES), help=f"comma-separated subset of {','.join(SUITES)}")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true", help="print the full report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between moments, free cumulants and S-functionals")
    p.add_argument("--from", dest="source", choices=series.ROLES, required=True)
    p.add_argument("--to", choices=series.ROLES, required=True)
    p.add_argument("--input", required=True, help="series JSON file, or - for stdin")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("diagram", help="functionals of a (multirectangular) diagram")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--partition", type=_int_list)
    src.add_argument("--input", help="diagram JSON file, or - for stdin")
    p.add_argument("--order", type=_positive, default=6)
    p.add_argument("--to", choices=series.ROLES, default="s-functionals")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("stanley", help="dump the Stanley polynomial of a character")
    p.add_argument("--cycles", type=_int_list, required=True)
    p.add_argument("--m", type=_positive, default=1, help="number of rectangles")
    p.add_argument("--transitive", action="store_true", help="keep only transitive factorizations")
    p.set_defaults(func=cmd_stanley)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv[1:]
    if getattr(args, "threads", 1) is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kerov {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
