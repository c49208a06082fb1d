"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 conjecture violation found,
4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, NumericalFailure
from .harness import (
    EXIT_BAD_INPUT,
    EXIT_NUMERICAL,
    ExperimentConfig,
    run_hunt,
    run_info,
    run_invariants,
    run_sample,
    run_table1,
    write_jsonl,
    write_table_csv,
)


def _add_common(parser: argparse.ArgumentParser, weight: bool = True) -> None:
    parser.add_argument("--algebra", default="A3", help="algebra spec, e.g. A3, B2, G2")
    if weight:
        parser.add_argument("--weight", help='weight spec, e.g. "[1,1,0,0]" or "fund:1,0,1"')
        parser.add_argument(
            "--weight-basis",
            choices=("bracket", "fundamental"),
            default="bracket",
            help="how a bare --weight string is read",
        )
    parser.add_argument("--seed", type=int, default=1, help="master seed (64-bit)")
    parser.add_argument("--scale", type=float, default=1.0, help="sampling std deviation")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--threads", type=int, default=1, help="worker threads for trials")
    parser.add_argument(
        "--max-weyl-order",
        type=int,
        default=1_000_000,
        help="refuse types with Weyl group order above this",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weyldelta",
        description="Spectral invariants of root-system point configurations: "
        "baselines, Monte-Carlo scans and counterexample hunts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural data and collinear baselines for one weight")
    _add_common(p)

    p = sub.add_parser("sample", help="seeded Monte-Carlo trials for one weight")
    _add_common(p)
    p.add_argument("--trials", type=int, default=1000)

    p = sub.add_parser("table1", help="the built-in 26-weight A3 scan as CSV")
    _add_common(p, weight=False)
    p.add_argument("--trials", type=int, default=1000)

    p = sub.add_parser("hunt", help="simplex-descent minimization of delta for one weight")
    _add_common(p)
    p.add_argument("--restarts", type=int, default=20)

    p = sub.add_parser("invariants", help="run the cross-module property suite")
    _add_common(p, weight=False)

    return parser


def _config_from(args: argparse.Namespace) -> ExperimentConfig:
    cfg = ExperimentConfig(algebra=args.algebra, seed=args.seed, scale=args.scale,
                           out=args.out, threads=args.threads,
                           max_weyl_order=args.max_weyl_order)
    if getattr(args, "weight", None) is not None:
        weight = args.weight
        if args.weight_basis == "fundamental" and not weight.startswith("fund:"):
            weight = "fund:" + weight
        cfg.weight = weight
    if hasattr(args, "trials"):
        cfg.trials = args.trials
    if hasattr(args, "restarts"):
        cfg.restarts = args.restarts
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = _config_from(args)
    try:
        if args.command == "info":
            info = run_info(cfg)
            for key, value in info.items():
                print(f"{key:>28}: {value}")
            return 0

        if args.command == "sample":
            records, summary, code = run_sample(cfg)
            if cfg.out:
                with open(cfg.out, "w", encoding="utf-8") as stream:
                    write_jsonl(records, stream)
                print(json.dumps(summary, indent=2))
            else:
                write_jsonl(records, sys.stdout)
                print(json.dumps(summary, indent=2), file=sys.stderr)
            if code == 3:
                print("VIOLATION: sample dropped below the collinear baseline", file=sys.stderr)
            return code

        if args.command == "table1":
            rows, code = run_table1(cfg)
            if cfg.out:
                with open(cfg.out, "w", encoding="utf-8") as stream:
                    write_table_csv(rows, stream)
            else:
                write_table_csv(rows, sys.stdout)
            for row in rows:
                if row.violation:
                    print(f"VIOLATION in row {row.weight}", file=sys.stderr)
            return code

        if args.command == "hunt":
            report, code = run_hunt(cfg)
            text = json.dumps(report, indent=2)
            if cfg.out:
                with open(cfg.out, "w", encoding="utf-8") as stream:
                    stream.write(text + "\n")
            print(text)
            return code

        if args.command == "invariants":
            results, code = run_invariants(cfg)
            for result in results:
                print(result.line())
            return code

        raise InputError(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
