"""Command-line front end.

Exit codes: 0 success, 1 parse/IO/usage errors, 2 search budget exceeded,
3 property-negative verdicts (not tame, not reduced, counterexamples found),
4 internal invariant violations.  With --json the standard output is a
single JSON document; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration, tame, templates
from .embedding import pattern_r22, pattern_s_n2
from .errors import (
    BudgetExceeded,
    InternalInvariantViolation,
    NotReduced,
    NotTame,
    PosetError,
)
from .poset import Poset
from .templates import parse_order_pair
from .textfmt import format_poset, parse_poset, poset_json

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_NEGATIVE = 3
EXIT_INTERNAL = 4


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load(path: str) -> Poset:
    return parse_poset(Path(path).read_text())


def _cmd_check(args) -> int:
    p = _load(args.file)
    report = tame.is_tame(p)
    if args.json:
        _emit_json(report.to_json())
    elif report.tame:
        print("tame")
        print(f"tame rank: {report.tame_rank}")
        if report.canonical is not None:
            print("canonical embedding:")
            for x, y in report.canonical.mapping.items():
                print(f"  {x} -> {parse_order_pair(y)}")
        else:
            print("input is not reduced; run reduce for the canonical embedding")
    else:
        print("not tame")
        print("witness:", " ".join(str(x) for x in report.witness))
    return EXIT_OK if report.tame else EXIT_NEGATIVE


def _cmd_rank(args) -> int:
    p = _load(args.file)
    rank = tame.tame_rank(p)
    if args.json:
        _emit_json({"tame_rank": rank})
    else:
        print(rank)
    return EXIT_OK


def _cmd_embed(args) -> int:
    p = _load(args.file)
    emb = tame.canonical_embedding(p)
    if args.json:
        _emit_json(emb.to_json())
    else:
        for x, y in emb.mapping.items():
            print(f"{x} -> {parse_order_pair(y)}")
    return EXIT_OK


def _cmd_reduce(args) -> int:
    p = _load(args.file)
    result = tame.reduce(p)
    if args.json:
        _emit_json(
            {
                "quotient": poset_json(result.quotient),
                "class_of": {str(x): c for x, c in result.class_of.items()},
                "representatives": [str(x) for x in result.representatives],
            }
        )
    else:
        sys.stdout.write(format_poset(result.quotient))
        for c, rep in enumerate(result.representatives):
            members = " ".join(str(x) for x in result.members(c))
            print(f"# class {c} (rep {rep}): {members}")
    return EXIT_OK


def _cmd_realize(args) -> int:
    p = _load(args.file)
    result = templates.realize(p)
    _emit_json(result.to_json())
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.samples is not None:
        report = enumeration.verify_sampled(
            args.n, args.samples, args.seed, budget=args.budget
        )
    else:
        report = enumeration.verify_proposition(
            args.n, allow_large=args.exhaustive, budget=args.budget
        )
    if args.json:
        _emit_json(report.to_json())
    else:
        print(
            f"n={report.n}: {report.total} posets, {report.tame_count} tame, "
            f"{len(report.counterexamples)} counterexamples"
        )
        for ce in report.counterexamples[:10]:
            print(f"  [{ce['index']}] {ce['check']}: {ce['detail']}")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _cmd_gen(args) -> int:
    if args.r_lambda is not None:
        p = templates.r_lambda(args.r_lambda)
    elif args.s_n2 is not None:
        p = pattern_s_n2(args.s_n2)
    elif args.r22:
        p = pattern_r22()
    elif args.cummings is not None:
        p = templates.cummings_blocks(args.cummings)
    else:
        n, prob, seed = args.random
        cfg = enumeration.GeneratorConfig(int(n), float(prob), int(seed))
        p = enumeration.random_poset(cfg)
    if args.json:
        _emit_json(poset_json(p))
    else:
        sys.stdout.write(format_poset(p))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit one JSON document on stdout"
    )
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        metavar="NODES",
        help="cap embedding-search nodes (exceeding exits 2)",
    )
    parser = argparse.ArgumentParser(
        prog="tameorders",
        description="Analyze tame finite partial orders.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_check = sub.add_parser("check", parents=[common], help="tameness verdict")
    p_check.add_argument("file")
    p_check.set_defaults(run=_cmd_check)

    p_rank = sub.add_parser("rank", parents=[common], help="tame rank")
    p_rank.add_argument("file")
    p_rank.set_defaults(run=_cmd_rank)

    p_embed = sub.add_parser(
        "embed", parents=[common], help="canonical coordinate embedding"
    )
    p_embed.add_argument("file")
    p_embed.set_defaults(run=_cmd_embed)

    p_reduce = sub.add_parser(
        "reduce", parents=[common], help="signature quotient and class map"
    )
    p_reduce.add_argument("file")
    p_reduce.set_defaults(run=_cmd_reduce)

    p_realize = sub.add_parser(
        "realize", parents=[common], help="restriction of an inflated template"
    )
    p_realize.add_argument("file")
    p_realize.set_defaults(run=_cmd_realize)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="oracle sweep over small posets"
    )
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument(
        "--exhaustive",
        action="store_true",
        help="force exhaustive mode (allows the slow n=6 sweep)",
    )
    p_verify.add_argument("--samples", type=int, default=None, metavar="K")
    p_verify.add_argument("--seed", type=int, default=0, metavar="S")
    p_verify.set_defaults(run=_cmd_verify)

    p_gen = sub.add_parser("gen", parents=[common], help="write a poset to stdout")
    which = p_gen.add_mutually_exclusive_group(required=True)
    which.add_argument("--r-lambda", type=int, metavar="L")
    which.add_argument("--s-n2", type=int, metavar="N")
    which.add_argument("--r22", action="store_true")
    which.add_argument("--cummings", type=int, metavar="O")
    which.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"))
    p_gen.set_defaults(run=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except NotTame as exc:
        if args.json:
            _emit_json({"error": "not-tame", "witness": [str(x) for x in exc.witness]})
        print(exc, file=sys.stderr)
        return EXIT_NEGATIVE
    except NotReduced as exc:
        if args.json:
            _emit_json({"error": "not-reduced"})
        print(exc, file=sys.stderr)
        return EXIT_NEGATIVE
    except BudgetExceeded as exc:
        print(exc, file=sys.stderr)
        return EXIT_BUDGET
    except InternalInvariantViolation as exc:
        print(exc, file=sys.stderr)
        return EXIT_INTERNAL
    except (PosetError, OSError, ValueError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
