"""Command-line front end: subcommand dispatch and table/JSON emission.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 internal invariant violation.  All JSON output carries a top-level
"schema" field and is emitted with sorted keys, so identical inputs produce
identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .homext import ext_dim, hom_dim
from .kronecker import epiclass_catalog, extends_along_all, extension_matrix
from .localization import full_turn_witness, generator_system, wide_closure_description
from .tilting import (
    BranchModule,
    BranchViolation,
    Pair,
    build_cotilting,
    build_tilting,
    enumerate_branch_modules,
)
from .tubes import (
    ConfigurationError,
    InvariantViolation,
    TubeConfig,
    parse_segment,
)
from .verify import run_suites

SCHEMA = "regulus/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse hook
        raise UsageError(message)


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _load_config(path: str) -> TubeConfig:
    return TubeConfig.from_json(_load_json(path))


def _load_pair(path: str) -> Pair:
    return Pair.from_json(_load_json(path))


def _parse_ranks(text: str) -> tuple[int, ...]:
    try:
        ranks = tuple(int(part) for part in text.split(",") if part)
    except ValueError as exc:
        raise UsageError(f"bad rank list {text!r}") from exc
    if not ranks or any(r < 1 for r in ranks):
        raise UsageError(f"bad rank list {text!r}")
    return ranks


def _parse_points(text: str) -> tuple[str, ...]:
    return tuple(sorted({p for p in (part.strip() for part in text.split(",")) if p}))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_dims(args, fn) -> int:
    config = _load_config(args.config)
    x = parse_segment(config, args.x)
    y = parse_segment(config, args.y)
    print(fn(x, y))
    return EXIT_OK


def _cmd_validate_branch(args) -> int:
    config = _load_config(args.config)
    summands = [parse_segment(config, text) for text in args.segments]
    try:
        branch = BranchModule.of(summands)
    except BranchViolation as exc:
        _emit({"schema": SCHEMA, "ok": False, "diagnostic": str(exc)})
        return EXIT_VERIFICATION
    _emit({"schema": SCHEMA, "ok": True, "summands": [str(s) for s in branch.summands]})
    return EXIT_OK


def _cmd_build_tilting(args) -> int:
    _emit(build_tilting(_load_pair(args.pair)).to_json())
    return EXIT_OK


def _cmd_build_cotilting(args) -> int:
    _emit(build_cotilting(_load_pair(args.pair)).to_json())
    return EXIT_OK


def _cmd_enumerate_branch(args) -> int:
    config = _load_config(args.config)
    modules = [
        [str(s) for s in bm.summands] for bm in enumerate_branch_modules(config)
    ]
    _emit({"schema": SCHEMA, "count": len(modules), "modules": modules})
    return EXIT_OK


def _cmd_localize(args) -> int:
    pair = _load_pair(args.pair)
    _emit(
        {
            "schema": SCHEMA,
            "generators": generator_system(pair).to_json(),
            "wide_description": wide_closure_description(pair).to_json(),
        }
    )
    return EXIT_OK


def _cmd_witness(args) -> int:
    pair = _load_pair(args.pair)
    s = parse_segment(pair.config, args.quasi_simple)
    _emit(full_turn_witness(s, pair).to_json())
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.len_bound_mult < 1:
        raise UsageError("--len-bound-mult must be >= 1")
    report = run_suites(_parse_ranks(args.ranks), args.len_bound_mult)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def _kronecker_text(silting, epis, cells) -> str:
    headers = ["T \\ epi"] + [str(e) for e in epis] + ["all"]
    rows = []
    for t in silting:
        marks = ["+" if cells[(str(t), str(e))] else "-" for e in epis]
        marks.append("+" if extends_along_all(t, epis) else "-")
        rows.append([str(t)] + marks)
    widths = [
        max(len(row[i]) for row in [headers] + rows) for i in range(len(headers))
    ]
    lines = []
    for row in [headers] + rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _cmd_kronecker(args) -> int:
    if args.max_index < 1:
        raise UsageError("--max-index must be >= 1")
    points = _parse_points(args.points)
    silting, epis, cells = extension_matrix(args.max_index, points)
    if args.format == "text":
        print(_kronecker_text(silting, epis, cells))
        return EXIT_OK
    entries = []
    for t in silting:
        entries.append(
            {
                "silting": str(t),
                "gen_class": t.gen_class,
                "is_tilting": t.is_tilting,
                "is_minimal": t.is_minimal,
                "extends_along_all": extends_along_all(t, epis),
                "cells": {str(e): cells[(str(t), str(e))] for e in epis},
            }
        )
    _emit(
        {
            "schema": SCHEMA,
            "max_index": args.max_index,
            "points": list(points),
            "epiclasses": [
                {
                    "label": str(e),
                    "bireflective": str(e.bireflective),
                    "surjective": e.surjective,
                }
                for e in epis
            ],
            "entries": entries,
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="regulus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("hom", hom_dim), ("ext", ext_dim)):
        p = sub.add_parser(name, help=f"print the {name} dimension of a segment pair")
        p.add_argument("--config", required=True, help="tube configuration JSON file")
        p.add_argument("x")
        p.add_argument("y")
        p.set_defaults(handler=lambda a, f=fn: _cmd_dims(a, f))

    p = sub.add_parser("validate-branch", help="check segments form a branch module")
    p.add_argument("--config", required=True)
    p.add_argument("segments", nargs="*", metavar="SEGMENT")
    p.set_defaults(handler=_cmd_validate_branch)

    p = sub.add_parser("build-tilting", help="tilting descriptor of a pair")
    p.add_argument("--pair", required=True, help="pair JSON file")
    p.set_defaults(handler=_cmd_build_tilting)

    p = sub.add_parser("build-cotilting", help="cotilting descriptor of a pair")
    p.add_argument("--pair", required=True)
    p.set_defaults(handler=_cmd_build_cotilting)

    p = sub.add_parser("enumerate-branch", help="list all branch modules of a configuration")
    p.add_argument("--config", required=True)
    p.set_defaults(handler=_cmd_enumerate_branch)

    p = sub.add_parser("localize", help="generator system and wide description of a pair")
    p.add_argument("--pair", required=True)
    p.set_defaults(handler=_cmd_localize)

    p = sub.add_parser("witness", help="filtration witness for a full-turn segment")
    p.add_argument("--pair", required=True)
    p.add_argument("--quasi-simple", required=True, dest="quasi_simple")
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    p.add_argument("--ranks", default="2,3,4")
    p.add_argument("--len-bound-mult", type=int, default=3, dest="len_bound_mult")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("kronecker", help="Kronecker extension tables")
    ksub = p.add_subparsers(dest="kronecker_command", required=True)
    table = ksub.add_parser("table", help="full (silting, epiclass) matrix")
    table.add_argument("--max-index", type=int, default=3, dest="max_index")
    table.add_argument("--points", default="")
    table.add_argument("--format", choices=("text", "json"), default="text")
    table.set_defaults(handler=_cmd_kronecker)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
