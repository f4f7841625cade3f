"""Command-line interface.

Subcommands: embed (embedding queries), gen (stream sequence records),
verify (explicit / symbolic / cross-validating audits), search (exact tiny
cases), bound (the arithmetic chain), simulate (leg-elimination tables), and
export-dot. Exit codes: 0 ordinary output or "no embedding", 10 embedding
found, 2 parse or input error, 3 capacity error, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .construction import (
    EXPORT_RECORD_CAP,
    LegState,
    bound_breakdown,
    build_full_sequence,
    iter_sequence,
    label_of,
    leg_elimination_steps,
    simulate_leg_elimination,
    total_bound,
)
from .embedding import inf_embeds_witness
from .errors import CapacityError, ConstructionError, TreeParseError
from .families import (
    Explicit,
    TreeDescriptor,
    expand,
    family_embeds,
    format_descriptor,
    parse_descriptor,
)
from .search import DEFAULT_STEP_CAP, longest_bad_sequence
from .trees import parse_tree, to_dot
from .verify import (
    cross_validate,
    format_report,
    report_to_dict,
    verify_explicit_sequence,
    verify_phases,
)

EXIT_OK = 0
EXIT_EMBEDS = 10
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_INTERNAL = 4

WITNESS_EXPANSION_CAP = 10_000
PREFIX_MATERIALIZATION_CAP = 2_000
DEFAULT_CROSS_BUDGET = 160


def _parse_tree_argument(text: str) -> TreeDescriptor:
    if text.startswith("("):
        return Explicit(parse_tree(text))
    return parse_descriptor(text)


def _default_jobs() -> int:
    return min(8, os.cpu_count() or 1)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weaktree",
        description="Rooted-tree inf-embedding toolkit: generation, search, and audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="decide whether tree1 inf-embeds into tree2")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--witness", action="store_true", help="also print a vertex map")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("gen", help="stream sequence records position<TAB>label<TAB>descriptor")
    p.add_argument("--from", dest="start", type=int, required=True, metavar="POS")
    p.add_argument("--to", dest="stop", type=int, required=True, metavar="POS")
    p.add_argument("--force", action="store_true", help="lift the record cap")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="audit the built-in sequence")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--prefix", type=int, metavar="COUNT", help="materialize and check positions 1..COUNT")
    mode.add_argument("--symbolic", action="store_true", help="family-level audit of the whole sequence")
    mode.add_argument("--cross", type=int, metavar="SIZE", help="explicit/symbolic agreement up to SIZE vertices")
    p.add_argument("--budget", type=int, default=DEFAULT_CROSS_BUDGET,
                   help="position budget for --cross (0 means no cap)")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("search", help="longest bad sequence for tiny slack values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP)
    p.add_argument("--size-cap", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bound", help="leg-elimination step counts and the full arithmetic chain")
    p.add_argument("--x", type=int, default=None, help="evaluate the step formula at x")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("simulate", help="run the leg-elimination process and print its sweep table")
    p.add_argument("--stem", type=int, required=True)
    p.add_argument("--depth", type=int, required=True, help="starting leg length in vertices")
    p.add_argument("--label", type=int, required=True, help="starting vertex-budget label")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("export-dot", help="emit a DOT digraph for a tree")
    p.add_argument("tree")

    return parser


def _cmd_embed(args: argparse.Namespace) -> int:
    d1 = _parse_tree_argument(args.tree1)
    d2 = _parse_tree_argument(args.tree2)
    embeds = family_embeds(d1, d2)
    witness = None
    if embeds and args.witness:
        t1 = expand(d1, WITNESS_EXPANSION_CAP)
        t2 = expand(d2, WITNESS_EXPANSION_CAP)
        witness = inf_embeds_witness(t1, t2)
    if args.format == "json":
        payload = {
            "embeds": embeds,
            "witness": [list(p) for p in witness.pairs] if witness else None,
        }
        print(json.dumps(payload))
    else:
        print("inf-embedding found" if embeds else "no inf-embedding")
        if witness:
            for u, v in witness.pairs:
                print(f"  {u} -> {v}")
    return EXIT_EMBEDS if embeds else EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    seq = build_full_sequence()
    if args.start < 1 or args.stop > seq.total_length or args.start > args.stop:
        raise ValueError(f"positions must satisfy 1 <= from <= to <= {seq.total_length}")
    count = args.stop - args.start + 1
    if count > EXPORT_RECORD_CAP and not args.force:
        raise CapacityError(
            f"{count} records exceed the cap of {EXPORT_RECORD_CAP}; pass --force to override"
        )
    for pos, label, desc in iter_sequence(seq, args.start, args.stop):
        if args.format == "json":
            print(json.dumps({"position": pos, "label": label, "descriptor": format_descriptor(desc)}))
        else:
            print(f"{pos}\t{label}\t{format_descriptor(desc)}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    jobs = max(1, args.jobs)
    if args.prefix is not None:
        if args.prefix < 1:
            raise ValueError("--prefix needs a positive count")
        if args.prefix > PREFIX_MATERIALIZATION_CAP:
            raise CapacityError(
                f"--prefix materialization capped at {PREFIX_MATERIALIZATION_CAP} positions"
            )
        seq = build_full_sequence()
        trees = [
            expand(desc, label_of(args.prefix))
            for _, _, desc in iter_sequence(seq, 1, args.prefix)
        ]
        report = verify_explicit_sequence(trees, 3, jobs=jobs)
    elif args.symbolic:
        report = verify_phases(build_full_sequence())
    else:
        if args.cross < 0:
            raise ValueError("--cross needs a nonnegative size limit")
        budget = None if args.budget == 0 else args.budget
        report = cross_validate(build_full_sequence(), args.cross, budget, jobs=jobs)
    if args.format == "json":
        print(json.dumps(report_to_dict(report)))
    else:
        print(format_report(report), end="")
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    result = longest_bad_sequence(args.n, args.step_cap, args.size_cap)
    if args.format == "json":
        payload = {
            "n": result.n,
            "length": result.length,
            "witness": list(result.witness),
            "exhausted": result.exhausted,
            "step_cap": result.step_cap,
            "size_cap": result.size_cap,
        }
        print(json.dumps(payload))
    else:
        tag = "exhausted" if result.exhausted else "not exhausted"
        print(
            f"n={result.n}: length {result.length}, {tag} "
            f"(step cap {result.step_cap}, size cap {result.size_cap})"
        )
        for k, code in enumerate(result.witness, start=1):
            print(f"{k}\t{k + result.n}\texplicit:{code}")
    return EXIT_OK


def _cmd_bound(args: argparse.Namespace) -> int:
    if args.x is not None:
        steps = leg_elimination_steps(args.x)
        if args.format == "json":
            print(json.dumps({"x": args.x, "steps": steps}))
        else:
            print(steps)
        return EXIT_OK
    rows = bound_breakdown()
    if args.format == "json":
        print(json.dumps({"breakdown": [[name, value] for name, value in rows],
                          "bound": total_bound()}))
    else:
        for name, value in rows:
            print(f"{name}: {value}")
        print(total_bound())
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    initial = LegState(args.label, args.stem, args.depth, args.depth)
    run = simulate_leg_elimination(initial)
    checkpoints = run.checkpoints
    if args.format == "json":
        payload = {
            "initial": {"label": initial.label, "stem": initial.stem,
                        "left": initial.left, "right": initial.right},
            "checkpoints": [[s.label, s.left, s.right] for s in checkpoints],
            "steps": run.step_count,
        }
        print(json.dumps(payload))
    else:
        for before, after, sweep in zip(checkpoints, checkpoints[1:], run.sweeps):
            print(f"{before.label} -> {after.label}: {sweep.length}")
        final = checkpoints[-1]
        print(f"total: {run.step_count}")
        print(f"end: label {final.label}, legs ({final.left}, {final.right})")
    return EXIT_OK


def _cmd_export_dot(args: argparse.Namespace) -> int:
    tree = expand(_parse_tree_argument(args.tree), WITNESS_EXPANSION_CAP)
    print(to_dot(tree), end="")
    return EXIT_OK


_HANDLERS = {
    "embed": _cmd_embed,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "bound": _cmd_bound,
    "simulate": _cmd_simulate,
    "export-dot": _cmd_export_dot,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except TreeParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
