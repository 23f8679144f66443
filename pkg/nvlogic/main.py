#!/usr/bin/env python3
"""
main.py

Command-line front end.

    python -m nvlogic.main eval  FORMULA [-a FILE] [logic flags]
    python -m nvlogic.main table FORMULA [logic flags]
    python -m nvlogic.main check VALUE [--deps T2,I3 ...]
    python -m nvlogic.main convert VALUE --to fuzzy|intuitionistic|normalized

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 constraint violation, 2 usage / parse / evaluation error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from nvlogic.services.connectives import (
    Bound,
    IndeterminacyMode,
    PriorityOrder,
    project_fuzzy,
    project_intuitionistic,
)
from nvlogic.services.core_values import (
    DependencyGroups,
    Signature,
    check_constraint,
    format_number,
    normalize,
)
from nvlogic.services.errors import LogicError, SettingsError
from nvlogic.services.formula import evaluate, load_assignments, parse, render_table, truth_table
from nvlogic.services.logics import LogicConfig, NormEngine, PriorityEngine, build_logic
from nvlogic.services.settings import CHOICES, load_settings
from nvlogic.services.symbolic_logics import load_tables
from nvlogic.services.tnorms import NormFamily
from nvlogic.services.value_text import parse_value

logger = logging.getLogger("nvlogic")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

NORM_FLAGS = ("family", "mode")
PRIORITY_FLAGS = ("bound", "and_order", "or_order")


# ---- Argument parsing ----
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nvlogic", description="Many-valued and refined neutrosophic logic engine")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--settings", help="settings JSON (default: nvlogic/storage/settings.json or $NVLOGIC_SETTINGS)")
    sub = parser.add_subparsers(dest="command", required=True)

    logic_flags = argparse.ArgumentParser(add_help=False)
    group = logic_flags.add_argument_group("logic")
    group.add_argument("--logic", choices=CHOICES["logic"])
    group.add_argument("--sig", help="p,r,s or one of triad, four, five, seven")
    group.add_argument("--engine", choices=CHOICES["engine"])
    group.add_argument("--family", choices=CHOICES["family"])
    group.add_argument("--mode", choices=CHOICES["mode"])
    group.add_argument("--bound", choices=CHOICES["bound"], help="priority preset for both AND and OR")
    group.add_argument("--and-order", help="priority chain for AND, e.g. T1<I1<F1")
    group.add_argument("--or-order", help="priority chain for OR, e.g. T>I>F")
    group.add_argument("--tables", help="connective table file (custom logic)")

    p_eval = sub.add_parser("eval", parents=[logic_flags], help="evaluate a formula")
    p_eval.add_argument("formula")
    p_eval.add_argument("-a", "--assign", help="assignment file, one `name = value` per line")

    p_table = sub.add_parser("table", parents=[logic_flags], help="truth table of a formula")
    p_table.add_argument("formula")

    p_check = sub.add_parser("check", help="check the sum bounds of an NV value")
    p_check.add_argument("value")
    p_check.add_argument("--deps", action="append", default=[], help="dependency group, e.g. T2,I3 (repeatable)")

    p_convert = sub.add_parser("convert", help="project or normalize an NV value")
    p_convert.add_argument("value")
    p_convert.add_argument("--to", required=True, choices=("fuzzy", "intuitionistic", "normalized"))
    p_convert.add_argument("--target", type=float, default=1.0, help="total for --to normalized (default 1)")
    return parser


def _given(args: argparse.Namespace, names) -> List[str]:
    return ["--" + name.replace("_", "-") for name in names if getattr(args, name, None) is not None]


def validate_flags(parser: argparse.ArgumentParser, args: argparse.Namespace, settings: dict) -> None:
    """Reject flag combinations that name two engines or an engine without the neutrosophic logic."""
    if not hasattr(args, "logic"):
        return
    logic = args.logic or settings["logic"]
    norm_flags = _given(args, NORM_FLAGS)
    priority_flags = _given(args, PRIORITY_FLAGS)

    if args.tables is not None and logic != "custom":
        parser.error("--tables needs --logic custom")
    if logic != "neutro":
        stray = _given(args, ("sig", "engine")) + norm_flags + priority_flags
        if stray:
            parser.error(f"{', '.join(stray)} need --logic neutro")
        return
    if norm_flags and priority_flags:
        parser.error(f"{', '.join(norm_flags)} and {', '.join(priority_flags)} belong to different engines")
    if args.engine == "norm" and priority_flags:
        parser.error(f"{', '.join(priority_flags)} need --engine priority")
    if args.engine == "priority" and norm_flags:
        parser.error(f"{', '.join(norm_flags)} need --engine norm")


# ---- Logic configuration ----
def resolve_config(args: argparse.Namespace, settings: dict) -> LogicConfig:
    """Explicit flags first, settings for everything left unset."""
    logic = args.logic or settings["logic"]
    if logic == "custom":
        if args.tables is None:
            raise SettingsError("--logic custom needs --tables FILE")
        return LogicConfig.custom(load_tables(args.tables))
    if logic != "neutro":
        return LogicConfig(logic)

    sig = Signature.parse(args.sig or settings["sig"])
    engine = args.engine
    if engine is None:
        # engine-specific flags pick the engine when --engine is absent
        engine = "priority" if _given(args, PRIORITY_FLAGS) else "norm" if _given(args, NORM_FLAGS) else settings["engine"]

    if engine == "norm":
        family = NormFamily.parse(args.family or settings["family"])
        mode = IndeterminacyMode.parse(args.mode or settings["mode"])
        return LogicConfig.neutro(sig, NormEngine(family, mode))

    bound = args.bound or settings["bound"]
    if bound is None:
        priority = PriorityEngine.from_bounds(sig)
    else:
        bound = Bound.parse(bound)
        priority = PriorityEngine.from_bounds(sig, bound, bound)
    and_order = PriorityOrder.parse(args.and_order, sig) if args.and_order else priority.and_order
    or_order = PriorityOrder.parse(args.or_order, sig) if args.or_order else priority.or_order
    logger.debug("priority engine: and %s, or %s", and_order, or_order)
    return LogicConfig.neutro(sig, PriorityEngine(and_order, or_order))


# ---- Commands ----
def cmd_eval(args: argparse.Namespace, settings: dict) -> int:
    cfg = resolve_config(args, settings)
    logic = build_logic(cfg, settings["digits"])
    formula = parse(args.formula)
    env = load_assignments(args.assign) if args.assign else {}
    result = evaluate(formula, env, logic)
    print(logic.render(result))
    return EXIT_OK


def cmd_table(args: argparse.Namespace, settings: dict) -> int:
    cfg = resolve_config(args, settings)
    logic = build_logic(cfg, settings["digits"])
    print(render_table(truth_table(parse(args.formula), logic)))
    return EXIT_OK


def cmd_check(args: argparse.Namespace, settings: dict) -> int:
    digits = settings["digits"]
    value = parse_value(args.value)
    deps = DependencyGroups.from_labels(value.sig, [group.split(",") for group in args.deps])
    report = check_constraint(value, deps)

    relation = "<=" if report.global_passed else ">"
    print(f"sum {report.total.to_text(digits)} {relation} {report.bound} {'pass' if report.global_passed else 'fail'}")
    for group in report.groups:
        relation = "<=" if group.passed else ">"
        status = "pass" if group.passed else "fail"
        print(f"group {'+'.join(group.labels)}: {format_number(group.total, digits)} {relation} 1 {status}")
    if report.note:
        print(f"note: {report.note}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_convert(args: argparse.Namespace, settings: dict) -> int:
    digits = settings["digits"]
    value = parse_value(args.value)
    if args.to == "fuzzy":
        result, lossy = project_fuzzy(value)
        flag = f"lossy: {str(lossy).lower()}"
    elif args.to == "intuitionistic":
        result, clamped = project_intuitionistic(value)
        flag = f"clamped: {str(clamped).lower()}"
    else:
        result, flag = normalize(value, args.target), None
    print(result.to_text(digits))
    if flag:
        print(flag, file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "check": cmd_check,
    "convert": cmd_convert,
}


# ---- Main ----
def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="[%(name)s] %(message)s",
        stream=sys.stderr,
    )

    try:
        settings = load_settings(args.settings)
    except LogicError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    validate_flags(parser, args, settings)

    try:
        return COMMANDS[args.command](args, settings)
    except LogicError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except RecursionError:
        print("error: formula nests too deeply", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
