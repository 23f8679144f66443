"""
services/formula.py

Propositional formula DSL.

Grammar (precedence low -> high, `&` and `|` associate left):

    expr  := or
    or    := and ('|' and)*
    and   := unary ('&' unary)*
    unary := '~' unary | atom
    atom  := ident | literal | '(' expr ')'

Literals: true, false, #SYM, NV(p,r,s)[...]. There is no implication operator;
write `~a | b`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Any, Dict, Mapping, Tuple, Union

import pandas as pd
from parsy import ParseError, eof, generate, regex, seq

from .core_values import DEFAULT_DIGITS
from .errors import FormulaSyntaxError, UnboundVariable
from .logics import Logic, LogicConfig, build_logic
from .value_text import Literal, format_literal, lexeme, literal, nv_value, spaces, symbol, syntax_error, token

logger = logging.getLogger(__name__)

IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
KEYWORDS = ("true", "false")


# ==============================
# AST
# ==============================
@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Const:
    value: Literal

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Not:
    child: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


Formula = Union[Var, Const, Not, And, Or]


# ==============================
# PARSER
# ==============================
def _name_node(name: str) -> Formula:
    if name in KEYWORDS:
        return Const(name == "true")
    return Var(name)


identifier = lexeme(regex(IDENT)).desc("identifier")


@generate
def atom():
    node = yield (
        nv_value.map(Const)
        | symbol.map(Const)
        | identifier.map(_name_node)
        | (token("(") >> expr << token(")"))
    )
    return node


@generate
def unary():
    negations = yield token("~").many()
    node = yield atom
    for _ in negations:
        node = Not(node)
    return node


and_expr = seq(unary, (token("&") >> unary).many()).combine(lambda first, rest: reduce(And, rest, first))
or_expr = seq(and_expr, (token("|") >> and_expr).many()).combine(lambda first, rest: reduce(Or, rest, first))
expr = or_expr

formula = spaces >> expr << eof


def parse(text: str) -> Formula:
    try:
        return formula.parse(text)
    except ParseError as e:
        raise syntax_error(text, e) from None
    except RecursionError:
        raise FormulaSyntaxError("parentheses nest too deeply", 1, 1) from None


# ==============================
# PRINTER
# ==============================
def _precedence(f: Formula) -> int:
    if isinstance(f, Or):
        return 1
    if isinstance(f, And):
        return 2
    if isinstance(f, Not):
        return 3
    return 4


def _wrap(f: Formula, text: str, needed: int) -> str:
    return f"({text})" if _precedence(f) < needed else text


def _check_node(f: Formula) -> None:
    if not isinstance(f, (Var, Const, Not, And, Or)):
        raise TypeError(f"not a formula node: {f!r}")


def to_text(f: Formula, digits: int = DEFAULT_DIGITS) -> str:
    """Minimal parentheses; parse(to_text(f)) == f."""
    texts = []
    stack = [(f, False)]
    # post-order with an explicit stack: `&` / `|` chains build left-deep trees
    while stack:
        node, expanded = stack.pop()
        _check_node(node)
        if isinstance(node, Var):
            texts.append(node.name)
        elif isinstance(node, Const):
            texts.append(format_literal(node.value, digits))
        elif not expanded:
            stack.append((node, True))
            if isinstance(node, Not):
                stack.append((node.child, False))
            else:
                stack.extend(((node.right, False), (node.left, False)))
        elif isinstance(node, Not):
            texts.append("~" + _wrap(node.child, texts.pop(), 3))
        else:
            right, left = texts.pop(), texts.pop()
            if isinstance(node, And):
                texts.append(f"{_wrap(node.left, left, 2)} & {_wrap(node.right, right, 3)}")
            else:
                texts.append(f"{_wrap(node.left, left, 1)} | {_wrap(node.right, right, 2)}")
    return texts.pop()


def free_variables(f: Formula) -> Tuple[str, ...]:
    """Sorted lexicographically."""
    names = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            names.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or)):
            stack.extend((node.left, node.right))
    return tuple(sorted(names))


# ==============================
# EVALUATION
# ==============================
def _as_logic(cfg: Union[LogicConfig, Logic]) -> Logic:
    return cfg if isinstance(cfg, Logic) else build_logic(cfg)


def _evaluate(f: Formula, env: Mapping[str, Any], logic: Logic) -> Any:
    values = []
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        _check_node(node)
        if isinstance(node, Var):
            if node.name not in env:
                raise UnboundVariable(node.name)
            values.append(logic.coerce(env[node.name]))
        elif isinstance(node, Const):
            values.append(logic.coerce(node.value))
        elif not expanded:
            stack.append((node, True))
            if isinstance(node, Not):
                stack.append((node.child, False))
            else:
                # left operand is evaluated first
                stack.extend(((node.right, False), (node.left, False)))
        elif isinstance(node, Not):
            values.append(logic.not_(values.pop()))
        else:
            right, left = values.pop(), values.pop()
            values.append(logic.and_(left, right) if isinstance(node, And) else logic.or_(left, right))
    return values.pop()


def evaluate(f: Formula, env: Mapping[str, Any], cfg: Union[LogicConfig, Logic]) -> Any:
    """Bottom-up; every connective dispatches to the configured logic."""
    return _evaluate(f, env, _as_logic(cfg))


def truth_table(f: Formula, cfg: Union[LogicConfig, Logic]) -> pd.DataFrame:
    """
    One row per assignment over the free variables (sorted), rows in
    lexicographic order over the logic's declared alphabet order.
    """
    logic = _as_logic(cfg)
    domain = logic.domain()
    names = free_variables(f)
    result_column = to_text(f, logic.digits)
    if result_column in names:
        result_column = f"= {result_column}"

    rows = []
    for values in product(domain, repeat=len(names)):
        env = dict(zip(names, values))
        result = _evaluate(f, env, logic)
        rows.append([logic.cell(v) for v in values] + [logic.cell(result)])
    logger.debug("truth table for %s: %d rows", result_column, len(rows))
    return pd.DataFrame(rows, columns=[*names, result_column])


def render_table(table: pd.DataFrame) -> str:
    return table.to_string(index=False)


# ==============================
# ASSIGNMENT FILES
# ==============================
_binding = seq(lexeme(regex(IDENT)).desc("variable name") << token("="), literal)


def parse_assignments(text: str) -> Dict[str, Literal]:
    """`name = <value>` per line; `#` at line start begins a comment."""
    env: Dict[str, Literal] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            name, value = (spaces >> _binding << eof).parse(raw)
        except ParseError as e:
            raise syntax_error(raw, e, line_offset=lineno - 1) from None
        if name in KEYWORDS:
            raise FormulaSyntaxError(f"{name!r} is a keyword, not a variable name", lineno, 1)
        if name in env:
            logger.warning("line %d: %s bound again, last binding wins", lineno, name)
        env[name] = value
    return env


def load_assignments(path: str) -> Dict[str, Literal]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_assignments(f.read())
