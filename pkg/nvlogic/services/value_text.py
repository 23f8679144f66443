"""
services/value_text.py

Text forms shared by the CLI, assignment files and formulas:

    NV(p,r,s)[t1, ..., tp | i1, ..., ir | f1, ..., fs]

each component a decimal scalar `0.35` or an interval `0.2..0.4`; whitespace is
insignificant inside the brackets. Literals are `true`, `false`, `#SYM` or an
NV value.
"""

from __future__ import annotations

from typing import Union

from parsy import ParseError, eof, generate, regex, string

from .core_values import DEFAULT_DIGITS, RefinedValue, Signature, make_refined
from .errors import FormulaSyntaxError, UnknownLiteral
from .symbolic_logics import KNOWN_SYMBOLS

# bool for true/false, str for a #SYM name, RefinedValue for NV(...)[...]
Literal = Union[bool, str, RefinedValue]

spaces = regex(r"\s*")


def lexeme(p):
    return p << spaces


def token(s: str):
    return lexeme(string(s))


number = lexeme(regex(r"[-+]?(?:[0-9]+(?:\.[0-9]+)?|\.[0-9]+)").map(float)).desc("number")
integer = lexeme(regex(r"[0-9]+").map(int)).desc("integer")


@generate
def component():
    lo = yield number
    hi = yield (token("..") >> number).optional()
    return (lo, lo if hi is None else hi)


# trailing comma tolerated: [1,|1|0]
block = component.sep_by(token(","), min=1) << token(",").optional()


@generate
def nv_value():
    yield token("NV")
    yield token("(")
    p = yield integer
    yield token(",")
    r = yield integer
    yield token(",")
    s = yield integer
    yield token(")")
    yield token("[")
    t = yield block
    yield token("|")
    i = yield block
    yield token("|")
    f = yield block
    yield token("]")
    return make_refined(Signature(p, r, s), t, i, f)


def _known_symbol(text: str) -> str:
    name = text[1:]
    if name not in KNOWN_SYMBOLS:
        raise UnknownLiteral(f"unknown symbol literal {text}")
    return name


symbol = lexeme(regex(r"#[A-Za-z_][A-Za-z0-9_]*")).desc("symbol literal").map(_known_symbol)
boolean = lexeme(regex(r"(true|false)(?![A-Za-z0-9_])")).map(lambda word: word == "true").desc("true or false")
literal = nv_value | symbol | boolean


# ==============================
# ERROR POSITIONS
# ==============================
def syntax_error(text: str, e: ParseError, line_offset: int = 0) -> FormulaSyntaxError:
    """1-based line/column for a parsy failure index."""
    index = e.index
    line = text.count("\n", 0, index) + 1 + line_offset
    column = index - (text.rfind("\n", 0, index) + 1) + 1
    found = "end of input" if index >= len(text) else repr(text[index])
    return FormulaSyntaxError(f"unexpected {found}", line, column, e.expected)


def _parse_all(parser, text: str):
    try:
        return (spaces >> parser << eof).parse(text)
    except ParseError as e:
        raise syntax_error(text, e) from None


def parse_value(text: str) -> RefinedValue:
    return _parse_all(nv_value, text)


def parse_literal(text: str) -> Literal:
    return _parse_all(literal, text)


def format_literal(value: Literal, digits: int = DEFAULT_DIGITS) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return f"#{value}"
    return value.to_text(digits)
