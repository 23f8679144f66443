"""
services/symbolic_logics.py

Finite symbol-valued logics: Boolean, Kleene 3-valued, Belnap 4-valued and the
absolute-relative alphabets over TA, TR, IA, IR, FA, FR. Alphabets carry no
built-in connectives; they are loaded from a user table file:

    symbols: TA TR FA FR
    op and arity 2
    TA TA -> TA
    ...
    op not arity 1
    TA -> FA
    ...
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple

from parsy import ParseError, regex, seq, string

from .errors import BadSize, BadSymbol, Duplicate, TableError

logger = logging.getLogger(__name__)


# ==============================
# BOOLEAN & KLEENE
# ==============================
class BoolVal(Enum):
    T = "T"
    F = "F"

    @classmethod
    def of(cls, flag: bool) -> BoolVal:
        return cls.T if flag else cls.F

    def __bool__(self) -> bool:
        return self is BoolVal.T


def bool_and(x: BoolVal, y: BoolVal) -> BoolVal:
    return BoolVal.of(bool(x) and bool(y))


def bool_or(x: BoolVal, y: BoolVal) -> BoolVal:
    return BoolVal.of(bool(x) or bool(y))


def bool_not(x: BoolVal) -> BoolVal:
    return BoolVal.of(not x)


class KleeneVal(Enum):
    """Member value is the numeric image."""
    T = 1.0
    U = 0.5
    F = 0.0


def kleene_and(x: KleeneVal, y: KleeneVal) -> KleeneVal:
    return KleeneVal(min(x.value, y.value))


def kleene_or(x: KleeneVal, y: KleeneVal) -> KleeneVal:
    return KleeneVal(max(x.value, y.value))


def kleene_not(x: KleeneVal) -> KleeneVal:
    return KleeneVal(1.0 - x.value)


# ==============================
# BELNAP
# ==============================
class BelnapVal(Enum):
    # declaration order follows the conjunction table: F, U, C, T
    F = "F"
    U = "U"
    C = "C"
    T = "T"


def _belnap_table() -> Dict[Tuple[BelnapVal, BelnapVal], BelnapVal]:
    F, U, C, T = BelnapVal.F, BelnapVal.U, BelnapVal.C, BelnapVal.T
    rows = {
        F: (F, F, F, F),
        U: (F, U, F, U),
        C: (F, F, C, C),
        T: (F, U, C, T),
    }
    columns = (F, U, C, T)
    return {(x, y): cell for x, row in rows.items() for y, cell in zip(columns, row)}


BELNAP_AND = _belnap_table()


def belnap_and(x: BelnapVal, y: BelnapVal) -> BelnapVal:
    return BELNAP_AND[(x, y)]


def belnap_not(x: BelnapVal) -> BelnapVal:
    """T <-> F; U and C are fixed. Standard choice, not part of the conjunction table."""
    if x is BelnapVal.T:
        return BelnapVal.F
    if x is BelnapVal.F:
        return BelnapVal.T
    return x


def belnap_or(x: BelnapVal, y: BelnapVal) -> BelnapVal:
    """Derived by De Morgan from the conjunction table and belnap_not."""
    return belnap_not(belnap_and(belnap_not(x), belnap_not(y)))


# ==============================
# ABSOLUTE-RELATIVE ALPHABETS
# ==============================
ABSOLUTE_RELATIVE = ("TA", "TR", "IA", "IR", "FA", "FR")

# every symbol a `#SYM` literal may name
KNOWN_SYMBOLS = frozenset({"T", "F", "U", "C"} | set(ABSOLUTE_RELATIVE))


@dataclass(frozen=True)
class SymbolAlphabet:
    symbols: Tuple[str, ...]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.symbols

    def __len__(self) -> int:
        return len(self.symbols)


def make_alphabet(symbols: Sequence[str]) -> SymbolAlphabet:
    symbols = tuple(str(s).strip() for s in symbols)
    for symbol in symbols:
        if symbol not in ABSOLUTE_RELATIVE:
            raise BadSymbol(f"{symbol!r} is not one of {', '.join(ABSOLUTE_RELATIVE)}")
    seen = set()
    for symbol in symbols:
        if symbol in seen:
            raise Duplicate(f"symbol {symbol} listed twice")
        seen.add(symbol)
    if not 2 <= len(symbols) <= 6:
        raise BadSize(f"an alphabet has 2 to 6 symbols, got {len(symbols)}")
    return SymbolAlphabet(symbols)


@dataclass(frozen=True)
class ConnectiveTable:
    name: str
    arity: int
    entries: Mapping[Tuple[str, ...], str] = field(hash=False)

    def apply(self, *args: str) -> str:
        try:
            return self.entries[tuple(args)]
        except KeyError:
            raise TableError(f"connective {self.name} has no entry for {' '.join(args)}") from None


@dataclass(frozen=True)
class SymbolicTables:
    alphabet: SymbolAlphabet
    connectives: Dict[str, ConnectiveTable] = field(hash=False)

    def connective(self, name: str, arity: int) -> ConnectiveTable:
        table = self.connectives.get(name)
        if table is None:
            raise TableError(f"no {name!r} table loaded for this logic")
        if table.arity != arity:
            raise TableError(f"connective {name} has arity {table.arity}, needed {arity}")
        return table


# ---- table file grammar (one line at a time) ----
_ws = regex(r"[ \t]+")
_opt_ws = regex(r"[ \t]*")
_symbol = regex(r"[A-Za-z_][A-Za-z0-9_]*").desc("symbol")
_header = string("symbols:") >> (_opt_ws >> _symbol).at_least(1) << _opt_ws
_op_line = seq(
    string("op") >> _ws >> regex(r"[A-Za-z_][A-Za-z0-9_]*").desc("connective name"),
    _ws >> string("arity") >> _ws >> regex(r"[12]").map(int).desc("arity 1 or 2"),
) << _opt_ws
_entry = seq((_symbol << _opt_ws).at_least(1), string("->") >> _opt_ws >> _symbol << _opt_ws)


def _parse_line(parser, line: str, lineno: int):
    try:
        return parser.parse(line)
    except ParseError as e:
        raise TableError(f"line {lineno}, column {e.index + 1}: expected {', '.join(sorted(e.expected))}") from None


def _close_block(tables: Dict[str, ConnectiveTable], alphabet: SymbolAlphabet, current: Optional[ConnectiveTable]) -> None:
    if current is None:
        return
    need = len(alphabet) ** current.arity
    if len(current.entries) != need:
        missing = [args for args in product(alphabet.symbols, repeat=current.arity) if args not in current.entries]
        raise TableError(
            f"connective {current.name} is incomplete: {len(current.entries)} of {need} entries, "
            f"first missing {' '.join(missing[0])}"
        )
    tables[current.name] = ConnectiveTable(current.name, current.arity, MappingProxyType(dict(current.entries)))


def parse_tables(text: str) -> SymbolicTables:
    alphabet: Optional[SymbolAlphabet] = None
    tables: Dict[str, ConnectiveTable] = {}
    current: Optional[ConnectiveTable] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            alphabet = make_alphabet(_parse_line(_header, line, lineno))
            continue
        if line.startswith("op ") or line.startswith("op\t"):
            _close_block(tables, alphabet, current)
            name, arity = _parse_line(_op_line, line, lineno)
            if name in tables or (current is not None and current.name == name):
                raise TableError(f"line {lineno}: connective {name} defined twice")
            current = ConnectiveTable(name, arity, {})
            continue
        if current is None:
            raise TableError(f"line {lineno}: table entry before any 'op' line")
        args, result = _parse_line(_entry, line, lineno)
        if len(args) != current.arity:
            raise TableError(f"line {lineno}: {current.name} takes {current.arity} argument(s), got {len(args)}")
        for symbol in (*args, result):
            if symbol not in alphabet:
                raise TableError(f"line {lineno}: {symbol} is not in the alphabet (table not closed)")
        if tuple(args) in current.entries:
            raise TableError(f"line {lineno}: duplicate entry for {' '.join(args)}")
        current.entries[tuple(args)] = result

    if alphabet is None:
        raise TableError("missing 'symbols:' line")
    _close_block(tables, alphabet, current)
    logger.debug("loaded %d connective table(s) over %s", len(tables), " ".join(alphabet.symbols))
    return SymbolicTables(alphabet, tables)


def load_tables(path: str) -> SymbolicTables:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise TableError(f"cannot read table file {path}: {e}") from e
    return parse_tables(text)
