"""
services/logics.py

LogicConfig fixes the value domain and the meaning of And / Or / Not for a whole
evaluation. `build_logic` turns it into a connective provider:

- BooleanLogic, KleeneLogic, BelnapLogic: fixed symbol tables
- CustomLogic: an absolute-relative alphabet with user-loaded tables
- NeutrosophicLogic: refined values under one engine, either NormEngine
  (n-norm / n-conorm of a NormFamily) or PriorityEngine (priority products)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Optional, Tuple, Union

from .connectives import (
    Bound,
    IndeterminacyMode,
    PriorityOrder,
    n_conorm,
    n_norm,
    negate,
    priority_combine,
)
from .core_values import DEFAULT_DIGITS, RefinedValue, Signature, crisp_false, crisp_true
from .errors import InfiniteDomain, SettingsError, SignatureMismatch, UnknownLiteral, UnsupportedNot
from .symbolic_logics import (
    BelnapVal,
    BoolVal,
    KleeneVal,
    SymbolicTables,
    belnap_and,
    belnap_not,
    belnap_or,
    bool_and,
    bool_not,
    bool_or,
    kleene_and,
    kleene_not,
    kleene_or,
)
from .tnorms import NormFamily

logger = logging.getLogger(__name__)

LOGIC_NAMES = ("boolean", "kleene", "belnap", "custom", "neutro")


# ==============================
# ENGINES & CONFIG
# ==============================
@dataclass(frozen=True)
class NormEngine:
    family: NormFamily = NormFamily.MIN_MAX
    mode: IndeterminacyMode = IndeterminacyMode.PESSIMISTIC


@dataclass(frozen=True)
class PriorityEngine:
    and_order: PriorityOrder
    or_order: PriorityOrder

    @classmethod
    def from_bounds(cls, sig: Signature, and_bound: Bound = Bound.LOWER, or_bound: Bound = Bound.UPPER) -> PriorityEngine:
        return cls(PriorityOrder.for_and(sig, and_bound), PriorityOrder.for_or(sig, or_bound))


Engine = Union[NormEngine, PriorityEngine]


@dataclass(frozen=True)
class LogicConfig:
    logic: str
    sig: Optional[Signature] = None
    engine: Optional[Engine] = None
    tables: Optional[SymbolicTables] = None

    def __post_init__(self):
        if self.logic not in LOGIC_NAMES:
            raise SettingsError(f"unknown logic {self.logic!r} (expected one of {', '.join(LOGIC_NAMES)})")
        if self.logic == "neutro":
            if self.sig is None or self.engine is None:
                raise SettingsError("the neutrosophic logic needs a signature and an engine")
            if isinstance(self.engine, PriorityEngine):
                for order in (self.engine.and_order, self.engine.or_order):
                    if order.sig != self.sig:
                        raise SignatureMismatch(f"priority order is for {order.sig}, logic uses {self.sig}")
        if self.logic == "custom" and self.tables is None:
            raise SettingsError("the custom logic needs connective tables")

    @classmethod
    def neutro(cls, sig: Signature, engine: Engine) -> LogicConfig:
        return cls("neutro", sig=sig, engine=engine)

    @classmethod
    def custom(cls, tables: SymbolicTables) -> LogicConfig:
        return cls("custom", tables=tables)


# ==============================
# CONNECTIVE PROVIDERS
# ==============================
class Logic:
    name = "logic"

    def __init__(self, digits: int = DEFAULT_DIGITS):
        self.digits = digits

    def domain(self) -> Tuple[Any, ...]:
        raise InfiniteDomain(f"the {self.name} logic has no finite value domain")

    def coerce(self, value: Any) -> Any:
        raise NotImplementedError

    def and_(self, x, y):
        raise NotImplementedError

    def or_(self, x, y):
        raise NotImplementedError

    def not_(self, x):
        raise NotImplementedError

    def render(self, value) -> str:
        return f"#{value.name}"

    def cell(self, value) -> str:
        return value.name

    def _unknown(self, value: Any) -> UnknownLiteral:
        shown = f"#{value}" if isinstance(value, str) else str(value)
        return UnknownLiteral(f"{shown} is not a value of the {self.name} logic")


class _EnumLogic(Logic):
    values: Any = None

    def domain(self):
        return tuple(self.values)

    def coerce(self, value):
        if isinstance(value, self.values):
            return value
        if isinstance(value, bool):
            return self.values["T" if value else "F"]
        if isinstance(value, str) and value in self.values.__members__:
            return self.values[value]
        raise self._unknown(value)


class BooleanLogic(_EnumLogic):
    name = "boolean"
    values = BoolVal

    def and_(self, x, y):
        return bool_and(x, y)

    def or_(self, x, y):
        return bool_or(x, y)

    def not_(self, x):
        return bool_not(x)

    def render(self, value) -> str:
        return "true" if value is BoolVal.T else "false"


class KleeneLogic(_EnumLogic):
    name = "kleene"
    values = KleeneVal

    def and_(self, x, y):
        return kleene_and(x, y)

    def or_(self, x, y):
        return kleene_or(x, y)

    def not_(self, x):
        return kleene_not(x)


class BelnapLogic(_EnumLogic):
    name = "belnap"
    values = BelnapVal

    def and_(self, x, y):
        return belnap_and(x, y)

    def or_(self, x, y):
        return belnap_or(x, y)

    def not_(self, x):
        return belnap_not(x)


class CustomLogic(Logic):
    name = "custom"

    def __init__(self, tables: SymbolicTables, digits: int = DEFAULT_DIGITS):
        super().__init__(digits)
        self.tables = tables

    def domain(self):
        return self.tables.alphabet.symbols

    def coerce(self, value):
        if isinstance(value, str) and value in self.tables.alphabet:
            return value
        raise self._unknown(value)

    def and_(self, x, y):
        return self.tables.connective("and", 2).apply(x, y)

    def or_(self, x, y):
        return self.tables.connective("or", 2).apply(x, y)

    def not_(self, x):
        return self.tables.connective("not", 1).apply(x)

    def render(self, value) -> str:
        return f"#{value}"

    def cell(self, value) -> str:
        return value


class NeutrosophicLogic(Logic):
    name = "neutrosophic"

    def __init__(self, sig: Signature, engine: Engine, digits: int = DEFAULT_DIGITS):
        super().__init__(digits)
        self.sig = sig
        self.engine = engine

    def coerce(self, value):
        if isinstance(value, RefinedValue):
            if value.sig != self.sig:
                raise SignatureMismatch(f"value has signature {value.sig}, logic uses {self.sig}")
            return value
        if isinstance(value, bool):
            return crisp_true(self.sig) if value else crisp_false(self.sig)
        if value in ("T", "F"):
            return crisp_true(self.sig) if value == "T" else crisp_false(self.sig)
        raise self._unknown(value)

    def and_(self, x, y):
        if isinstance(self.engine, NormEngine):
            return n_norm(x, y, self.engine.family, self.engine.mode)
        return priority_combine(x, y, self.engine.and_order)

    def or_(self, x, y):
        if isinstance(self.engine, NormEngine):
            return n_conorm(x, y, self.engine.family, self.engine.mode)
        return priority_combine(x, y, self.engine.or_order)

    def not_(self, x):
        if self.sig.p != self.sig.s:
            raise UnsupportedNot(f"'~' needs p == s, signature is {self.sig}")
        return negate(x)

    def render(self, value) -> str:
        return value.to_text(self.digits)

    def cell(self, value) -> str:
        return value.to_text(self.digits)


def build_logic(cfg: LogicConfig, digits: int = DEFAULT_DIGITS) -> Logic:
    if cfg.logic == "boolean":
        logic: Logic = BooleanLogic(digits)
    elif cfg.logic == "kleene":
        logic = KleeneLogic(digits)
    elif cfg.logic == "belnap":
        logic = BelnapLogic(digits)
    elif cfg.logic == "custom":
        logic = CustomLogic(cfg.tables, digits)
    else:
        logic = NeutrosophicLogic(cfg.sig, cfg.engine, digits)
    logger.debug("logic %s ready (engine %s)", logic.name, cfg.engine)
    return logic
