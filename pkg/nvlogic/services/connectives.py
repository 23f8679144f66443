"""
services/connectives.py

Two classes of n-valued connectives over RefinedValues:
- n_norm / n_conorm: slot-wise t-norm / t-conorm of one NormFamily, with the
  indeterminacy slots combined pessimistically or optimistically
- priority products: every cross product x[a] * y[b] is credited to whichever
  of a, b ranks higher in a PriorityOrder

plus the block-swap negation and the projections onto refined fuzzy and
refined intuitionistic fuzzy values.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

import numpy as np

from .core_values import GROUP_SLACK, RefinedValue, Signature, UnitInterval
from .errors import AsymmetricSignature, InvalidOrder, OutOfRange, SignatureMismatch, UnknownName
from .tnorms import NormFamily, t_conorm, t_norm

logger = logging.getLogger(__name__)


class IndeterminacyMode(Enum):
    PESSIMISTIC = "pessimistic"
    OPTIMISTIC = "optimistic"

    @classmethod
    def parse(cls, name: str) -> IndeterminacyMode:
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise UnknownName(f"unknown indeterminacy mode {name!r} (expected pessimistic or optimistic)") from None

    @property
    def opposite(self) -> IndeterminacyMode:
        return IndeterminacyMode.OPTIMISTIC if self is IndeterminacyMode.PESSIMISTIC else IndeterminacyMode.PESSIMISTIC


class Bound(Enum):
    LOWER = "lower"
    UPPER = "upper"

    @classmethod
    def parse(cls, name: str) -> Bound:
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise UnknownName(f"unknown bound {name!r} (expected lower or upper)") from None


def _require_same_sig(x: RefinedValue, y: RefinedValue) -> None:
    if x.sig != y.sig:
        raise SignatureMismatch(f"operands have signatures {x.sig} and {y.sig}")


# ==============================
# N-NORM / N-CONORM
# ==============================
def _slotwise(op, fam: NormFamily, xs: Tuple[UnitInterval, ...], ys: Tuple[UnitInterval, ...]):
    return tuple(op(fam, a, b) for a, b in zip(xs, ys))


def n_norm(
    x: RefinedValue,
    y: RefinedValue,
    fam: NormFamily,
    mode: IndeterminacyMode = IndeterminacyMode.PESSIMISTIC,
) -> RefinedValue:
    """T slots by t-norm, F slots by t-conorm, I slots by t-conorm (pessimistic) or t-norm (optimistic)."""
    _require_same_sig(x, y)
    i_op = t_conorm if mode is IndeterminacyMode.PESSIMISTIC else t_norm
    return RefinedValue(
        x.sig,
        _slotwise(t_norm, fam, x.t, y.t),
        _slotwise(i_op, fam, x.i, y.i),
        _slotwise(t_conorm, fam, x.f, y.f),
    )


def n_conorm(
    x: RefinedValue,
    y: RefinedValue,
    fam: NormFamily,
    mode: IndeterminacyMode = IndeterminacyMode.PESSIMISTIC,
) -> RefinedValue:
    """T slots by t-conorm, F slots by t-norm, I slots by t-norm (pessimistic) or t-conorm (optimistic)."""
    _require_same_sig(x, y)
    i_op = t_norm if mode is IndeterminacyMode.PESSIMISTIC else t_conorm
    return RefinedValue(
        x.sig,
        _slotwise(t_conorm, fam, x.t, y.t),
        _slotwise(i_op, fam, x.i, y.i),
        _slotwise(t_norm, fam, x.f, y.f),
    )


# ==============================
# PRIORITY ORDERS
# ==============================
@dataclass(frozen=True)
class PriorityOrder:
    """A permutation of the n slots of `sig`, lowest priority first."""
    sig: Signature
    order: Tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(index) for index in self.order)
        if sorted(order) != list(range(self.sig.n)):
            raise InvalidOrder(f"order {order} is not a permutation of the {self.sig.n} slots of {self.sig}")
        object.__setattr__(self, "order", order)

    @classmethod
    def chain(cls, sig: Signature, blocks: str, descending: bool = False) -> PriorityOrder:
        """
        Block-wise chain. Ascending ("TIF"): T1 < .. < Tp < I1 < .. < Fs.
        Descending ("TIF"): T1 > .. > Tp > I1 > .. > Fs, stored reversed.
        """
        slots: List[int] = []
        for block in blocks:
            slots.extend(sig.block_slots(block))
        if descending:
            slots.reverse()
        return cls(sig, tuple(slots))

    # n-norm chains
    @classmethod
    def and_default(cls, sig: Signature) -> PriorityOrder:
        return cls.chain(sig, "TIF")

    @classmethod
    def and_upper(cls, sig: Signature) -> PriorityOrder:
        return cls.chain(sig, "ITF")

    # n-conorm chains
    @classmethod
    def or_default(cls, sig: Signature) -> PriorityOrder:
        return cls.chain(sig, "TIF", descending=True)

    @classmethod
    def or_lower(cls, sig: Signature) -> PriorityOrder:
        return cls.chain(sig, "TFI", descending=True)

    @classmethod
    def for_and(cls, sig: Signature, bound: Bound) -> PriorityOrder:
        return cls.and_default(sig) if bound is Bound.LOWER else cls.and_upper(sig)

    @classmethod
    def for_or(cls, sig: Signature, bound: Bound) -> PriorityOrder:
        return cls.or_default(sig) if bound is Bound.UPPER else cls.or_lower(sig)

    @classmethod
    def parse(cls, text: str, sig: Signature) -> PriorityOrder:
        """`T1<I1<F1` (lowest first) or `T>I>F` (highest first); a bare T, I or F names its whole block."""
        if "<" in text and ">" in text:
            raise InvalidOrder(f"mixed '<' and '>' in priority chain {text!r}")
        descending = ">" in text
        slots: List[int] = []
        for token in (part.strip() for part in text.split(">" if descending else "<")):
            index = sig.slot_index(token) if token else None
            if index is not None:
                slots.append(index)
            elif token.upper() in ("T", "I", "F"):
                slots.extend(sig.block_slots(token.upper()))
            else:
                raise InvalidOrder(f"unknown slot {token!r} in priority chain {text!r}")
        if descending:
            slots.reverse()
        return cls(sig, tuple(slots))

    def labels(self) -> Tuple[str, ...]:
        labels = self.sig.labels()
        return tuple(labels[index] for index in self.order)

    def __str__(self) -> str:
        return "<".join(self.labels())


# ==============================
# PRIORITY PRODUCTS
# ==============================
def priority_mass(x: RefinedValue, y: RefinedValue, order: PriorityOrder) -> np.ndarray:
    """Raw accumulated slot masses: slot c gets the sum of x[a] * y[b] over pairs whose higher-ranked slot is c."""
    _require_same_sig(x, y)
    if order.sig != x.sig:
        raise InvalidOrder(f"priority order is for {order.sig}, operands are {x.sig}")
    xv, yv = x.masses(), y.masses()
    n = x.sig.n
    rank = np.empty(n, dtype=int)
    rank[list(order.order)] = np.arange(n)
    winner = np.asarray(order.order)[np.maximum.outer(rank, rank)]
    return np.bincount(winner.ravel(), weights=np.outer(xv, yv).ravel(), minlength=n)


def priority_combine(x: RefinedValue, y: RefinedValue, order: PriorityOrder) -> RefinedValue:
    mass = priority_mass(x, y, order)
    if (mass > 1.0 + GROUP_SLACK).any():
        slot = x.sig.labels()[int(mass.argmax())]
        raise OutOfRange(f"priority product puts mass {mass.max():.6g} on {slot}; normalize the operands first")
    logger.debug("priority %s: %s", order, mass)
    return RefinedValue.from_masses(x.sig, np.clip(mass, 0.0, 1.0))


def priority_and(x: RefinedValue, y: RefinedValue, bound: Bound = Bound.LOWER) -> RefinedValue:
    """Lower bound: T < I < F. Upper bound: I < T < F."""
    return priority_combine(x, y, PriorityOrder.for_and(x.sig, bound))


def priority_or(x: RefinedValue, y: RefinedValue, bound: Bound = Bound.UPPER) -> RefinedValue:
    """Upper bound: T > I > F. Lower bound: T > F > I."""
    return priority_combine(x, y, PriorityOrder.for_or(x.sig, bound))


# ==============================
# NEGATION & PROJECTIONS
# ==============================
def negate(v: RefinedValue) -> RefinedValue:
    """Swap the T and F blocks, each reversed (Tj <-> F(s+1-j)); I is unchanged."""
    if v.sig.p != v.sig.s:
        raise AsymmetricSignature(f"negation needs p == s, signature is {v.sig}")
    return RefinedValue(v.sig, tuple(reversed(v.f)), v.i, tuple(reversed(v.t)))


def project_fuzzy(v: RefinedValue) -> Tuple[RefinedValue, bool]:
    """Zero every I slot; the flag says whether anything nonzero was dropped."""
    lossy = any(c.hi > 0.0 for c in v.i)
    zero = UnitInterval.scalar(0.0)
    return RefinedValue(v.sig, v.t, tuple(zero for _ in v.i), v.f), lossy


def _clamped_sum(values: Iterable[float]) -> Tuple[float, bool]:
    total = float(np.sum(list(values)))
    return min(total, 1.0), total > 1.0 + GROUP_SLACK


def project_intuitionistic(v: RefinedValue) -> Tuple[RefinedValue, bool]:
    """Collapse the I block into one slot holding its sum, clamped to 1."""
    if v.sig.r == 1:
        return v, False
    lo, lo_clamped = _clamped_sum(c.lo for c in v.i)
    hi, hi_clamped = _clamped_sum(c.hi for c in v.i)
    sig = Signature(v.sig.p, 1, v.sig.s)
    return RefinedValue(sig, v.t, (UnitInterval(lo, hi),), v.f), lo_clamped or hi_clamped
