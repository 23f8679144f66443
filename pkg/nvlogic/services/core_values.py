"""
services/core_values.py

Truth components and refined truth tuples:
- UnitInterval: closed subinterval of [0, 1]; scalars are degenerate intervals
- Signature: refinement shape (p, r, s), n = p + r + s, plus the logic-ladder presets
- RefinedValue: (T1..Tp | I1..Ir | F1..Fs) tuple of UnitIntervals
- total_sum / check_constraint: the global sum bound and dependency-group bounds
- normalize: proportional rescaling to a target total
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    IntervalUnsupported,
    InvalidGroups,
    InvalidSignature,
    LengthMismatch,
    OutOfRange,
    UnknownName,
    ZeroMass,
)

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 9

# float slack when a sum is compared against a bound of 1
GROUP_SLACK = 1e-12

ComponentLike = Union["UnitInterval", float, int, Tuple[float, float]]


def format_number(x: float, digits: int = DEFAULT_DIGITS) -> str:
    """Positional notation, at most `digits` significant digits, trailing zeros trimmed."""
    return np.format_float_positional(float(x) + 0.0, precision=digits, unique=False, fractional=False, trim="-")


# ==============================
# UNIT INTERVAL
# ==============================
@dataclass(frozen=True)
class UnitInterval:
    lo: float
    hi: float

    def __post_init__(self):
        try:
            # + 0.0 folds -0.0 into 0.0
            lo = float(self.lo) + 0.0
            hi = float(self.hi) + 0.0
        except (TypeError, ValueError) as e:
            raise OutOfRange(f"not a number: {e}") from e
        if not (0.0 <= lo <= hi <= 1.0):
            raise OutOfRange(f"component [{self.lo}, {self.hi}] is not a subinterval of [0, 1]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def scalar(cls, x: float) -> UnitInterval:
        return cls(x, x)

    @classmethod
    def of(cls, value: ComponentLike) -> UnitInterval:
        if isinstance(value, UnitInterval):
            return value
        if isinstance(value, (tuple, list)):
            if len(value) != 2:
                raise OutOfRange(f"interval needs two endpoints, got {value!r}")
            return cls(value[0], value[1])
        return cls.scalar(value)

    @property
    def is_scalar(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> float:
        return (self.lo + self.hi) / 2.0

    def to_text(self, digits: int = DEFAULT_DIGITS) -> str:
        if self.is_scalar:
            return format_number(self.lo, digits)
        return f"{format_number(self.lo, digits)}..{format_number(self.hi, digits)}"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class UnitSum:
    """Endpoint-wise sum of n components: 0 <= lo <= hi <= n."""
    lo: float
    hi: float

    @property
    def mid(self) -> float:
        return (self.lo + self.hi) / 2.0

    def to_text(self, digits: int = DEFAULT_DIGITS) -> str:
        if self.lo == self.hi:
            return format_number(self.lo, digits)
        return f"{format_number(self.lo, digits)}..{format_number(self.hi, digits)}"


# ==============================
# SIGNATURES & LADDER PRESETS
# ==============================
# numerical logics of the ladder: I split into unknown / contradiction / ignorance,
# T and F split into absolute / relative
LADDER: Dict[str, Tuple[Tuple[int, int, int], Tuple[str, ...]]] = {
    "triad": ((1, 1, 1), ("T", "I", "F")),
    "four": ((1, 2, 1), ("T", "U", "C", "F")),
    "five": ((1, 3, 1), ("T", "U", "C", "G", "F")),
    "seven": ((2, 3, 2), ("TA", "TR", "U", "C", "G", "FA", "FR")),
}
_ALIASES = {shape: aliases for shape, aliases in LADDER.values()}


@dataclass(frozen=True)
class Signature:
    p: int
    r: int
    s: int

    def __post_init__(self):
        for name in ("p", "r", "s"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
                raise InvalidSignature(f"{name} must be an integer >= 1, got {value!r}")
            object.__setattr__(self, name, int(value))

    @property
    def n(self) -> int:
        return self.p + self.r + self.s

    @property
    def shape(self) -> Tuple[int, int, int]:
        return (self.p, self.r, self.s)

    @classmethod
    def parse(cls, text: str) -> Signature:
        """`p,r,s` or a ladder preset name (triad, four, five, seven)."""
        key = text.strip().lower()
        if key in LADDER:
            return cls(*LADDER[key][0])
        parts = [part.strip() for part in key.split(",")]
        if len(parts) != 3 or not all(part.isdigit() for part in parts):
            raise InvalidSignature(f"signature must be p,r,s or one of {', '.join(LADDER)}, got {text!r}")
        return cls(*(int(part) for part in parts))

    # ---- slots ----
    def block_slots(self, block: str) -> range:
        if block == "T":
            return range(0, self.p)
        if block == "I":
            return range(self.p, self.p + self.r)
        if block == "F":
            return range(self.p + self.r, self.n)
        raise UnknownName(f"unknown block {block!r}")

    def labels(self) -> Tuple[str, ...]:
        return (
            tuple(f"T{j}" for j in range(1, self.p + 1))
            + tuple(f"I{k}" for k in range(1, self.r + 1))
            + tuple(f"F{l}" for l in range(1, self.s + 1))
        )

    def aliases(self) -> Optional[Tuple[str, ...]]:
        return _ALIASES.get(self.shape)

    def slot_index(self, label: str) -> Optional[int]:
        """Index of a slot label (T2, I3, ...) or ladder alias (U, C, TA, ...); None if unknown."""
        key = label.strip().upper()
        labels = self.labels()
        if key in labels:
            return labels.index(key)
        aliases = self.aliases()
        if aliases and key in aliases:
            return aliases.index(key)
        return None

    def __str__(self) -> str:
        return f"({self.p},{self.r},{self.s})"


# ==============================
# REFINED VALUES
# ==============================
@dataclass(frozen=True)
class RefinedValue:
    sig: Signature
    t: Tuple[UnitInterval, ...]
    i: Tuple[UnitInterval, ...]
    f: Tuple[UnitInterval, ...]

    def __post_init__(self):
        for block, want in (("t", self.sig.p), ("i", self.sig.r), ("f", self.sig.s)):
            comps = tuple(getattr(self, block))
            if len(comps) != want:
                raise LengthMismatch(f"signature {self.sig} needs {want} {block.upper()} components, got {len(comps)}")
            if not all(isinstance(c, UnitInterval) for c in comps):
                raise OutOfRange(f"{block.upper()} components must be UnitIntervals")
            object.__setattr__(self, block, comps)

    @classmethod
    def from_components(cls, sig: Signature, comps: Sequence[UnitInterval]) -> RefinedValue:
        comps = tuple(comps)
        if len(comps) != sig.n:
            raise LengthMismatch(f"signature {sig} needs {sig.n} components, got {len(comps)}")
        return cls(sig, comps[: sig.p], comps[sig.p: sig.p + sig.r], comps[sig.p + sig.r:])

    @classmethod
    def from_masses(cls, sig: Signature, masses: Iterable[float]) -> RefinedValue:
        return cls.from_components(sig, [UnitInterval.scalar(float(m)) for m in masses])

    @classmethod
    def triad(cls, t: ComponentLike, i: ComponentLike, f: ComponentLike) -> RefinedValue:
        return make_refined(Signature(1, 1, 1), [t], [i], [f])

    @property
    def components(self) -> Tuple[UnitInterval, ...]:
        return self.t + self.i + self.f

    @property
    def is_scalar(self) -> bool:
        return all(c.is_scalar for c in self.components)

    def masses(self) -> np.ndarray:
        """Scalar components as a float vector in slot order."""
        if not self.is_scalar:
            raise IntervalUnsupported("operation needs scalar components, got interval-valued ones")
        return np.array([c.lo for c in self.components], dtype=float)

    def to_text(self, digits: int = DEFAULT_DIGITS) -> str:
        blocks = (", ".join(c.to_text(digits) for c in comps) for comps in (self.t, self.i, self.f))
        return f"NV({self.sig.p},{self.sig.r},{self.sig.s})[{' | '.join(blocks)}]"

    def __str__(self) -> str:
        return self.to_text()


def make_refined(
    sig: Signature,
    t: Sequence[ComponentLike],
    i: Sequence[ComponentLike],
    f: Sequence[ComponentLike],
) -> RefinedValue:
    """Validated construction; never clamps."""
    for block, comps in (("T", t), ("I", i), ("F", f)):
        if not comps:
            raise LengthMismatch(f"{block} component list is empty")
    return RefinedValue(
        sig,
        tuple(UnitInterval.of(c) for c in t),
        tuple(UnitInterval.of(c) for c in i),
        tuple(UnitInterval.of(c) for c in f),
    )


def crisp_true(sig: Signature) -> RefinedValue:
    return RefinedValue.from_masses(sig, [1.0] * sig.p + [0.0] * (sig.r + sig.s))


def crisp_false(sig: Signature) -> RefinedValue:
    return RefinedValue.from_masses(sig, [0.0] * (sig.p + sig.r) + [1.0] * sig.s)


# ==============================
# SUM BOUND & DEPENDENCY GROUPS
# ==============================
def total_sum(v: RefinedValue) -> UnitSum:
    comps = v.components
    return UnitSum(math.fsum(c.lo for c in comps), math.fsum(c.hi for c in comps))


@dataclass(frozen=True)
class DependencyGroups:
    """Disjoint sets of slot indices whose sources are dependent; other slots are independent."""
    groups: Tuple[FrozenSet[int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(frozenset(g) for g in self.groups))

    @classmethod
    def from_labels(cls, sig: Signature, groups: Iterable[Iterable[str]]) -> DependencyGroups:
        parsed: List[FrozenSet[int]] = []
        for group in groups:
            indices = set()
            for label in group:
                index = sig.slot_index(label)
                if index is None:
                    raise InvalidGroups(f"unknown slot {label!r} for signature {sig}")
                if index in indices:
                    raise InvalidGroups(f"slot {label!r} listed twice in one group")
                indices.add(index)
            parsed.append(frozenset(indices))
        deps = cls(tuple(parsed))
        deps.validate(sig)
        return deps

    def validate(self, sig: Signature) -> None:
        seen: set = set()
        for group in self.groups:
            if not group:
                raise InvalidGroups("dependency groups must be non-empty")
            bad = sorted(index for index in group if not 0 <= index < sig.n)
            if bad:
                raise InvalidGroups(f"slot index {bad[0]} out of range for signature {sig}")
            overlap = seen & group
            if overlap:
                raise InvalidGroups(f"slot {sig.labels()[min(overlap)]} appears in more than one group")
            seen |= group


@dataclass(frozen=True)
class GroupCheck:
    slots: Tuple[int, ...]
    labels: Tuple[str, ...]
    total: float
    passed: bool


@dataclass(frozen=True)
class ConstraintReport:
    total: UnitSum
    bound: int
    global_passed: bool
    groups: Tuple[GroupCheck, ...] = ()
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.global_passed and all(g.passed for g in self.groups)


def check_constraint(v: RefinedValue, deps: Optional[DependencyGroups] = None) -> ConstraintReport:
    """Report (never enforce) the global bound n and the bound of 1 on every dependency group."""
    deps = deps or DependencyGroups()
    deps.validate(v.sig)
    total = total_sum(v)
    comps = v.components
    labels = v.sig.labels()

    checks = []
    for group in deps.groups:
        slots = tuple(sorted(group))
        group_total = math.fsum(comps[index].hi for index in slots)
        checks.append(
            GroupCheck(slots, tuple(labels[index] for index in slots), group_total, group_total <= 1.0 + GROUP_SLACK)
        )

    note = ""
    if checks and not v.is_scalar:
        note = "group sums use the upper endpoints of interval components (conservative reading)"
    report = ConstraintReport(total, v.sig.n, total.hi <= v.sig.n, tuple(checks), note)
    logger.debug("constraint check %s -> %s", v, "pass" if report.passed else "fail")
    return report


# ==============================
# NORMALIZATION
# ==============================
def normalize(v: RefinedValue, target: float = 1.0) -> RefinedValue:
    """Divide every endpoint by (total midpoint / target); proportions are kept."""
    if not target > 0:
        raise OutOfRange(f"normalization target must be positive, got {target}")
    mid = total_sum(v).mid
    if mid <= 0.0:
        raise ZeroMass("total sum is 0, normalization is undefined")
    factor = mid / target
    labels = v.sig.labels()
    scaled = []
    for label, c in zip(labels, v.components):
        hi = c.hi / factor
        if hi > 1.0 + GROUP_SLACK:
            raise OutOfRange(
                f"normalizing to total {format_number(target)} pushes {label} up to {format_number(hi)}, past 1"
            )
        scaled.append(UnitInterval(min(c.lo / factor, 1.0), min(hi, 1.0)))
    return RefinedValue.from_components(v.sig, scaled)
