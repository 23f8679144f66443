"""
services/tnorms.py

The three paired t-norm / t-conorm families, as numpy operations on endpoint
arrays and lifted endpoint-wise to UnitIntervals. All six operations are
nondecreasing in each argument, so the lift is exact.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Dict, Tuple

import numpy as np

from .core_values import ComponentLike, UnitInterval
from .errors import UnknownName

ArrayOp = Callable[[np.ndarray, np.ndarray], np.ndarray]


class NormFamily(Enum):
    MIN_MAX = "minmax"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    @classmethod
    def parse(cls, name: str) -> NormFamily:
        key = name.strip().lower()
        for family in cls:
            if family.value == key:
                return family
        raise UnknownName(f"unknown norm family {name!r} (expected minmax, product or lukasiewicz)")

    @property
    def norm(self) -> ArrayOp:
        return _PAIRS[self][0]

    @property
    def conorm(self) -> ArrayOp:
        return _PAIRS[self][1]


def _product_conorm(x, y):
    return x + y - x * y


def _lukasiewicz_norm(x, y):
    # x - (1 - y) keeps t_norm(x, 1) == x exact
    return np.maximum(0.0, x - (1.0 - y))


def _lukasiewicz_conorm(x, y):
    return np.minimum(x + y, 1.0)


# one t-norm bound to exactly one t-conorm per family; mixed pairings are not offered
_PAIRS: Dict[NormFamily, Tuple[ArrayOp, ArrayOp]] = {
    NormFamily.MIN_MAX: (np.minimum, np.maximum),
    NormFamily.PRODUCT: (np.multiply, _product_conorm),
    NormFamily.LUKASIEWICZ: (_lukasiewicz_norm, _lukasiewicz_conorm),
}


def _lift(op: ArrayOp, x: ComponentLike, y: ComponentLike) -> UnitInterval:
    x, y = UnitInterval.of(x), UnitInterval.of(y)
    out = np.clip(op(np.array([x.lo, x.hi]), np.array([y.lo, y.hi])), 0.0, 1.0)
    # rounding may cross the endpoints by an ulp
    return UnitInterval(float(out.min()), float(out.max()))


def t_norm(fam: NormFamily, x: ComponentLike, y: ComponentLike) -> UnitInterval:
    return _lift(fam.norm, x, y)


def t_conorm(fam: NormFamily, x: ComponentLike, y: ComponentLike) -> UnitInterval:
    return _lift(fam.conorm, x, y)


def complement(x: ComponentLike) -> UnitInterval:
    x = UnitInterval.of(x)
    return UnitInterval(1.0 - x.hi, 1.0 - x.lo)
