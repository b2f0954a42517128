"""Closed-form stable-digit counts, bounds, ratio and height planning.

For bases sharing a factor with 10 the count has an exact linear form in the
height; for coprime bases it is pinned between two linear forms at most
V(a)+1 apart, and the exact shape is measured through the oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import mpmath

from .arith import _v2, _v5, decimal_length, tower_value_capped
from .oracle import DEFAULT_BUDGET, SpeedSequence, certified_sequence, stable_digit_count
from .speed import speed_bound, speed_exact


class FormulaRangeError(ValueError):
    """The requested height is below the stated range of the matching formula."""


class TowerNotRepresentable(ValueError):
    """The tower is too tall for an exact digit count to be certified."""


@dataclass(frozen=True)
class StableCount:
    """Exact count or a bracketing interval, with the formula that produced it."""

    kind: str  # "exact" | "bounded"
    value: int | None
    lower: int | None
    upper: int | None
    formula_id: str

    @classmethod
    def exact(cls, value: int, formula_id: str) -> "StableCount":
        return cls("exact", value, value, value, formula_id)

    @classmethod
    def bounded(cls, lower: int, upper: int, formula_id: str) -> "StableCount":
        return cls("bounded", None, lower, upper, formula_id)


class StableShape(Enum):
    B_MINUS_1_V = "(b-1)*V"
    B_V = "b*V"
    B_V_PLUS_1 = "b*V+1"
    B_PLUS_1_V = "(b+1)*V"

    def count_at(self, b: int, v: int) -> int:
        if self is StableShape.B_MINUS_1_V:
            return (b - 1) * v
        if self is StableShape.B_V:
            return b * v
        if self is StableShape.B_V_PLUS_1:
            return b * v + 1
        return (b + 1) * v


@dataclass(frozen=True)
class HeightPlan:
    target: int
    height: int


def stable_exact(a: int, b: int) -> StableCount:
    """Exact count for bases in the classes {2,4,5,6,8} mod 10.

    Raises FormulaRangeError when b is below the stated range of the class
    formula (callers fall back to the oracle there).
    """
    if b < 1:
        raise ValueError("height starts at 1")
    r10 = a % 10
    if a < 2 or r10 not in (2, 4, 5, 6, 8):
        raise ValueError("defined for a >= 2 with a mod 10 in {2,4,5,6,8}")
    r20 = a % 20
    if r10 in (2, 8):
        v = int(_v5(a * a + 1))
        if r20 in (2, 18):
            value = 0 if b == 1 else (b - 2) * v
            return StableCount.exact(value, "mod20 in {2,18}: 0 then (b-2)V")
        return StableCount.exact((b - 1) * v, "mod20 in {8,12}: (b-1)V")
    if r10 == 4:
        return StableCount.exact((b - 1) * int(_v5(a + 1)), "mod10=4: (b-1)V")
    if r10 == 6:
        if b < 2:
            raise FormulaRangeError("the mod10=6 formula starts at b=2")
        return StableCount.exact((b + 1) * int(_v5(a - 1)), "mod10=6: (b+1)V")
    if a == 5:
        value = 1 if b == 1 else (4 if b == 2 else 8 + 2 * (b - 3))
        return StableCount.exact(value, "a=5: 1, 4, 8+2(b-3)")
    if b < 2:
        raise FormulaRangeError("the mod10=5 formulas start at b=2")
    w = int(_v2(a * a - 1)) - 1
    if r20 == 15:
        return StableCount.exact(b * w + 1, "mod20=15: bV+1")
    return StableCount.exact((b + 1) * w, "mod20=5: (b+1)V")


def stable_bounds(a: int, b: int) -> StableCount:
    """Bracket for coprime bases: width V(a)+1 on {3,7} mod 20, V(a) elsewhere."""
    if a < 3 or a % 2 == 0 or a % 5 == 0:
        raise ValueError("defined for a >= 3 coprime to 10")
    if b < 2:
        raise ValueError("bounds are stated for b >= 2")
    v = speed_exact(a).speed
    assert v is not None
    if a % 20 in (3, 7):
        return StableCount.bounded((b - 1) * v, b * v + 1, "mod20 in {3,7}: [(b-1)V, bV+1]")
    return StableCount.bounded(b * v, (b + 1) * v, "coprime: [bV, (b+1)V]")


def _certified_sequence(a: int, budget: int) -> SpeedSequence:
    seq = certified_sequence(a, budget)
    assert seq.stabilized_at is not None
    return seq


def stable_shape(a: int, budget: int = DEFAULT_BUDGET) -> StableShape:
    """Measured linear shape of the count at stabilized heights.

    On {3,7} mod 20 the shape is decided by one comparison: (b-1)V exactly
    when V(a,2) equals V(a), and bV+1 otherwise.  Other coprime classes are
    matched against the four candidate forms at two consecutive heights.
    For speed 1 the forms bV+1 and (b+1)V coincide; bV+1 is reported.
    """
    if a < 3 or a % 2 == 0 or a % 5 == 0:
        raise ValueError("defined for a >= 3 coprime to 10")
    seq = _certified_sequence(a, budget)
    bbar = seq.stabilized_at
    v = seq.speed
    assert bbar is not None and v is not None
    n1, n2 = seq.frozen_prefix[bbar - 1], seq.frozen_prefix[bbar]
    if a % 20 in (3, 7):
        shape = StableShape.B_MINUS_1_V if seq.entries[1] == v else StableShape.B_V_PLUS_1
        if (n1, n2) != (shape.count_at(bbar, v), shape.count_at(bbar + 1, v)):
            raise AssertionError(f"shape rule disagrees with measured counts for a={a}")
        return shape
    for shape in StableShape:
        if n1 == shape.count_at(bbar, v) and n2 == shape.count_at(bbar + 1, v):
            return shape
    raise AssertionError(f"no linear shape matches measured counts for a={a}")


def stable_count(a: int, b: int, budget: int = DEFAULT_BUDGET) -> StableCount:
    """Best available count: exact where a formula or the stabilized tail applies."""
    if a < 0 or b < 1:
        raise ValueError("need a >= 0 and b >= 1")
    if a == 0:
        return StableCount.exact(0, "a=0: no stable digits")
    if a == 1:
        return StableCount.exact(1, "a=1: the single digit")
    if a % 10 == 0:
        return StableCount.exact(stable_digit_count(a, b, budget), "multiple of 10: trailing zeros")
    if a % 10 in (2, 4, 5, 6, 8):
        try:
            return stable_exact(a, b)
        except FormulaRangeError:
            return StableCount.exact(stable_digit_count(a, b, budget), "oracle (below formula range)")
    seq = _certified_sequence(a, budget)
    bbar = seq.stabilized_at
    v = seq.speed
    assert bbar is not None and v is not None
    if b >= bbar:
        prefix = seq.frozen_prefix[bbar - 1]
        return StableCount.exact(prefix + (b - bbar) * v, "stabilized tail: n(bbar) + (b-bbar)V")
    if b == 1:
        return StableCount.exact(seq.frozen_prefix[0], "oracle prefix (b=1)")
    return stable_bounds(a, b)


def _certified_digit_count(a: int, e: int) -> int:
    # digits of a^e = floor(e*log10(a)) + 1, certified by interval arithmetic
    iv = mpmath.iv
    prec = 64
    while prec <= 1 << 16:
        old = iv.prec
        try:
            iv.prec = prec
            t = iv.mpf(e) * iv.log(iv.mpf(a)) / iv.log(iv.mpf(10))
            f_lo = int(mpmath.floor(t.a))
            f_hi = int(mpmath.floor(t.b))
        finally:
            iv.prec = old
        if f_lo == f_hi:
            return f_lo + 1
        prec *= 2
    raise TowerNotRepresentable("could not certify the digit count")


def stable_ratio(a: int, b: int, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Fraction of the height-b tower's digits that are stable."""
    if a < 1 or a % 10 == 0:
        raise ValueError("defined for a >= 1 not a multiple of 10")
    if b < 1:
        raise ValueError("height starts at 1")
    if a == 1:
        return Fraction(1, 1)
    e = tower_value_capped(a, b - 1, 10**18)
    if e is None:
        raise TowerNotRepresentable(f"the height-{b} tower of {a} has too many digits to count")
    count = stable_count(a, b, budget)
    numerator = count.value if count.kind == "exact" else stable_digit_count(a, b, budget)
    small = tower_value_capped(a, b, 10**18)
    digits = decimal_length(small) if small is not None else _certified_digit_count(a, e)
    return Fraction(numerator, digits)


def min_height(a: int, target: int, budget: int = DEFAULT_BUDGET) -> HeightPlan:
    """Least height whose tower carries at least `target` stable digits."""
    if a < 2 or a % 10 == 0:
        raise ValueError("defined for a >= 2 not a multiple of 10")
    if target < 0:
        raise ValueError("target must be nonnegative")
    if target == 0:
        return HeightPlan(target=0, height=1)
    seq = _certified_sequence(a, budget)
    bbar = seq.stabilized_at
    v = seq.speed
    assert bbar is not None and v is not None
    for b, n in enumerate(seq.frozen_prefix[:bbar], start=1):
        if n >= target:
            return HeightPlan(target=target, height=b)
    shortfall = target - seq.frozen_prefix[bbar - 1]
    return HeightPlan(target=target, height=bbar + (shortfall + v - 1) // v)


def stabilization_bound(a: int) -> int:
    """Closed-form upper bound for the stabilization height.

    speed_bound(a)+2 on the classes whose second step can overshoot the
    constant speed ({3,7} mod 20, {2,18} mod 20 and 6 mod 10), and
    speed_bound(a)+1 elsewhere; the base 5 is the lone +2 exception in its
    class.
    """
    if a < 2 or a % 10 == 0:
        raise ValueError("defined for a >= 2 not a multiple of 10")
    if a == 5:
        return 4
    r20 = a % 20
    if r20 in (3, 7) or r20 in (2, 18) or a % 10 == 6:
        return speed_bound(a) + 2
    return speed_bound(a) + 1


__all__ = [
    "FormulaRangeError",
    "TowerNotRepresentable",
    "StableCount",
    "StableShape",
    "HeightPlan",
    "stable_exact",
    "stable_bounds",
    "stable_shape",
    "stable_count",
    "stable_ratio",
    "min_height",
    "stabilization_bound",
]
