"""Ground-truth measurement of congruence speed by direct tower computation.

The number of stable digits of the height-b tower is the number of trailing
digits it shares with the height-(b+1) tower, capped by its own decimal
length (a short tower cannot freeze more digits than it has: the height-2
tower of 5 agrees with all taller towers modulo 10^5, but 3125 only has four
digits, so four digits are stable).  Everything here is measured, never
predicted; the closed forms elsewhere are validated against this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import _tower_exact, _tower_mixed, _v10, decimal_length, tower_value_capped
from .speed import speed_bound

DEFAULT_BUDGET = 8192
_START_DIGITS = 64
_MACHINE_RANGE = 1 << 63


class NeedsLargerBudget(RuntimeError):
    """Raised when the requested count cannot be certified within the digit budget."""

    def __init__(self, a: int, b: int, budget: int):
        super().__init__(
            f"stable digits of the height-{b} tower of {a} exceed the {budget}-digit budget"
        )
        self.a = a
        self.b = b
        self.budget = budget


@dataclass
class SpeedSequence:
    """Measured V(a,b) for b = 1..max_b with cumulative stable-digit counts."""

    a: int
    entries: list[int]
    frozen_prefix: list[int]
    stabilized_at: int | None

    @property
    def speed(self) -> int | None:
        """The stabilized congruence speed, when certified within the run."""
        if self.stabilized_at is None:
            return None
        return self.entries[self.stabilized_at - 1]


def _trailing_zero_count(a: int, b: int, budget: int) -> int:
    # multiples of 10: stable digits = trailing zeros of the height-b tower
    e = tower_value_capped(a, b - 1, _MACHINE_RANGE)
    if e is None:
        raise NeedsLargerBudget(a, b, budget)
    return e * int(_v10(a))


def _counts_at_precision(a: int, heights: int, ndigits: int, memo: dict) -> list[int] | None:
    """Capped stable-digit counts for b = 1..heights, or None if ndigits is too small."""
    counts = []
    for b in range(1, heights + 1):
        r1 = _tower_mixed(a, b, ndigits, ndigits, memo)
        r2 = _tower_mixed(a, b + 1, ndigits, ndigits, memo)
        diff = r1 - r2
        n = ndigits if diff == 0 else int(_v10(diff))
        if n >= ndigits:
            return None
        exact = _tower_exact(a, b, memo)
        if exact is not None and exact < 10**n:
            n = decimal_length(exact)
        counts.append(n)
    return counts


def _stable_counts(a: int, heights: int, budget: int) -> list[int]:
    if a == 0:
        return [0] * heights
    if a == 1:
        return [1] * heights
    if a % 10 == 0:
        return [_trailing_zero_count(a, b, budget) for b in range(1, heights + 1)]
    ndigits = _START_DIGITS
    while ndigits <= budget:
        counts = _counts_at_precision(a, heights, ndigits, {})
        if counts is not None:
            return counts
        ndigits *= 2
    raise NeedsLargerBudget(a, heights, budget)


def stable_digit_count(a: int, b: int, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of stable digits of the height-b tower of a."""
    if a < 0 or b < 1:
        raise ValueError("need a >= 0 and b >= 1")
    return _stable_counts(a, b, budget)[-1]


def speed_sequence(a: int, max_b: int, budget: int = DEFAULT_BUDGET) -> SpeedSequence:
    """Measure V(a,b) for b = 1..max_b.

    stabilized_at is reported only when it is certified: the run must reach
    the height from which the speed is provably constant (speed_bound(a)+2
    for a >= 2; heights 1 and 2 for the bases 0 and 1).
    """
    if a < 0 or max_b < 1:
        raise ValueError("need a >= 0 and max_b >= 1")
    counts = _stable_counts(a, max_b, budget)
    entries = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, max_b)]
    if any(v < 0 for v in entries):
        raise AssertionError(f"stable digit count decreased for a={a}: {counts}")
    stabilized = None
    if a == 0 or a % 10 != 0:
        certify_from = 1 if a == 0 else (2 if a == 1 else speed_bound(a) + 2)
        if max_b >= certify_from:
            i = max_b
            while i > 1 and entries[i - 2] == entries[max_b - 1]:
                i -= 1
            stabilized = i
    return SpeedSequence(a=a, entries=entries, frozen_prefix=counts, stabilized_at=stabilized)


@lru_cache(maxsize=512)
def _certified_run(a: int, budget: int) -> tuple[tuple[int, ...], int]:
    seq = speed_sequence(a, speed_bound(a) + 3, budget)
    assert seq.stabilized_at is not None
    return tuple(seq.frozen_prefix), seq.stabilized_at


def certified_sequence(a: int, budget: int = DEFAULT_BUDGET) -> SpeedSequence:
    """speed_sequence run just far enough to certify stabilization (cached)."""
    if a < 2 or a % 10 == 0:
        raise ValueError("defined for a >= 2 not a multiple of 10")
    counts, stabilized = _certified_run(a, budget)
    entries = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, len(counts))]
    return SpeedSequence(a=a, entries=entries, frozen_prefix=list(counts), stabilized_at=stabilized)


def measure_stabilization(a: int, budget: int = DEFAULT_BUDGET) -> int:
    """The least height from which the congruence speed stays constant."""
    if a < 1 or (a % 10 == 0 and a != 0):
        raise ValueError("defined for a >= 1 not a multiple of 10")
    if a == 1:
        return 2
    stabilized = certified_sequence(a, budget).stabilized_at
    assert stabilized is not None
    return stabilized


def measured_speed(a: int, budget: int = DEFAULT_BUDGET) -> int:
    """V(a) as measured by the tower oracle (independent of every closed form)."""
    if a in (0, 1):
        return 0
    if a % 10 == 0:
        raise ValueError("undefined for positive multiples of 10")
    speed = certified_sequence(a, budget).speed
    assert speed is not None
    return speed


__all__ = [
    "DEFAULT_BUDGET",
    "NeedsLargerBudget",
    "SpeedSequence",
    "stable_digit_count",
    "speed_sequence",
    "certified_sequence",
    "measure_stabilization",
    "measured_speed",
]
