"""Shared frozen expectations and independent oracles for the test suite.

Nothing here goes through the production tower evaluator or the combination
table: valuations are naive division loops, towers are exact integers, and
the fifth-power fixed points are enumerated by branch-and-prune lifting.
"""
from __future__ import annotations

import math

# Trailing digits of the fifteen 10-adic solutions of y^5 = y, keyed by the
# last-two-digit tag.  Frozen reference data (verified fixed points of x^5).
PRINTED_ALPHA = {
    "00": "00000000000000000000",
    "01": "0000000000000000000000000000000000000000000000000000000000000000001",
    "51": "0219875666980838272377998885153153538207781991786760045215487480163574218751",
    "32": "0275906862593839649523223304553032451441224165530407839804103263499879186432",
    "93": "9614155303915741214287777252870390779454884838576212137588152996418333704193",
    "43": "9834030970896579486665776138023544317662666830362972182803640476581907922943",
    "24": "9890062166509580863811000557423423230896109004106619977392256259918212890624",
    "25": "9890062166509580863811000557423423230896109004106619977392256259918212890625",
    "75": "0109937833490419136188999442576576769103890995893380022607743740081787109375",
    "76": "0109937833490419136188999442576576769103890995893380022607743740081787109376",
    "07": "0385844696084258785712222747129609220545115161423787862411847003581666295807",
    "57": "0165969029103420513334223861976455682337333169637027817196359523418092077057",
    "68": "9724093137406160350476776695446967548558775834469592160195896736500120813568",
    "49": "9780124333019161727622001114846846461792218008213239954784512519836425781249",
    "99": "99999999999999999999999999999999999999999999999999999999999999",
}


def naive_valuation(d: int, p: int) -> int | float:
    if d == 0:
        return math.inf
    d = abs(d)
    q = 0
    while d % p == 0:
        d //= p
        q += 1
    return q


def exact_tower(a: int, b: int) -> int:
    """The height-b tower of a as an exact integer (small inputs only)."""
    if a == 0:
        return 1 if b % 2 == 0 else 0
    v = a
    for _ in range(b - 1):
        v = a**v
    return v


def trailing_match(x: int, y: int) -> int:
    """Number of common trailing decimal digits of x and y."""
    n = 0
    while x % 10 == y % 10:
        x //= 10
        y //= 10
        n += 1
        if x == 0 and y == 0:
            break
    return n


def brute_stable_count(a: int, b: int, ndigits: int = 256) -> int:
    """Stable digits of the height-b tower via raw pow ladders, length-capped.

    Independent of the package: reduces exponents by walking pow() with the
    full integer exponent whenever the tower fits, else works modulo 10^n
    with a plain lambda chain written out longhand.
    """
    m = 10**ndigits

    def tower_mod(height: int) -> int:
        # exact while it fits, then plain modular exponentiation with the
        # exact exponent (only usable when the exponent itself fits)
        e = exact_tower(a, height - 1) if height > 1 else None
        if height == 1:
            return a % m
        assert e is not None
        return pow(a, e, m)

    t1, t2 = tower_mod(b), tower_mod(b + 1)
    n = trailing_match(t1, t2)
    assert n < ndigits
    exact = exact_tower(a, b)
    return min(n, len(str(exact)))


def enumerate_fifth_power_fixed_points(max_depth: int) -> list[list[int]]:
    """All solutions of y^5 = y (mod 10^k) for k = 2..max_depth.

    Returns a list indexed so that result[k] is the sorted solution list at
    depth k (entries 0 and 1 are unused).  Parasite branches that do not
    extend to 10-adic solutions appear here; they die out within a few
    levels, which is exactly what the uniqueness checks exploit.
    """
    levels: list[list[int]] = [[], []]
    sols = [y for y in range(100) if pow(y, 5, 100) == y % 100]
    levels.append(sorted(sols))
    for k in range(3, max_depth + 1):
        m = 10**k
        step = 10 ** (k - 1)
        nxt = []
        for y in sols:
            for d in range(10):
                cand = y + d * step
                if pow(cand, 5, m) == cand:
                    nxt.append(cand)
        sols = nxt
        levels.append(sorted(sols))
    return levels


def true_fixed_points(depth: int, levels: list[list[int]] | None = None) -> set[int]:
    """The fifteen genuine 10-adic fixed points reduced mod 10^depth.

    Solutions mod 10^(depth+4) reduced mod 10^depth shed every parasite
    branch (those differ from a genuine solution only in their top two
    2-adic bits).
    """
    lookahead = depth + 4
    if levels is None:
        levels = enumerate_fifth_power_fixed_points(lookahead)
    return {y % 10**depth for y in levels[lookahead]}
