"""Census of congruence-speed tiers over an initial segment of the integers.

Counts how many bases fall in each tier (V = 0, 1, 2, >= 3) and prints the
observed density next to the density predicted by the residue classes mod
25 / 40 / 1000.

    python scripts/tier_census.py --limit 100000
"""
from __future__ import annotations

import argparse
from collections import Counter

from tetrastable.speed import Tier, classify_tier, speed_exact, tier_of


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=100_000)
    parser.add_argument("--check", action="store_true",
                        help="also recompute every tier from the exact speed map")
    args = parser.parse_args()

    census: Counter[Tier] = Counter()
    mismatches = 0
    for a in range(1, args.limit + 1):
        if a % 10 == 0:
            continue
        tier = classify_tier(a)
        census[tier] += 1
        if args.check and tier is not tier_of(speed_exact(a).speed):
            mismatches += 1

    total = sum(census.values())
    print(f"bases 1..{args.limit} (multiples of 10 skipped): {total}")
    for tier in (Tier.V0, Tier.V1, Tier.V2, Tier.V3_PLUS):
        n = census[tier]
        print(f"  {tier.value:>5}: {n:>8}  ({n / total:.4%})")
    if args.check:
        print(f"tier vs exact-speed mismatches: {mismatches}")


if __name__ == "__main__":
    main()
