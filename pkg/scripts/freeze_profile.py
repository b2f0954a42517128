"""Freeze profile of one tetration base: per-height speed, totals, ratio.

    python scripts/freeze_profile.py 163574218751 --max-b 10
"""
from __future__ import annotations

import argparse

from tetrastable.oracle import speed_sequence
from tetrastable.speed import speed_bound, speed_exact
from tetrastable.stability import TowerNotRepresentable, stable_ratio


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("a", type=int)
    parser.add_argument("--max-b", type=int, default=10)
    args = parser.parse_args()
    a = args.a
    if a < 2 or a % 10 == 0:
        parser.error("need a >= 2 with a not a multiple of 10")

    seq = speed_sequence(a, max(args.max_b, speed_bound(a) + 3))
    print(f"a = {a}:  V(a) = {speed_exact(a).speed}  "
          f"(bound {speed_bound(a)}, stabilizes at height {seq.stabilized_at})")
    print(f"{'b':>4} {'V(a,b)':>8} {'stable':>8} {'ratio':>12}")
    for b in range(1, args.max_b + 1):
        try:
            ratio = f"{float(stable_ratio(a, b)):.3e}"
        except TowerNotRepresentable:
            ratio = "-"
        print(f"{b:>4} {seq.entries[b - 1]:>8} {seq.frozen_prefix[b - 1]:>8} {ratio:>12}")


if __name__ == "__main__":
    main()
