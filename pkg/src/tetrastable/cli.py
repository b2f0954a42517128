"""Command-line front end and bulk verification harness.

Every subcommand prints a human-readable summary by default and a
deterministic JSON report with --json (stable key order, bases echoed as
strings so arbitrary-precision inputs survive the round trip).

Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 budget
exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import oracle, speed, stability
from .decadic import AlphaTag, alpha_digits

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _nonneg_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like LO..HI")
    lo_v, hi_v = _nonneg_int(lo), _nonneg_int(hi)
    if hi_v < lo_v:
        raise argparse.ArgumentTypeError("empty range")
    return lo_v, hi_v


def _tag(text: str) -> AlphaTag:
    try:
        return AlphaTag.from_label(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _report(command: str, inputs: dict, result: dict, status: str = "ok") -> dict:
    return {"command": command, "inputs": inputs, "result": result, "status": status}


def _emit(report: dict, args, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            json.dump(report, fh, sort_keys=True, indent=2)
            fh.write("\n")


def _speed_field(result: speed.SpeedResult) -> int | None:
    return result.speed


def cmd_speed(args) -> int:
    a = args.a
    exact = speed.speed_exact(a)
    by100 = speed.speed_mod100(a)
    by20 = speed.speed_mod20(a)
    agreement = exact.speed == by100.speed == by20.speed
    bound = None
    if a >= 2 and a % 10 != 0:
        bound = speed.speed_bound(a)
    result = {
        "speed": _speed_field(exact),
        "rule": exact.rule,
        "speed_bound": bound,
        "mod100_map": _speed_field(by100),
        "mod20_map": _speed_field(by20),
        "agreement": agreement,
    }
    report = _report("speed", {"a": str(a)}, result)
    shown = "undefined" if exact.is_undefined else str(exact.speed)
    lines = [
        f"V({a}) = {shown}",
        f"rule: {exact.rule}",
        f"speed bound: {'-' if bound is None else bound}",
        f"cross-checks: mod-100 map = {by100.speed}, mod-20 map = {by20.speed}"
        f" ({'agree' if agreement else 'DISAGREE'})",
    ]
    _emit(report, args, lines)
    return EXIT_OK


def cmd_sequence(args) -> int:
    seq = oracle.speed_sequence(args.a, args.max_b, args.budget)
    result = {
        "entries": seq.entries,
        "cumulative": seq.frozen_prefix,
        "stabilized_at": seq.stabilized_at,
        "speed": seq.speed,
    }
    report = _report("sequence", {"a": str(args.a), "max_b": args.max_b, "budget": args.budget}, result)
    lines = [
        f"V({args.a}, b) for b = 1..{args.max_b}: {seq.entries}",
        f"cumulative stable digits: {seq.frozen_prefix}",
        f"stabilized at: {seq.stabilized_at if seq.stabilized_at is not None else 'not certified in this window'}",
    ]
    _emit(report, args, lines)
    return EXIT_OK


def cmd_stable(args) -> int:
    count = stability.stable_count(args.a, args.b, args.budget)
    result = {
        "kind": count.kind,
        "value": count.value,
        "lower": count.lower,
        "upper": count.upper,
        "formula": count.formula_id,
    }
    report = _report("stable", {"a": str(args.a), "b": args.b}, result)
    if count.kind == "exact":
        lines = [f"stable digits of the height-{args.b} tower of {args.a}: {count.value}"]
    else:
        lines = [f"stable digits of the height-{args.b} tower of {args.a}: in [{count.lower}, {count.upper}]"]
    lines.append(f"formula: {count.formula_id}")
    _emit(report, args, lines)
    return EXIT_OK


def cmd_ratio(args) -> int:
    ratio = stability.stable_ratio(args.a, args.b, args.budget)
    result = {"numerator": ratio.numerator, "denominator": ratio.denominator, "ratio": float(ratio)}
    report = _report("ratio", {"a": str(args.a), "b": args.b}, result)
    _emit(report, args, [f"stable digit ratio at height {args.b}: {ratio} ({float(ratio):.6f})"])
    return EXIT_OK


def cmd_min_height(args) -> int:
    plan = stability.min_height(args.a, args.target, args.budget)
    report = _report(
        "min-height",
        {"a": str(args.a), "target": args.target},
        {"target": plan.target, "height": plan.height},
    )
    _emit(report, args, [f"least height with >= {args.target} stable digits: {plan.height}"])
    return EXIT_OK


def cmd_classify(args) -> int:
    tier = speed.classify_tier(args.a)
    report = _report("classify", {"a": str(args.a)}, {"tier": tier.value})
    _emit(report, args, [f"tier of {args.a}: {tier.value}"])
    return EXIT_OK


def cmd_alpha(args) -> int:
    digits = alpha_digits(args.tag, args.n)
    report = _report(
        "alpha",
        {"tag": args.tag.label, "n": args.n},
        {"digits": digits.digits},
    )
    _emit(report, args, [digits.digits])
    return EXIT_OK


def _verify_base(a: int, max_b: int, budget: int) -> tuple[int, list[dict]]:
    """Run every cross-check for one base; returns (checks run, failures)."""
    failures: list[dict] = []
    checks = 0

    def check(name: str, ok: bool, expected, got) -> None:
        nonlocal checks
        checks += 1
        if not ok:
            failures.append({"a": str(a), "check": name, "expected": str(expected), "got": str(got)})

    exact = speed.speed_exact(a).speed
    by100 = speed.speed_mod100(a).speed
    by20 = speed.speed_mod20(a).speed
    if a == 1:
        seq = oracle.speed_sequence(a, max(2, max_b), budget)
    else:
        seq = oracle.speed_sequence(a, max(speed.speed_bound(a) + 3, max_b), budget)
    measured = seq.speed
    check("speed: exact vs oracle", exact == measured, measured, exact)
    check("speed: mod-100 map vs oracle", by100 == measured, measured, by100)
    check("speed: mod-20 map vs oracle", by20 == measured, measured, by20)
    check("tier", speed.classify_tier(a) == speed.tier_of(measured), speed.tier_of(measured), speed.classify_tier(a))
    if a >= 2:
        bound = stability.stabilization_bound(a)
        check("stabilization height bound", seq.stabilized_at <= bound, f"<= {bound}", seq.stabilized_at)
        for b in range(2, max_b + 1):
            measured_count = seq.frozen_prefix[b - 1]
            if a % 10 in (2, 4, 5, 6, 8):
                formula = stability.stable_exact(a, b)
                check(f"exact count at b={b}", formula.value == measured_count, measured_count, formula.value)
            else:
                bounds = stability.stable_bounds(a, b)
                ok = bounds.lower <= measured_count <= bounds.upper
                check(f"count bounds at b={b}", ok, f"[{bounds.lower}, {bounds.upper}]", measured_count)
                width_ok = bounds.upper - bounds.lower <= measured + 1
                check(f"bound width at b={b}", width_ok, f"<= V+1 = {measured + 1}", bounds.upper - bounds.lower)
    return checks, failures


def _verify_chunk(chunk: tuple[int, int, int, int]) -> tuple[int, int, list[dict]]:
    lo, hi, max_b, budget = chunk
    bases = 0
    checks = 0
    failures: list[dict] = []
    for a in range(lo, hi + 1):
        if a % 10 == 0:
            continue
        bases += 1
        c, f = _verify_base(a, max_b, budget)
        checks += c
        failures.extend(f)
    return bases, checks, failures


def cmd_verify(args) -> int:
    lo, hi = args.range
    chunk_size = max(64, (hi - lo + 1) // (8 * max(args.workers, 1)) + 1)
    chunks = [(start, min(start + chunk_size - 1, hi), args.max_b, args.budget)
              for start in range(lo, hi + 1, chunk_size)]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_verify_chunk, chunks))
    else:
        results = [_verify_chunk(c) for c in chunks]
    bases = sum(r[0] for r in results)
    checks = sum(r[1] for r in results)
    failures = [f for r in results for f in r[2]]
    failures.sort(key=lambda f: (int(f["a"]), f["check"]))
    status = "ok" if not failures else "failed"
    report = _report(
        "verify",
        {"range": f"{lo}..{hi}", "max_b": args.max_b, "budget": args.budget},
        {"bases_checked": bases, "checks": checks, "failures": failures},
        status=status,
    )
    lines = [f"verified {bases} bases in {lo}..{hi} ({checks} checks): {len(failures)} failure(s)"]
    for f in failures[:20]:
        lines.append(f"  a={f['a']}: {f['check']}: expected {f['expected']}, got {f['got']}")
    _emit(report, args, lines)
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetrastable",
        description="Constant congruence speed and stable trailing digits of integer tetrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--out", metavar="PATH", help="also write the JSON report to PATH")
        p.add_argument("--budget", type=_positive_int, default=oracle.DEFAULT_BUDGET,
                       help="digit budget for tower comparisons")

    p = sub.add_parser("speed", help="constant congruence speed of a base")
    p.add_argument("a", type=_nonneg_int)
    add_common(p)
    p.set_defaults(func=cmd_speed)

    p = sub.add_parser("sequence", help="measured V(a,b) for b = 1..max_b")
    p.add_argument("a", type=_nonneg_int)
    p.add_argument("--max-b", type=_positive_int, default=8)
    add_common(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("stable", help="stable digits of the height-b tower")
    p.add_argument("a", type=_nonneg_int)
    p.add_argument("b", type=_positive_int)
    add_common(p)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("ratio", help="stable digits as a fraction of the tower's length")
    p.add_argument("a", type=_nonneg_int)
    p.add_argument("b", type=_positive_int)
    add_common(p)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("min-height", help="least height reaching a target stable-digit count")
    p.add_argument("a", type=_nonneg_int)
    p.add_argument("target", type=_nonneg_int)
    add_common(p)
    p.set_defaults(func=cmd_min_height)

    p = sub.add_parser("classify", help="tier of the constant congruence speed")
    p.add_argument("a", type=_positive_int)
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("alpha", help="trailing digits of a 10-adic solution of y^5 = y")
    p.add_argument("tag", type=_tag, help="two-digit tag, e.g. 51 or 07")
    p.add_argument("n", type=_positive_int)
    add_common(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("verify", help="scan a range: closed forms vs the tower oracle")
    p.add_argument("--range", type=_range_arg, required=True, metavar="LO..HI")
    p.add_argument("--max-b", type=_positive_int, default=6)
    p.add_argument("--workers", type=_positive_int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except oracle.NeedsLargerBudget as exc:
        print(f"error: needs-larger-budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, stability.TowerNotRepresentable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
