"""Command-line front end.

Exit status: 0 when the verdict holds (or the command just produces output),
1 when it is violated / false (the report carries the certificate), 2 on
input errors.  Reports are JSON on stdout unless ``--pretty`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from multiutility.axioms import Axiom, check_axiom
from multiutility.core import Profile, normalize_utility, no_conflict_pair
from multiutility.documents import (
    DocumentError,
    parse_agents,
    parse_profile,
    parse_set,
    set_doc,
    to_jsonable,
)
from multiutility.oracle import GridSpec, grid_check
from multiutility.preferences import is_strictly_increasing
from multiutility.representation import (
    aggregate_minkowski,
    aggregate_union_hull,
    check_nonreversal_condition,
    check_pareto_condition,
    check_prop1_condition,
    check_prop2_condition,
    check_theorem1_condition,
    sets_equivalent,
)

HOLDS, VIOLATED, INPUT_ERROR = 0, 1, 2


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None


def _hypotheses(profile: Profile) -> dict:
    strict = {aid: is_strictly_increasing(s).holds for aid, s in zip(profile.agent_ids, profile.individuals)}
    strict["social"] = is_strictly_increasing(profile.social).holds
    return {"no_conflict_pair": no_conflict_pair(profile), "strictly_increasing": strict}


def _axiom_report(verdict) -> dict:
    out = {"axiom": verdict.axiom.value, "verdict": "holds" if verdict.holds else "violated"}
    if not verdict.holds:
        l, l2 = verdict.witness
        out["certificate"] = {
            "l": l,
            "l_prime": l2,
            "direction": verdict.direction,
            "selection": verdict.selection,
            "individual_relations": list(verdict.individual_relations),
            "social_relation": verdict.social_relation,
        }
    return out


def cmd_check_axiom(args) -> tuple[dict, int]:
    profile = parse_profile(_read(args.profile))
    verdict = check_axiom(profile, Axiom.parse(args.axiom))
    report = _axiom_report(verdict)
    report["hypotheses"] = _hypotheses(profile)
    return report, HOLDS if verdict.holds else VIOLATED


def cmd_witness(args) -> tuple[dict, int]:
    profile = parse_profile(_read(args.profile))
    verdict = check_axiom(profile, Axiom.parse(args.axiom))
    report = {"axiom": verdict.axiom.value}
    if verdict.holds:
        report["witness"] = None
        return report, HOLDS
    report["witness"] = {"l": verdict.witness[0], "l_prime": verdict.witness[1]}
    return report, VIOLATED


_CONDITIONS = {
    "theorem1": lambda p, strict: check_theorem1_condition(p),
    "pareto": lambda p, strict: check_pareto_condition(p),
    "prop1": lambda p, strict: check_prop1_condition(p, strict_mode=strict),
    "prop2": lambda p, strict: check_prop2_condition(p),
    "non-reversal": lambda p, strict: check_nonreversal_condition(p),
}


def cmd_check_condition(args) -> tuple[dict, int]:
    profile = parse_profile(_read(args.profile))
    verdict = _CONDITIONS[args.condition](profile, args.strict)
    report = {
        "condition": verdict.condition,
        "verdict": verdict.status,
        "checked": verdict.checked,
        "solutions": list(verdict.solutions),
        "failures": [
            {"case": f.label, "certificate": f.certificate} for f in verdict.failures
        ],
        "hypotheses": _hypotheses(profile),
    }
    return report, HOLDS if verdict.holds else VIOLATED


def _weights(text: str | None, n: int) -> list[Fraction]:
    if text is None:
        return [Fraction(1)] * n
    try:
        return [Fraction(w.strip()) for w in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"--weights: malformed rational list {text!r}") from None


def cmd_aggregate(args) -> tuple[dict, int]:
    space, sets, _ = parse_agents(_read(args.agents))
    try:
        if args.rule == "minkowski":
            weights = _weights(args.weights, len(sets))
            social = aggregate_minkowski(sets, weights)
        else:
            weights = None
            social = aggregate_union_hull(sets)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    report = set_doc(space, social)
    report["rule"] = args.rule
    if weights is not None:
        report["weights"] = weights
    return report, HOLDS


def cmd_oracle(args) -> tuple[dict, int]:
    profile = parse_profile(_read(args.profile))
    if args.denominator < 1:
        raise DocumentError("--denominator must be at least 1")
    axiom = Axiom.parse(args.axiom)
    pairs = grid_check(profile, axiom, GridSpec(args.denominator, profile.space))
    report = {
        "axiom": axiom.value,
        "denominator": args.denominator,
        "violations": len(pairs),
        "pairs": [{"l": l, "l_prime": l2} for l, l2 in pairs[: args.limit]],
    }
    return report, VIOLATED if pairs else HOLDS


def cmd_equiv(args) -> tuple[dict, int]:
    space_a, a = parse_set(_read(args.first))
    space_b, b = parse_set(_read(args.second))
    if space_a != space_b:
        raise DocumentError("the two sets use different outcome lists")
    result = sets_equivalent(a, b)
    return {"equivalent": result}, HOLDS if result else VIOLATED


def cmd_normalize(args) -> tuple[dict, int]:
    space, s = parse_set(_read(args.set))
    doc = set_doc(space, s)
    doc["vertices"] = [normalize_utility(v).values for v in s.vertices]
    return doc, HOLDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiutility",
        description="Check unanimity axioms and utilitarian representation conditions "
        "for profiles of expected multi-utility preferences.",
    )
    parser.add_argument("--pretty", action="store_true", help="human-readable summary")
    sub = parser.add_subparsers(dest="command", required=True)
    axioms = [a.value for a in Axiom]

    p = sub.add_parser("check-axiom", help="decide an axiom, with a violating lottery pair")
    p.add_argument("axiom", choices=axioms)
    p.add_argument("profile")
    p.set_defaults(func=cmd_check_axiom)

    p = sub.add_parser("check-condition", help="decide a representation condition")
    p.add_argument("condition", choices=sorted(_CONDITIONS))
    p.add_argument("profile")
    p.add_argument("--strict", action="store_true", help="read every set through its strictly increasing wrapper (prop1)")
    p.set_defaults(func=cmd_check_condition)

    p = sub.add_parser("aggregate", help="build a social set from an agents file")
    p.add_argument("rule", choices=["minkowski", "union-hull"])
    p.add_argument("agents")
    p.add_argument("--weights", help="comma-separated positive rationals, one per agent")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("witness", help="print only a violating lottery pair")
    p.add_argument("axiom", choices=axioms)
    p.add_argument("profile")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", help="brute-force grid search for violations")
    p.add_argument("axiom", choices=axioms)
    p.add_argument("profile")
    p.add_argument("--denominator", type=int, default=5)
    p.add_argument("--limit", type=int, default=20, help="max pairs listed in the report")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("equiv", help="positive-affine equivalence of two sets")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("normalize", help="mean-zero, range-one form of each vertex")
    p.add_argument("set")
    p.set_defaults(func=cmd_normalize)
    return parser


def _pretty(report: dict, status: int) -> str:
    lines = [f"{report['command']}: " + {0: "OK", 1: "VIOLATED / FALSE", 2: "INPUT ERROR"}[status]]
    for key, value in report.items():
        if key == "command":
            continue
        lines.append(f"  {key}: {json.dumps(value)}")
    return "\n".join(lines)


def run(argv=None) -> tuple[dict | None, int]:
    """Parse ``argv``, execute, and return ``(report, exit_status)``.

    The report is None when argparse already printed help or a usage error.
    """
    argv = [a for a in (sys.argv[1:] if argv is None else argv) if a != "--pretty"]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, INPUT_ERROR if exc.code else HOLDS
    start = time.perf_counter()
    try:
        report, status = args.func(args)
    except (DocumentError, ValueError) as exc:
        report, status = {"error": str(exc)}, INPUT_ERROR
    report = {"command": args.command, **report, "elapsed_seconds": round(time.perf_counter() - start, 6)}
    return to_jsonable(report), status


def main(argv=None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    report, status = run(args)
    if report is not None:
        print(_pretty(report, status) if "--pretty" in args else json.dumps(report, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
