"""Command-line front end.

Exit status: 0 when the verdict is affirmative, 1 when it is negative (a
certificate is printed), 2 on usage or parse errors, 3 if the three
classification routes ever disagree.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import familyfile
from .basis import canonical_basis, classify
from .logic import (ArityError, FormulaSyntaxError, axioms, eval_at, oneset_grid_check, parse,
                    theory_equal, theta_member, to_text)
from .plfun import sample_sorted
from .props import jsonable, property_report

OK, NEGATIVE, USAGE, INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict[str, Any], lines: list[str]) -> None:
    if args.json:
        print(json.dumps(jsonable(payload), indent=2))
    else:
        print("\n".join(lines))


def _mark(holds: bool) -> str:
    return "holds" if holds else "FAILS"


def _fmt_witness(w: dict[str, Any]) -> str:
    return ", ".join(f"{k}={_fmt(v)}" for k, v in w.items())


def _fmt(v: Any) -> str:
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(_fmt(u) for u in v) + ")"
    return str(v)


def _load(path: str):
    try:
        return familyfile.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except familyfile.FamilyFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _formula(text: str):
    try:
        return parse(text)
    except FormulaSyntaxError as exc:
        raise UsageError(f"formula: {exc}") from None


def _rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a comma-separated list of rationals: {text!r}") from None


# -- commands ---------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    P = _load(args.file)
    report = property_report(P)
    lines = [f"family of {P.n} fuzzy sets"]
    for name, v in report.family.items():
        lines.append(f"  {name:<32} {_mark(v.holds)}" + (f"  [{_fmt_witness(v.witness)}]" if not v else ""))
    for i, member in enumerate(report.members, start=1):
        lines.append(f"f{i}")
        for name, v in member.items():
            extra = f"  [{_fmt_witness(v.witness)}]" if not v and v.witness else ""
            lines.append(f"  {name:<32} {_mark(v.holds)}{extra}")
    _emit(args, report.as_dict(), lines)
    return OK if report.all_hold() else NEGATIVE


def cmd_classify(args: argparse.Namespace) -> int:
    P = _load(args.file)
    if P.n < 2:
        raise UsageError("classification needs at least two fuzzy sets")
    result = classify(P, strict=False)
    d = result.verdict_def
    lines = [
        f"pseudo-triangular basis: {'yes' if result.pseudo_triangular else 'no'}",
        f"triangular basis:        {'yes' if result.triangular else 'no'}",
    ]
    if d:
        lines.append("nodes:       " + ", ".join(map(str, d.nodes)))
        lines.append("permutation: " + " ".join(map(str, d.permutation)))
    lines.append(f"  definition route: {_mark(d.holds)}" + (f"  ({d.reason})" if d.reason else ""))
    lines.append(f"  property route:   {_mark(result.verdict_ii.holds)}"
                 + (f"  ({result.verdict_ii.reason})" if result.verdict_ii.reason else ""))
    lines.append(f"  geometric route:  {_mark(result.verdict_iii.holds)}"
                 + (f"  ({result.verdict_iii.reason})" if result.verdict_iii.reason else ""))
    payload = result.as_dict()
    if not result.agree():
        lines.append("INTERNAL ERROR: classification routes disagree")
        payload["disagreement"] = True
        _emit(args, payload, lines)
        return INTERNAL
    _emit(args, payload, lines)
    return OK if result.pseudo_triangular else NEGATIVE


def cmd_axioms(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError("axioms need n >= 2")
    for phi in axioms(args.n).formulas:
        print(to_text(phi))
    return OK


def cmd_member(args: argparse.Namespace) -> int:
    P = _load(args.file)
    phi = _formula(args.formula)
    try:
        verdict = theta_member(phi, P)
    except ArityError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"{to_text(phi)} is {'a member' if verdict else 'NOT a member'} of the theory"]
    if not verdict:
        w = verdict.witness
        lines.append(f"  refuted at x={w['x']}: value {w['value']} at point {_fmt(w['point'])}")
    payload = {"formula": to_text(phi), **verdict.as_dict()}
    _emit(args, payload, lines)
    return OK if verdict else NEGATIVE


def cmd_theory_eq(args: argparse.Namespace) -> int:
    P = _load(args.file)
    if P.n < 2:
        raise UsageError("theory comparison needs at least two fuzzy sets")
    cert = theory_equal(P, relabel=args.relabel)
    verified = cert.verify(P)
    lines = []
    if tuple(cert.order) != tuple(range(1, P.n + 1)):
        lines.append("relabelled order: " + " ".join(map(str, cert.order)))
    if cert.equal:
        lines.append("theory equals the consequences of the path axioms")
    elif cert.kind == "axiom":
        lines.append(f"not equal: axiom {cert.axiom_name} = {to_text(cert.axiom)} "
                     f"evaluates to {cert.value} at x={cert.x}")
    else:
        lines.append(f"not equal: vertex e_{cert.m} is not reached (max x_{cert.m} = {cert.c}, k = {cert.k})")
        lines.append(f"phi_{cert.k} = {to_text(cert.phi)}")
        lines.append(f"  phi_{cert.k} holds along the family: {cert.checks['phi_in_theory']}")
        lines.append(f"  phi_{cert.k} evaluates to 0 at e_{cert.m}: {cert.checks['phi_zero_at_vertex']}")
    lines.append(f"certificate re-verified: {verified}")
    payload = {**cert.as_dict(), "verified": verified}
    _emit(args, payload, lines)
    return OK if cert.equal else NEGATIVE


def cmd_oneset(args: argparse.Namespace) -> int:
    if args.n < 2 or args.d < 1:
        raise UsageError("need n >= 2 and d >= 1")
    verdict = oneset_grid_check(args.n, args.d)
    lines = [f"1-set of the axioms matches the path on the grid: {_mark(verdict.holds)}"]
    lines.append(f"  {_fmt_witness(verdict.witness)}")
    _emit(args, verdict.as_dict(), lines)
    return OK if verdict else NEGATIVE


def cmd_canon(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError("canonical basis needs n >= 2")
    text = familyfile.dumps(canonical_basis(args.n))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_eval(args: argparse.Namespace) -> int:
    phi = _formula(args.formula)
    point = _rationals(args.at)
    try:
        value = eval_at(phi, point)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(value)
    return OK


def cmd_sample(args: argparse.Namespace) -> int:
    P = _load(args.file)
    if args.points < 1:
        raise UsageError("--points must be at least 1")
    xs = [Fraction(i, args.points) for i in range(args.points + 1)]
    columns = [sample_sorted(f, xs) for f in P]
    names = ["x", *(f"f{i}" for i in range(1, P.n + 1))]
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        # Decimal columns are approximate and meant for plotting only.
        writer.writerow(names + [f"{c}_exact" for c in names])
        for k, x in enumerate(xs):
            row = [x, *(col[k] for col in columns)]
            writer.writerow([f"{float(v):.12g}" for v in row] + [str(v) for v in row])
    finally:
        if out is not sys.stdout:
            out.close()
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzybasis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, family: bool = False, json_flag: bool = True):
        p = sub.add_parser(name, help=help)
        if family:
            p.add_argument("file", help="family file")
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "property report with witnesses", family=True)
    add("classify", cmd_classify, "three-route basis classification", family=True)
    p = add("axioms", cmd_axioms, "print the path axioms for n variables", json_flag=False)
    p.add_argument("n", type=int)
    p = add("member", cmd_member, "membership of a formula in the family's theory", family=True)
    p.add_argument("formula")
    p = add("theory-eq", cmd_theory_eq, "compare the family's theory with the axioms", family=True)
    p.add_argument("--relabel", action="store_true", help="apply the detected index order first")
    p = add("oneset", cmd_oneset, "grid check of the axioms' 1-set")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p = add("canon", cmd_canon, "write the canonical triangular basis", json_flag=False)
    p.add_argument("n", type=int)
    p.add_argument("-o", "--out", help="output file (default stdout)")
    p = add("eval", cmd_eval, "evaluate a formula at a point", json_flag=False)
    p.add_argument("formula")
    p.add_argument("--at", required=True, help="comma-separated rationals, e.g. 1/4,3/4")
    p = add("sample", cmd_sample, "CSV samples for plotting", family=True, json_flag=False)
    p.add_argument("--points", type=int, default=100, help="number of intervals k (k+1 rows)")
    p.add_argument("--out", help="output CSV (default stdout)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
