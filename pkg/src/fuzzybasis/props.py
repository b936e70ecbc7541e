"""Checkers for single fuzzy sets and finite families, each returning a
:class:`Verdict` whose failure witness can be re-evaluated directly."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterator, Sequence

from .plfun import PLFunc, evaluate, global_max, merged_breakpoints, sample_sorted


@dataclass(frozen=True)
class FuzzyFamily:
    """Ordered family ``(f_1, ..., f_n)``; public indices are 1-based."""

    members: tuple[PLFunc, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise ValueError("a family needs at least one member")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, *members: PLFunc) -> "FuzzyFamily":
        return cls(tuple(members))

    @property
    def n(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[PLFunc]:
        return iter(self.members)

    def member(self, i: int) -> PLFunc:
        if not 1 <= i <= self.n:
            raise IndexError(f"member index {i} outside 1..{self.n}")
        return self.members[i - 1]

    def at(self, x: Fraction) -> tuple[Fraction, ...]:
        """The point ``T_P(x) = (f_1(x), ..., f_n(x))``."""
        return tuple(evaluate(f, x) for f in self.members)

    def sweep(self) -> tuple[list[Fraction], list[tuple[Fraction, ...]]]:
        """Merged breakpoints and the curve point at each of them."""
        return self._sweep

    @cached_property
    def _sweep(self) -> tuple[list[Fraction], list[tuple[Fraction, ...]]]:
        xs = self.breakpoints()
        columns = [sample_sorted(f, xs) for f in self.members]
        return xs, list(zip(*columns))

    def breakpoints(self) -> list[Fraction]:
        return merged_breakpoints(self.members)

    def permuted(self, order: Sequence[int]) -> "FuzzyFamily":
        """Family whose k-th member is the ``order[k-1]``-th member of this one."""
        if sorted(order) != list(range(1, self.n + 1)):
            raise ValueError(f"{order!r} is not a permutation of 1..{self.n}")
        return FuzzyFamily(tuple(self.member(i) for i in order))


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"holds": self.holds}
        if self.witness:
            out["witness"] = jsonable(self.witness)
        if self.reason:
            out["reason"] = self.reason
        return out


HOLDS = Verdict(True)


def jsonable(obj: Any) -> Any:
    """Recursively render Fractions as ``p/q`` strings."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


# -- family properties ------------------------------------------------------

def is_ruspini(P: FuzzyFamily) -> Verdict:
    # The sum is affine between merged breakpoints, so checking those suffices.
    xs, pts = P.sweep()
    for x, point in zip(xs, pts):
        total = sum(point, Fraction(0))
        if total != 1:
            return Verdict(False, {"x": x, "sum": total}, "member values do not sum to 1")
    return HOLDS


def is_2_overlapping(P: FuzzyFamily) -> Verdict:
    # On a merged segment each member is affine and nonnegative, hence
    # positive on the whole open segment unless it vanishes at both ends.
    xs, pts = P.sweep()
    for k in range(len(xs) - 1):
        p, q = pts[k], pts[k + 1]
        alive = [i for i in range(P.n) if p[i] > 0 or q[i] > 0]
        if len(alive) < 3:
            continue
        triple = alive[:3]
        for x, point in ((xs[k], p), (xs[k + 1], q), ((xs[k] + xs[k + 1]) / 2, None)):
            point = point or P.at(x)
            low = min(point[i] for i in triple)
            if low > 0:
                return Verdict(False, {"triple": tuple(i + 1 for i in triple), "x": x, "min": low},
                               "three members are simultaneously positive")
    return HOLDS


# -- single-set properties --------------------------------------------------

def is_normal(f: PLFunc) -> Verdict:
    value, _ = global_max(f)
    if value == 1:
        return HOLDS
    return Verdict(False, {"max": value}, "never reaches 1")


def is_strongly_normal(f: PLFunc) -> Verdict:
    # A PL function equals 1 off its breakpoints only on a flat segment at 1,
    # whose two endpoints are then breakpoints at height 1 as well.
    peaks = [x for x, y in f.points if y == 1]
    if not peaks:
        return Verdict(False, {"max": global_max(f)[0]}, "never reaches 1")
    if len(peaks) > 1:
        return Verdict(False, {"x": peaks[0], "y": peaks[1]}, "reaches 1 at two distinct points")
    return Verdict(True, {"peak": peaks[0]})


def is_min_convex(f: PLFunc) -> Verdict:
    """Quasiconcavity: once ``f`` strictly drops it never strictly rises again.

    For PL data it is enough to look for a breakpoint ``z`` with a higher
    breakpoint on each side.
    """
    pts = f.points
    prefix_best = 0
    for j in range(1, len(pts) - 1):
        if pts[j - 1][1] > pts[prefix_best][1]:
            prefix_best = j - 1
        xz, fz = pts[j]
        if pts[prefix_best][1] <= fz:
            continue
        for xy, fy in pts[j + 1:]:
            if fy > fz:
                return Verdict(False, {"x": pts[prefix_best][0], "z": xz, "y": xy},
                               "f(z) < f(x) but f(y) > f(z)")
    return HOLDS


def support_intervals(f: PLFunc) -> list[tuple[Fraction, Fraction]]:
    """Closures of the maximal intervals on which ``f > 0``.

    Zeros of a PL function with values in [0,1] sit on breakpoints or on flat
    zero segments, so interval ends are always breakpoints.
    """
    out: list[tuple[Fraction, Fraction]] = []
    start: Fraction | None = None
    for (x0, y0), (x1, y1) in f.segments():
        if y0 == 0 and start is not None:
            out.append((start, x0))
            start = None
        if (y0 > 0 or y1 > 0) and start is None:
            start = x0
    if start is not None:
        out.append((start, f.points[-1][0]))
    return out


def is_strictly_min_convex_on_support(f: PLFunc) -> Verdict:
    """Strict unimodality on each closed support interval.

    Reads the strict inequality with distinct endpoints and a proper convex
    combination; otherwise no function could satisfy it.
    """
    for lo, hi in support_intervals(f):
        pts = [p for p in f.points if lo <= p[0] <= hi]
        for (xa, ya), (xb, yb) in zip(pts, pts[1:]):
            if ya == yb:
                return Verdict(False, {"x": xa, "z": (xa + xb) / 2, "y": xb},
                               "flat segment inside the support")
        descending = None
        for k in range(1, len(pts)):
            if pts[k][1] < pts[k - 1][1] and descending is None:
                descending = k - 1
            if descending is not None and pts[k][1] > pts[k - 1][1]:
                return Verdict(False, {"x": pts[descending][0], "z": pts[k - 1][0], "y": pts[k][0]},
                               "f(z) <= f(x) but f(y) >= f(z)")
    return HOLDS


def is_separating(P: FuzzyFamily) -> Verdict:
    from .basis import injectivity_check

    return injectivity_check(P)


# -- aggregate --------------------------------------------------------------

FAMILY_CHECKS = {
    "ruspini": is_ruspini,
    "2-overlapping": is_2_overlapping,
    "separating": is_separating,
}

MEMBER_CHECKS = {
    "normal": is_normal,
    "strongly-normal": is_strongly_normal,
    "min-convex": is_min_convex,
    "strictly-min-convex-on-support": is_strictly_min_convex_on_support,
}


@dataclass(frozen=True)
class PropertyReport:
    family: dict[str, Verdict]
    members: tuple[dict[str, Verdict], ...]

    def all_hold(self) -> bool:
        return all(self.family.values()) and all(all(m.values()) for m in self.members)

    def member_bundle(self, name: str) -> bool:
        return all(m[name] for m in self.members)

    def as_dict(self) -> dict[str, Any]:
        return {
            "family": {k: v.as_dict() for k, v in self.family.items()},
            "members": [{k: v.as_dict() for k, v in m.items()} for m in self.members],
        }


def property_report(P: FuzzyFamily) -> PropertyReport:
    family = {name: check(P) for name, check in FAMILY_CHECKS.items()}
    members = tuple({name: check(f) for name, check in MEMBER_CHECKS.items()} for f in P)
    return PropertyReport(family, members)
