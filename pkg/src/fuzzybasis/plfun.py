"""Exact piecewise-linear functions on the unit interval.

All scalars are :class:`fractions.Fraction`.  A :class:`PLFunc` is stored as
its canonical breakpoint list, so two functions are equal exactly when their
breakpoint tuples are equal.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence, Union

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class DomainError(ValueError):
    """Raised when a point lies outside [0, 1]."""


def rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact Fraction; floats are rejected."""
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction or 'p/q' string")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def _collinear(p: tuple[Fraction, Fraction], q: tuple[Fraction, Fraction],
               r: tuple[Fraction, Fraction]) -> bool:
    return (q[1] - p[1]) * (r[0] - q[0]) == (r[1] - q[1]) * (q[0] - p[0])


def _canonical(points: list[tuple[Fraction, Fraction]]) -> tuple[tuple[Fraction, Fraction], ...]:
    out: list[tuple[Fraction, Fraction]] = []
    for p in points:
        while len(out) >= 2 and _collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class PLFunc:
    """Continuous piecewise-linear map [0,1] -> [0,1].

    ``points`` is the breakpoint list ``((x0, y0), ..., (xk, yk))`` with
    ``x0 = 0``, ``xk = 1`` and strictly increasing x.  The constructor
    validates and drops collinear interior breakpoints.
    """

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        pts = [(rational(x), rational(y)) for x, y in self.points]
        if not pts:
            raise ValueError("a PL function needs at least one breakpoint")
        if len(pts) == 1:
            raise ValueError("breakpoints must start at x=0 and end at x=1")
        if pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError(f"breakpoints must start at x=0 and end at x=1, got {pts[0][0]}..{pts[-1][0]}")
        for (xa, _), (xb, _) in zip(pts, pts[1:]):
            if not xa < xb:
                raise ValueError(f"breakpoint x coordinates not strictly increasing at {xa}, {xb}")
        for x, y in pts:
            if not 0 <= y <= 1:
                raise ValueError(f"value {y} at x={x} outside [0, 1]")
        object.__setattr__(self, "points", _canonical(pts))

    @classmethod
    def _trusted(cls, points: list[tuple[Fraction, Fraction]]) -> "PLFunc":
        """Skip validation for points built from already valid functions."""
        f = object.__new__(cls)
        object.__setattr__(f, "points", _canonical(points))
        return f

    @classmethod
    def constant(cls, c: RationalLike) -> "PLFunc":
        c = rational(c)
        return cls(((ZERO, c), (ONE, c)))

    @classmethod
    def identity(cls) -> "PLFunc":
        return cls(((ZERO, ZERO), (ONE, ONE)))

    @cached_property
    def xs(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.points)

    @cached_property
    def ys(self) -> tuple[Fraction, ...]:
        return tuple(y for _, y in self.points)

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __len__(self) -> int:
        return len(self.points)

    def segments(self) -> Iterator[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
        return zip(self.points, self.points[1:])

    def is_constant(self, c: RationalLike | None = None) -> bool:
        if len(self.points) != 2 or self.points[0][1] != self.points[1][1]:
            return False
        return c is None or self.points[0][1] == rational(c)

    def __str__(self) -> str:
        return ", ".join(f"{x} {y}" for x, y in self.points)


def evaluate(f: PLFunc, x: RationalLike) -> Fraction:
    """Value of ``f`` at ``x`` by exact linear interpolation."""
    x = rational(x)
    if not 0 <= x <= 1:
        raise DomainError(f"x={x} outside [0, 1]")
    xs = f.xs
    i = bisect.bisect_left(xs, x)
    if xs[i] == x:
        return f.ys[i]
    x0, y0 = f.points[i - 1]
    x1, y1 = f.points[i]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def sample_sorted(f: PLFunc, xs: Sequence[Fraction]) -> list[Fraction]:
    """Values of ``f`` at the increasing points ``xs`` in one sweep."""
    out = []
    pts = f.points
    k = 0
    for x in xs:
        while pts[k + 1][0] < x:
            k += 1
        (x0, y0), (x1, y1) = pts[k], pts[k + 1]
        if x == x1:
            out.append(y1)
        elif x == x0:
            out.append(y0)
        else:
            out.append(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    return out


class Op(enum.Enum):
    """Pointwise binary operations on [0,1] values."""

    MIN = "min"
    MAX = "max"
    TSUM = "truncated-sum"
    TPROD = "truncated-product"
    TDIFF = "truncated-difference"
    BICOND = "biconditional"
    IMPL = "implication"

    def __call__(self, a: Fraction, b: Fraction) -> Fraction:
        return _SCALAR[self](a, b)


_SCALAR: dict[Op, Callable[[Fraction, Fraction], Fraction]] = {
    Op.MIN: min,
    Op.MAX: max,
    Op.TSUM: lambda a, b: min(ONE, a + b),
    Op.TPROD: lambda a, b: max(ZERO, a + b - 1),
    Op.TDIFF: lambda a, b: max(ZERO, a - b),
    Op.BICOND: lambda a, b: 1 - abs(a - b),
    Op.IMPL: lambda a, b: min(ONE, 1 - (a - b)),
}

# Each op is affine on either side of the zero set of its switching function.
_SWITCH: dict[Op, Callable[[Fraction, Fraction], Fraction]] = {
    Op.MIN: lambda a, b: a - b,
    Op.MAX: lambda a, b: a - b,
    Op.TSUM: lambda a, b: a + b - 1,
    Op.TPROD: lambda a, b: a + b - 1,
    Op.TDIFF: lambda a, b: a - b,
    Op.BICOND: lambda a, b: a - b,
    Op.IMPL: lambda a, b: a - b,
}


def merged_breakpoints(funcs: Iterable[PLFunc]) -> list[Fraction]:
    """Sorted union of the breakpoint abscissae of ``funcs``."""
    xs: set[Fraction] = set()
    for f in funcs:
        xs.update(f.xs)
    return sorted(xs)


def combine(f: PLFunc, g: PLFunc, op: Op | str) -> PLFunc:
    """Canonical PL function ``x -> op(f(x), g(x))``."""
    op = Op(op)
    scalar = _SCALAR[op]
    switch = _SWITCH[op]
    xs = merged_breakpoints((f, g))
    fv = sample_sorted(f, xs)
    gv = sample_sorted(g, xs)
    refined = [xs[0]]
    values = [(fv[0], gv[0])]
    for k in range(1, len(xs)):
        x0, x1 = xs[k - 1], xs[k]
        s0 = switch(fv[k - 1], gv[k - 1])
        s1 = switch(fv[k], gv[k])
        if (s0 < 0 < s1) or (s1 < 0 < s0):
            t = s0 / (s0 - s1)
            refined.append(x0 + (x1 - x0) * t)
            values.append((fv[k - 1] + (fv[k] - fv[k - 1]) * t, gv[k - 1] + (gv[k] - gv[k - 1]) * t))
        refined.append(x1)
        values.append((fv[k], gv[k]))
    return PLFunc._trusted([(x, scalar(a, b)) for x, (a, b) in zip(refined, values)])


def negate(f: PLFunc) -> PLFunc:
    return PLFunc._trusted([(x, 1 - y) for x, y in f.points])


def global_min(f: PLFunc) -> tuple[Fraction, Fraction]:
    """``(value, witness)``: the minimum of ``f`` and the leftmost x attaining it."""
    value = min(f.ys)
    return value, f.xs[f.ys.index(value)]


def global_max(f: PLFunc) -> tuple[Fraction, Fraction]:
    value = max(f.ys)
    return value, f.xs[f.ys.index(value)]


def pl_equal(f: PLFunc, g: PLFunc) -> bool:
    return f.points == g.points


def from_pairs(pairs: Sequence[tuple[RationalLike, RationalLike]]) -> PLFunc:
    return PLFunc(tuple((rational(x), rational(y)) for x, y in pairs))
