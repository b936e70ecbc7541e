"""Random instances: pseudo-triangular bases, mutations that break them,
arbitrary PL families and formulas.  Every generator takes a ``random.Random``."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .logic.formula import BOT, TOP, Binary, Conn, Formula, Not, Var
from .plfun import ONE, ZERO, PLFunc
from .props import FuzzyFamily

DENOMINATORS = (12, 20, 30, 42, 60, 97)
MUTATIONS = ("plateau", "scale", "extra", "truncate")


def _inside(rng: random.Random, lo: Fraction, hi: Fraction, count: int) -> list[Fraction]:
    """``count`` distinct sorted rationals strictly between ``lo`` and ``hi``."""
    denom = rng.choice(DENOMINATORS)
    while denom - 1 < count:
        denom *= 2
    picks = sorted(rng.sample(range(1, denom), count))
    return [lo + (hi - lo) * Fraction(k, denom) for k in picks]


def _descent(rng: random.Random, lo: Fraction, hi: Fraction, pieces: int,
             end: Fraction = ZERO, flat: bool = False) -> list[tuple[Fraction, Fraction]]:
    """PL map from ``(lo, 1)`` to ``(hi, end)``, strictly decreasing unless
    ``flat``, in which case exactly one interior piece is horizontal."""
    if flat:
        pieces = max(pieces, 3)
    xs = _inside(rng, lo, hi, pieces - 1)
    ys = sorted(_inside(rng, end, ONE, pieces - 1), reverse=True)
    if flat:
        j = rng.randrange(len(ys) - 1)
        ys[j + 1] = ys[j]
    return [(lo, ONE), *zip(xs, ys), (hi, end)]


def _assemble(n: int, pieces: list[list[tuple[Fraction, Fraction]]]) -> list[PLFunc]:
    members = []
    for i in range(n):
        pts: dict[Fraction, Fraction] = {}
        for k, piece in enumerate(pieces):
            for x, y in piece:
                if i == k:
                    pts[x] = y
                elif i == k + 1:
                    pts[x] = 1 - y
                else:
                    pts.setdefault(x, ZERO)
        members.append(PLFunc(tuple(sorted(pts.items()))))
    return members


def random_basis(rng: random.Random, n: Optional[int] = None, max_pieces: int = 6, *,
                 plateau: bool = False, truncate: bool = False, shuffle: bool = True) -> FuzzyFamily:
    """A PL pseudo-triangular basis with random nodes and random strictly
    monotone pieces between consecutive nodes.

    ``plateau`` flattens one piece of one interval; ``truncate`` stops the
    curve short of the last vertex.  Both break the basis property.
    """
    if n is None:
        n = rng.randint(2, 8)
    nodes = [ZERO, *_inside(rng, ZERO, ONE, n - 2), ONE]
    flat_at = rng.randrange(n - 1) if plateau else -1
    pieces = []
    for k in range(n - 1):
        end = ZERO
        if truncate and k == n - 2:
            end = _inside(rng, ZERO, ONE, 1)[0]
        pieces.append(_descent(rng, nodes[k], nodes[k + 1], rng.randint(1, max_pieces),
                               end=end, flat=(k == flat_at)))
    members = _assemble(n, pieces)
    if truncate and rng.random() < 0.5:
        # mirror so the first hat is the truncated one
        members = [PLFunc(tuple((1 - x, y) for x, y in reversed(f.points))) for f in members]
    if shuffle:
        rng.shuffle(members)
    return FuzzyFamily(tuple(members))


def mutate(rng: random.Random, kind: str, n: Optional[int] = None, max_pieces: int = 6) -> FuzzyFamily:
    if kind == "plateau":
        return random_basis(rng, n, max_pieces, plateau=True)
    if kind == "truncate":
        return random_basis(rng, n, max_pieces, truncate=True)
    base = list(random_basis(rng, n, max_pieces))
    j = rng.randrange(len(base))
    if kind == "scale":
        s = _inside(rng, ZERO, ONE, 1)[0]
        base[j] = PLFunc(tuple((x, s * y) for x, y in base[j].points))
    elif kind == "extra":
        base.insert(rng.randrange(len(base) + 1), base[j])
    else:
        raise ValueError(f"unknown mutation {kind!r}")
    return FuzzyFamily(tuple(base))


def random_pl(rng: random.Random, max_breakpoints: int = 5) -> PLFunc:
    k = rng.randint(0, max_breakpoints - 2)
    xs = [ZERO, *_inside(rng, ZERO, ONE, k), ONE]
    denom = rng.choice(DENOMINATORS)
    return PLFunc(tuple((x, Fraction(rng.randint(0, denom), denom)) for x in xs))


def random_family(rng: random.Random, n: Optional[int] = None, max_breakpoints: int = 5) -> FuzzyFamily:
    if n is None:
        n = rng.randint(1, 4)
    return FuzzyFamily(tuple(random_pl(rng, max_breakpoints) for _ in range(n)))


def random_formula(rng: random.Random, nvars: int, depth: int) -> Formula:
    if depth <= 0 or rng.random() < 0.15:
        r = rng.random()
        if r < 0.08:
            return BOT
        if r < 0.16:
            return TOP
        return Var(rng.randint(1, nvars))
    if rng.random() < 0.2:
        return Not(random_formula(rng, nvars, depth - 1))
    op = rng.choice(list(Conn))
    return Binary(op, random_formula(rng, nvars, depth - 1), random_formula(rng, nvars, depth - 1))
