"""[0,1]-valued semantics, pointwise and lifted to PL functions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..plfun import ONE, ZERO, Op, PLFunc, combine, negate, rational
from ..props import FuzzyFamily
from .formula import Conn, Formula, fold, max_index


class ArityError(ValueError):
    """A formula mentions a variable the point or family does not provide."""


TRUTH: dict[Conn, Op] = {
    Conn.IMPL: Op.IMPL,
    Conn.BICOND: Op.BICOND,
    Conn.AND: Op.MIN,
    Conn.OR: Op.MAX,
    Conn.OPLUS: Op.TSUM,
    Conn.ODOT: Op.TPROD,
    Conn.OMINUS: Op.TDIFF,
}


def _check_arity(phi: Formula, n: int) -> None:
    top = max_index(phi)
    if top > n:
        raise ArityError(f"formula uses X{top} but only {n} values are available")


def eval_at(phi: Formula, point: Sequence[Fraction | int | str]) -> Fraction:
    """Truth value of ``phi`` under ``X_i -> point[i-1]``."""
    values = [rational(v) for v in point]
    for v in values:
        if not 0 <= v <= 1:
            raise ValueError(f"truth value {v} outside [0, 1]")
    _check_arity(phi, len(values))
    return fold(phi,
                lambda i: values[i - 1],
                lambda c: ONE if c else ZERO,
                lambda a: 1 - a,
                lambda op, a, b: TRUTH[op](a, b))


def compose(phi: Formula, P: FuzzyFamily) -> PLFunc:
    """The PL function ``x -> phi(f_1(x), ..., f_n(x))``."""
    _check_arity(phi, P.n)
    return fold(phi,
                P.member,
                PLFunc.constant,
                negate,
                lambda op, f, g: combine(f, g, TRUTH[op]))
