"""Formula trees for Łukasiewicz logic over variables X1, X2, ..."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, TypeVar, Union

T = TypeVar("T")


class Conn(enum.Enum):
    IMPL = "->"
    BICOND = "<->"
    AND = "&"
    OR = "|"
    OPLUS = "+"
    ODOT = "*"
    OMINUS = "-"


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class Const:
    value: int  # 0 for falsum, 1 for verum


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class Binary:
    op: Conn
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Const, Not, Binary]

BOT = Const(0)
TOP = Const(1)


def X(i: int) -> Var:
    return Var(i)


def neg(a: Formula) -> Not:
    return Not(a)


def impl(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.IMPL, a, b)


def bicond(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.BICOND, a, b)


def land(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.AND, a, b)


def lor(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.OR, a, b)


def oplus(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.OPLUS, a, b)


def odot(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.ODOT, a, b)


def ominus(a: Formula, b: Formula) -> Binary:
    return Binary(Conn.OMINUS, a, b)


def chain(op: Conn, parts: list[Formula]) -> Formula:
    """Left-associated ``parts[0] op parts[1] op ...``."""
    out = parts[0]
    for p in parts[1:]:
        out = Binary(op, out, p)
    return out


def fold(phi: Formula,
         var: Callable[[int], T],
         const: Callable[[int], T],
         unary: Callable[[T], T],
         binary: Callable[[Conn, T, T], T]) -> T:
    """Bottom-up evaluation without recursion, so long chains are safe."""
    stack: list[tuple[Formula, bool]] = [(phi, False)]
    results: list[T] = []
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Var):
            results.append(var(node.index))
        elif isinstance(node, Const):
            results.append(const(node.value))
        elif not expanded:
            stack.append((node, True))
            if isinstance(node, Not):
                stack.append((node.arg, False))
            else:
                stack.append((node.right, False))
                stack.append((node.left, False))
        elif isinstance(node, Not):
            results.append(unary(results.pop()))
        else:
            right = results.pop()
            left = results.pop()
            results.append(binary(node.op, left, right))
    return results[0]


def variables(phi: Formula) -> frozenset[int]:
    return fold(phi, lambda i: frozenset((i,)), lambda _: frozenset(), lambda a: a,
                lambda _, a, b: a | b)


def max_index(phi: Formula) -> int:
    return max(variables(phi), default=0)


def depth(phi: Formula) -> int:
    return fold(phi, lambda _: 0, lambda _: 0, lambda a: a + 1, lambda _, a, b: 1 + max(a, b))


def desugar(phi: Formula) -> Formula:
    """Rewrite into negation, implication and falsum using the standard
    definitions of the derived connectives."""

    def binary(op: Conn, a: Formula, b: Formula) -> Formula:
        if op is Conn.IMPL:
            return impl(a, b)
        if op is Conn.OR:
            return impl(impl(a, b), b)
        if op is Conn.AND:
            return neg(binary(Conn.OR, neg(a), neg(b)))
        if op is Conn.BICOND:
            return binary(Conn.AND, impl(a, b), impl(b, a))
        if op is Conn.OPLUS:
            return impl(neg(a), b)
        if op is Conn.ODOT:
            return neg(impl(a, neg(b)))
        return neg(impl(a, b))

    return fold(phi, Var, lambda v: BOT if v == 0 else neg(BOT), Not, binary)
