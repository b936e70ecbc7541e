"""Theories induced by families of fuzzy sets, the axiom set of a
Hamiltonian path, and the decision procedures comparing the two.

Consequence from the finite axiom set is decided semantically: for finite
premise sets in Łukasiewicz logic semantic and syntactic consequence agree
(Hay-Wójcicki), so no proof search is needed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from ..basis import canonical_basis, detect_permutation, path_coverage, unit_vector
from ..plfun import global_max, global_min
from ..props import FuzzyFamily, Verdict, jsonable
from .formula import BOT, Conn, Formula, Var, chain, impl, land, neg, odot
from .semantics import compose, eval_at
from .syntax import to_text


def theta_member(phi: Formula, P: FuzzyFamily) -> Verdict:
    """Is ``phi`` true under every assignment the family realises?

    A refutation reports the rightmost point where ``phi`` is smallest.
    """
    f = compose(phi, P)
    value, _ = global_min(f)
    if value == 1:
        return Verdict(True)
    x = max(x for x, y in f.points if y == value)
    return Verdict(False, {"x": x, "value": value, "point": P.at(x)},
                   f"evaluates to {value} at x={x}")


@dataclass(frozen=True)
class AxiomSet:
    """Sum-to-one, adjacent-pairs-disjoint-mass and non-adjacent-pairs-disjoint-support
    formulas for ``n`` variables; pairs are unordered with ``i < j``."""

    n: int
    rho: Formula
    alphas: tuple[tuple[int, int, Formula], ...]
    betas: tuple[tuple[int, int, Formula], ...]

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(phi for _, phi in self.labelled())

    def labelled(self) -> list[tuple[str, Formula]]:
        out = [("rho", self.rho)]
        out += [(f"alpha_{i}{j}" if self.n < 10 else f"alpha_{i},{j}", phi) for i, j, phi in self.alphas]
        out += [(f"beta_{i}{j}" if self.n < 10 else f"beta_{i},{j}", phi) for i, j, phi in self.betas]
        return out

    def __len__(self) -> int:
        return 1 + len(self.alphas) + len(self.betas)


def axioms(n: int) -> AxiomSet:
    if n < 2:
        raise ValueError("the axiom set needs n >= 2")
    rho = chain(Conn.OPLUS, [Var(i) for i in range(1, n + 1)])
    alphas = tuple((i, i + 1, neg(odot(Var(i), Var(i + 1)))) for i in range(1, n))
    betas = tuple((i, j, neg(land(Var(i), Var(j))))
                  for i in range(1, n + 1) for j in range(i + 2, n + 1))
    return AxiomSet(n, rho, alphas, betas)


def on_path(point: Sequence[Fraction]) -> bool:
    """Is ``point`` on the chain of edges ``[e_1, e_2], ..., [e_{n-1}, e_n]``?"""
    nonzero = [i for i, v in enumerate(point) if v != 0]
    if sum(point) != 1 or len(nonzero) > 2:
        return False
    return len(nonzero) < 2 or nonzero[1] - nonzero[0] == 1


def oneset_grid_check(n: int, d: int) -> Verdict:
    """Exhaustively compare the 1-set of the axioms with the index-order path
    on the grid ``{0, 1/d, ..., 1}^n``."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    ax = axioms(n).formulas
    grid = [Fraction(k, d) for k in range(d + 1)]
    count = 0
    for point in itertools.product(grid, repeat=n):
        count += 1
        in_oneset = all(eval_at(phi, point) == 1 for phi in ax)
        if in_oneset != on_path(point):
            return Verdict(False, {"point": point, "in_oneset": in_oneset},
                           "1-set of the axioms differs from the path")
    return Verdict(True, {"points": count})


def a_consequence(phi: Formula, n: int) -> Verdict:
    """Does ``phi`` follow from ``axioms(n)``?

    The canonical basis parametrises the whole path, so this is membership
    in its theory.
    """
    return theta_member(phi, canonical_basis(n))


def phi_k(m: int, k: int) -> Formula:
    """``!Xm + ... + !Xm`` with ``k`` summands; true exactly where ``x_m <= (k-1)/k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return chain(Conn.OPLUS, [neg(Var(m))] * k)


@dataclass(frozen=True)
class TheoryCertificate:
    """Outcome of comparing the family's theory with the axioms' consequences.

    ``order`` is the relabelling applied first: member ``k`` of the compared
    family is member ``order[k-1]`` of the input.  For ``kind == "axiom"`` an
    axiom fails at parameter ``x``; for ``kind == "phi_k"`` the formula
    ``phi`` holds along the family but is 0 at the vertex ``e_m``.
    """

    equal: bool
    order: tuple[int, ...]
    kind: Optional[str] = None
    axiom_name: str = ""
    axiom: Optional[Formula] = None
    x: Optional[Fraction] = None
    value: Optional[Fraction] = None
    m: Optional[int] = None
    c: Optional[Fraction] = None
    k: Optional[int] = None
    phi: Optional[Formula] = None
    checks: dict[str, bool] = field(default_factory=dict)

    def verify(self, P: FuzzyFamily) -> bool:
        """Re-check the certificate by direct evaluation on ``P``."""
        Q = P.permuted(self.order)
        if self.equal:
            return all(theta_member(a, Q) for a in axioms(Q.n).formulas) and _covers_path(Q)
        if self.kind == "axiom":
            return eval_at(self.axiom, Q.at(self.x)) < 1
        if self.kind == "phi_k":
            vertex = unit_vector(Q.n, self.m)
            return (bool(theta_member(self.phi, Q))
                    and eval_at(self.phi, vertex) == 0
                    and all(eval_at(a, vertex) == 1 for a in axioms(Q.n).formulas))
        return False

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": "equal" if self.equal else "not-equal",
                               "order": self.order}
        if self.kind == "axiom":
            out.update(kind="axiom", axiom_name=self.axiom_name, axiom=to_text(self.axiom),
                       x=self.x, value=self.value)
        elif self.kind == "phi_k":
            out.update(kind="phi_k", m=self.m, c=self.c, k=self.k, phi=to_text(self.phi))
        if self.checks:
            out["checks"] = self.checks
        return jsonable(out)


def _covers_path(Q: FuzzyFamily) -> bool:
    cov = path_coverage(Q)
    return not cov.leftovers and all(cov.fully_covered((i, i + 1)) for i in range(1, Q.n))


def theory_equal(P: FuzzyFamily, relabel: bool | Sequence[int] = False) -> TheoryCertificate:
    """Decide whether the family's theory equals the axioms' consequences.

    ``relabel`` may be True (use the detected index order) or an explicit
    order; otherwise the family is compared in its given order.
    """
    if P.n < 2:
        raise ValueError("theory comparison needs n >= 2")
    if relabel is True:
        order = detect_permutation(P)
    elif relabel is False:
        order = tuple(range(1, P.n + 1))
    else:
        order = tuple(relabel)
    Q = P.permuted(order)
    ax = axioms(Q.n)

    for name, phi in ax.labelled():
        verdict = theta_member(phi, Q)
        if not verdict:
            return TheoryCertificate(False, order, "axiom", axiom_name=name, axiom=phi,
                                     x=verdict.witness["x"], value=verdict.witness["value"],
                                     checks={"axiom_fails_at_x": True})

    # Every image point now lies on the path.  The image is connected and
    # closed, so if it is not the whole path it misses e_1 or e_n.
    tops = {m: global_max(Q.member(m))[0] for m in (Q.n, 1)}
    missing = [m for m in (Q.n, 1) if tops[m] < 1]
    if not missing:
        return TheoryCertificate(True, order)
    m = missing[0]
    c = tops[m]
    # Any k with c <= (k-1)/k works.  The metric argument (an eps-ball around
    # e_m free of the image, then k >= sqrt(2)/eps) also gives a valid but
    # larger k; the coordinate bound is exact and radical-free.
    k = max(1, math.ceil(1 / (1 - c)))
    phi = phi_k(m, k)
    vertex = unit_vector(Q.n, m)
    checks = {
        "phi_in_theory": bool(theta_member(phi, Q)),
        "phi_zero_at_vertex": eval_at(phi, vertex) == 0,
        "vertex_satisfies_axioms": all(eval_at(a, vertex) == 1 for a in ax.formulas),
    }
    if not all(checks.values()):
        raise AssertionError(f"separating formula failed its own checks: {checks}")
    return TheoryCertificate(False, order, "phi_k", m=m, c=c, k=k, phi=phi, checks=checks)


@dataclass(frozen=True)
class ClosureProbe:
    antecedent: Verdict
    implication: Verdict
    consequent: Verdict

    @property
    def closed(self) -> bool:
        return not (self.antecedent and self.implication) or self.consequent.holds


def deductive_closure_probe(P: FuzzyFamily, phi: Formula, psi: Formula) -> ClosureProbe:
    """Modus ponens instance: phi and phi -> psi in the theory force psi."""
    return ClosureProbe(theta_member(phi, P), theta_member(impl(phi, psi), P), theta_member(psi, P))


def is_consistent(P: FuzzyFamily) -> bool:
    return not theta_member(BOT, P)
