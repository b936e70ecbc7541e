"""The curve ``T_P(t) = (f_1(t), ..., f_n(t))`` and pseudo-triangular bases.

A family is classified three ways: directly from the node conditions, from
the bundle of single-set and family properties, and geometrically (the curve
is injective and its range is a Hamiltonian path on the 1-skeleton of the
standard simplex).  The three answers must coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Optional

from . import props
from .plfun import ONE, ZERO, PLFunc, evaluate
from .props import FuzzyFamily, Verdict

Point = tuple[Fraction, ...]

HOLDS = props.HOLDS


class ClassificationDisagreement(RuntimeError):
    """The three classification routes gave different answers."""


@dataclass(frozen=True)
class CurveSegment:
    a: Fraction
    b: Fraction
    start: Point
    end: Point

    @property
    def direction(self) -> Point:
        return tuple(q - p for p, q in zip(self.start, self.end))

    def param(self, t: Fraction) -> Fraction:
        """Global curve parameter for local parameter ``t`` in [0, 1]."""
        return self.a + (self.b - self.a) * t

    def point(self, t: Fraction) -> Point:
        return tuple(p + (q - p) * t for p, q in zip(self.start, self.end))


def refine(P: FuzzyFamily) -> list[CurveSegment]:
    """Split [0,1] at every member breakpoint; each member is affine per piece."""
    xs, pts = P.sweep()
    return [CurveSegment(xs[k], xs[k + 1], pts[k], pts[k + 1]) for k in range(len(xs) - 1)]


# -- injectivity ------------------------------------------------------------

def _boxes_overlap(u: CurveSegment, v: CurveSegment) -> bool:
    for p, q, r, s in zip(u.start, u.end, v.start, v.end):
        if max(p, q) < min(r, s) or max(r, s) < min(p, q):
            return False
    return True


def _solve_pair(u: CurveSegment, v: CurveSegment) -> Optional[tuple[Fraction, Fraction]]:
    """Local parameters ``(t, s)`` with ``u(t) = v(s)`` at distinct curve
    parameters, or None.  Both directions must be nonzero."""
    d, e = u.direction, v.direction
    r = tuple(q - p for p, q in zip(u.start, v.start))
    n = len(d)
    # t*d - s*e = r: look for a nonsingular 2x2 minor.
    for k in range(n):
        for l in range(k + 1, n):
            det = -d[k] * e[l] + e[k] * d[l]
            if det == 0:
                continue
            t = (-r[k] * e[l] + e[k] * r[l]) / det
            s = (d[k] * r[l] - d[l] * r[k]) / det
            if any(t * d[i] - s * e[i] != r[i] for i in range(n)):
                return None
            if 0 <= t <= 1 and 0 <= s <= 1 and u.param(t) != v.param(s):
                return t, s
            return None
    # Parallel directions: v lies on u's line iff r is a multiple of d.
    k = next(i for i in range(n) if d[i] != 0)
    tau = r[k] / d[k]
    lam = e[k] / d[k]
    if any(tau * d[i] != r[i] for i in range(n)):
        return None
    # v(s) = u(tau + lam*s); intersect [tau, tau+lam] with [0, 1].
    lo = max(ZERO, min(tau, tau + lam))
    hi = min(ONE, max(tau, tau + lam))
    if lo > hi:
        return None
    for t in ((lo + hi) / 2, lo, hi):
        s = (t - tau) / lam
        if u.param(t) != v.param(s):
            return t, s
    return None


def injectivity_check(P: FuzzyFamily) -> Verdict:
    """Exact test that ``T_P`` is injective, with two colliding parameters on failure."""
    segs = refine(P)
    for seg in segs:
        if seg.start == seg.end:
            return Verdict(False, {"x": seg.a, "y": seg.b, "point": seg.start},
                           "curve is constant on a parameter interval")
    for u, v in combinations(segs, 2):
        if not _boxes_overlap(u, v):
            continue
        hit = _solve_pair(u, v)
        if hit is not None:
            t, s = hit
            x, y = sorted((u.param(t), v.param(s)))
            return Verdict(False, {"x": x, "y": y, "point": u.point(t)},
                           "two parameters map to the same point")
    return HOLDS


# -- path coverage ----------------------------------------------------------

Edge = tuple[int, int]


@dataclass(frozen=True)
class PathCoverage:
    """Where the image of ``T_P`` sits on the 1-skeleton.

    ``edges`` maps an edge ``(i, j)``, ``i < j``, to merged covered intervals
    of the barycentric coordinate ``x_j`` (0 at ``e_i``, 1 at ``e_j``).
    ``leftovers`` lists parameter intervals whose image leaves the skeleton.
    """

    n: int
    edges: dict[Edge, list[tuple[Fraction, Fraction]]]
    leftovers: list[tuple[Fraction, Fraction]]
    vertices: frozenset[int]
    permutation: Optional[tuple[int, ...]]

    @property
    def hamiltonian(self) -> bool:
        return self.permutation is not None

    def fully_covered(self, edge: Edge) -> bool:
        return self.edges.get(edge) == [(ZERO, ONE)]

    def covers_vertex(self, i: int) -> bool:
        if i in self.vertices:
            return True
        for (a, b), ivs in self.edges.items():
            if a == i and ivs[0][0] == 0:
                return True
            if b == i and ivs[-1][1] == 1:
                return True
        return False

    def as_dict(self) -> dict[str, Any]:
        return props.jsonable({
            "edges": {f"{i}-{j}": ivs for (i, j), ivs in sorted(self.edges.items())},
            "leftovers": self.leftovers,
            "hamiltonian": self.hamiltonian,
            "permutation": self.permutation,
        })


def _merge(intervals: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    out: list[tuple[Fraction, Fraction]] = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def skeleton_edge(p: Point, q: Point) -> Optional[tuple[int, ...]]:
    """Vertex indices (1-based) of the smallest skeleton face containing the
    segment ``[p, q]``, or None when the segment is not in the 1-skeleton."""
    if sum(p) != 1 or sum(q) != 1:
        return None
    support = sorted({i + 1 for i, v in enumerate(p) if v} | {i + 1 for i, v in enumerate(q) if v})
    if len(support) > 2:
        return None
    return tuple(support)


def path_coverage(P: FuzzyFamily) -> PathCoverage:
    n = P.n
    raw: dict[Edge, list[tuple[Fraction, Fraction]]] = {}
    leftovers: list[tuple[Fraction, Fraction]] = []
    vertices: set[int] = set()
    xs, pts = P.sweep()
    for k in range(len(xs) - 1):
        p, q = pts[k], pts[k + 1]
        face = skeleton_edge(p, q)
        if face is None:
            leftovers.append((xs[k], xs[k + 1]))
        elif len(face) == 1:
            vertices.add(face[0])
        else:
            i, j = face
            lo, hi = sorted((p[j - 1], q[j - 1]))
            raw.setdefault((i, j), []).append((lo, hi))
    edges = {e: _merge(ivs) for e, ivs in raw.items()}
    permutation = None
    if not leftovers and n >= 2:
        permutation = _hamiltonian_order(n, edges, pts[0])
    return PathCoverage(n, edges, leftovers, frozenset(vertices), permutation)


def _hamiltonian_order(n: int, edges: dict[Edge, list[tuple[Fraction, Fraction]]],
                       origin: Point) -> Optional[tuple[int, ...]]:
    if len(edges) != n - 1 or any(ivs != [(ZERO, ONE)] for ivs in edges.values()):
        return None
    adj: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    if any(len(v) > 2 for v in adj.values()):
        return None
    ends = sorted(i for i, v in adj.items() if len(v) == 1)
    if len(ends) != 2:
        return None
    start = ends[0]
    for i in ends:
        if origin == unit_vector(n, i):
            start = i
    order = [start]
    prev = None
    while len(order) < n:
        nxt = [j for j in adj[order[-1]] if j != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return tuple(order)


def unit_vector(n: int, i: int) -> Point:
    return tuple(ONE if k == i else ZERO for k in range(1, n + 1))


# -- classification ---------------------------------------------------------

@dataclass(frozen=True)
class DefinitionVerdict:
    holds: bool
    nodes: tuple[Fraction, ...] = ()
    permutation: tuple[int, ...] = ()
    reason: str = ""
    triangular: bool = False
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict[str, Any]:
        return props.jsonable({
            "holds": self.holds, "nodes": self.nodes, "permutation": self.permutation,
            "reason": self.reason, "triangular": self.triangular, "witness": self.witness,
        })


def _values_on(f: PLFunc, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Breakpoints of ``f`` in [lo, hi], including the interval ends."""
    inner = [(x, y) for x, y in f.points if lo < x < hi]
    return [(lo, evaluate(f, lo)), *inner, (hi, evaluate(f, hi))]


def definition_check(P: FuzzyFamily) -> DefinitionVerdict:
    """Direct check of the node conditions a) to d), plus linearity d*)."""
    n = P.n
    if n < 2:
        raise ValueError("basis classification needs n >= 2")
    peaks: list[Fraction] = []
    for i, f in enumerate(P, start=1):
        v = props.is_strongly_normal(f)
        if not v:
            return DefinitionVerdict(False, reason=f"a) f{i} is not strongly normal: {v.reason}",
                                     witness={"member": i, **v.witness})
        peaks.append(v.witness["peak"])
    order = tuple(sorted(range(1, n + 1), key=lambda i: peaks[i - 1]))
    nodes = tuple(peaks[i - 1] for i in order)
    if len(set(nodes)) != n:
        return DefinitionVerdict(False, nodes, order, "a) two members peak at the same node")
    if nodes[0] != 0 or nodes[-1] != 1:
        return DefinitionVerdict(False, nodes, order, "a) nodes do not start at 0 and end at 1")
    linear = True
    for k in range(n - 1):
        lo, hi = nodes[k], nodes[k + 1]
        fi, fj = P.member(order[k]), P.member(order[k + 1])
        if evaluate(fi, hi) != 0:
            return DefinitionVerdict(False, nodes, order, f"a) f{order[k]} is not 0 at the next node",
                                     witness={"x": hi})
        for m in range(n):
            if m in (k, k + 1):
                continue
            for x, y in _values_on(P.member(order[m]), lo, hi):
                if y != 0:
                    return DefinitionVerdict(False, nodes, order,
                                             f"b) f{order[m]} is nonzero between nodes {lo} and {hi}",
                                             witness={"x": x, "value": y})
        xs = sorted({x for x, _ in _values_on(fi, lo, hi)} | {x for x, _ in _values_on(fj, lo, hi)})
        for x in xs:
            if evaluate(fi, x) + evaluate(fj, x) != 1:
                return DefinitionVerdict(False, nodes, order,
                                         f"c) f{order[k]} + f{order[k + 1]} != 1 between nodes",
                                         witness={"x": x})
        for g, idx, sign in ((fi, order[k], -1), (fj, order[k + 1], 1)):
            vals = _values_on(g, lo, hi)
            for (xa, ya), (xb, yb) in zip(vals, vals[1:]):
                if sign * (yb - ya) <= 0:
                    return DefinitionVerdict(False, nodes, order,
                                             f"d) f{idx} is not strictly monotone between nodes",
                                             witness={"x": xa, "y": xb})
            if len(vals) > 2:
                linear = False
    return DefinitionVerdict(True, nodes, order, triangular=linear)


def bundle_check(P: FuzzyFamily) -> Verdict:
    """2-overlapping Ruspini partition of strongly normal, min-convex members
    that are strictly min-convex on their supports."""
    failures: dict[str, Any] = {}
    for name in ("ruspini", "2-overlapping"):
        v = props.FAMILY_CHECKS[name](P)
        if not v:
            failures[name] = v.as_dict()
    for i, f in enumerate(P, start=1):
        for name in ("strongly-normal", "min-convex", "strictly-min-convex-on-support"):
            v = props.MEMBER_CHECKS[name](f)
            if not v:
                failures[f"f{i} {name}"] = v.as_dict()
    if failures:
        return Verdict(False, failures, "; ".join(failures))
    return HOLDS


def geometric_check(P: FuzzyFamily) -> Verdict:
    """Injective curve whose range is a Hamiltonian path on the 1-skeleton."""
    inj = injectivity_check(P)
    cov = path_coverage(P)
    reasons = []
    witness: dict[str, Any] = {}
    if not inj:
        reasons.append("not injective")
        witness["injectivity"] = inj.as_dict()
    if not cov.hamiltonian:
        reasons.append("range is not a Hamiltonian path")
        witness["coverage"] = cov.as_dict()
    if reasons:
        return Verdict(False, witness, "; ".join(reasons))
    return Verdict(True, {"permutation": cov.permutation})


@dataclass(frozen=True)
class Classification:
    verdict_def: DefinitionVerdict
    verdict_ii: Verdict
    verdict_iii: Verdict

    @property
    def pseudo_triangular(self) -> bool:
        return self.verdict_def.holds

    @property
    def triangular(self) -> bool:
        return self.verdict_def.holds and self.verdict_def.triangular

    @property
    def permutation(self) -> Optional[tuple[int, ...]]:
        return self.verdict_def.permutation if self.verdict_def.holds else None

    def agree(self) -> bool:
        return self.verdict_def.holds == self.verdict_ii.holds == self.verdict_iii.holds

    def as_dict(self) -> dict[str, Any]:
        return {
            "pseudo_triangular": self.pseudo_triangular,
            "triangular": self.triangular,
            "definition": self.verdict_def.as_dict(),
            "properties": self.verdict_ii.as_dict(),
            "geometry": self.verdict_iii.as_dict(),
        }


def classify(P: FuzzyFamily, strict: bool = True) -> Classification:
    """Run all three routes.  With ``strict`` a disagreement raises."""
    result = Classification(definition_check(P), bundle_check(P), geometric_check(P))
    if strict and not result.agree():
        raise ClassificationDisagreement(
            f"routes disagree: definition={result.verdict_def.holds}, "
            f"properties={result.verdict_ii.holds}, geometry={result.verdict_iii.holds}")
    return result


def canonical_basis(n: int) -> FuzzyFamily:
    """Hat functions on the uniform nodes ``(i-1)/(n-1)``."""
    if n < 2:
        raise ValueError("canonical basis needs n >= 2")
    nodes = [Fraction(k, n - 1) for k in range(n)]
    members = [PLFunc(tuple((t, ONE if k == i else ZERO) for k, t in enumerate(nodes)))
               for i in range(n)]
    return FuzzyFamily(tuple(members))


def detect_permutation(P: FuzzyFamily) -> tuple[int, ...]:
    """Index order to relabel ``P`` by before comparing with the axioms.

    Uses the Hamiltonian path order when there is one; otherwise orders the
    members by where they first reach their maximum.
    """
    cov = path_coverage(P)
    if cov.permutation is not None:
        return cov.permutation
    firsts = []
    for i, f in enumerate(P, start=1):
        top = max(f.ys)
        firsts.append((f.xs[f.ys.index(top)], i))
    return tuple(i for _, i in sorted(firsts))
