import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from fuzzybasis import (FuzzyFamily, PLFunc, canonical_basis, classify, injectivity_check,
                        path_coverage, refine)
from fuzzybasis.basis import ClassificationDisagreement, definition_check, detect_permutation
from fuzzybasis.generators import MUTATIONS, mutate, random_basis, random_family
from fuzzybasis.plfun import evaluate

from conftest import families


def collision_oracle(P, denominator=120):
    """Brute force: two distinct grid parameters with the same curve point."""
    seen = {}
    for k in range(denominator + 1):
        x = F(k, denominator)
        point = P.at(x)
        if point in seen:
            return seen[point], x
        seen[point] = x
    return None


# -- refine -----------------------------------------------------------------

def test_refine_counts(t3):
    assert [(s.a, s.b) for s in refine(t3)] == [(0, F(1, 2)), (F(1, 2), 1)]
    assert [(s.a, s.b) for s in refine(canonical_basis(2))] == [(0, 1)]
    P = FuzzyFamily.of(PLFunc(((0, 0), (F(1, 3), 1), (1, 0))), PLFunc(((0, 0), (F(1, 2), 1), (1, 0))))
    assert len(refine(P)) == 3


@given(families(max_size=3))
def test_refine_reproduces_curve(P):
    for seg in refine(P):
        for t in (F(0), F(1, 3), F(1, 2), F(1)):
            assert seg.point(t) == P.at(seg.param(t))


# -- injectivity ------------------------------------------------------------

def test_injectivity_examples(t3, plateau_family, tent):
    assert injectivity_check(t3)
    v = injectivity_check(plateau_family)
    assert not v and (v.witness["x"], v.witness["y"]) == (F(1, 3), F(2, 3))
    folded = FuzzyFamily.of(tent, PLFunc(((0, 1), (F(1, 2), 0), (1, 1))))
    v = injectivity_check(folded)
    assert not v and (v.witness["x"], v.witness["y"]) == (F(1, 4), F(3, 4))


def test_crossing_curve_detected():
    # (0,0) -> (1,1) -> (1,0) -> (0,1) crosses itself at (1/2, 1/2)
    f1 = PLFunc(((0, 0), (F(1, 3), 1), (F(2, 3), 1), (1, 0)))
    f2 = PLFunc(((0, 0), (F(1, 3), 1), (F(2, 3), 0), (1, 1)))
    P = FuzzyFamily.of(f1, f2)
    v = injectivity_check(P)
    assert not v
    assert (v.witness["x"], v.witness["y"]) == (F(1, 6), F(5, 6))
    assert v.witness["point"] == (F(1, 2), F(1, 2))


@settings(max_examples=150)
@given(families(max_size=3, max_breakpoints=4))
def test_injectivity_witnesses_and_oracle(P):
    v = injectivity_check(P)
    if not v:
        x, y = v.witness["x"], v.witness["y"]
        assert x != y and P.at(x) == P.at(y)
    if collision_oracle(P) is not None:
        assert not v


def test_injectivity_on_generated_instances():
    rng = random.Random(7)
    for _ in range(40):
        P = random_family(rng, n=rng.randint(1, 3), max_breakpoints=4)
        v = injectivity_check(P)
        if collision_oracle(P):
            assert not v
        if not v:
            assert P.at(v.witness["x"]) == P.at(v.witness["y"])


# -- path coverage ----------------------------------------------------------

def test_coverage_canonical_three(t3):
    cov = path_coverage(t3)
    assert cov.edges == {(1, 2): [(0, 1)], (2, 3): [(0, 1)]}
    assert cov.permutation == (1, 2, 3)
    assert cov.leftovers == []


def test_coverage_half_path(half_path):
    cov = path_coverage(half_path)
    assert cov.edges == {(1, 2): [(0, F(1, 2))]}
    assert not cov.hamiltonian
    assert cov.covers_vertex(1) and not cov.covers_vertex(2)


def test_coverage_degenerate_point():
    half = PLFunc.constant(F(1, 2))
    cov = path_coverage(FuzzyFamily.of(half, half))
    assert cov.edges == {(1, 2): [(F(1, 2), F(1, 2))]}
    assert not cov.hamiltonian


def test_coverage_canonical_five():
    cov = path_coverage(canonical_basis(5))
    assert sorted(cov.edges) == [(1, 2), (2, 3), (3, 4), (4, 5)]
    assert all(cov.fully_covered(e) for e in cov.edges)
    assert cov.permutation == (1, 2, 3, 4, 5)


def test_coverage_of_generated_bases_is_hamiltonian():
    rng = random.Random(3)
    for _ in range(30):
        P = random_basis(rng)
        cov = path_coverage(P)
        assert cov.hamiltonian and len(cov.edges) == P.n - 1
        assert sorted(cov.permutation) == list(range(1, P.n + 1))
        for a, b in zip(cov.permutation, cov.permutation[1:]):
            assert cov.fully_covered((min(a, b), max(a, b)))


def test_proper_subpaths_miss_an_end_vertex():
    rng = random.Random(11)
    seen = 0
    for _ in range(60):
        P = mutate(rng, "truncate")
        Q = P.permuted(detect_permutation(P))
        cov = path_coverage(Q)
        on_path_edges = all(j == i + 1 for i, j in cov.edges)
        if cov.leftovers or not on_path_edges:
            continue
        full = all(cov.fully_covered((i, i + 1)) for i in range(1, Q.n))
        if not full:
            seen += 1
            assert not cov.covers_vertex(1) or not cov.covers_vertex(Q.n)
    assert seen > 20


# -- classification ---------------------------------------------------------

def test_classify_canonical(t3):
    c = classify(t3)
    assert c.pseudo_triangular and c.triangular
    assert c.verdict_def.nodes == (0, F(1, 2), 1)
    assert c.permutation == (1, 2, 3)


def test_classify_kinked(kinked):
    c = classify(kinked)
    assert c.pseudo_triangular and not c.triangular
    assert c.verdict_def.nodes == (0, 1)


def test_classify_plateau_family(plateau_family):
    c = classify(plateau_family)
    assert not c.verdict_def and not c.verdict_ii and not c.verdict_iii
    assert c.verdict_def.reason.startswith("d)")


def test_classify_permuted_basis():
    P = canonical_basis(4).permuted((3, 1, 4, 2))
    c = classify(P)
    assert c.triangular
    assert c.permutation == (2, 4, 1, 3)
    assert path_coverage(P).permutation == (2, 4, 1, 3)


def test_classify_requires_two_members():
    with pytest.raises(ValueError):
        definition_check(FuzzyFamily.of(PLFunc.constant(1)))


def test_disagreement_is_raised(monkeypatch):
    import fuzzybasis.basis as basis

    monkeypatch.setattr(basis, "geometric_check", lambda P: basis.Verdict(False))
    with pytest.raises(ClassificationDisagreement):
        classify(canonical_basis(3))


@pytest.mark.parametrize("n", range(2, 17))
def test_canonical_basis_is_triangular(n):
    P = canonical_basis(n)
    assert classify(P).triangular
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert evaluate(P.member(i), F(j - 1, n - 1)) == (1 if i == j else 0)


def test_canonical_basis_small():
    assert [f.points for f in canonical_basis(2)] == [((0, 1), (1, 0)), ((0, 0), (1, 1))]
    with pytest.raises(ValueError):
        canonical_basis(1)


def test_route_equivalence_on_generated_bases():
    rng = random.Random(2024)
    for _ in range(60):
        c = classify(random_basis(rng))
        assert c.pseudo_triangular and c.agree()


@pytest.mark.parametrize("kind", MUTATIONS)
def test_route_equivalence_on_mutants(kind):
    rng = random.Random(hash(kind) % 1000)
    for _ in range(20):
        c = classify(mutate(rng, kind))
        assert not c.verdict_def and not c.verdict_ii and not c.verdict_iii


@settings(max_examples=150)
@given(families(min_size=2, max_size=4))
def test_route_equivalence_on_arbitrary_families(P):
    assert classify(P, strict=False).agree()


def test_generated_triangular_flag_matches_piece_count():
    rng = random.Random(5)
    for _ in range(20):
        P = random_basis(rng, max_pieces=1)
        assert classify(P).triangular
