import random
from fractions import Fraction as F

import pytest

from fuzzybasis import FuzzyFamily, PLFunc, canonical_basis
from fuzzybasis.generators import random_basis, random_family, random_formula
from fuzzybasis.logic import (BOT, TOP, ArityError, X, a_consequence, axioms, compose,
                              deductive_closure_probe, eval_at, impl, is_consistent, lor,
                              on_path, oneset_grid_check, parse, phi_k, theory_equal,
                              theta_member, to_text, variables)
from fuzzybasis.logic.formula import desugar
from fuzzybasis.plfun import evaluate

GRID = [F(k, 10) for k in range(11)]


# -- pointwise semantics ----------------------------------------------------

@pytest.mark.parametrize("text, point, value", [
    ("X1 + X2", (F(1, 2), F(7, 10)), 1),
    ("X1 <-> X2", (F(1, 4), F(3, 4)), F(1, 2)),
    ("X1 | !X1", (F(1, 2),), F(1, 2)),
    ("X1 * X2", (F(1, 2), F(7, 10)), F(1, 5)),
    ("X1 -> X2", (F(3, 4), F(1, 4)), F(1, 2)),
    ("X1 - X2", (F(3, 4), F(1, 4)), F(1, 2)),
    ("0", (), 0),
    ("1", (), 1),
])
def test_eval_examples(text, point, value):
    assert eval_at(parse(text), point) == value


def test_eval_arity_error():
    with pytest.raises(ArityError):
        eval_at(X(3), (F(1, 2), F(1, 2)))


def test_derived_connectives_agree_with_their_definitions():
    rng = random.Random(1)
    for _ in range(100):
        phi = random_formula(rng, 2, 4)
        for a in GRID[::2]:
            for b in GRID[::3]:
                assert eval_at(phi, (a, b)) == eval_at(desugar(phi), (a, b))


# -- compose ----------------------------------------------------------------

def test_compose_examples(t3):
    assert compose(axioms(3).rho, t3).is_constant(1)
    assert compose(X(1), t3) == t3.member(1)
    assert compose(parse("X1 * X2"), canonical_basis(2)).is_constant(0)
    with pytest.raises(ArityError):
        compose(X(4), t3)


def test_compose_commutes_with_evaluation():
    rng = random.Random(2)
    for _ in range(80):
        P = random_family(rng, n=rng.randint(1, 3))
        phi = random_formula(rng, P.n, rng.randint(0, 5))
        h = compose(phi, P)
        for _ in range(5):
            x = F(rng.randint(0, 211), 211)
            assert evaluate(h, x) == eval_at(phi, P.at(x))


# -- theory membership ------------------------------------------------------

def test_membership_examples(t3):
    assert theta_member(parse("!(X1 & X3)"), t3)
    v = theta_member(X(1), t3)
    assert not v and v.witness["x"] == 1 and v.witness["value"] == 0
    for P in (t3, random_family(random.Random(0), 2)):
        assert not theta_member(BOT, P)
        assert is_consistent(P)


def test_membership_witness_re_verifies():
    rng = random.Random(3)
    for _ in range(60):
        P = random_family(rng, n=2)
        phi = random_formula(rng, 2, 4)
        v = theta_member(phi, P)
        if not v:
            assert eval_at(phi, P.at(v.witness["x"])) == v.witness["value"] < 1


# -- axioms and the 1-set ---------------------------------------------------

def test_axioms_three():
    ax = axioms(3)
    assert [to_text(a) for a in ax.formulas] == ["X1 + X2 + X3", "!(X1 * X2)", "!(X2 * X3)", "!(X1 & X3)"]


def test_axioms_counts():
    assert [to_text(a) for a in axioms(2).formulas] == ["X1 + X2", "!(X1 * X2)"]
    for n in range(2, 9):
        assert len(axioms(n).formulas) == 1 + (n - 1) + (n - 1) * (n - 2) // 2
    assert len(axioms(5).formulas) == 11
    with pytest.raises(ValueError):
        axioms(1)


@pytest.mark.parametrize("point, expected", [
    ((F(1, 3), F(2, 3), 0), True),
    ((F(1, 2), 0, F(1, 2)), False),
    ((F(1, 2), F(1, 2), F(1, 2)), False),
    ((0, 0, 1), True),
    ((0, 0, 0), False),
])
def test_on_path(point, expected):
    assert on_path(point) is expected


@pytest.mark.parametrize("n, d", [(2, 10), (3, 6), (4, 3)])
def test_oneset_grid(n, d):
    v = oneset_grid_check(n, d)
    assert v and v.witness["points"] == (d + 1) ** n


def test_oneset_for_two_variables_is_the_antidiagonal():
    ax = axioms(2).formulas
    for a in GRID:
        for b in GRID:
            assert all(eval_at(phi, (a, b)) == 1 for phi in ax) == (a + b == 1)


# -- consequence ------------------------------------------------------------

def test_axioms_are_consequences():
    for phi in axioms(3).formulas:
        assert a_consequence(phi, 3)
    for n in range(2, 6):
        assert a_consequence(TOP, n)


def test_phi_two_is_not_a_consequence():
    v = a_consequence(phi_k(2, 2), 2)
    assert not v and v.witness["point"] == (0, 1) and v.witness["value"] == 0


def test_a_consequence_against_grid_path_points():
    rng = random.Random(4)
    for n in (2, 3):
        path = [p for p in _grid(n, 12) if on_path(p)]
        for _ in range(100):
            phi = random_formula(rng, n, rng.randint(1, 5))
            v = a_consequence(phi, n)
            if v:
                assert all(eval_at(phi, p) == 1 for p in path)
            else:
                point = v.witness["point"]
                assert on_path(point) and eval_at(phi, point) == v.witness["value"] < 1


def _grid(n, d):
    from itertools import product
    return list(product([F(k, d) for k in range(d + 1)], repeat=n))


# -- phi_k ------------------------------------------------------------------

def test_phi_k_examples():
    assert to_text(phi_k(2, 1)) == "!X2"
    assert to_text(phi_k(2, 2)) == "!X2 + !X2"
    assert eval_at(phi_k(2, 2), (0, F(3, 4))) == F(1, 2)
    for x in GRID:
        assert (eval_at(phi_k(2, 1), (0, x)) == 1) == (x == 0)
        assert (eval_at(phi_k(1, 4), (x,)) == 1) == (x <= F(3, 4))
    assert variables(phi_k(3, 4)) == {3}


# -- theory equality --------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_canonical_bases_are_axiomatised(n):
    P = canonical_basis(n)
    cert = theory_equal(P)
    assert cert.equal and cert.verify(P)


def test_half_path_certificate(half_path):
    cert = theory_equal(half_path)
    assert not cert.equal and cert.kind == "phi_k"
    assert (cert.m, cert.c, cert.k) == (2, F(1, 2), 2)
    assert to_text(cert.phi) == "!X2 + !X2"
    assert compose(cert.phi, half_path).is_constant(1)
    assert eval_at(cert.phi, (0, 1)) == 0
    assert cert.verify(half_path)


def test_constant_triple_certificate(constant_triple):
    cert = theory_equal(constant_triple)
    assert cert.kind == "axiom"
    assert cert.axiom_name == "beta_13" or eval_at(cert.axiom, constant_triple.at(cert.x)) < 1
    assert cert.verify(constant_triple)
    beta = axioms(3).betas[0][2]
    assert all(eval_at(beta, constant_triple.at(x)) == F(2, 3) for x in GRID)


def test_truncation_at_the_first_vertex_uses_x1():
    P = FuzzyFamily.of(PLFunc(((0, F(1, 3)), (1, 0))), PLFunc(((0, F(2, 3)), (1, 1))))
    cert = theory_equal(P)
    assert cert.kind == "phi_k" and cert.m == 1 and cert.c == F(1, 3) and cert.k == 2
    assert cert.verify(P)


def test_k_bound_is_tight():
    # c = 3/4 needs k = 4: phi_3 has 1-set x <= 2/3 which misses c
    P = FuzzyFamily.of(PLFunc(((0, 1), (1, F(1, 4)))), PLFunc(((0, 0), (1, F(3, 4)))))
    cert = theory_equal(P)
    assert cert.k == 4
    assert not theta_member(phi_k(2, 3), P)


def test_relabel_recovers_permuted_basis():
    P = canonical_basis(4).permuted((2, 4, 1, 3))
    assert not theory_equal(P).equal
    cert = theory_equal(P, relabel=True)
    assert cert.equal and cert.verify(P)


def test_certificates_on_generated_families():
    rng = random.Random(5)
    for _ in range(40):
        P = random_family(rng, n=rng.randint(2, 4))
        cert = theory_equal(P, relabel=rng.random() < 0.5)
        assert cert.verify(P)


# -- closure probe ----------------------------------------------------------

def test_closure_probe_examples(t3):
    rho, beta = axioms(3).rho, axioms(3).betas[0][2]
    probe = deductive_closure_probe(t3, rho, TOP)
    assert probe.closed and probe.antecedent and probe.consequent
    probe = deductive_closure_probe(t3, beta, lor(beta, X(1)))
    assert probe.antecedent and probe.implication and probe.consequent and probe.closed
    probe = deductive_closure_probe(t3, BOT, X(1))
    assert not probe.antecedent and probe.closed


def test_closure_on_random_bases():
    rng = random.Random(6)
    for _ in range(30):
        P = random_basis(rng, n=rng.randint(2, 4))
        phi = rng.choice(axioms(P.n).formulas + (random_formula(rng, P.n, 3),))
        psi = random_formula(rng, P.n, 3)
        assert deductive_closure_probe(P, phi, psi).closed
        assert deductive_closure_probe(P, phi, impl(phi, psi)).closed
