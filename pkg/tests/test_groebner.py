from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from slackkit.budget import Budget, BudgetExceeded
from slackkit.exactnum import IntegerLattice
from slackkit.groebner import (
    Ideal,
    LatticeIdeal,
    NotHomogeneous,
    classify_ideal,
    divide_with_quotients,
    eliminate,
    groebner_basis,
    ideal_containment,
    is_saturated_ideal,
    krull_dimension,
    minimal_generator_count,
    normal_form,
    saturate,
)
from slackkit.poly import Polynomial, TermOrder, parse_polynomial

N = 3
XS = sympy.symbols("x1:4")
T = sympy.Symbol("t")
slow = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def to_sympy(f):
    return sum(sympy.Rational(str(c)) * sympy.prod(x**e for x, e in zip(XS, m)) for m, c in f.terms.items())


def from_sympy(expr):
    P = sympy.Poly(expr, *XS)
    return Polynomial(N, {m: Fraction(int(c.p), int(c.q)) for m, c in P.terms()})


exps = st.tuples(*[st.integers(0, 2)] * N)
polys = st.dictionaries(exps, st.integers(-3, 3).filter(bool), min_size=1, max_size=3).map(lambda t: Polynomial(N, t))
ideals = st.lists(polys, min_size=1, max_size=3)


@slow
@given(ideals, st.sampled_from(["grevlex", "lex"]))
def test_reduced_basis_matches_sympy(gens, order):
    o = TermOrder.named(order, N)
    try:
        ours = groebner_basis(gens, o, Budget(10))
    except BudgetExceeded:
        assume(False)
    theirs = sympy.groebner([to_sympy(g) for g in gens], *XS, order=order, domain="QQ")
    assert {from_sympy(sympy.expand(e)) for e in theirs.exprs} == set(ours)


@slow
@given(ideals, st.integers(0, N - 1))
def test_saturation_matches_rabinowitsch_oracle(gens, v):
    I = Ideal(N, gens)
    try:
        J = saturate(I, [v], Budget(10))
    except BudgetExceeded:
        assume(False)
    G = sympy.groebner([to_sympy(g) for g in gens] + [1 - T * XS[v]], T, *XS, order="lex", domain="QQ")
    oracle = [from_sympy(e) for e in G.exprs if T not in e.free_symbols]
    assert J.equals(Ideal(N, oracle))


@slow
@given(ideals)
def test_normal_form_is_canonical(gens):
    o = TermOrder.grevlex(N)
    try:
        G = groebner_basis(gens, o, Budget(10))
    except BudgetExceeded:
        assume(False)
    for g in gens:
        assert not normal_form(g, G, o)
        q, r = divide_with_quotients(g, G, o)
        assert not r
        assert sum((qi * gi for qi, gi in zip(q, G)), Polynomial.zero(N)) == g


def test_eliminate_twisted_cubic():
    # x1 = t, x2 = t^2, x3 = t^3 with t = x4
    I = Ideal(4, [parse_polynomial(s, 4) for s in ("x1 - x4", "x2 - x4^2", "x3 - x4^3")])
    E = eliminate(I, [3])
    want = Ideal(4, [parse_polynomial(s, 4) for s in ("x1^2 - x2", "x1*x2 - x3", "x2^2 - x1*x3")])
    assert E.equals(want)


def test_saturate_removes_embedded_component():
    I = Ideal(2, [parse_polynomial("x1^2*x2", 2), parse_polynomial("x1*x2^2", 2)])
    assert saturate(I).is_unit()
    J = Ideal(2, [parse_polynomial("x1^2 - x1*x2", 2)])
    assert saturate(J, [0]).equals(Ideal(2, [parse_polynomial("x1 - x2", 2)]))


def test_saturate_idempotent_and_verified():
    I = Ideal(3, [parse_polynomial("x1*x2 - x1*x3", 3), parse_polynomial("x2^2*x1 - x3^2", 3)])
    J = saturate(I, verify_fixed_point=True)
    assert saturate(J).equals(J)
    assert is_saturated_ideal(Ideal(3, [parse_polynomial("x1*x2 - x3^2", 3)]))
    assert not is_saturated_ideal(Ideal(2, [parse_polynomial("x1*x2 - x1^2", 2)]))


def test_budget_is_enforced():
    gens = [parse_polynomial(s, 4) for s in ("x1^5 - x2*x3^4 + x4", "x2^4*x1 - x3^3 + x2", "x3^5 - x1*x4^3 - 1")]
    with pytest.raises(BudgetExceeded):
        groebner_basis(gens, TermOrder.lex(4), Budget(0.01))


def test_dimension_and_minimal_generators():
    I = Ideal(4, [parse_polynomial("x1*x4 - x2*x3", 4)])
    assert krull_dimension(I) == 3
    assert minimal_generator_count(I) == 1
    nonhom = Ideal(2, [parse_polynomial("x1 - 1", 2)])
    with pytest.raises(NotHomogeneous):
        minimal_generator_count(nonhom)


def test_containment_report():
    a = Ideal(3, [parse_polynomial("x1 - x2", 3)])
    b = Ideal(3, [parse_polynomial("x1 - x2", 3), parse_polynomial("x2 - x3", 3)])
    r = ideal_containment(a, b)
    assert r["subset"] and not r["superset"] and r["strict"] and not r["equal"]


def test_classify_binomial_shapes():
    c = classify_ideal(Ideal(2, [parse_polynomial("x1^2 - x2^2", 2)]))
    assert c["is_binomial"] and c["is_pure_difference"] and not c["is_toric"]
    c = classify_ideal(Ideal(2, [parse_polynomial("x1 - x2", 2)]))
    assert c["is_toric"]


lattice_rows = st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=2)


@slow
@given(lattice_rows)
def test_lattice_ideal_agrees_with_generic_saturation(rows):
    L = IntegerLattice(rows, 4)
    LI = LatticeIdeal(L)
    try:
        generic = saturate(Ideal(4, list(LI.generators)), None, Budget(10))
    except BudgetExceeded:
        assume(False)
    assert LI.equals(generic) and generic.equals(LI)
    assert krull_dimension(LI) == krull_dimension(generic)
    assert classify_ideal(LI)["is_toric"] == L.is_saturated()
    for g in generic.groebner():
        assert LI.contains(g)


def test_lattice_ideal_membership_by_cosets():
    LI = LatticeIdeal(IntegerLattice([[2, -2]], 2))
    assert LI.contains(parse_polynomial("x1^2 - x2^2", 2))
    assert LI.contains(parse_polynomial("x1^3 - x1*x2^2 + 5*x1^4 - 5*x2^4", 2))
    assert not LI.contains(parse_polynomial("x1 - x2", 2))
