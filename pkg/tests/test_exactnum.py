from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slackkit.exactnum import (
    ALPHA1,
    ALPHA2,
    SQRT5,
    IntegerLattice,
    QuadExt,
    field_op,
    integer_kernel,
    parse_scalar,
    sign,
    smith_hermite,
    to_scalar,
    xgcd,
)

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=20)
quads = st.builds(QuadExt, fracs, fracs)


def test_golden_ratio_roots():
    for a in (ALPHA1, ALPHA2):
        assert a * a + a - 1 == 0
    assert ALPHA1 + ALPHA2 == -1
    assert ALPHA1 * ALPHA2 == -1
    assert sign(ALPHA1) == 1 and sign(ALPHA2) == -1


@given(quads, quads)
def test_field_axioms(x, y):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) - y == x
    if x:
        assert (x * y) / x == y
        assert x * x.inverse() == 1


@given(quads)
def test_sign_matches_float(x):
    v = float(x.a) + float(x.b) * 5 ** 0.5
    if abs(v) > 1e-9:
        assert x.sign() == (1 if v > 0 else -1)


@given(quads, quads)
def test_ordering_is_total(x, y):
    assert (x < y) + (y < x) + (x == y) == 1


def test_quadext_is_immutable():
    with pytest.raises(AttributeError):
        SQRT5.a = 1


def test_rational_quadext_canonicalises():
    assert isinstance(to_scalar(QuadExt(3, 0)), Fraction)
    assert to_scalar({"a": "1/2", "b": "0"}) == Fraction(1, 2)
    assert to_scalar({"a": "0", "b": "1"}) == SQRT5


@pytest.mark.parametrize("text", ["", "1/", "a", "1.5", "2//3", "sqrt5"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_parse_scalar_zero_denominator():
    with pytest.raises(ValueError, match="zero denominator"):
        parse_scalar("3/0")


def test_field_op_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        field_op(ALPHA1, 0, "div")
    with pytest.raises(ValueError):
        field_op(1, 2, "pow")


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g >= 0 and s * a + t * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


int_rows = st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=5)


@given(int_rows)
def test_hermite_basis_spans_same_lattice(rows):
    L = IntegerLattice(rows, 4)
    H = IntegerLattice(L.hermite_basis(), 4)
    assert L.same_span(H)
    for r in rows:
        assert r in H
        c = H.coordinates(r)
        assert [sum(ci * h[k] for ci, h in zip(c, H.hermite_basis())) for k in range(4)] == list(r)


@given(int_rows)
def test_smith_form(rows):
    L = IntegerLattice(rows, 4)
    out = smith_hermite(L)
    d = out["invariant_factors"]
    assert len(d) == L.rank()
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert out["is_saturated"] == all(x == 1 for x in d)
    assert L.saturation().is_saturated()
    assert L.saturation().contains_lattice(L)


@given(int_rows, st.lists(st.integers(-6, 6), min_size=4, max_size=4))
def test_dual_witness_separates(rows, v):
    L = IntegerLattice(rows, 4)
    y = L.dual_witness(v)
    if v in L:
        assert y is None
    else:
        assert all(sum(a * b for a, b in zip(y, g)).denominator == 1 for g in rows)
        assert sum(a * b for a, b in zip(y, v)).denominator != 1


def test_small_lattice_facts():
    L = IntegerLattice([[2, 0, 0], [0, 3, 0]], 3)
    assert L.invariant_factors() == [1, 6]
    assert not L.is_saturated()
    assert L.dual_witness([0, 0, 1]) is not None
    assert L.coordinates([4, 3, 0]) == [2, 1]
    assert L.coordinates([1, 0, 0]) is None


@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=1, max_size=3))
def test_integer_kernel(A):
    K = integer_kernel(A, 5)
    for k in K:
        assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in A)
    assert IntegerLattice(K, 5).is_saturated() if K else True


def test_lattice_requires_ambient_when_empty():
    with pytest.raises(ValueError):
        IntegerLattice([])
    with pytest.raises(ValueError):
        IntegerLattice([[1, 2], [1]])
