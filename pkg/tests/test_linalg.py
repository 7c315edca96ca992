import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from slackkit.exactnum import ALPHA1, SQRT5
from slackkit.linalg import DimensionError, ExactMatrix, exact_linear_algebra


def _perm_sign(p):
    s = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            s = -s
    return s


def leibniz(rows):
    n = len(rows)
    total = 0
    for p in itertools.permutations(range(n)):
        t = _perm_sign(p)
        for i in range(n):
            t = t * rows[i][p[i]]
        total = total + t
    return total


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)
)
rect = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=5)
)


@given(square)
def test_det_matches_leibniz(rows):
    assert ExactMatrix(rows).det() == leibniz(rows)


def test_det_over_quadratic_field():
    rows = [[ALPHA1, 1, 0], [SQRT5, 2, ALPHA1], [1, 0, 3]]
    assert ExactMatrix(rows).det() == leibniz(rows)


@given(rect)
def test_rank_matches_sympy(rows):
    assert ExactMatrix(rows).rank() == sympy.Matrix(rows).rank()


@given(rect)
def test_nullspace(rows):
    M = ExactMatrix(rows)
    N = M.nullspace()
    assert len(N) == M.cols - M.rank()
    for v in N:
        assert all(x == 0 for x in M.apply(v))


@given(rect, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_colspan_member(rows, c):
    M = ExactMatrix(rows)
    v = M.apply(c[: M.cols])
    ok, coeffs = M.colspan_member(v)
    assert ok and M.apply(coeffs) == v


def test_colspan_non_member():
    M = ExactMatrix([[1, 0], [0, 1], [0, 0]])
    assert M.colspan_member([0, 0, 1]) == (False, None)


def test_rref_pivots():
    R, piv = ExactMatrix([[2, 4, 2], [1, 2, 3]]).rref()
    assert piv == (0, 2)
    assert R.row(0) == (1, 2, 0)


def test_json_round_trip():
    M = ExactMatrix([[Fraction(1, 3), ALPHA1], [0, 2]])
    assert ExactMatrix.from_json(M.to_json()) == M


def test_dimension_errors():
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2]]) @ ExactMatrix([[1, 2]])
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2]]).colspan_member([1, 2])
    with pytest.raises(ValueError):
        exact_linear_algebra(ExactMatrix([[1]]), "eigen")
