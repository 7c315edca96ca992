"""Property checks shared by test_properties.py and the acceptance suite."""

import functools
import random
from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from slackkit.budget import Budget, BudgetExceeded
from slackkit.groebner import Ideal, LatticeIdeal, classify_ideal, saturate
from slackkit.linalg import ExactMatrix
from slackkit.poly import Polynomial, evaluate_substitute
from slackkit.polytope import (
    VRep,
    construct_catalog,
    facet_enumeration,
    match_pattern,
    pattern_of,
    printed_pattern,
    slack_matrix,
)
from slackkit.slackcore import is_morally_2_level, slack_ideal, toric_ideal_TP

# patterns whose slack ideal completes within a few seconds
CATALOG = [
    "triangle",
    "square",
    "simplex3",
    "cross2",
    "bisimplex3",
    "pyr1-square",
    "pyr2-square",
    "prism-triangle",
    "sum-simplex2-simplex2",
    "prod-simplex2-simplex2",
    "cyclic5-2",
    "cyclic6-4",
    "cyclic6-2",
    "cyclic6-3",
    "cyclic7-5",
    "example-7vertex-4polytope",
    "example-8vertex-5polytope",
]
PRINTED = {"example-7vertex-4polytope", "example-8vertex-5polytope"}
BUDGET = 60
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@functools.lru_cache(maxsize=None)
def pattern_and_matrix(name):
    """The pattern used for ``I_P`` and a slack matrix in the same row/column order."""
    V = construct_catalog(name)
    S = slack_matrix(V, facet_enumeration(V))
    if name not in PRINTED:
        return pattern_of(V), S
    P = printed_pattern(name)
    rows, cols = match_pattern(pattern_of(V), P.support)
    return P, ExactMatrix([[S[r, c] for c in cols] for r in rows], P.ncols)


@functools.lru_cache(maxsize=None)
def computed_slack_ideal(name):
    P, _ = pattern_and_matrix(name)
    try:
        return slack_ideal(P, budget=BUDGET)
    except BudgetExceeded:
        return None


def ideal_generators(I):
    """Generators whose common zeros on the torus are those of ``I``."""
    if isinstance(I, LatticeIdeal):
        return list(I.generators)
    return list(I.groebner())


def values_of(P, S):
    return {k: S[i, j] for k, (i, j) in enumerate(P.cells)}


# --------------------------------------------------------------------------
# checks over the fixed catalog


def check_no_monomials():
    bad = []
    for name in CATALOG:
        I = computed_slack_ideal(name)
        if I is None:
            continue
        if isinstance(I, LatticeIdeal):
            if any(len(g) != 2 for g in I.generators):
                bad.append(name)
        elif any(len(g) == 1 for g in I.groebner()):
            bad.append(name)
    return not bad, bad


def check_morally_2_level_equivalence():
    seen = []
    for name in CATALOG:
        I = computed_slack_ideal(name)
        if I is None:
            continue
        P, _ = pattern_and_matrix(name)
        T = toric_ideal_TP(P, "kernel" if isinstance(I, LatticeIdeal) else "cycles").ideal
        if is_morally_2_level(P) != T.contains_ideal(I):
            return False, name
        seen.append(is_morally_2_level(P))
    # both sides of the equivalence are exercised
    return (True in seen and False in seen), seen


def check_pure_difference_implies_containment():
    for name in CATALOG:
        I = computed_slack_ideal(name)
        if I is None:
            continue
        P, _ = pattern_and_matrix(name)
        if classify_ideal(I)["is_pure_difference"]:
            T = toric_ideal_TP(P, "kernel" if isinstance(I, LatticeIdeal) else "cycles").ideal
            if not T.contains_ideal(I):
                return False, name
    return True, None


# --------------------------------------------------------------------------
# hypothesis-driven properties


def _random_poly(draw, n, homogeneous):
    deg = draw(st.integers(1, 3))
    nterms = draw(st.integers(1, 3))
    terms = {}
    for _ in range(nterms):
        if homogeneous:
            cuts = sorted(draw(st.integers(0, deg)) for _ in range(n - 1))
            e = [b - a for a, b in zip([0] + cuts, cuts + [deg])]
        else:
            e = [draw(st.integers(0, 2)) for _ in range(n)]
        terms[tuple(e)] = draw(st.integers(-3, 3).filter(bool))
    return Polynomial(n, terms)


@st.composite
def small_ideals(draw):
    n = draw(st.integers(2, 3))
    homogeneous = draw(st.booleans())
    gens = [_random_poly(draw, n, homogeneous) for _ in range(draw(st.integers(1, 3)))]
    return Ideal(n, [g for g in gens if g])


@SETTINGS
@given(small_ideals(), st.data())
def property_saturation_idempotent(I, data):
    assume(I.generators)
    vars_ = data.draw(st.lists(st.integers(0, I.nvars - 1), min_size=1, unique=True))
    try:
        J = saturate(I, vars_, Budget(20))
        K = saturate(J, vars_, Budget(20))
    except BudgetExceeded:
        assume(False)
    assert J.equals(K)
    assert J.contains_ideal(I)


@SETTINGS
@given(st.sampled_from(CATALOG), st.integers(0, 2**32 - 1))
def property_generators_vanish_on_rescaled_slack_matrices(name, seed):
    I = computed_slack_ideal(name)
    assume(I is not None)
    P, S = pattern_and_matrix(name)
    rng = random.Random(seed)
    r = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(S.rows)]
    c = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(S.cols)]
    scaled = ExactMatrix([[r[i] * S[i, j] * c[j] for j in range(S.cols)] for i in range(S.rows)], S.cols)
    for M in (S, scaled):
        vals = values_of(P, M)
        for g in ideal_generators(I):
            assert evaluate_substitute(g, vals) == 0, (name, str(g))


@SETTINGS
@given(st.sampled_from([n for n in CATALOG if n not in PRINTED]), st.integers(0, 2**32 - 1))
def property_generators_vanish_on_affine_images(name, seed):
    """Affine images are new realizations of the same combinatorial type."""
    I = computed_slack_ideal(name)
    assume(I is not None)
    V = construct_catalog(name)
    rng = random.Random(seed)
    d = V.d
    while True:
        A = ExactMatrix([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)])
        if A.det():
            break
    t = [rng.randint(-5, 5) for _ in range(d)]
    W = VRep.of([[x + s for x, s in zip(A.apply(p), t)] for p in V.vertices])
    P0, _ = pattern_and_matrix(name)
    P = pattern_of(W)
    perm = [P.column_supports().index(s) for s in P0.column_supports()]
    S = slack_matrix(W, facet_enumeration(W))
    S = ExactMatrix([[S[i, j] for j in perm] for i in range(S.rows)], S.cols)
    vals = values_of(P0, S)
    for g in ideal_generators(I):
        assert evaluate_substitute(g, vals) == 0, (name, str(g))


HYPOTHESIS_PROPERTIES = [
    property_saturation_idempotent,
    property_generators_vanish_on_rescaled_slack_matrices,
    property_generators_vanish_on_affine_images,
]


def check_property_suite():
    """Run every property; yields ``(name, ok)``."""
    out = []
    for fn in HYPOTHESIS_PROPERTIES:
        try:
            fn()
            out.append((fn.__name__, True))
        except Exception as exc:  # a falsifying example is a failed property
            out.append((f"{fn.__name__}: {exc}", False))
    for fn in (check_no_monomials, check_morally_2_level_equivalence, check_pure_difference_implies_containment):
        ok, _ = fn()
        out.append((fn.__name__, ok))
    return out
