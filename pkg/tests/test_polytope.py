from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from slackkit.exactnum import ALPHA1
from slackkit.linalg import ExactMatrix
from slackkit.polytope import (
    GaleDiagram,
    PolytopeError,
    SlackPattern,
    VRep,
    construct_catalog,
    cube,
    facet_enumeration,
    gale_facets,
    match_columns,
    match_pattern,
    pattern_of,
    perles_gale_diagram,
    positive_circuits,
    printed_pattern,
    simplex,
    slack_matrix,
    validate_slack_matrix,
)

slow = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])

# distinct lattice points on a paraboloid are always in convex position
paraboloid = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=5, max_size=9, unique=True).map(
    lambda pts: VRep.of([(x, y, x * x + y * y) for x, y in pts])
)
parabola = st.lists(st.integers(-8, 8), min_size=3, max_size=9, unique=True).map(lambda xs: VRep.of([(x, x * x) for x in xs]))


def _is_full_dim(V):
    return ExactMatrix([(1, *p) for p in V.vertices]).rank() == V.d + 1


@slow
@given(parabola)
def test_polygon_has_n_edges(V):
    H = facet_enumeration(V)
    assert H.nfacets == V.nvertices
    assert all(len(k) == 2 for k in H.incidences)


@slow
@given(paraboloid)
def test_facets_are_valid_and_supporting(V):
    if not _is_full_dim(V):
        with pytest.raises(PolytopeError):
            facet_enumeration(V)
        return
    H = facet_enumeration(V)
    S = slack_matrix(V, H)
    for j, inc in enumerate(H.incidences):
        assert tuple(i for i in range(V.nvertices) if S[i, j] == 0) == inc
        assert ExactMatrix([V.vertices[i] + (1,) for i in inc]).rank() == V.d
    P = pattern_of(V)
    assert validate_slack_matrix(S, P)["valid"]
    assert S.rank() == V.d + 1


@pytest.mark.parametrize(
    "name,nv,nf",
    [("simplex3", 4, 4), ("cube3", 8, 6), ("cross3", 6, 8), ("cube4", 16, 8), ("prism-triangle", 6, 5), ("sum-simplex2-simplex2", 6, 9), ("cyclic6-4", 6, 9)],
)
def test_catalog_face_counts(name, nv, nf):
    P = pattern_of(construct_catalog(name))
    assert (P.nrows, P.ncols) == (nv, nf)


def test_slack_matrix_rejects_violated_inequality():
    V = cube(2)
    H = facet_enumeration(V)
    bad = type(H)(H.W, tuple(w - 1 for w in H.w), H.incidences)
    with pytest.raises(PolytopeError, match="violates"):
        slack_matrix(V, bad)


def test_input_errors():
    with pytest.raises(PolytopeError, match="affine dependency"):
        facet_enumeration(VRep.of([[0, 0], [1, 0], [2, 0]]))
    with pytest.raises(PolytopeError, match="not a vertex"):
        facet_enumeration(VRep.of([[0, 0], [2, 0], [0, 2], [1, 1]]))
    with pytest.raises(PolytopeError):
        VRep.of([[0, 0], [0, 0], [1, 1]])
    with pytest.raises(PolytopeError):
        SlackPattern(2, [[1, 0], [0, 0]])
    with pytest.raises((PolytopeError, KeyError, ValueError)):
        construct_catalog("dodecahedron")


def test_validate_flags_each_condition():
    P = pattern_of(cube(2))
    S = slack_matrix(cube(2), facet_enumeration(cube(2)))
    assert validate_slack_matrix(S, P)["valid"]
    # same support, generic entries: rank 4 instead of 3
    generic = ExactMatrix([[x * (1 + i + 3 * j) for j, x in enumerate(r)] for i, r in enumerate(P.support)])
    flags = validate_slack_matrix(generic, P)
    assert flags["support"] and not flags["rank_ok"] and not flags["valid"]
    flipped = ExactMatrix([[1 - x for x in r] for r in P.support])
    assert validate_slack_matrix(flipped, P)["support"] is False


def gale_transform(V):
    """Rows of a kernel basis of the (d+1) x n matrix [1; V^T]."""
    A = ExactMatrix([[1] * V.nvertices] + [[p[k] for p in V.vertices] for k in range(V.d)])
    K = A.nullspace()
    return GaleDiagram.of([[k[i] for k in K] for i in range(V.nvertices)])


@pytest.mark.parametrize("name", ["square", "cube3", "cross3", "prism-triangle", "bisimplex3", "cyclic7-4"])
def test_gale_round_trip(name):
    V = construct_catalog(name)
    G = gale_transform(V)
    assert G.rank == V.nvertices - V.d - 1
    assert G.dimension == V.d
    got = gale_facets(G)
    assert match_columns(got, pattern_of(V).support) is not None


@settings(max_examples=6, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_circuits_invariant_under_linear_maps(M):
    if ExactMatrix(M).det() == 0:
        return
    G = perles_gale_diagram()
    assert positive_circuits(G.transform(M)) == positive_circuits(G)


def test_positive_scaling_preserves_circuits():
    G = perles_gale_diagram()
    scaled = GaleDiagram.of([[x * (i + 1) for x in v] for i, v in enumerate(G.vectors)], G.labels)
    assert positive_circuits(scaled) == positive_circuits(G)
    with pytest.raises(PolytopeError):
        positive_circuits(GaleDiagram.of([[0, 0, 0]] + [list(v) for v in G.vectors[1:]]))


def test_perles_configuration_has_34_circuits():
    G = perles_gale_diagram()
    assert G.rank == 3 and len(G.vectors) == 12 and G.dimension == 8
    assert len(positive_circuits(G)) == 34
    assert any(ALPHA1.__class__ is type(x) for v in G.vectors for x in v)


def test_match_pattern_recovers_permutation():
    P = pattern_of(construct_catalog("prism-triangle"))
    rows, cols = [5, 3, 1, 0, 2, 4], [4, 0, 3, 1, 2]
    target = [[P.support[r][c] for c in cols] for r in rows]
    r2, c2 = match_pattern(P, target)
    assert [[P.support[r][c] for c in c2] for r in r2] == target
    assert match_pattern(P, [[1] * 5] * 6) is None


def test_printed_patterns_are_facet_patterns():
    for name in ("example-7vertex-4polytope", "example-8vertex-5polytope"):
        assert match_pattern(pattern_of(construct_catalog(name)), printed_pattern(name).support) is not None


def test_pattern_text_round_trip():
    P = pattern_of(cube(3))
    Q = SlackPattern.from_stars(3, P.stars_text())
    assert Q == P and SlackPattern.from_json(P.to_json()) == P
    assert P.polar().polar() == P
    assert Fraction(P.nvars) == 24
