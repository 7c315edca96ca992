"""Polytopes in exact coordinates: facets, slack matrices, patterns, Gale diagrams."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product as iproduct
from math import gcd
from typing import Iterable, Sequence

from .exactnum import QuadExt, Scalar, format_scalar, parse_scalar, to_scalar
from .linalg import ExactMatrix

__all__ = [
    "VRep",
    "HRep",
    "SlackPattern",
    "GaleDiagram",
    "PolytopeError",
    "facet_enumeration",
    "slack_matrix",
    "validate_slack_matrix",
    "match_columns",
    "match_pattern",
    "simplex",
    "cube",
    "crosspolytope",
    "cyclic",
    "product",
    "free_sum",
    "pyramid",
    "prism",
    "construct_catalog",
    "catalog_names",
    "pattern_of",
    "printed_pattern",
    "positive_circuits",
    "gale_facets",
    "perles_gale_diagram",
]


class PolytopeError(ValueError):
    pass


def _fracs(row) -> tuple[Fraction, ...]:
    return tuple(to_scalar(x) for x in row)


@dataclass(frozen=True)
class VRep:
    """``conv(p_1, ..., p_v)`` in R^d; rows of ``vertices`` are the p_i."""

    d: int
    vertices: tuple[tuple[Fraction, ...], ...]
    name: str = ""

    @classmethod
    def of(cls, points: Iterable[Sequence], name: str = "") -> "VRep":
        pts = tuple(_fracs(p) for p in points)
        if not pts:
            raise PolytopeError("a polytope needs at least one vertex")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise PolytopeError("vertices have different dimensions")
        if len(set(pts)) != len(pts):
            raise PolytopeError("repeated vertex")
        return cls(d, pts, name)

    @property
    def nvertices(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"d": self.d, "vertices": [[format_scalar(x) for x in p] for p in self.vertices]}

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "VRep":
        v = cls.of([[parse_scalar(x) for x in p] for p in data["vertices"]], name)
        d = int(data.get("d", v.d))
        if v.d != d:
            raise PolytopeError(f"declared d={d} but vertices have length {v.d}")
        return v

    def translate(self, t: Sequence) -> "VRep":
        t = _fracs(t)
        return VRep(self.d, tuple(tuple(a + b for a, b in zip(p, t)) for p in self.vertices), self.name)

    def centroid(self) -> tuple[Fraction, ...]:
        n = len(self.vertices)
        return tuple(sum(p[i] for p in self.vertices) / n for i in range(self.d))

    def centered(self) -> "VRep":
        return self.translate([-c for c in self.centroid()])


@dataclass(frozen=True)
class HRep:
    """``{x : W x <= w}``; ``incidences[j]`` lists the vertices on facet j."""

    W: tuple[tuple[Fraction, ...], ...]
    w: tuple[Fraction, ...]
    incidences: tuple[tuple[int, ...], ...] = ()

    @property
    def nfacets(self) -> int:
        return len(self.w)


# --------------------------------------------------------------------------
# facets


def _affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    return ExactMatrix([(Fraction(1), *p) for p in points]).rank()


def _primitive(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    return tuple(Fraction(x // g) for x in ints)


def facet_enumeration(V: VRep) -> HRep:
    """All facets by brute force over affinely independent d-subsets of vertices.

    Facets are ordered lexicographically by their sorted incident-vertex sets.
    """
    d, pts = V.d, V.vertices
    n = len(pts)
    hom = ExactMatrix([(Fraction(1), *p) for p in pts])
    if n < d + 1 or hom.rank() != d + 1:
        null = hom.nullspace()
        witness = [format_scalar(x) for x in null[0]] if null else None
        raise PolytopeError(
            f"vertices are not full-dimensional in R^{d}; affine dependency (c, a) with c + a.p = 0: {witness}"
        )
    found: dict[tuple[int, ...], tuple[tuple[Fraction, ...], Fraction]] = {}
    for sub in combinations(range(n), d):
        if any(set(sub) <= set(k) for k in found):
            continue
        # a.p - b = 0 on the subset; unknowns (a_1..a_d, b)
        M = ExactMatrix([(*pts[i], Fraction(-1)) for i in sub])
        null = M.nullspace()
        if len(null) != 1:
            continue
        *a, b = null[0]
        vals = [sum((x * y for x, y in zip(a, p)), Fraction(0)) - b for p in pts]
        if all(v <= 0 for v in vals):
            sgn = 1
        elif all(v >= 0 for v in vals):
            sgn = -1
        else:
            continue
        inc = tuple(i for i, v in enumerate(vals) if v == 0)
        if inc in found:
            continue
        normal = _primitive([sgn * x for x in a] + [sgn * b])
        found[inc] = (normal[:-1], normal[-1])
    order = sorted(found)
    # every vertex must be extreme: it lies on facets whose normals span R^d
    for i in range(n):
        normals = [found[k][0] for k in order if i in k]
        if not normals or ExactMatrix(normals).rank() < d:
            raise PolytopeError(f"point {i + 1} is not a vertex of the convex hull")
    return HRep(
        tuple(found[k][0] for k in order),
        tuple(found[k][1] for k in order),
        tuple(order),
    )


def slack_matrix(V: VRep, H: HRep) -> ExactMatrix:
    """``[1 V] [w^T; -W^T]``: entry (i, j) is ``w_j - W_j . p_i``."""
    if any(len(r) != V.d for r in H.W):
        raise PolytopeError("facet normals and vertices have different dimensions")
    rows = []
    for i, p in enumerate(V.vertices):
        row = []
        for j, (Wj, wj) in enumerate(zip(H.W, H.w)):
            s = wj - sum((a * b for a, b in zip(Wj, p)), Fraction(0))
            if s < 0:
                raise PolytopeError(f"vertex {i + 1} violates inequality {j + 1}")
            row.append(s)
        rows.append(row)
    return ExactMatrix(rows, H.nfacets)


# --------------------------------------------------------------------------
# patterns


class SlackPattern:
    """Zero pattern of a slack matrix together with the polytope dimension.

    Variables are numbered row-major over the nonzero cells: 0-based
    internally, printed 1-based as ``x1, x2, ...``.
    """

    __slots__ = ("d", "support", "var_index", "cells", "name", "row_labels")

    def __init__(self, d: int, support: Iterable[Sequence[int]], name: str = "", row_labels=None, check: bool = True):
        sup = tuple(tuple(int(bool(x)) for x in row) for row in support)
        if not sup or not sup[0]:
            raise PolytopeError("empty pattern")
        ncols = len(sup[0])
        if any(len(r) != ncols for r in sup):
            raise PolytopeError("ragged pattern")
        if check:
            for i, r in enumerate(sup):
                if not any(r):
                    raise PolytopeError(f"pattern row {i + 1} is all zero")
            for j in range(ncols):
                if not any(r[j] for r in sup):
                    raise PolytopeError(f"pattern column {j + 1} is all zero")
        self.d = int(d)
        self.support = sup
        self.name = name
        self.row_labels = tuple(row_labels) if row_labels else None
        idx: dict[tuple[int, int], int] = {}
        cells: list[tuple[int, int]] = []
        for i, r in enumerate(sup):
            for j, s in enumerate(r):
                if s:
                    idx[(i, j)] = len(cells)
                    cells.append((i, j))
        self.var_index = idx
        self.cells = tuple(cells)

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"SlackPattern{tag}(d={self.d}, {self.nrows}x{self.ncols}, {self.nvars} vars)"

    def __eq__(self, other) -> bool:
        return isinstance(other, SlackPattern) and self.d == other.d and self.support == other.support

    def __hash__(self) -> int:
        return hash((self.d, self.support))

    @property
    def nrows(self) -> int:
        return len(self.support)

    @property
    def ncols(self) -> int:
        return len(self.support[0])

    @property
    def nvars(self) -> int:
        return len(self.cells)

    def var_at(self, i: int, j: int) -> int | None:
        return self.var_index.get((i, j))

    def cell_map(self) -> dict[int, tuple[int, int]]:
        return {v: c for v, c in enumerate(self.cells)}

    def column_supports(self) -> list[tuple[int, ...]]:
        return [tuple(i for i in range(self.nrows) if self.support[i][j]) for j in range(self.ncols)]

    def support_matrix(self) -> ExactMatrix:
        return ExactMatrix(self.support, self.ncols)

    def support_rank(self) -> int:
        return self.support_matrix().rank()

    def permute_columns(self, perm: Sequence[int], name: str | None = None) -> "SlackPattern":
        """New pattern whose column k is old column ``perm[k]``."""
        if sorted(perm) != list(range(self.ncols)):
            raise ValueError("not a column permutation")
        sup = [[r[p] for p in perm] for r in self.support]
        return SlackPattern(self.d, sup, self.name if name is None else name, self.row_labels)

    def select_columns(self, cols: Sequence[int]) -> "SlackPattern":
        sup = [[r[c] for c in cols] for r in self.support]
        return SlackPattern(self.d, sup, f"{self.name}[cols]", self.row_labels, check=False)

    def canonical(self) -> "SlackPattern":
        """Columns sorted lexicographically by their sorted support sets."""
        sups = self.column_supports()
        perm = sorted(range(self.ncols), key=lambda j: sups[j])
        return self.permute_columns(perm)

    def polar(self) -> "SlackPattern":
        return SlackPattern(
            self.d,
            [[self.support[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            f"polar({self.name})",
        )

    def to_json(self) -> dict:
        return {"d": self.d, "support": [list(r) for r in self.support]}

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "SlackPattern":
        return cls(int(data["d"]), data["support"], name)

    @classmethod
    def from_stars(cls, d: int, text: str, name: str = "", row_labels=None) -> "SlackPattern":
        """Parse rows of ``*``/``0`` tokens (whitespace or ``&`` separated)."""
        rows = []
        for line in text.strip().splitlines():
            toks = [t for t in re.split(r"[\s&]+", line.strip().rstrip("\\").strip()) if t]
            if toks:
                rows.append([1 if t in ("*", "x", "1") else 0 for t in toks])
        return cls(d, rows, name, row_labels)

    @classmethod
    def from_matrix(cls, d: int, S: ExactMatrix, name: str = "") -> "SlackPattern":
        return cls(d, S.support(), name)

    def stars_text(self) -> str:
        return "\n".join(" ".join("*" if s else "0" for s in r) for r in self.support)


def match_columns(pattern: SlackPattern, target: Sequence[Sequence[int]]) -> list[int] | None:
    """Column permutation ``perm`` with ``pattern.permute_columns(perm).support == target``."""
    tgt = tuple(tuple(int(bool(x)) for x in r) for r in target)
    if len(tgt) != pattern.nrows or len(tgt[0]) != pattern.ncols:
        return None
    ours = {}
    for j, s in enumerate(pattern.column_supports()):
        ours.setdefault(s, []).append(j)
    perm = []
    for j in range(len(tgt[0])):
        s = tuple(i for i in range(len(tgt)) if tgt[i][j])
        if not ours.get(s):
            return None
        perm.append(ours[s].pop(0))
    return perm


def match_pattern(pattern: SlackPattern, target: Sequence[Sequence[int]]) -> tuple[list[int], list[int]] | None:
    """Row and column permutations with ``target[i][j] == pattern[rows[i]][cols[j]]``, or None.

    Backtracks over row assignments in target order, pruning on row
    degree and on the multiset of column restrictions to the rows
    assigned so far.
    """
    src = pattern.support
    tgt = tuple(tuple(int(bool(x)) for x in r) for r in target)
    m, n = pattern.nrows, pattern.ncols
    if len(tgt) != m or any(len(r) != n for r in tgt):
        return None
    deg_s = [sum(r) for r in src]
    deg_t = [sum(r) for r in tgt]
    if sorted(deg_s) != sorted(deg_t):
        return None
    rows: list[int] = []
    used = [False] * m

    def restrict(M, rsel):
        return sorted(tuple(M[i][j] for i in rsel) for j in range(n))

    def extend(k: int) -> bool:
        if k == m:
            return True
        for r in range(m):
            if used[r] or deg_s[r] != deg_t[k]:
                continue
            rows.append(r)
            if restrict(src, rows) == restrict(tgt, range(k + 1)):
                used[r] = True
                if extend(k + 1):
                    return True
                used[r] = False
            rows.pop()
        return False

    if not extend(0):
        return None
    permuted = SlackPattern(pattern.d, [src[r] for r in rows], check=False)
    return rows, match_columns(permuted, tgt)


def validate_slack_matrix(S: ExactMatrix, pattern: SlackPattern) -> dict:
    """The three conditions characterising slack matrices of a combinatorial class.

    (1) support equals the pattern, (2) rank is d+1, (3) the all-ones vector
    lies in the column span.  Nonnegativity is reported alongside.
    """
    support_ok = S.rows == pattern.nrows and S.cols == pattern.ncols and S.support() == pattern.support
    rank = S.rank()
    ones_ok, coeffs = S.colspan_member([Fraction(1)] * S.rows)

    def nonneg(x):
        return (x.sign() if isinstance(x, QuadExt) else (x > 0) - (x < 0)) >= 0

    return {
        "valid": bool(support_ok and rank == pattern.d + 1 and ones_ok),
        "support": support_ok,
        "rank": rank,
        "rank_ok": rank == pattern.d + 1,
        "ones_in_column_span": ones_ok,
        "ones_witness": coeffs,
        "nonnegative": all(nonneg(x) for r in S.entries for x in r),
    }


# --------------------------------------------------------------------------
# catalog


def simplex(d: int) -> VRep:
    pts = [[0] * d] + [[int(i == j) for j in range(d)] for i in range(d)]
    return VRep.of(pts, f"simplex{d}")


def cube(d: int) -> VRep:
    return VRep.of([list(p) for p in iproduct((0, 1), repeat=d)], f"cube{d}")


def crosspolytope(d: int) -> VRep:
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append([s * int(i == j) for j in range(d)])
    return VRep.of(pts, f"cross{d}")


def cyclic(n: int, d: int) -> VRep:
    """Cyclic polytope: ``n`` points on the moment curve ``(t, t^2, ..., t^d)``, ``t = 0..n-1``."""
    if n <= d:
        raise PolytopeError(f"a cyclic {d}-polytope needs more than {d} vertices")
    return VRep.of([[t**k for k in range(1, d + 1)] for t in range(n)], f"cyclic{n}-{d}")


def product(P: VRep, Q: VRep) -> VRep:
    return VRep.of([p + q for p in P.vertices for q in Q.vertices], f"({P.name})x({Q.name})")


def free_sum(P: VRep, Q: VRep) -> VRep:
    """``conv(P x 0 + 0 x Q)`` after moving both centroids to the origin."""
    P, Q = P.centered(), Q.centered()
    zq, zp = (Fraction(0),) * Q.d, (Fraction(0),) * P.d
    return VRep.of([p + zq for p in P.vertices] + [zp + q for q in Q.vertices], f"({P.name})+({Q.name})")


def pyramid(P: VRep, r: int = 1) -> VRep:
    out = P
    for _ in range(r):
        c = out.centroid()
        out = VRep.of([p + (Fraction(0),) for p in out.vertices] + [c + (Fraction(1),)], f"pyr({out.name})")
    return out


def prism(P: VRep) -> VRep:
    return product(P, simplex(1))


def _e(d: int, *terms: tuple[int, int]) -> list[int]:
    v = [0] * d
    for coef, i in terms:
        v[i - 1] += coef
    return v


def example_7vertex_4polytope() -> VRep:
    d = 4
    pts = [
        [0] * d,
        _e(d, (2, 1)),
        _e(d, (2, 2)),
        _e(d, (2, 3)),
        _e(d, (1, 1), (1, 2), (-1, 3)),
        _e(d, (1, 4)),
        _e(d, (1, 3), (1, 4)),
    ]
    return VRep.of(pts, "example-7vertex-4polytope")


def example_8vertex_5polytope() -> VRep:
    d = 5
    pts = [
        _e(d, (1, 1)),
        _e(d, (1, 2)),
        _e(d, (1, 3)),
        _e(d, (1, 4)),
        _e(d, (-1, 1), (-2, 2), (-1, 3)),
        _e(d, (-2, 1), (-1, 2), (-1, 4)),
        _e(d, (-2, 1), (-2, 2), (1, 5)),
        _e(d, (-2, 1), (-2, 2), (-1, 5)),
    ]
    return VRep.of(pts, "example-8vertex-5polytope")


# zero patterns exactly as printed (rows = vertices in the listed order)
PRINTED_7VERTEX_SUPPORT = """
0 * 0 0 0 * 0
* 0 0 0 0 * 0
* 0 * 0 0 0 *
0 * * 0 0 0 *
0 0 0 0 * 0 *
0 0 0 * * * 0
0 0 * * 0 0 0
"""

PRINTED_8VERTEX_SUPPORT = """
0 * 0 0 0 0 * 0 0 0 0 0
0 0 0 * * 0 0 0 0 0 0 0
0 0 0 0 0 * * * 0 0 * *
* 0 0 * 0 * 0 0 * 0 * 0
* * * 0 0 0 0 0 * * 0 0
0 0 * 0 * 0 0 * 0 * 0 *
* 0 * 0 0 * 0 * 0 0 0 0
0 0 0 0 0 0 0 0 * * * *
"""

PERLES_ROW_LABELS = ("A", "B", "C", "D", "E", "F", "G", "H", "-F", "-G", "-H", "-I")

PRINTED_PERLES_SUPPORT = """
0 0 0 * * * 0 0 0 0 0 0 0 * * * * * * * * 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 * 0 0 * * * 0 0 0 0 * * * * 0 0 0 0 * * * * 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 * 0 0 * * 0 0 * * 0 0 * * 0 0 * 0 0 0 * * 0 0 0 0 0 0 0
0 0 0 0 * 0 0 0 0 0 0 * * 0 0 * * 0 0 * 0 0 * * 0 0 0 * * * 0 0 0 0
0 0 0 0 0 0 0 * 0 * 0 * 0 0 0 0 0 0 0 0 0 * * 0 0 * 0 * * 0 * * * 0
* 0 0 0 0 0 0 0 0 0 * 0 * 0 0 0 0 * 0 * 0 0 0 0 0 0 * 0 0 * 0 0 0 *
0 * 0 0 0 0 0 0 * 0 0 0 0 0 0 0 0 0 0 0 0 0 0 * * 0 0 0 0 * * 0 0 *
0 0 * 0 0 * 0 0 0 0 0 0 0 0 0 0 0 0 * 0 * 0 0 0 0 * 0 0 0 0 * * * *
* 0 0 * 0 0 0 * 0 0 0 0 0 0 0 0 0 0 0 0 * 0 0 0 * 0 0 * 0 0 0 * * 0
0 * 0 0 * 0 0 0 0 * 0 0 0 * 0 0 0 * * 0 * 0 0 0 0 0 * * * 0 0 * 0 0
0 0 * 0 0 0 * 0 0 0 0 0 * 0 0 * 0 0 0 0 0 0 * * * 0 * 0 * 0 0 0 0 0
0 0 0 0 0 * 0 0 * 0 * * 0 0 * 0 * 0 0 * 0 * 0 0 0 * 0 0 0 * * 0 * *
"""


def printed_pattern(name: str) -> SlackPattern:
    if name == "example-7vertex-4polytope":
        return SlackPattern.from_stars(4, PRINTED_7VERTEX_SUPPORT, name)
    if name == "example-8vertex-5polytope":
        return SlackPattern.from_stars(5, PRINTED_8VERTEX_SUPPORT, name)
    if name == "perles":
        return SlackPattern.from_stars(8, PRINTED_PERLES_SUPPORT, name, PERLES_ROW_LABELS)
    raise KeyError(name)


_NAMED = {
    "square": lambda: VRep.of(cube(2).vertices, "square"),
    "triangle": lambda: VRep.of(simplex(2).vertices, "triangle"),
    "bisimplex3": lambda: VRep.of(free_sum(simplex(2), simplex(1)).vertices, "bisimplex3"),
    "example-7vertex-4polytope": example_7vertex_4polytope,
    "example-8vertex-5polytope": example_8vertex_5polytope,
}

_PARAM = [
    (re.compile(r"^simplex(\d+)$"), lambda m: simplex(int(m[1]))),
    (re.compile(r"^cube(\d+)$"), lambda m: cube(int(m[1]))),
    (re.compile(r"^cross(\d+)$"), lambda m: crosspolytope(int(m[1]))),
    (re.compile(r"^cyclic(\d+)-(\d+)$"), lambda m: cyclic(int(m[1]), int(m[2]))),
    (re.compile(r"^prism-(.+)$"), lambda m: prism(_vrep(m[1]))),
    (re.compile(r"^pyr(\d+)-(.+)$"), lambda m: pyramid(_vrep(m[2]), int(m[1]))),
    (re.compile(r"^sum-(\w+?\d+)-(\w+?\d+)$"), lambda m: free_sum(_vrep(m[1]), _vrep(m[2]))),
    (re.compile(r"^prod-(\w+?\d+)-(\w+?\d+)$"), lambda m: product(_vrep(m[1]), _vrep(m[2]))),
]


def catalog_names() -> list[str]:
    return sorted(list(_NAMED) + ["perles"]) + [
        "simplex<d>",
        "cube<d>",
        "cross<d>",
        "cyclic<n>-<d>",
        "prism-<name>",
        "pyr<r>-<name>",
        "sum-<a>-<b>",
        "prod-<a>-<b>",
    ]


def _vrep(name: str) -> VRep:
    if name in _NAMED:
        return _NAMED[name]()
    for rx, build in _PARAM:
        m = rx.match(name)
        if m:
            v = build(m)
            return VRep(v.d, v.vertices, name)
    raise KeyError(name)


def construct_catalog(name: str) -> VRep | SlackPattern:
    """Catalog lookup.  ``perles`` yields a pattern; everything else a VRep."""
    if name == "perles":
        return printed_pattern("perles")
    try:
        return _vrep(name)
    except KeyError:
        raise PolytopeError(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}") from None


def pattern_of(V: VRep, H: HRep | None = None, name: str | None = None) -> SlackPattern:
    H = H or facet_enumeration(V)
    return SlackPattern.from_matrix(V.d, slack_matrix(V, H), name or V.name)


# --------------------------------------------------------------------------
# Gale diagrams


@dataclass(frozen=True)
class GaleDiagram:
    """Vector configuration whose positive circuits are the facet complements."""

    vectors: tuple[tuple[Scalar, ...], ...]
    labels: tuple[str, ...] = field(default=())

    @classmethod
    def of(cls, vectors, labels=()) -> "GaleDiagram":
        vecs = tuple(tuple(to_scalar(x) for x in v) for v in vectors)
        labels = tuple(labels) if labels else tuple(str(i + 1) for i in range(len(vecs)))
        return cls(vecs, labels)

    @property
    def rank(self) -> int:
        return ExactMatrix(self.vectors).rank()

    @property
    def dimension(self) -> int:
        return len(self.vectors) - self.rank - 1

    def transform(self, M: Sequence[Sequence]) -> "GaleDiagram":
        """Apply a linear map (matrix acting on column vectors) to every vector."""
        A = ExactMatrix(M)
        return GaleDiagram(tuple(tuple(A.apply(v)) for v in self.vectors), self.labels)

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "vectors": [[format_scalar(x) for x in v] for v in self.vectors]}

    @classmethod
    def from_json(cls, data: dict) -> "GaleDiagram":
        return cls.of([[parse_scalar(x) for x in v] for v in data["vectors"]], data.get("labels", ()))


def _sign(x) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def positive_circuits(G: GaleDiagram) -> list[tuple[int, ...]]:
    """Minimal positively dependent subsets, lexicographically sorted."""
    if any(not any(v) for v in G.vectors):
        raise PolytopeError("degenerate Gale diagram: zero vector")
    r = G.rank
    n = len(G.vectors)
    out = []
    for k in range(2, r + 2):
        for sub in combinations(range(n), k):
            M = ExactMatrix([[G.vectors[i][c] for i in sub] for c in range(len(G.vectors[0]))], k)
            null = M.nullspace()
            if len(null) != 1:
                continue
            s = {_sign(x) for x in null[0]}
            if s == {1} or s == {-1}:
                out.append(sub)
    return sorted(out)


def gale_facets(G: GaleDiagram, name: str = "") -> SlackPattern:
    """Slack pattern whose columns are the positive circuits (vertex off facet iff in circuit)."""
    circuits = positive_circuits(G)
    n = len(G.vectors)
    sup = [[int(i in c) for c in circuits] for i in range(n)]
    return SlackPattern(G.dimension, sup, name, G.labels)


def perles_gale_diagram(center: str = "pentagon") -> GaleDiagram:
    """Perles configuration in exact coordinates over Q(sqrt5).

    The affine picture is a regular pentagon with y rescaled by
    1/(2 sin 72deg), which puts every point in Q(sqrt5).  ``center`` picks the
    position of I: the pentagon centre (as drawn) or the point (1, phi-1).
    """
    phi = QuadExt(Fraction(1, 2), Fraction(1, 2))
    one = Fraction(1)
    pts = {
        "A": (-2 * phi, 0),
        "B": (2 * phi + 2, 0),
        "C": (-phi, phi + 1),
        "D": (phi + 2, phi + 1),
        "E": (0, 0),
        "F": (2, 0),
        "G": (1 - phi, one),
        "H": (phi + 1, one),
        "I": (one, (phi + 2) / 5) if center == "pentagon" else (one, phi - 1),
    }
    vecs = []
    for lab in "ABCDEFGH":
        x, y = pts[lab]
        vecs.append((x, y, 1))
    for lab in "FGHI":
        x, y = pts[lab]
        vecs.append((-to_scalar(x), -to_scalar(y), -1))
    return GaleDiagram.of(vecs, PERLES_ROW_LABELS)
