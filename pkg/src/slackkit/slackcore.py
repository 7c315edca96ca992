"""Slack ideals, non-incidence graphs, toric ideals and scaling."""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .budget import Budget, BudgetExceeded
from .exactnum import IntegerLattice, Scalar, format_scalar, integer_kernel, to_scalar
from .groebner import (
    Ideal,
    LatticeIdeal,
    _binomial_vectors,
    classify_ideal,
    divide_with_quotients,
    is_saturated_ideal,
    normal_form,
    saturate,
)
from .linalg import ExactMatrix
from .poly import Polynomial, SymbolicMinors, TermOrder, Var, evaluate_substitute, parse_polynomial
from .polytope import SlackPattern

__all__ = [
    "SymbolicSlackMatrix",
    "NonIncidenceGraph",
    "CycleBinomial",
    "ScalingAssignment",
    "slack_ideal",
    "minor_generators",
    "toric_ideal_TP",
    "spanning_forest_scaling",
    "rehomogenize",
    "is_morally_2_level",
    "certify_projective_uniqueness",
    "verify_certificate",
]


class SymbolicSlackMatrix:
    """``S_P(x)``: stars replaced by variables, some possibly fixed to constants."""

    def __init__(self, pattern: SlackPattern, fixed: Mapping[int, object] | None = None):
        fixed = {int(k): to_scalar(v) for k, v in (fixed or {}).items()}
        for k, v in fixed.items():
            if not 0 <= k < pattern.nvars:
                raise ValueError(f"x{k + 1} is not a variable of the pattern")
            if not v:
                raise ValueError(f"x{k + 1} cannot be fixed to zero: it sits on a star")
        self.pattern = pattern
        self.fixed = fixed

    @property
    def nvars(self) -> int:
        return self.pattern.nvars

    @property
    def free_vars(self) -> list[int]:
        return [k for k in range(self.nvars) if k not in self.fixed]

    def cells(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None):
        P = self.pattern
        rows = range(P.nrows) if rows is None else rows
        cols = range(P.ncols) if cols is None else cols
        out = []
        for i in rows:
            r = []
            for j in cols:
                k = P.var_at(i, j)
                if k is None:
                    r.append(None)
                elif k in self.fixed:
                    r.append(self.fixed[k])
                else:
                    r.append(Var(k))
            out.append(r)
        return out

    def evaluate(self, values: Mapping[int, object] | Sequence) -> ExactMatrix:
        """Numeric matrix with ``values[k]`` at every free variable ``k``."""
        if not isinstance(values, Mapping):
            values = dict(enumerate(values))
        rows = []
        for r in self.cells():
            rows.append([0 if c is None else (values[c.index] if isinstance(c, Var) else c) for c in r])
        return ExactMatrix(rows, self.pattern.ncols)

    def to_text(self) -> str:
        out = []
        for r in self.cells():
            out.append(" ".join("0" if c is None else (f"x{c.index + 1}" if isinstance(c, Var) else str(c)) for c in r))
        return "\n".join(out)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SLACKKIT_THREADS", "1")))
    except ValueError:
        return 1


def _packed_minors(engine: SymbolicMinors, size: int, row_sets, budget: Budget) -> list[dict]:
    """Nonzero packed minors over the given row sets, sign-normalised, deduplicated."""
    seen: set = set()
    out = []
    n = 0
    for rows in row_sets:
        rm = sum(1 << i for i in rows)
        cols_ok = [j for j in range(engine.ncols) if engine.col_bits[j] & rm]
        for cols in combinations(cols_ok, size):
            cm = sum(1 << j for j in cols)
            if not all(engine.row_bits[i] & cm for i in rows):
                continue
            n += 1
            if n % 256 == 0:
                budget.check()
            packed = engine.packed_minor(rows, cols)
            if not packed:
                continue
            if packed[max(packed)] < 0:
                packed = {m: -c for m, c in packed.items()}
            key = frozenset(packed.items())
            if key not in seen:
                seen.add(key)
                out.append(packed)
    return out


def _minor_worker(job):
    cells, nvars, size, row_sets, seconds = job
    return _packed_minors(SymbolicMinors(cells, nvars), size, row_sets, Budget(seconds))


def minor_generators(S: SymbolicSlackMatrix, size: int, budget=None) -> list[Polynomial]:
    """Distinct nonzero ``size``-minors of ``S`` up to sign, in canonical order.

    With ``SLACKKIT_THREADS=k > 1`` the row subsets are split across ``k``
    worker processes; the result does not depend on ``k``.
    """
    budget = Budget.coerce(budget)
    P = S.pattern
    if size > P.nrows or size > P.ncols:
        return []
    cells = S.cells()
    engine = SymbolicMinors(cells, S.nvars)
    row_sets = list(combinations(range(P.nrows), size))
    workers = min(_threads(), len(row_sets))
    if workers > 1:
        # interleaved chunks balance the load; overlapping results are deduplicated below
        chunks = [row_sets[k::workers] for k in range(workers)]
        jobs = [(cells, S.nvars, size, c, budget.remaining()) for c in chunks]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_minor_worker, jobs))
    else:
        parts = [_packed_minors(engine, size, row_sets, budget)]
    seen: set = set()
    out: list[Polynomial] = []
    for part in parts:
        for packed in part:
            key = frozenset(packed.items())
            if key not in seen:
                seen.add(key)
                out.append(engine.unpack(packed))
    order = TermOrder.grevlex(S.nvars)
    out = [p.canonical_sign(order) for p in out]
    out.sort(key=lambda p: [order.key(e) for e, _ in p.sorted_terms(order)], reverse=True)
    return out


# --------------------------------------------------------------------------
# non-incidence graph


class NonIncidenceGraph:
    """Bipartite graph: vertex node ``i`` joined to facet node ``v + j`` by edge ``x_k``."""

    def __init__(self, pattern: SlackPattern):
        self.pattern = pattern
        self.nv = pattern.nrows
        self.nf = pattern.ncols
        self.edges: list[tuple[int, int]] = [(i, self.nv + j) for i, j in pattern.cells]
        self.adj: list[dict[int, int]] = [dict() for _ in range(self.nv + self.nf)]
        for k, (a, b) in enumerate(self.edges):
            self.adj[a][b] = k
            self.adj[b][a] = k

    @property
    def nnodes(self) -> int:
        return self.nv + self.nf

    def node_label(self, u: int) -> str:
        return f"p{u + 1}" if u < self.nv else f"F{u - self.nv + 1}"

    def incidence_matrix(self) -> list[list[int]]:
        """``A_P``: nodes by edges, one 1 at each endpoint."""
        A = [[0] * len(self.edges) for _ in range(self.nnodes)]
        for k, (a, b) in enumerate(self.edges):
            A[a][k] = 1
            A[b][k] = 1
        return A

    def components(self) -> list[list[int]]:
        seen = [False] * self.nnodes
        out = []
        for s in range(self.nnodes):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def chordless_cycles(self, budget=None) -> list[tuple[int, ...]]:
        """All chordless cycles as node tuples in canonical form.

        A cycle is listed from its smallest node ``s`` in the direction
        where the second node is smaller than the last, which is the
        lexicographically smallest rotation/reflection.
        """
        budget = Budget.coerce(budget)
        adj = [set(a) for a in self.adj]
        out: list[tuple[int, ...]] = []
        steps = 0

        def extend(path: list[int], blocked: set[int]):
            nonlocal steps
            steps += 1
            if steps % 4096 == 0:
                budget.check()
            s, last = path[0], path[-1]
            for w in sorted(adj[last]):
                if w <= s or w in blocked:
                    continue
                # w may touch s (closing) but no other earlier path node
                inner = adj[w].intersection(path[1:-1])
                if inner:
                    continue
                if s in adj[w]:
                    if len(path) >= 3 and path[1] < w:
                        out.append(tuple(path + [w]))
                    continue
                path.append(w)
                blocked.add(w)
                extend(path, blocked)
                blocked.discard(w)
                path.pop()

        for s in range(self.nnodes):
            for p1 in sorted(adj[s]):
                if p1 > s:
                    extend([s, p1], {s, p1})
        out.sort()
        return out

    def cycle_edges(self, cycle: Sequence[int]) -> list[int]:
        L = len(cycle)
        return [self.adj[cycle[t]][cycle[(t + 1) % L]] for t in range(L)]


@dataclass(frozen=True)
class CycleBinomial:
    cycle: tuple[int, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    binomial: Polynomial

    @classmethod
    def from_cycle(cls, G: NonIncidenceGraph, cycle: Sequence[int]) -> "CycleBinomial":
        edges = G.cycle_edges(cycle)
        a = tuple(sorted(edges[0::2]))
        b = tuple(sorted(edges[1::2]))
        if min(b) < min(a):
            a, b = b, a
        n = G.pattern.nvars
        ea, eb = [0] * n, [0] * n
        for k in a:
            ea[k] += 1
        for k in b:
            eb[k] += 1
        return cls(tuple(cycle), a, b, Polynomial.binomial(ea, eb))

    def to_json(self, G: NonIncidenceGraph | None = None) -> dict:
        return {
            "cycle": [G.node_label(u) for u in self.cycle] if G else list(self.cycle),
            "plus": [k + 1 for k in self.plus],
            "minus": [k + 1 for k in self.minus],
            "binomial": str(self.binomial),
        }


@dataclass
class ToricResult:
    ideal: Ideal
    graph: NonIncidenceGraph
    cycles: list[CycleBinomial]
    method: str


def toric_ideal_TP(pattern: SlackPattern, method: str = "cycles", budget=None) -> ToricResult:
    """``T_P``, the toric ideal of the non-incidence graph.

    ``cycles`` uses one binomial per chordless cycle; ``kernel`` returns the
    lattice ideal of ``ker_Z A_P`` (a saturated lattice, so the ideal is
    toric), with membership decided on lattice cosets.
    """
    budget = Budget.coerce(budget)
    G = NonIncidenceGraph(pattern)
    n = pattern.nvars
    if method == "cycles":
        cbs = [CycleBinomial.from_cycle(G, c) for c in G.chordless_cycles(budget)]
        return ToricResult(Ideal(n, [c.binomial for c in cbs]), G, cbs, method)
    if method == "kernel":
        basis = integer_kernel(G.incidence_matrix(), n)
        return ToricResult(LatticeIdeal(IntegerLattice(basis, n)), G, [], method)
    raise ValueError(f"unknown method {method!r}; use 'cycles' or 'kernel'")


# --------------------------------------------------------------------------
# scaling


@dataclass(frozen=True)
class ScalingAssignment:
    """Variables fixed to 1 along a maximal spanning forest of ``G_P``."""

    pattern: SlackPattern
    forest: tuple[tuple[int, int, int], ...]  # (parent node, child node, variable)
    roots: tuple[int, ...]

    @property
    def fixed(self) -> tuple[int, ...]:
        return tuple(sorted(k for _, _, k in self.forest))

    @property
    def free(self) -> tuple[int, ...]:
        f = set(self.fixed)
        return tuple(k for k in range(self.pattern.nvars) if k not in f)

    def substitution(self) -> dict[int, Fraction]:
        return {k: Fraction(1) for k in self.fixed}

    def witness_scalings(self, S: ExactMatrix) -> tuple[list, list]:
        """Positive ``D_v``, ``D_f`` diagonals with ``D_v S D_f`` equal to 1 on the forest.

        Walks the forest from each root (scale 1) and sets each child's
        scale so that the tree edge to its parent becomes 1.
        """
        nv = self.pattern.nrows
        rs: list = [None] * nv
        cs: list = [None] * self.pattern.ncols
        for r in self.roots:
            if r < nv:
                rs[r] = Fraction(1)
            else:
                cs[r - nv] = Fraction(1)
        for parent, child, _ in self.forest:
            if parent < nv:
                i, j = parent, child - nv
                cs[j] = 1 / (rs[i] * S[i, j])
            else:
                i, j = child, parent - nv
                rs[i] = 1 / (S[i, j] * cs[j])
        return rs, cs

    def to_json(self) -> dict:
        return {"fixed": [k + 1 for k in self.fixed], "free": [k + 1 for k in self.free]}

    @classmethod
    def from_fixed(cls, pattern: SlackPattern, fixed: Iterable[int]) -> "ScalingAssignment":
        """Wrap a hand-picked edge set, checking that it is a maximal spanning forest.

        ``fixed`` holds 0-based variable indices.
        """
        G = NonIncidenceGraph(pattern)
        chosen = sorted(set(fixed))
        tree_adj: list[dict[int, int]] = [dict() for _ in range(G.nnodes)]
        for k in chosen:
            if not 0 <= k < pattern.nvars:
                raise ValueError(f"x{k + 1} is not a variable of the pattern")
            a, b = G.edges[k]
            tree_adj[a][b] = k
            tree_adj[b][a] = k
        seen = [False] * G.nnodes
        forest, roots = [], []
        for r in range(G.nnodes):
            if seen[r]:
                continue
            roots.append(r)
            seen[r] = True
            queue = deque([r])
            while queue:
                u = queue.popleft()
                for w in sorted(tree_adj[u]):
                    if not seen[w]:
                        seen[w] = True
                        forest.append((u, w, tree_adj[u][w]))
                        queue.append(w)
        if len(forest) != len(chosen):
            raise ValueError("fixed variables contain a cycle of the non-incidence graph")
        if len(roots) != len(G.components()):
            raise ValueError("fixed variables do not span every component of the non-incidence graph")
        return cls(pattern, tuple(forest), tuple(roots))


def spanning_forest_scaling(pattern: SlackPattern, root_choice: str = "vertex") -> ScalingAssignment:
    """Breadth-first maximal spanning forest of ``G_P``.

    ``root_choice`` picks the node order: ``vertex`` numbers vertex nodes
    first, ``facet`` numbers facet nodes first.  Each component is rooted
    at its lowest node and neighbours are visited by increasing node.
    """
    G = NonIncidenceGraph(pattern)
    N = G.nnodes
    if root_choice == "vertex":
        rank = list(range(N))
    elif root_choice == "facet":
        rank = [u + G.nf if u < G.nv else u - G.nv for u in range(N)]
    else:
        raise ValueError("root_choice must be 'vertex' or 'facet'")
    order = sorted(range(N), key=lambda u: rank[u])
    seen = [False] * N
    forest, roots = [], []
    for r in order:
        if seen[r]:
            continue
        roots.append(r)
        seen[r] = True
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in sorted(G.adj[u], key=lambda x: rank[x]):
                if not seen[w]:
                    seen[w] = True
                    forest.append((u, w, G.adj[u][w]))
                    queue.append(w)
    return ScalingAssignment(pattern, tuple(forest), tuple(roots))


def _tree_paths(scaling: ScalingAssignment) -> dict[int, tuple[list[int], list[int]]]:
    """For each non-forest edge ``(i, j)``: forest edges at even/odd positions on the path i -> j."""
    P = scaling.pattern
    G = NonIncidenceGraph(P)
    parent: dict[int, tuple[int, int]] = {}
    depth = {r: 0 for r in scaling.roots}
    for u, w, k in scaling.forest:
        parent[w] = (u, k)
        depth[w] = depth[u] + 1
    fixed = set(scaling.fixed)
    out = {}
    for k, (a, b) in enumerate(G.edges):
        if k in fixed:
            continue
        # climb to the common ancestor, collecting edges from each side
        left, right = [], []
        x, y = a, b
        while depth[x] > depth[y]:
            left.append(parent[x][1])
            x = parent[x][0]
        while depth[y] > depth[x]:
            right.append(parent[y][1])
            y = parent[y][0]
        while x != y:
            left.append(parent[x][1])
            x = parent[x][0]
            right.append(parent[y][1])
            y = parent[y][0]
        path = left + right[::-1]
        out[k] = (path[1::2], path[0::2])
    return out


def rehomogenize(polys: Iterable[Polynomial], scaling: ScalingAssignment) -> list[Polynomial]:
    """Undo a spanning-forest scaling on generators of the scaled ideal.

    Each free ``x_e`` with tree path ``f_1 ... f_k`` from its row to its
    column becomes ``x_e * f_2 f_4 ... / (f_1 f_3 ...)``; denominators are
    then cleared.  The result generates the unscaled ideal after
    saturation by all variables.
    """
    n = scaling.pattern.nvars
    paths = _tree_paths(scaling)
    out = []
    for p in polys:
        terms = {}
        for e, c in p.terms.items():
            new = [0] * n
            for k, a in enumerate(e):
                if not a:
                    continue
                new[k] += a
                if k in paths:
                    num, den = paths[k]
                    for f in num:
                        new[f] += a
                    for f in den:
                        new[f] -= a
            terms[tuple(new)] = c
        shift = [min(0, min(t[k] for t in terms)) for k in range(n)]
        q = Polynomial(n, {tuple(a - s for a, s in zip(t, shift)): c for t, c in terms.items()})
        out.append(q.divide_monomial_gcd())
    return out


def _scaled_generators(pattern, scaling, size, budget):
    S = SymbolicSlackMatrix(pattern, scaling.substitution())
    return S, minor_generators(S, size, budget)


def slack_ideal(
    pattern: SlackPattern,
    scaling: ScalingAssignment | None = None,
    minor_size_override: int | None = None,
    *,
    saturate_ideal: bool = True,
    method: str = "auto",
    budget=None,
) -> Ideal:
    """``I_P``: (d+2)-minors of ``S_P(x)`` saturated by the product of the variables.

    With ``scaling`` the fixed variables are set to 1 first and saturation
    runs over the free ones only.  Without it, ``method`` is ``direct``
    (minors of the full symbolic matrix) or ``rehomogenize`` (scale along
    a spanning forest, saturate, then contract back: as a lattice ideal
    when the scaled basis is pure-difference binomial, degree by degree
    otherwise); ``graded`` always takes the degree-by-degree contraction.
    ``auto`` picks ``rehomogenize`` once the pattern has more than 16
    variables.
    ``saturate_ideal=False`` returns the bare minor ideal.
    """
    budget = Budget.coerce(budget)
    size = pattern.d + 2 if minor_size_override is None else minor_size_override
    n = pattern.nvars
    if scaling is not None:
        S, gens = _scaled_generators(pattern, scaling, size, budget)
        I = Ideal(n, gens)
        return saturate(I, S.free_vars, budget) if saturate_ideal and gens else I
    if method == "auto":
        method = "rehomogenize" if n > 16 and saturate_ideal else "direct"
    if method == "direct" or not saturate_ideal:
        gens = minor_generators(SymbolicSlackMatrix(pattern), size, budget)
        I = Ideal(n, gens)
        return saturate(I, None, budget) if saturate_ideal and gens else I
    if method not in ("rehomogenize", "graded"):
        raise ValueError(f"unknown method {method!r}")
    return _slack_ideal_rehomogenized(pattern, size, budget, lattice=method == "rehomogenize")


def _slack_ideal_rehomogenized(pattern: SlackPattern, size: int, budget: Budget, lattice: bool = True) -> Ideal:
    """``I_P`` from the ideal scaled along a spanning forest.

    Over the Laurent ring the row/column scaling is a change of
    coordinates, so the rehomogenized scaled basis generates ``I_P`` there
    and ``I_P`` is its contraction.  If the scaled basis consists of
    pure-difference binomials the contraction is the lattice ideal of their
    exponent lattice; otherwise it is computed by graded linear algebra.
    """
    n = pattern.nvars
    forest = spanning_forest_scaling(pattern)
    S, gens = _scaled_generators(pattern, forest, size, budget)
    if not gens:
        return Ideal(n)
    J = saturate(Ideal(n, gens), S.free_vars, budget)
    if J.is_unit(budget):
        return Ideal(n, [Polynomial.constant(n, 1)])
    H = rehomogenize(J.groebner(budget=budget), forest)
    vecs = _binomial_vectors(H) if lattice else None
    if vecs is not None:
        return LatticeIdeal(IntegerLattice(vecs, n))
    return _graded_contraction(pattern, forest, J, budget)


class _Echelon:
    """Incrementally row-reduced set of sparse rational vectors."""

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}

    def add(self, vec: Mapping[int, object]) -> bool:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                lead = v[p]
                self.rows[p] = {k: c / lead for k, c in v.items()}
                return True
            f = v[p]
            for k, c in row.items():
                w = v.get(k, 0) - f * c
                if w:
                    v[k] = w
                else:
                    v.pop(k, None)
        return False


def _graded_contraction(pattern: SlackPattern, forest: ScalingAssignment, J: Ideal, budget: Budget) -> Ideal:
    """Minimal generators of ``I_P`` by linear algebra, one degree at a time.

    ``I_P`` is graded by row and column sums.  In multidegree ``m`` it is
    the kernel of ``x^u -> NF(y^u)`` modulo ``J``, where ``y^u`` drops the
    forest variables: the scaling ``x_ij -> l_i m_j y_ij`` turns ``x^u``
    into a unit times ``y^u``, and ``J`` is saturated in the free variables.
    New generators in ``m`` are kernel vectors outside the span of
    ``x_i * I_P(m - e_i)``.

    The partial ideal ``I_D`` (degrees up to ``D``) lies in ``I_P``.  It
    equals ``I_P`` once it is saturated and its forest-dehomogenization
    contains ``J``: then both agree on the torus and both are contractions.
    """
    n = pattern.nvars
    cell_row = [r for r, _ in pattern.cells]
    cell_col = [pattern.nrows + c for _, c in pattern.cells]
    fixed = set(forest.fixed)
    G = J.groebner(budget=budget)
    order = J.grevlex()
    nf_cache: dict[tuple, Polynomial] = {}

    def nf(u):
        y = tuple(0 if k in fixed else a for k, a in enumerate(u))
        r = nf_cache.get(y)
        if r is None:
            r = nf_cache[y] = normal_form(Polynomial(n, {y: 1}), G, order)
        return r

    ones = {k: 1 for k in fixed}
    target = [g for g in G if g]
    chosen: list[Polynomial] = []
    prev: dict[tuple, list[dict]] = {}
    degree = 0
    while True:
        degree += 1
        buckets: dict[tuple, list[tuple]] = {}
        for m in combinations_with_replacement(range(n), degree):
            u = [0] * n
            md = [0] * (pattern.nrows + pattern.ncols)
            for i in m:
                u[i] += 1
                md[cell_row[i]] += 1
                md[cell_col[i]] += 1
            buckets.setdefault(tuple(md), []).append(tuple(u))
        budget.check()
        cur: dict[tuple, list[dict]] = {}
        added = False
        for md, us in buckets.items():
            if len(us) < 2:
                continue
            polys = [nf(u) for u in us]
            supp = sorted({e for q in polys for e in q.terms})
            ker = ExactMatrix([[q.terms.get(e, 0) for q in polys] for e in supp], len(us)).nullspace()
            budget.check()
            if not ker:
                continue
            cur[md] = [{us[j]: c for j, c in enumerate(v) if c} for v in ker]
            pos = {u: j for j, u in enumerate(us)}
            span = _Echelon()
            for i in range(n):
                low = list(md)
                low[cell_row[i]] -= 1
                low[cell_col[i]] -= 1
                for f in prev.get(tuple(low), ()):
                    row = {}
                    for u, c in f.items():
                        w = list(u)
                        w[i] += 1
                        row[pos[tuple(w)]] = c
                    span.add(row)
            for f in cur[md]:
                if span.add({pos[u]: c for u, c in f.items()}):
                    chosen.append(Polynomial(n, f))
                    added = True
        prev = cur
        if not added:
            continue
        I = Ideal(n, chosen)
        dehom = Ideal(n, [evaluate_substitute(g, ones) for g in chosen])
        if all(dehom.contains(g, budget) for g in target) and is_saturated_ideal(I, budget):
            I.groebner(budget=budget)
            return I


# --------------------------------------------------------------------------
# predicates and certificates


def is_morally_2_level(pattern: SlackPattern) -> bool:
    """Whether the all-ones matrix on the support lies in the slack variety.

    The all-ones point has full support, and on the torus the variety of
    the minors coincides with that of ``I_P``; all (d+2)-minors vanish at
    it exactly when the 0/1 support matrix has rank at most d+1.
    """
    return pattern.support_rank() <= pattern.d + 1


def _trace(f: Polynomial, basis: Sequence[Polynomial]) -> dict:
    q, r = divide_with_quotients(f, basis)
    return {
        "poly": str(f),
        "quotients": [str(x) for x in q],
        "remainder": str(r),
        "reduces_to_zero": not r,
    }


def _containment(target: Ideal, basis: Sequence[Polynomial], gens: Sequence[Polynomial]) -> tuple[bool, list[dict]]:
    traces = [_trace(g, basis) for g in gens]
    return all(t["reduces_to_zero"] for t in traces), traces


def certify_projective_uniqueness(pattern: SlackPattern, budget=None, *, slack=None, toric=None) -> dict:
    """Compare ``I_P`` with ``T_P`` and build a replayable report.

    ``is_graphic`` (``I_P = T_P``) certifies projective uniqueness.  When
    both ideals are lattice ideals the witnesses are integer coordinates
    (containment) and rational dual vectors (non-containment) between the
    two lattices.  Otherwise each containment is witnessed by division
    traces of one reduced basis against the other.  Budget exhaustion
    gives ``budget-status: exceeded`` and no verdict.
    """
    budget = Budget.coerce(budget)
    report: dict = {"pattern": pattern.to_json(), "claim": None, "is_graphic": None, "budget-status": "ok"}
    try:
        I = slack if slack is not None else slack_ideal(pattern, budget=budget)
        if toric is None:
            method = "kernel" if isinstance(I, LatticeIdeal) else "cycles"
            toric = toric_ideal_TP(pattern, method, budget=budget).ideal
        T = toric
        if isinstance(I, LatticeIdeal) and isinstance(T, LatticeIdeal):
            i_in_t, w_it = _lattice_containment(T.lattice, I.lattice)
            t_in_i, w_ti = _lattice_containment(I.lattice, T.lattice)
            witnesses = {
                "kind": "lattice",
                "vars": pattern.nvars,
                "I_P_lattice": [list(b) for b in I.lattice.hermite_basis()],
                "T_P_lattice": [list(b) for b in T.lattice.hermite_basis()],
                "I_P_in_T_P": w_it,
                "T_P_in_I_P": w_ti,
            }
        else:
            gI = list(I.groebner(budget=budget))
            gT = list(T.groebner(budget=budget))
            i_in_t, tr_it = _containment(T, gT, gI)
            budget.check()
            t_in_i, tr_ti = _containment(I, gI, gT)
            witnesses = {
                "kind": "division",
                "vars": pattern.nvars,
                "I_P_basis": [str(g) for g in gI],
                "T_P_basis": [str(g) for g in gT],
                "I_P_in_T_P": tr_it,
                "T_P_in_I_P": tr_ti,
            }
        flags = classify_ideal(I, budget)
    except BudgetExceeded as exc:
        report["budget-status"] = "exceeded"
        report["claim"] = "undecided"
        report["detail"] = str(exc)
        return report
    graphic = i_in_t and t_in_i
    report["is_graphic"] = graphic
    report["I_P_subset_T_P"] = i_in_t
    report["T_P_subset_I_P"] = t_in_i
    report["I_P_is_toric"] = flags["is_toric"]
    report["I_P_is_pure_difference"] = flags["is_pure_difference"]
    report["I_P_is_binomial"] = flags["is_binomial"]
    if graphic:
        report["claim"] = "projectively unique (graphic slack ideal)"
    elif flags["is_toric"]:
        report["claim"] = "toric but not projectively unique" if i_in_t else "toric, not graphic"
    else:
        report["claim"] = "not graphic; undecided"
    report["witnesses"] = witnesses
    report["seconds"] = round(budget.elapsed(), 3)
    return report


def _lattice_containment(big: IntegerLattice, small: IntegerLattice) -> tuple[bool, list[dict]]:
    """Coordinates of every basis vector of ``small`` in ``big``, or a dual witness for the first failure."""
    out = []
    basis = big.hermite_basis()
    for v in small.hermite_basis():
        coef = big.coordinates(v)
        if coef is None:
            y = big.dual_witness(v)
            return False, [{"vector": list(v), "binomial": _binomial_str(v), "dual": [str(f) for f in y]}]
        out.append({"vector": list(v), "coefficients": coef})
    assert all(len(c["coefficients"]) == len(basis) for c in out)
    return True, out


def _binomial_str(vec: Sequence[int]) -> str:
    return str(Polynomial.binomial([max(a, 0) for a in vec], [max(-a, 0) for a in vec]))


def verify_certificate(report: dict) -> dict:
    """Replay the witnesses of a certificate without computing any basis.

    Division witnesses: checks ``poly = sum(q_k * basis_k) + remainder``
    exactly for every trace.  Lattice witnesses: checks each coordinate
    vector and each dual vector by integer arithmetic.  Then checks that
    the verdicts follow.
    """
    w = report.get("witnesses")
    if not w:
        return {"valid": False, "reason": "no witnesses in report"}
    problems: list[str] = []
    if w.get("kind") == "lattice":
        verdicts = _replay_lattice(w, problems)
    else:
        verdicts = _replay_division(w, problems)
    # each basis lies in its own ideal, so mutual containment of the bases is equality
    graphic = verdicts["I_P_in_T_P"] and verdicts["T_P_in_I_P"]
    if report.get("I_P_subset_T_P") is not None and report["I_P_subset_T_P"] != verdicts["I_P_in_T_P"]:
        problems.append("I_P_subset_T_P verdict does not match the witnesses")
    if report.get("T_P_subset_I_P") is not None and report["T_P_subset_I_P"] != verdicts["T_P_in_I_P"]:
        problems.append("T_P_subset_I_P verdict does not match the witnesses")
    if report.get("is_graphic") is not None and report["is_graphic"] != graphic:
        problems.append("is_graphic verdict does not match the witnesses")
    return {"valid": not problems, "is_graphic": graphic, "problems": problems}


def _replay_lattice(w: dict, problems: list[str]) -> dict:
    bases = {"I_P": [list(map(int, b)) for b in w["I_P_lattice"]], "T_P": [list(map(int, b)) for b in w["T_P_lattice"]]}
    verdicts = {}
    for key, src, dst in (("I_P_in_T_P", "I_P", "T_P"), ("T_P_in_I_P", "T_P", "I_P")):
        entries = w[key]
        target = bases[dst]
        if entries and "dual" in entries[0]:
            e = entries[0]
            v = list(map(int, e["vector"]))
            y = [Fraction(s) for s in e["dual"]]
            if v not in bases[src]:
                problems.append(f"{key}: separated vector is not a basis vector")
            if any(sum(a * b for a, b in zip(y, g)).denominator != 1 for g in target):
                problems.append(f"{key}: dual vector is not integral on the lattice")
            if sum(a * b for a, b in zip(y, v)).denominator == 1:
                problems.append(f"{key}: dual vector does not separate")
            verdicts[key] = False
            continue
        covered = [list(map(int, e["vector"])) for e in entries]
        if sorted(covered) != sorted(bases[src]):
            problems.append(f"{key}: coordinates do not cover the basis")
        for e in entries:
            coef = list(map(int, e["coefficients"]))
            if len(coef) != len(target):
                problems.append(f"{key}: coefficient count mismatch")
                continue
            total = [sum(c * g[k] for c, g in zip(coef, target)) for k in range(len(e["vector"]))]
            if total != list(map(int, e["vector"])):
                problems.append(f"{key}: coordinates fail for {e['vector']}")
        verdicts[key] = True
    return verdicts


def _replay_division(w: dict, problems: list[str]) -> dict:
    n = int(w["vars"])
    parse = lambda s: parse_polynomial(s, n)  # noqa: E731
    bases = {"I_P_in_T_P": [parse(s) for s in w["T_P_basis"]], "T_P_in_I_P": [parse(s) for s in w["I_P_basis"]]}
    verdicts = {}
    for key, basis in bases.items():
        ok_all = True
        for t in w[key]:
            f = parse(t["poly"])
            qs = [parse(s) for s in t["quotients"]]
            r = parse(t["remainder"])
            if len(qs) != len(basis):
                problems.append(f"{key}: quotient count mismatch")
                ok_all = False
                continue
            total = r
            for q, g in zip(qs, basis):
                total = total + q * g
            if total != f:
                problems.append(f"{key}: identity fails for {t['poly']}")
                ok_all = False
            if bool(r) == bool(t["reduces_to_zero"]):
                problems.append(f"{key}: remainder flag inconsistent for {t['poly']}")
            ok_all &= not r
        verdicts[key] = ok_all
    return verdicts


def substitution_values(pattern: SlackPattern, S: ExactMatrix) -> dict[int, Scalar]:
    """Variable values read off a numeric matrix with the pattern's support."""
    return {k: S[i, j] for k, (i, j) in enumerate(pattern.cells)}


def format_assignment(values: Mapping[int, Scalar]) -> dict:
    return {f"x{k + 1}": format_scalar(v) for k, v in sorted(values.items())}
