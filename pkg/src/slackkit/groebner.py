"""Buchberger-based ideal engine over Q.

The engine packs each monomial and its order key into one Python int (see
:class:`Packer`) and delegates the reduction inner loop to
:mod:`slackkit.kernels`.  Pairs are handled with the Gebauer-Moeller
installation (coprime and chain criteria); pair selection is by sugar degree,
then by lcm in the term order, then by index, so results are deterministic.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .budget import Budget, BudgetExceeded
from .exactnum import IntegerLattice
from .poly import Polynomial, RingMismatch, TermOrder, classify_polynomial

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _Q = Fraction

__all__ = [
    "Packer",
    "Ideal",
    "groebner_basis",
    "normal_form",
    "divide_with_quotients",
    "reduced_groebner",
    "saturate",
    "eliminate",
    "krull_dimension",
    "minimal_generator_count",
    "classify_ideal",
    "ideal_membership_containment",
    "ideal_containment",
    "lattice_ideal",
    "LatticeIdeal",
    "is_saturated_ideal",
    "NotHomogeneous",
    "BudgetExceeded",
]

W = 16
FIELD = (1 << W) - 1
MAX_FIELD = (1 << (W - 1)) - 1


class NotHomogeneous(ValueError):
    pass


class Packer:
    """Pack exponent vectors of ``n`` variables under an order's weight rows.

    Layout, low to high: ``n`` exponent fields, one total-degree field, then
    the weight rows with the first row most significant.  Every field is
    linear in the exponents, so x^a * x^b packs to ``pack(a) + pack(b)``.
    """

    __slots__ = ("n", "units", "guard", "rows")

    def __init__(self, n: int, rows: Sequence[Sequence[int]]):
        self.n = n
        self.rows = [frozenset(r) for r in rows]
        K = len(self.rows)
        units = []
        for i in range(n):
            u = (1 << (W * i)) + (1 << (W * n))
            for k, r in enumerate(self.rows):
                if i in r:
                    u += 1 << (W * (n + K - k))
            units.append(u)
        self.units = units
        self.guard = sum(1 << (W * i + W - 1) for i in range(n))

    def pack(self, exp: Sequence[int]) -> int:
        m = 0
        for e, u in zip(exp, self.units):
            if e:
                if e > MAX_FIELD:
                    raise OverflowError("exponent too large for the packed monomial layout")
                m += e * u
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (W * i)) & FIELD for i in range(self.n))

    def degree(self, m: int) -> int:
        return (m >> (W * self.n)) & FIELD

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a) & self.guard)


def _to_q(c):
    if isinstance(c, Fraction):
        return _Q(c.numerator, c.denominator)
    if isinstance(c, int):
        return _Q(c)
    raise TypeError(f"Groebner computations need rational coefficients, got {type(c).__name__}")


def _from_q(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(int(c.numerator), int(c.denominator))


class _Context:
    """Variable compression + packing for one computation."""

    def __init__(self, nvars: int, polys: Iterable[Polynomial], order: TermOrder):
        used = set()
        for p in polys:
            if p.nvars != nvars:
                raise RingMismatch(f"ring mismatch: {p.nvars} vs {nvars} variables")
            used |= p.variables()
        self.nvars = nvars
        self.used = sorted(used)
        self.index = {v: k for k, v in enumerate(self.used)}
        rows = []
        for r in order.rows:
            rr = tuple(self.index[v] for v in r if v in self.index)
            if rr and (not rows or rows[-1] != rr):
                rows.append(rr)
        self.packer = Packer(len(self.used), rows)

    def pack_poly(self, p: Polynomial) -> dict:
        pk = self.packer.pack
        idx = self.used
        out = {}
        for e, c in p.terms.items():
            out[pk([e[v] for v in idx])] = _to_q(c)
        return out

    def unpack_terms(self, terms) -> Polynomial:
        n = self.nvars
        used = self.used
        up = self.packer.unpack
        out = []
        for m, c in terms:
            e = [0] * n
            for v, a in zip(used, up(m)):
                e[v] = a
            out.append((tuple(e), _from_q(c)))
        return Polynomial(n, out)


def _monic(terms):
    lc = terms[0][1]
    if lc == 1:
        return terms
    inv = 1 / lc
    return [(m, c * inv) for m, c in terms]


class _Buchberger:
    """Stateful pair queue; one instance per Groebner computation."""

    def __init__(self, packer: Packer, budget: Budget):
        self.P = packer
        self.budget = budget
        self.polys: list[list] = []
        self.lmexp: list[tuple[int, ...]] = []
        self.sugar: list[int] = []
        self.active: list[int] = []
        self.pairs: dict[tuple[int, int], int] = {}
        self.heap: list = []
        self.red_lms: list[int] = []
        self.red_tails: list[list] = []
        self.kept_inputs: list[int] = []
        self._lcm_cache: dict[tuple[int, int], int] = {}

    def _lcm(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        L = self._lcm_cache.get(key)
        if L is None:
            L = self.P.pack([max(a, b) for a, b in zip(self.lmexp[i], self.lmexp[j])])
            self._lcm_cache[key] = L
        return L

    def _coprime(self, i: int, j: int) -> bool:
        return not any(a and b for a, b in zip(self.lmexp[i], self.lmexp[j]))

    def _insert(self, terms: list, sugar: int):
        P = self.P
        k = len(self.polys)
        lm = terms[0][0]
        self.polys.append(terms)
        self.lmexp.append(P.unpack(lm))
        self.sugar.append(sugar)
        guard = P.guard
        # Gebauer-Moeller: which new pairs (i, k) survive
        cand = list(self.active)
        lcms = {i: self._lcm(i, k) for i in cand}
        kept: list[int] = []
        rest = list(cand)
        while rest:
            i = rest.pop(0)
            Li = lcms[i]
            if self._coprime(i, k):
                kept.append(i)
                continue
            dominated = False
            for j in rest:
                if not ((Li - lcms[j]) & guard):
                    dominated = True
                    break
            if not dominated:
                for j in kept:
                    if not ((Li - lcms[j]) & guard):
                        dominated = True
                        break
            if not dominated:
                kept.append(i)
        new_pairs = [i for i in kept if not self._coprime(i, k)]
        # drop old pairs via the chain criterion
        dead = []
        for (i, j), L in self.pairs.items():
            if not ((L - lm) & guard):
                if L != self._lcm(i, k) and L != self._lcm(j, k):
                    dead.append((i, j))
        for key in dead:
            del self.pairs[key]
        deg = P.degree
        for i in new_pairs:
            L = lcms[i]
            s = max(self.sugar[i] + deg(L) - deg(self.polys[i][0][0]), sugar + deg(L) - deg(lm))
            self.pairs[(i, k)] = L
            heapq.heappush(self.heap, (s, 0, L, i, k))
        # retire elements whose leading monomial is now redundant
        self.active = [i for i in self.active if (self.polys[i][0][0] - lm) & guard] + [k]
        self.red_lms = [self.polys[i][0][0] for i in self.active]
        self.red_tails = [self.polys[i][1:] for i in self.active]

    def run(self, inputs: Sequence[dict], input_degrees: Sequence[int]):
        for idx, (f, d) in enumerate(zip(inputs, input_degrees)):
            if f:
                heapq.heappush(self.heap, (d, 1, idx, 0, 0))
        tick = self.budget.check
        guard = self.P.guard
        while self.heap:
            tick()
            item = heapq.heappop(self.heap)
            s, kind = item[0], item[1]
            if kind == 1:
                idx = item[2]
                rem = kernels.reduce_terms(dict(inputs[idx]), self.red_lms, self.red_tails, guard, tick)
                if rem:
                    self.kept_inputs.append(idx)
                    self._insert(_monic(rem), s)
                    if rem[0][0] == 0:
                        break
                continue
            _, _, L, i, j = item
            if self.pairs.pop((i, j), None) is None:
                continue
            gi, gj = self.polys[i], self.polys[j]
            rem = kernels.reduce_spoly(
                gi[1:], L - gi[0][0], gj[1:], L - gj[0][0], self.red_lms, self.red_tails, guard, tick
            )
            if rem:
                self._insert(_monic(rem), s)
                if rem[0][0] == 0:
                    break
        return self.reduced()

    def reduced(self) -> list[list]:
        if any(self.polys[i][0][0] == 0 for i in self.active):
            return [[(0, _Q(1))]]
        out = []
        for i in self.active:
            g = self.polys[i]
            tail = kernels.reduce_terms(dict(g[1:]), self.red_lms, self.red_tails, self.P.guard, self.budget.check)
            out.append([g[0]] + tail)
        return out


def _sort_key(p: Polynomial, order: TermOrder):
    lm = p.leading_monomial(order)
    return (sum(lm), tuple(-a for a in lm))


def groebner_basis(polys: Sequence[Polynomial], order: TermOrder | None = None, budget=None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Output is monic, sorted by (degree, lex on leading monomial).
    """
    polys = [p for p in polys if p]
    if not polys:
        return []
    nvars = polys[0].nvars
    order = order or TermOrder.grevlex(nvars)
    if order.nvars != nvars:
        raise RingMismatch("term order and polynomials live in different rings")
    budget = Budget.coerce(budget)
    ctx = _Context(nvars, polys, order)
    inputs = [ctx.pack_poly(p) for p in polys]
    degrees = [max(ctx.packer.degree(m) for m in f) for f in inputs]
    engine = _Buchberger(ctx.packer, budget)
    basis = engine.run(inputs, degrees)
    out = [ctx.unpack_terms(t) for t in basis]
    out.sort(key=lambda p: _sort_key(p, order))
    return out


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` (made monic internally)."""
    G = [g for g in G if g]
    if not G:
        return f
    order = order or TermOrder.grevlex(f.nvars)
    ctx = _Context(f.nvars, [f, *G], order)
    lms, tails = [], []
    for g in G:
        t = sorted(ctx.pack_poly(g).items(), reverse=True)
        t = _monic(t)
        lms.append(t[0][0])
        tails.append(t[1:])
    rem = kernels.reduce_terms(ctx.pack_poly(f), lms, tails, ctx.packer.guard)
    return ctx.unpack_terms(rem)


def divide_with_quotients(
    f: Polynomial, G: Sequence[Polynomial], order: TermOrder | None = None
) -> tuple[list[Polynomial], Polynomial]:
    """Division with cofactors: ``f = sum(q_i * G[i]) + r``.

    Slow reference path used for certificates; ``G[i]`` need not be monic.
    """
    order = order or TermOrder.grevlex(f.nvars)
    nz = [i for i, g in enumerate(G) if g]
    ctx = _Context(f.nvars, [f, *[G[i] for i in nz]], order)
    guard = ctx.packer.guard
    packed = []
    for i in nz:
        t = sorted(ctx.pack_poly(G[i]).items(), reverse=True)
        packed.append(t)
    quot = [dict() for _ in nz]
    cur = ctx.pack_poly(f)
    rem = []
    while cur:
        m = max(cur)
        c = cur.pop(m)
        for k, t in enumerate(packed):
            lm, lc = t[0]
            q = m - lm
            if not (q & guard):
                fac = c / lc
                quot[k][q] = quot[k].get(q, 0) + fac
                for gm, gc in t[1:]:
                    nm = gm + q
                    v = cur.get(nm, 0) - fac * gc
                    if v:
                        cur[nm] = v
                    else:
                        cur.pop(nm, None)
                break
        else:
            rem.append((m, c))
    quotients = [Polynomial(f.nvars)] * len(G)
    for k, i in enumerate(nz):
        quotients[i] = ctx.unpack_terms([(m, c) for m, c in quot[k].items() if c])
    return quotients, ctx.unpack_terms(rem)


# --------------------------------------------------------------------------
# ideals


class Ideal:
    """Ideal of ``Q[x1..x_nvars]`` given by generators, with a Groebner cache.

    Ideals are treated as values: operations return new ideals and the
    cache only ever holds reduced bases keyed by term order.
    """

    def __init__(self, nvars: int, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.nvars != nvars:
                raise RingMismatch(f"generator in {g.nvars} variables for a ring of {nvars}")
            if g:
                gens.append(g)
        self.nvars = nvars
        self.generators = tuple(gens)
        self._gb: dict[TermOrder, tuple[Polynomial, ...]] = {}

    @classmethod
    def from_basis(cls, nvars: int, basis: Sequence[Polynomial], order: TermOrder) -> "Ideal":
        I = cls(nvars, basis)
        I._gb[order] = tuple(basis)
        return I

    def __repr__(self) -> str:
        return f"Ideal({self.nvars} vars, {len(self.generators)} generators)"

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def grevlex(self) -> TermOrder:
        return TermOrder.grevlex(self.nvars)

    def groebner(self, order: TermOrder | None = None, budget=None) -> tuple[Polynomial, ...]:
        order = order or self.grevlex()
        hit = self._gb.get(order)
        if hit is None:
            hit = tuple(groebner_basis(self.generators, order, budget))
            self._gb[order] = hit
        return hit

    def is_unit(self, budget=None) -> bool:
        gb = self.groebner(budget=budget)
        return len(gb) == 1 and gb[0].total_degree() == 0

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def reduce(self, f: Polynomial, budget=None) -> Polynomial:
        return normal_form(f, self.groebner(budget=budget), self.grevlex())

    def contains(self, f: Polynomial, budget=None) -> bool:
        if f.nvars != self.nvars:
            raise RingMismatch("polynomial and ideal live in different rings")
        if not f:
            return True
        if not self.generators:
            return False
        return not self.reduce(f, budget)

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "Ideal", budget=None) -> bool:
        """``other`` is a subset of ``self``."""
        if other.nvars != self.nvars:
            raise RingMismatch("ideals live in different rings")
        if isinstance(other, LatticeIdeal):
            return other.subset_of(self, budget)
        gens = other.groebner(budget=budget) if other._gb else other.generators
        return all(self.contains(g, budget) for g in gens)

    def issubset(self, other: "Ideal", budget=None) -> bool:
        return other.contains_ideal(self, budget)

    def equals(self, other: "Ideal", budget=None) -> bool:
        if other.nvars != self.nvars:
            raise RingMismatch("ideals live in different rings")
        if isinstance(other, LatticeIdeal):
            return other.equals(self, budget)
        return self.groebner(budget=budget) == other.groebner(budget=budget)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    def to_json(self, budget=None) -> dict:
        return {"vars": self.nvars, "generators": [str(g) for g in self.groebner(budget=budget)]}

    @classmethod
    def from_json(cls, data: dict) -> "Ideal":
        from .poly import parse_polynomial

        n = int(data["vars"])
        return cls(n, [parse_polynomial(s, n) for s in data["generators"]])

    # thin wrappers over the module functions
    def saturate(self, vars: Iterable[int] | None = None, budget=None, **kw) -> "Ideal":
        return saturate(self, vars, budget, **kw)

    def eliminate(self, vars: Iterable[int], budget=None) -> "Ideal":
        return eliminate(self, vars, budget)

    def dimension(self, budget=None) -> int:
        return krull_dimension(self, budget)

    def minimal_generator_count(self, budget=None) -> int:
        return minimal_generator_count(self, budget)

    def classify(self, budget=None) -> dict:
        return classify_ideal(self, budget)


def reduced_groebner(I: Ideal, order: TermOrder | None = None, budget=None) -> tuple[Polynomial, ...]:
    return I.groebner(order, budget)


def ideal_membership_containment(f_or_J, I: Ideal, budget=None) -> bool:
    if isinstance(f_or_J, Ideal):
        return I.contains_ideal(f_or_J, budget)
    return I.contains(f_or_J, budget)


def ideal_containment(I: Ideal, J: Ideal, budget=None) -> dict:
    """Compare ``I`` with ``J``: ``subset`` is ``I <= J``, ``strict`` adds ``I != J``."""
    sub = J.contains_ideal(I, budget)
    sup = I.contains_ideal(J, budget)
    return {"subset": sub, "superset": sup, "equal": sub and sup, "strict": sub and not sup}


def _strip_var(p: Polynomial, v: int) -> Polynomial:
    k = min(e[v] for e in p.terms)
    if not k:
        return p
    out = {}
    for e, c in p.terms.items():
        e = list(e)
        e[v] -= k
        out[tuple(e)] = c
    return Polynomial(p.nvars, out)


def _saturate_var_homogeneous(basis: Sequence[Polynomial], v: int, nvars: int, budget) -> tuple[list[Polynomial], bool]:
    """Bayer's trick: grevlex with ``v`` last, then divide out powers of ``v``."""
    priority = [i for i in range(nvars) if i != v] + [v]
    order = TermOrder.grevlex(nvars, priority)
    gb = groebner_basis(basis, order, budget)
    changed = False
    out = []
    for g in gb:
        h = _strip_var(g, v)
        if h is not g:
            changed = True
        out.append(h)
    return out, changed


def _saturate_var_rabinowitsch(basis: Sequence[Polynomial], v: int, nvars: int, budget) -> list[Polynomial]:
    """``I : x_v^inf`` as ``(I + <y x_v - 1>)`` with ``y`` eliminated."""
    n1 = nvars + 1
    ext = [g.extend(n1) for g in basis]
    e = [0] * n1
    e[nvars] = 1
    e[v] = 1
    ext.append(Polynomial(n1, [(tuple(e), 1), ((0,) * n1, -1)]))
    order = TermOrder.block(n1, [[nvars], list(range(nvars))])
    gb = groebner_basis(ext, order, budget)
    return [Polynomial(nvars, {k[:nvars]: c for k, c in g.terms.items()}) for g in gb if not any(k[nvars] for k in g.terms)]


def saturate(I: Ideal, vars: Iterable[int] | None = None, budget=None, verify_fixed_point: bool = False) -> Ideal:
    """``I : (prod_{i in vars} x_i)^inf`` by per-variable saturation.

    Variables are swept in index order.  One sweep is exact because
    ``(I : a^inf) : b^inf = I : (ab)^inf``; ``verify_fixed_point`` repeats
    sweeps until one changes nothing.  Homogeneous ideals use the
    reverse-lex shortcut, others the auxiliary-variable elimination.
    """
    budget = Budget.coerce(budget)
    n = I.nvars
    targets = sorted(set(range(n) if vars is None else vars))
    if not I.generators:
        return Ideal(n)
    homogeneous = I.is_homogeneous()
    current = list(I.groebner(budget=budget))
    if len(current) == 1 and current[0].total_degree() == 0:
        return Ideal.from_basis(n, current, I.grevlex())
    while True:
        changed_any = False
        for v in targets:
            if not any(v in g.variables() for g in current):
                continue
            if homogeneous:
                current, changed = _saturate_var_homogeneous(current, v, n, budget)
            else:
                new_gb = groebner_basis(_saturate_var_rabinowitsch(current, v, n, budget), I.grevlex(), budget)
                changed = new_gb != current
                current = new_gb
            changed_any |= changed
            if len(current) == 1 and current[0].total_degree() == 0:
                return Ideal.from_basis(n, current, I.grevlex())
        if not verify_fixed_point or not changed_any:
            break
    out = Ideal(n, current)
    if not homogeneous:
        out._gb[I.grevlex()] = tuple(current)
    return out


def eliminate(I: Ideal, vars: Iterable[int], budget=None) -> Ideal:
    """``I`` intersected with the subring without ``vars`` (same ambient ring)."""
    elim = sorted(set(vars))
    if not elim:
        return Ideal(I.nvars, I.generators)
    rest = [i for i in range(I.nvars) if i not in elim]
    order = TermOrder.block(I.nvars, [elim, rest])
    gb = I.groebner(order, budget)
    keep = [g for g in gb if not (g.variables() & set(elim))]
    return Ideal(I.nvars, keep)


def _min_hitting_set(sets: list[frozenset[int]]) -> int:
    """Size of a smallest set meeting every member of ``sets``."""
    sets = sorted(set(sets), key=len)
    minimal = [s for s in sets if not any(t < s for t in sets)]
    best = [len(set().union(*minimal))] if minimal else [0]

    def search(remaining: list[frozenset[int]], chosen: int):
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        # lower bound: greedy disjoint packing
        disjoint, used = 0, set()
        for s in remaining:
            if not (s & used):
                disjoint += 1
                used |= s
        if chosen + disjoint >= best[0]:
            return
        pick = min(remaining, key=len)
        for v in sorted(pick):
            search([s for s in remaining if v not in s], chosen + 1)

    search(minimal, 0)
    return best[0]


def krull_dimension(I: Ideal, budget=None) -> int:
    """Dimension of ``Q[x]/I`` from the initial ideal of the grevlex basis.

    For a lattice ideal this is ``n - rank L``.
    """
    if isinstance(I, LatticeIdeal):
        return I.nvars - I.lattice.rank()
    gb = I.groebner(budget=budget)
    if not gb:
        return I.nvars
    supports = []
    for g in gb:
        lm = g.leading_monomial(I.grevlex())
        s = frozenset(i for i, a in enumerate(lm) if a)
        if not s:
            raise ValueError("the unit ideal has an empty variety")
        supports.append(s)
    return I.nvars - _min_hitting_set(supports)


def minimal_generator_count(I: Ideal, budget=None) -> int:
    """Number of minimal generators of a homogeneous ideal.

    Generators are fed to a degree-by-degree Buchberger run; a generator is
    kept iff it does not reduce to zero modulo everything of lower degree
    plus the earlier kept generators of its own degree.
    """
    gens = list(I.generators)
    if not gens:
        return 0
    if not all(g.is_homogeneous() for g in gens):
        raise NotHomogeneous("minimal generator count needs a homogeneous ideal")
    budget = Budget.coerce(budget)
    order = I.grevlex()
    ctx = _Context(I.nvars, gens, order)
    inputs = [ctx.pack_poly(g) for g in gens]
    degrees = [g.total_degree() for g in gens]
    engine = _Buchberger(ctx.packer, budget)
    basis = engine.run(inputs, degrees)
    if order not in I._gb:
        out = [ctx.unpack_terms(t) for t in basis]
        out.sort(key=lambda p: _sort_key(p, order))
        I._gb[order] = tuple(out)
    return len(engine.kept_inputs)


def lattice_ideal(basis: Sequence[Sequence[int]], nvars: int, budget=None) -> Ideal:
    """``I_L = <x^{u+} - x^{u-} : u in basis> : (prod x)^inf``."""
    gens = []
    for u in basis:
        plus = tuple(max(a, 0) for a in u)
        minus = tuple(max(-a, 0) for a in u)
        if plus != minus:
            gens.append(Polynomial.binomial(plus, minus))
    return saturate(Ideal(nvars, gens), None, budget)


def _binomial_vectors(gens: Iterable[Polynomial]) -> list[list[int]] | None:
    """Exponent differences if every generator is ``x^a - x^b``, else None."""
    out = []
    for g in gens:
        if len(g) != 2:
            return None
        (a, ca), (b, cb) = g.terms.items()
        if ca + cb != 0 or ca not in (1, -1):
            return None
        out.append([x - y for x, y in zip(a, b)])
    return out


def is_saturated_ideal(I: Ideal, budget=None) -> bool:
    """Whether ``I : x_v = I`` for every variable ``x_v``.

    For homogeneous ``I`` with ``x_v`` last in grevlex, ``I`` is
    ``x_v``-saturated iff no element of the reduced basis is divisible by
    ``x_v``.  Other ideals are compared with their saturation.
    """
    if not I.is_homogeneous():
        return saturate(I, None, budget).equals(I, budget)
    n = I.nvars
    used = set()
    for g in I.generators:
        used |= g.variables()
    for v in sorted(used):
        order = TermOrder.grevlex(n, [i for i in range(n) if i != v] + [v])
        for g in I.groebner(order, budget):
            if all(e[v] for e in g.terms):
                return False
    return True


class LatticeIdeal(Ideal):
    """``I_L``: the saturation of the binomials of a lattice basis.

    ``I_L`` is spanned as a vector space by the binomials ``x^a - x^b``
    with ``a - b`` in ``L``, so ``f`` lies in ``I_L`` iff the coefficients of
    ``f`` sum to zero on every coset of ``L``.  Membership, containment,
    equality and dimension are therefore lattice computations; a Groebner
    basis is only computed (by saturation) when one is asked for.
    """

    def __init__(self, lattice: IntegerLattice):
        self.lattice = lattice
        gens = []
        for u in lattice.hermite_basis():
            plus = tuple(max(a, 0) for a in u)
            minus = tuple(max(-a, 0) for a in u)
            gens.append(Polynomial.binomial(plus, minus))
        super().__init__(lattice.ambient, gens)

    def __repr__(self) -> str:
        return f"LatticeIdeal({self.nvars} vars, rank {self.lattice.rank()})"

    def groebner(self, order: TermOrder | None = None, budget=None) -> tuple[Polynomial, ...]:
        order = order or self.grevlex()
        hit = self._gb.get(order)
        if hit is None:
            if not self.generators:
                hit = ()
            else:
                sat = saturate(Ideal(self.nvars, self.generators), None, budget)
                hit = sat.groebner(order, budget)
            self._gb[order] = hit
        return hit

    def is_unit(self, budget=None) -> bool:
        return False

    def contains(self, f: Polynomial, budget=None) -> bool:
        if f.nvars != self.nvars:
            raise RingMismatch("polynomial and ideal live in different rings")
        sums: dict = {}
        L = self.lattice
        for e, c in f.terms.items():
            k = L.reduce(e)
            sums[k] = sums.get(k, 0) + c
        return not any(sums.values())

    def contains_ideal(self, other: Ideal, budget=None) -> bool:
        if other.nvars != self.nvars:
            raise RingMismatch("ideals live in different rings")
        if isinstance(other, LatticeIdeal):
            return self.lattice.contains_lattice(other.lattice)
        return all(self.contains(g) for g in other.generators)

    def subset_of(self, other: Ideal, budget=None) -> bool:
        """``I_L`` inside ``other``: the basis binomials lie in the saturation of ``other``,
        and ``other`` is saturated."""
        if isinstance(other, LatticeIdeal):
            return other.lattice.contains_lattice(self.lattice)
        return all(other.contains(g, budget) for g in self.generators) and is_saturated_ideal(other, budget)

    def equals(self, other: Ideal, budget=None) -> bool:
        if other.nvars != self.nvars:
            raise RingMismatch("ideals live in different rings")
        if isinstance(other, LatticeIdeal):
            return self.lattice.same_span(other.lattice)
        vecs = _binomial_vectors(other.generators)
        if vecs is not None:
            # other is a pure-difference binomial ideal inside I_L; equal iff it
            # spans the same lattice and is already saturated
            if not all(self.contains(g) for g in other.generators):
                return False
            if not IntegerLattice(vecs, self.nvars).same_span(self.lattice):
                return False
            return is_saturated_ideal(other, budget)
        return self.contains_ideal(other) and self.subset_of(other, budget)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def to_json(self, budget=None) -> dict:
        return {
            "vars": self.nvars,
            "lattice_basis": [list(r) for r in self.lattice.hermite_basis()],
            "generators": [str(g) for g in self.generators],
            "note": "generators saturate to the ideal",
        }


def classify_ideal(I: Ideal, budget=None) -> dict:
    """Binomial / pure-difference / toric flags from the reduced grevlex basis."""
    if isinstance(I, LatticeIdeal):
        L = I.lattice
        return {
            "is_binomial": True,
            "is_pure_difference": True,
            "is_toric": L.is_saturated(),
            "lattice": L,
            "is_lattice_ideal": True,
        }
    gb = I.groebner(budget=budget)
    shapes = [classify_polynomial(g) for g in gb]
    is_binomial = all(len(g) <= 2 for g in gb)
    is_pure = is_binomial and all(s["is_pure_difference"] for s in shapes)
    out = {"is_binomial": is_binomial, "is_pure_difference": is_pure, "is_toric": False, "lattice": None}
    if not is_pure:
        return out
    if not gb:
        out["is_toric"] = True
        out["lattice"] = IntegerLattice([], I.nvars)
        return out
    vecs = []
    for g in gb:
        (a, _), (b, _) = g.sorted_terms(I.grevlex())
        vecs.append([x - y for x, y in zip(a, b)])
    L = IntegerLattice(vecs, I.nvars)
    out["lattice"] = L
    basis = L.hermite_basis()
    IL = lattice_ideal(basis, I.nvars, budget)
    out["is_lattice_ideal"] = IL.equals(I, budget)
    out["is_toric"] = out["is_lattice_ideal"] and L.is_saturated()
    return out
