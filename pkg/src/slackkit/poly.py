"""Sparse multivariate polynomials in variables ``x1 .. xt``.

A :class:`Polynomial` is an immutable map from exponent tuples to exact
coefficients.  Term orders are given as a list of "weight rows"; each row is
a set of variables whose exponent sum is compared, rows in priority order.
Grevlex, lex and block (elimination) orders are all of this form, which lets
the Groebner engine pack a monomial together with its sort key into one int.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .exactnum import QuadExt, Scalar, to_scalar

__all__ = [
    "TermOrder",
    "Polynomial",
    "RingMismatch",
    "parse_polynomial",
    "symbolic_determinant",
    "leibniz_determinant",
    "SymbolicMinors",
    "Var",
    "evaluate_substitute",
    "classify_polynomial",
    "poly_arithmetic",
]

Exponent = tuple[int, ...]


class RingMismatch(ValueError):
    pass


class TermOrder:
    """A monomial order defined by weight rows over variable subsets.

    ``rows`` is a sequence of tuples of variable indices (0-based); monomials
    compare lexicographically on the row sums.  The rows must determine the
    exponent vector (the packing code relies on it).
    """

    __slots__ = ("nvars", "kind", "rows", "name")

    def __init__(self, nvars: int, rows: Sequence[Sequence[int]], kind: str, name: str | None = None):
        self.nvars = nvars
        self.rows = tuple(tuple(r) for r in rows)
        self.kind = kind
        self.name = name or kind

    @classmethod
    def grevlex(cls, nvars: int, priority: Sequence[int] | None = None) -> "TermOrder":
        """Graded reverse lex with ``priority[0] > priority[1] > ...`` (default x1 > x2 > ...)."""
        p = list(range(nvars)) if priority is None else list(priority)
        if sorted(p) != list(range(nvars)):
            raise ValueError("priority must be a permutation of the variables")
        rows = [tuple(p)] + [tuple(p[:k]) for k in range(nvars - 1, 0, -1)]
        name = "grevlex" if priority is None or p == list(range(nvars)) else f"grevlex{p}"
        return cls(nvars, rows, "grevlex", name)

    @classmethod
    def lex(cls, nvars: int, priority: Sequence[int] | None = None) -> "TermOrder":
        p = list(range(nvars)) if priority is None else list(priority)
        if sorted(p) != list(range(nvars)):
            raise ValueError("priority must be a permutation of the variables")
        name = "lex" if p == list(range(nvars)) else f"lex{p}"
        return cls(nvars, [(i,) for i in p], "lex", name)

    @classmethod
    def block(cls, nvars: int, blocks: Sequence[Sequence[int]]) -> "TermOrder":
        """Elimination order: earlier blocks dominate; grevlex inside each block."""
        seen = sorted(i for b in blocks for i in b)
        if seen != list(range(nvars)):
            raise ValueError("blocks must partition the variables")
        rows: list[tuple[int, ...]] = []
        for b in blocks:
            b = list(b)
            if not b:
                continue
            rows.append(tuple(b))
            rows.extend(tuple(b[:k]) for k in range(len(b) - 1, 0, -1))
        return cls(nvars, rows, "block", f"block{[list(b) for b in blocks]}")

    @classmethod
    def named(cls, name: str, nvars: int) -> "TermOrder":
        if name == "grevlex":
            return cls.grevlex(nvars)
        if name == "lex":
            return cls.lex(nvars)
        raise ValueError(f"unknown term order {name!r}")

    def key(self, exp: Exponent) -> tuple[int, ...]:
        return tuple(sum(exp[i] for i in r) for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrder) and self.rows == other.rows and self.nvars == other.nvars

    def __hash__(self) -> int:
        return hash((self.nvars, self.rows))

    def __repr__(self) -> str:
        return f"TermOrder({self.name}, nvars={self.nvars})"


def _as_coeff(c):
    c = to_scalar(c)
    return c


class Polynomial:
    """Immutable sparse polynomial with exact coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero
    coefficients (``Fraction``, or ``QuadExt`` after substituting
    golden-ratio values).
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Scalar] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise RingMismatch(f"exponent {e} has wrong length for {nvars} variables")
            c = _as_coeff(c)
            if c:
                prev = clean.get(e)
                if prev is None:
                    clean[e] = c
                else:
                    s = to_scalar(prev + c)
                    if s:
                        clean[e] = s
                    else:
                        del clean[e]
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, index: int) -> "Polynomial":
        """The variable ``x_{index+1}`` (0-based ``index``)."""
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def binomial(cls, plus: Sequence[int], minus: Sequence[int]) -> "Polynomial":
        """``x^plus - x^minus``."""
        return cls(len(plus), [(tuple(plus), 1), (tuple(minus), -1)])

    # -- basic queries ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, QuadExt)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: to_scalar(other)}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        degs = {
            sum(e) if weights is None else sum(w * a for w, a in zip(weights, e)) for e in self.terms
        }
        return len(degs) <= 1

    def variables(self) -> set[int]:
        """0-based indices of variables that occur."""
        out: set[int] = set()
        for e in self.terms:
            out.update(i for i, a in enumerate(e) if a)
        return out

    def sorted_terms(self, order: TermOrder | None = None) -> list[tuple[Exponent, Scalar]]:
        order = order or TermOrder.grevlex(self.nvars)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: TermOrder | None = None) -> tuple[Exponent, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        order = order or TermOrder.grevlex(self.nvars)
        return max(self.terms.items(), key=lambda t: order.key(t[0]))

    def leading_monomial(self, order: TermOrder | None = None) -> Exponent:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: TermOrder | None = None) -> Scalar:
        return self.leading_term(order)[1]

    def coefficients(self) -> list[Scalar]:
        return list(self.terms.values())

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.terms.values())

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise RingMismatch(f"ring mismatch: {self.nvars} vs {other.nvars} variables")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QuadExt)):
            return Polynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                s = to_scalar(v + c)
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.scale(other)
        other = self._lift(other)
        out: dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = to_scalar(c)
        if not c:
            return Polynomial(self.nvars)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def mul_monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(
            self.nvars, {tuple(a + b for a, b in zip(e, exp)): coeff * c for e, c in self.terms.items()}
        )

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def divide_monomial_gcd(self, vars: Iterable[int] | None = None) -> "Polynomial":
        """Strip the largest monomial (in ``vars``) dividing every term."""
        if not self.terms:
            return self
        idx = range(self.nvars) if vars is None else vars
        g = [0] * self.nvars
        for i in idx:
            g[i] = min(e[i] for e in self.terms)
        if not any(g):
            return self
        return Polynomial(self.nvars, {tuple(a - b for a, b in zip(e, g)): c for e, c in self.terms.items()})

    def canonical_sign(self, order: TermOrder | None = None) -> "Polynomial":
        """Scale by +-1 so that the leading coefficient is positive."""
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        neg = lc.sign() < 0 if isinstance(lc, QuadExt) else lc < 0
        return -self if neg else self

    def extend(self, nvars: int, positions: Sequence[int] | None = None) -> "Polynomial":
        """Embed into a ring with ``nvars`` variables, old var i -> positions[i]."""
        pos = list(range(self.nvars)) if positions is None else list(positions)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, a in enumerate(e):
                if a:
                    ne[pos[i]] += a
            out[tuple(ne)] = c
        return Polynomial(nvars, out)

    # -- text form ---------------------------------------------------------

    def to_string(self, order: TermOrder | None = None, names: Callable[[int], str] | None = None) -> str:
        if not self.terms:
            return "0"
        name = names or (lambda i: f"x{i + 1}")
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                name(i) if a == 1 else f"{name(i)}^{a}" for i, a in enumerate(e) if a
            )
            if isinstance(c, QuadExt):
                if c.b == 0:
                    c = c.a
                else:
                    coeff_txt = f"({c})"
                    parts.append(("+", coeff_txt + ("*" + mono if mono else "")))
                    continue
            sgn = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                txt = mono if a == 1 else f"{_frac_text(a)}*{mono}"
            else:
                txt = _frac_text(a)
            parts.append((sgn, txt))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, t in parts[1:]:
            out += f" {s} {t}"
        return out

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_string()!r})"

    def evaluate(self, assignment: Mapping[int, object]):
        return evaluate_substitute(self, assignment)


def _frac_text(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:x(\d+)(?:\^(\d+))?|(\d+(?:/\d+)?))$")


def parse_polynomial(text: str, nvars: int | None = None) -> Polynomial:
    """Parse the text form produced by :meth:`Polynomial.to_string`.

    Accepts ``x1*x4 - x2*x3``, ``x36^2 + x36 - 1``, ``3/2*x1``.  When
    ``nvars`` is omitted the ring is sized by the largest variable index.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Polynomial(nvars or 0)
    raw_terms: list[tuple[int, dict[int, int], Fraction]] = []
    pos = 0
    top = 0
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        pos = m.end()
        sgn = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        coeff = Fraction(sgn)
        exps: dict[int, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in polynomial {text!r}")
            if fm.group(1):
                v = int(fm.group(1))
                if v < 1:
                    raise ValueError(f"variable index must be >= 1 in {text!r}")
                exps[v - 1] = exps.get(v - 1, 0) + int(fm.group(2) or 1)
                top = max(top, v)
            else:
                num, _, den = fm.group(3).partition("/")
                coeff *= Fraction(int(num), int(den) if den else 1)
        raw_terms.append((sgn, exps, coeff))
    if pos != len(s):
        raise ValueError(f"trailing text in polynomial {text!r}")
    n = nvars if nvars is not None else top
    if top > n:
        raise RingMismatch(f"variable x{top} outside ring of {n} variables")
    terms = []
    for _, exps, c in raw_terms:
        e = [0] * n
        for i, a in exps.items():
            e[i] = a
        terms.append((tuple(e), c))
    return Polynomial(n, terms)


# --------------------------------------------------------------------------
# symbolic determinants


class Var:
    """Marker for a variable cell ``x_{index+1}`` in a symbolic matrix."""

    __slots__ = ("index",)

    def __init__(self, index: int):
        self.index = index

    def __repr__(self) -> str:
        return f"Var({self.index})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Var) and other.index == self.index

    def __hash__(self) -> int:
        return hash(("Var", self.index))


_WIDTH = 16


class SymbolicMinors:
    """Determinants of square submatrices of one symbolic matrix.

    Cells are ``0``/``None`` (structural zero), :class:`Var`, or an exact
    constant.  Determinants are computed by Laplace expansion along the
    sparsest remaining row or column; results are memoised on the
    (row set, column set) pair, so enumerating many minors of the same
    matrix shares work.
    """

    def __init__(self, cells: Sequence[Sequence], nvars: int):
        self.nvars = nvars
        self.nrows = len(cells)
        self.ncols = len(cells[0]) if cells else 0
        self.units = [1 << (_WIDTH * i) for i in range(nvars)]
        # each cell as (packed monomial, coefficient), or None for zero
        self.cell: list[list[tuple[int, object] | None]] = []
        for row in cells:
            out = []
            for c in row:
                if c is None or (not isinstance(c, Var) and not to_scalar(c)):
                    out.append(None)
                elif isinstance(c, Var):
                    out.append((self.units[c.index], 1))
                else:
                    c = to_scalar(c)
                    if isinstance(c, Fraction) and c.denominator == 1:
                        c = c.numerator
                    out.append((0, c))
            self.cell.append(out)
        self.row_bits = [sum(1 << j for j, c in enumerate(r) if c is not None) for r in self.cell]
        self.col_bits = [
            sum(1 << i for i in range(self.nrows) if self.cell[i][j] is not None) for j in range(self.ncols)
        ]
        self._memo: dict[tuple[int, int], dict[int, object]] = {}

    def clear(self):
        self._memo.clear()

    def support_ok(self, rows: Sequence[int], cols: Sequence[int]) -> bool:
        """False if the selection has an all-zero row or column."""
        cm = sum(1 << j for j in cols)
        rm = sum(1 << i for i in rows)
        return all(self.row_bits[i] & cm for i in rows) and all(self.col_bits[j] & rm for j in cols)

    def _det(self, rm: int, cm: int) -> dict[int, object]:
        key = (rm, cm)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        rows = [i for i in range(self.nrows) if rm >> i & 1]
        if len(rows) == 1:
            j = cm.bit_length() - 1
            c = self.cell[rows[0]][j]
            res = {} if c is None else {c[0]: c[1]}
            self._memo[key] = res
            return res
        cols = [j for j in range(self.ncols) if cm >> j & 1]
        # pick the sparsest line
        best = None
        for pos, i in enumerate(rows):
            n = bin(self.row_bits[i] & cm).count("1")
            if n == 0:
                self._memo[key] = {}
                return {}
            if best is None or n < best[0]:
                best = (n, 0, pos)
        for pos, j in enumerate(cols):
            n = bin(self.col_bits[j] & rm).count("1")
            if n == 0:
                self._memo[key] = {}
                return {}
            if n < best[0]:
                best = (n, 1, pos)
        _, is_col, pos = best
        res: dict[int, object] = {}
        if not is_col:
            i = rows[pos]
            for cpos, j in enumerate(cols):
                c = self.cell[i][j]
                if c is None:
                    continue
                sub = self._det(rm & ~(1 << i), cm & ~(1 << j))
                if sub:
                    _accumulate(res, sub, c, -1 if (pos + cpos) & 1 else 1)
        else:
            j = cols[pos]
            for rpos, i in enumerate(rows):
                c = self.cell[i][j]
                if c is None:
                    continue
                sub = self._det(rm & ~(1 << i), cm & ~(1 << j))
                if sub:
                    _accumulate(res, sub, c, -1 if (pos + rpos) & 1 else 1)
        self._memo[key] = res
        return res

    def packed_minor(self, rows: Sequence[int], cols: Sequence[int]) -> dict[int, object]:
        if len(rows) != len(cols):
            raise ValueError("minor needs as many rows as columns")
        if not rows:
            return {0: 1}
        return self._det(sum(1 << i for i in rows), sum(1 << j for j in cols))

    def unpack(self, packed: Mapping[int, object]) -> Polynomial:
        mask = (1 << _WIDTH) - 1
        n = self.nvars
        terms = []
        for m, c in packed.items():
            terms.append((tuple((m >> (_WIDTH * i)) & mask for i in range(n)), c))
        return Polynomial(n, terms)

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
        return self.unpack(self.packed_minor(rows, cols))

    def iter_minor_supports(self, size: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """All (rows, cols) selections of ``size`` with no structurally zero line."""
        for rows in combinations(range(self.nrows), size):
            rm = sum(1 << i for i in rows)
            cols_ok = [j for j in range(self.ncols) if self.col_bits[j] & rm]
            if len(cols_ok) < size:
                continue
            for cols in combinations(cols_ok, size):
                cm = sum(1 << j for j in cols)
                if all(self.row_bits[i] & cm for i in rows):
                    yield rows, cols


def _accumulate(res: dict, sub: Mapping[int, object], cell: tuple[int, object], sgn: int):
    mono, coef = cell
    f = coef if sgn > 0 else -coef
    for m, c in sub.items():
        k = m + mono
        v = res.get(k)
        if v is None:
            res[k] = f * c
        else:
            v = v + f * c
            if v:
                res[k] = v
            else:
                del res[k]


def symbolic_determinant(cells: Sequence[Sequence], nvars: int | None = None) -> Polynomial:
    """Exact determinant of a square symbolic matrix (see :class:`SymbolicMinors`)."""
    n = len(cells)
    if any(len(r) != n for r in cells):
        raise ValueError("symbolic determinant of a non-square matrix")
    if nvars is None:
        nvars = 1 + max((c.index for r in cells for c in r if isinstance(c, Var)), default=-1)
    sm = SymbolicMinors(cells, nvars)
    return sm.minor(range(n), range(n))


def leibniz_determinant(cells: Sequence[Sequence], nvars: int) -> Polynomial:
    """Permutation-sum determinant; slow, used as an independent check."""
    from itertools import permutations

    n = len(cells)

    def as_poly(c) -> Polynomial:
        if c is None:
            return Polynomial(nvars)
        if isinstance(c, Var):
            return Polynomial.var(nvars, c.index)
        return Polynomial.constant(nvars, c)

    total = Polynomial(nvars)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Polynomial.constant(nvars, -1 if inv % 2 else 1)
        for i, j in enumerate(perm):
            term = term * as_poly(cells[i][j])
            if not term:
                break
        total = total + term
    return total


# --------------------------------------------------------------------------
# evaluation and classification


def evaluate_substitute(f: Polynomial, assignment: Mapping[int, object]):
    """Substitute ``x_{i+1} -> assignment[i]`` (0-based keys).

    A full assignment returns an exact scalar; a partial one returns a
    polynomial in the remaining variables (same ambient ring).
    """
    vals = {i: to_scalar(v) for i, v in assignment.items()}
    full = all(i in vals for i in f.variables())
    if full:
        total = Fraction(0)
        for e, c in f.terms.items():
            t = c
            for i, a in enumerate(e):
                if a:
                    t = t * vals[i] ** a
            total = total + t
        return to_scalar(total)
    out: dict[Exponent, object] = {}
    for e, c in f.terms.items():
        t = c
        ne = list(e)
        for i, a in enumerate(e):
            if a and i in vals:
                t = t * vals[i] ** a
                ne[i] = 0
        key = tuple(ne)
        out[key] = to_scalar(out[key] + t) if key in out else to_scalar(t)
    return Polynomial(f.nvars, out)


def classify_polynomial(f: Polynomial, pattern: Mapping[int, tuple[int, int]] | None = None) -> dict:
    """Shape flags for ``f``.

    ``pattern`` maps each 0-based variable to its (row, column) cell; when
    given, row/column homogeneity is also decided.
    """
    coeffs = list(f.terms.values())
    out = {
        "is_monomial": len(coeffs) == 1,
        "is_binomial": len(coeffs) == 2,
        "is_pure_difference": len(coeffs) == 2 and to_scalar(coeffs[0] + coeffs[1]) == 0,
    }
    if pattern is not None:
        used = f.variables()
        missing = sorted(i for i in used if i not in pattern)
        if missing:
            raise KeyError(f"pattern does not place variables {[f'x{i + 1}' for i in missing]}")
        rows: dict[int, list[int]] = {}
        cols: dict[int, list[int]] = {}
        for v, (r, c) in pattern.items():
            rows.setdefault(r, []).append(v)
            cols.setdefault(c, []).append(v)
        ok = True
        for group in list(rows.values()) + list(cols.values()):
            degs = {sum(e[v] for v in group if v < f.nvars) for e in f.terms}
            if len(degs) > 1:
                ok = False
                break
        out["is_row_column_homogeneous"] = ok
    return out


def poly_arithmetic(f: Polynomial, g, op: str) -> Polynomial:
    """``add``, ``sub`` and ``mul`` take a polynomial ``g``; ``scale`` takes a scalar."""
    if op == "scale":
        return f.scale(g)
    if not isinstance(g, Polynomial):
        raise TypeError("second operand must be a Polynomial")
    if g.nvars != f.nvars:
        raise RingMismatch(f"{f.nvars} vs {g.nvars} variables")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")
