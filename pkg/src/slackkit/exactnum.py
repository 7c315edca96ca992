"""Exact scalars over Q and Q(sqrt 5), and integer lattice normal forms.

Rationals are :class:`fractions.Fraction` (already canonical: reduced, positive
denominator).  :class:`QuadExt` adds the golden-ratio field, which is the only
irrational coefficient field this package ever needs.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "QuadExt",
    "Scalar",
    "ALPHA1",
    "ALPHA2",
    "SQRT5",
    "to_scalar",
    "parse_scalar",
    "format_scalar",
    "sign",
    "field_op",
    "field_ops",
    "IntegerLattice",
    "integer_kernel",
    "xgcd",
]

Rational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


@total_ordering
class QuadExt:
    """Immutable element ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    Ordering and :meth:`sign` use the real embedding with ``sqrt(5) > 0``.
    Arithmetic with ``int`` and ``Fraction`` operands is supported; results
    always stay :class:`QuadExt` (use :func:`to_scalar` to demote).
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @staticmethod
    def _coerce(other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0)
        return None

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = "sqrt5" if self.b == 1 else ("-sqrt5" if self.b == -1 else f"{self.b}*sqrt5")
        if self.a == 0:
            return root
        if root.startswith("-"):
            return f"{self.a} - {root[1:]}"
        return f"{self.a} + {root}"

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b)

    def __pos__(self) -> "QuadExt":
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``; zero only for the zero element."""
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        return QuadExt(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "QuadExt":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = QuadExt(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        """Sign of the real number ``a + b*sqrt5`` without floating point."""
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger of a^2 and 5 b^2 wins
        return sa if a * a > 5 * b * b else sb

    def is_rational(self) -> bool:
        return self.b == 0

    def to_json(self):
        return {"a": format_scalar(self.a), "b": format_scalar(self.b)}


Scalar = Union[Fraction, QuadExt]

SQRT5 = QuadExt(0, 1)
ALPHA1 = QuadExt(Fraction(-1, 2), Fraction(1, 2))  # (-1 + sqrt5) / 2
ALPHA2 = QuadExt(Fraction(-1, 2), Fraction(-1, 2))  # (-1 - sqrt5) / 2


def to_scalar(x) -> Scalar:
    """Canonicalise ``x``: QuadExt with zero irrational part becomes Fraction."""
    if isinstance(x, QuadExt):
        return x.a if x.b == 0 else x
    if isinstance(x, dict):
        return to_scalar(QuadExt(_frac(str(x.get("a", "0"))), _frac(str(x.get("b", "0")))))
    if isinstance(x, str):
        return parse_scalar(x)
    return _frac(x)


_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_scalar(text) -> Scalar:
    """Parse ``"p/q"``, ``"p"`` or a mapping ``{"a": "p/q", "b": "p/q"}``."""
    if isinstance(text, dict):
        return to_scalar(text)
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed scalar: {text!r}")
    num, _, den = text.replace(" ", "").partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in scalar: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_scalar(x):
    x = to_scalar(x)
    if isinstance(x, QuadExt):
        return x.to_json()
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sign(x) -> int:
    x = to_scalar(x)
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def field_op(x, y, op: str):
    """Dispatch a named field operation on exact scalars.

    ``op`` is one of add, sub, mul, div, neg, sign, compare.  ``neg`` and
    ``sign`` ignore ``y``.  ``compare`` returns -1, 0 or 1.
    """
    x = to_scalar(x)
    if op == "neg":
        return to_scalar(-x)
    if op == "sign":
        return sign(x)
    y = to_scalar(y)
    if op == "add":
        return to_scalar(x + y)
    if op == "sub":
        return to_scalar(x - y)
    if op == "mul":
        return to_scalar(x * y)
    if op == "div":
        if not y:
            raise ZeroDivisionError("division by zero")
        return to_scalar(x / y)
    if op == "compare":
        return sign(x - y)
    raise ValueError(f"unknown field operation {op!r}")


# --------------------------------------------------------------------------
# integer lattices


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _hermite(rows: Sequence[Sequence[int]], ncols: int):
    """Row-style Hermite normal form.  Returns ``(H, U)`` with ``U*A = H``."""
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    U = _identity(m)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        for i in range(r + 1, m):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = xgcd(a, b)
            p, q = a // g, b // g
            Ar, Ai = A[r], A[i]
            A[r] = [x * u + y * v for u, v in zip(Ar, Ai)]
            A[i] = [p * v - q * u for u, v in zip(Ar, Ai)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * u + y * v for u, v in zip(Ur, Ui)]
            U[i] = [p * v - q * u for u, v in zip(Ur, Ui)]
        piv = A[r][c]
        if piv == 0:
            continue
        if piv < 0:
            A[r] = [-u for u in A[r]]
            U[r] = [-u for u in U[r]]
            piv = -piv
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
                U[i] = [u - q * v for u, v in zip(U[i], U[r])]
        r += 1
    return A, U


def _smith(rows: Sequence[Sequence[int]], ncols: int):
    """Smith normal form ``(D, U, V)`` with ``U*A*V = D``; D diagonal, d_i | d_{i+1}."""
    A = [list(map(int, r)) for r in rows]
    m, n = len(A), ncols
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in A:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def row_comb(i, j, x, y, p, q):
        # (R_i, R_j) <- (x R_i + y R_j, p R_j - q R_i) on A and U
        for M in (A, U):
            Ri, Rj = M[i], M[j]
            M[i] = [x * u + y * v for u, v in zip(Ri, Rj)]
            M[j] = [p * v - q * u for u, v in zip(Ri, Rj)]

    def col_comb(i, j, x, y, p, q):
        for M in (A, V):
            for R in M:
                u, v = R[i], R[j]
                R[i] = x * u + y * v
                R[j] = p * v - q * u

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    if A[i][t] % A[t][t] == 0:
                        # plain elimination keeps the pivot row, so cleared columns stay clear
                        row_comb(t, i, 1, 0, 1, A[i][t] // A[t][t])
                    else:
                        g, x, y = xgcd(A[t][t], A[i][t])
                        row_comb(t, i, x, y, A[t][t] // g, A[i][t] // g)
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    if A[t][j] % A[t][t] == 0:
                        col_comb(t, j, 1, 0, 1, A[t][j] // A[t][t])
                    else:
                        g, x, y = xgcd(A[t][t], A[t][j])
                        col_comb(t, j, x, y, A[t][t] // g, A[t][j] // g)
                        changed = True
            if any(A[i][t] for i in range(t + 1, m)):
                changed = True
            if not changed:
                # divisibility: fold any non-multiple into the pivot row
                piv = A[t][t]
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv),
                    None,
                )
                if bad is None:
                    break
                i = bad[0]
                for M in (A, U):
                    M[t] = [u + v for u, v in zip(M[t], M[i])]
        if A[t][t] < 0:
            A[t] = [-u for u in A[t]]
            U[t] = [-u for u in U[t]]
        t += 1
    return A, U, V


field_ops = field_op


def integer_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """A basis of ``ker_Z(A) = {u in Z^n : A u = 0}`` (returned as rows)."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    if not A:
        return _identity(n)
    At = [[A[i][j] for i in range(len(A))] for j in range(n)]
    H, U = _hermite(At, len(A))
    return [U[i] for i in range(n) if not any(H[i])]


class IntegerLattice:
    """Sublattice of Z^n spanned by the rows of an integer matrix."""

    def __init__(self, generators: Iterable[Sequence[int]], ambient: int | None = None):
        self.generators = [tuple(int(v) for v in row) for row in generators]
        if ambient is None:
            if not self.generators:
                raise ValueError("ambient dimension required for an empty lattice")
            ambient = len(self.generators[0])
        if any(len(r) != ambient for r in self.generators):
            raise ValueError("ragged lattice generator matrix")
        self.ambient = ambient

    def __repr__(self) -> str:
        return f"IntegerLattice({len(self.generators)} generators in Z^{self.ambient})"

    def hermite(self):
        """``(H, U)`` with ``U * L = H``; zero rows of H are dropped from the returned basis view."""
        return _hermite(self.generators, self.ambient)

    def hermite_basis(self) -> list[tuple[int, ...]]:
        H, _ = self.hermite()
        return [tuple(r) for r in H if any(r)]

    def smith(self):
        return _smith(self.generators, self.ambient)

    def invariant_factors(self) -> list[int]:
        D, _, _ = self.smith()
        return [D[i][i] for i in range(min(len(D), self.ambient)) if D[i][i]]

    def rank(self) -> int:
        return len(self.hermite_basis())

    def is_saturated(self) -> bool:
        """True iff Z^n / L is torsion-free."""
        return all(d == 1 for d in self.invariant_factors())

    def saturation(self) -> "IntegerLattice":
        """``(L tensor Q) intersect Z^n``, computed as a double integer kernel."""
        if not self.generators:
            return IntegerLattice([], self.ambient)
        perp = integer_kernel(self.generators, self.ambient)
        if not perp:
            return IntegerLattice(_identity(self.ambient), self.ambient)
        return IntegerLattice(integer_kernel(perp, self.ambient), self.ambient)

    def same_span(self, other: "IntegerLattice") -> bool:
        return self.hermite_basis() == other.hermite_basis()

    def _pivots(self):
        basis = getattr(self, "_hb", None)
        if basis is None:
            basis = [(next(c for c, x in enumerate(r) if x), r) for r in self.hermite_basis()]
            self._hb = basis
        return basis

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of ``vec + L`` (pivot entries in ``[0, pivot)``)."""
        a = list(vec)
        for c, r in self._pivots():
            q = a[c] // r[c]
            if q:
                a = [x - q * y for x, y in zip(a, r)]
        return tuple(a)

    def coordinates(self, vec: Sequence[int]) -> list[int] | None:
        """Integer coefficients of ``vec`` in the Hermite basis, or None if ``vec`` is not in L."""
        a = list(vec)
        coef = []
        for c, r in self._pivots():
            q, rem = divmod(a[c], r[c])
            if rem:
                return None
            coef.append(q)
            if q:
                a = [x - q * y for x, y in zip(a, r)]
        return coef if not any(a) else None

    def __contains__(self, vec) -> bool:
        return not any(self.reduce(vec))

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        return all(g in self for g in other.generators)

    def dual_witness(self, vec: Sequence[int]) -> list[Fraction] | None:
        """A rational ``y`` with ``y.g`` integral on L but ``y.vec`` not, or None if ``vec`` is in L.

        Read off the Smith form ``U*A*V = D``: with ``c = vec*V`` some
        ``c_i`` is not a multiple of ``d_i`` (or is nonzero past the rank),
        and a rational multiple of ``V e_i`` separates.
        """
        if vec in self:
            return None
        D, _, V = self.smith()
        n = self.ambient
        c = [sum(vec[k] * V[k][i] for k in range(n)) for i in range(n)]
        for i in range(n):
            d = D[i][i] if i < len(D) else 0
            if d == 0 and c[i]:
                # outside the rational span: y is orthogonal to L and y.vec = 1/2
                return [Fraction(V[k][i], 2 * c[i]) for k in range(n)]
            if d and c[i] % d:
                return [Fraction(V[k][i], d) for k in range(n)]
        raise AssertionError("Smith form inconsistent with the Hermite membership test")


def smith_hermite(L: IntegerLattice, form: str = "smith") -> dict:
    """Normal form of ``L`` plus transforms and the saturation flag."""
    if form == "smith":
        D, U, V = L.smith()
        out = {"form": D, "U": U, "V": V}
    elif form == "hermite":
        H, U = L.hermite()
        out = {"form": H, "U": U}
    else:
        raise ValueError(f"unknown normal form {form!r}")
    out["invariant_factors"] = L.invariant_factors()
    out["rank"] = len(out["invariant_factors"])
    out["is_saturated"] = L.is_saturated()
    return out


__all__.append("smith_hermite")
