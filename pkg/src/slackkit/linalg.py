"""Exact dense linear algebra over Q and Q(sqrt 5).

Rank and determinant use fraction-free (Bareiss) elimination with a
sparsity-aware pivot choice; rref, nullspace and column-span membership use
plain Gauss-Jordan, which is exact in either field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import Scalar, format_scalar, to_scalar

__all__ = ["ExactMatrix", "DimensionError", "exact_linear_algebra"]


class DimensionError(ValueError):
    pass


class ExactMatrix:
    """Immutable rectangular matrix of exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Sequence], cols: int | None = None):
        grid = tuple(tuple(to_scalar(x) for x in row) for row in entries)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise DimensionError("ragged matrix")
        self.rows = len(grid)
        self.cols = cols
        self.entries = grid

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_json(cls, data: dict) -> "ExactMatrix":
        m = cls(data["entries"], data.get("cols"))
        if "rows" in data and data["rows"] != m.rows:
            raise DimensionError("row count does not match entries")
        return m

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_scalar(x) for x in row] for row in self.entries],
        }

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.entries == other.entries and self.cols == other.cols

    def __hash__(self) -> int:
        return hash(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([self.column(j) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return ExactMatrix(
            [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols] for r in self.entries],
            other.cols,
        )

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise DimensionError("vector length does not match column count")
        return [to_scalar(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0))) for r in self.entries]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(bool(x)) for x in r) for r in self.entries)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise DimensionError("row counts differ")
        return ExactMatrix([a + b for a, b in zip(self.entries, other.entries)], self.cols + other.cols)

    # -- elimination -------------------------------------------------------

    def _bareiss(self, want_det: bool):
        """Fraction-free elimination; returns ``(rank, det_or_None)``."""
        M = [list(r) for r in self.entries]
        m, n = self.rows, self.cols
        prev = Fraction(1)
        sgn = 1
        rank = 0
        live_rows = list(range(m))
        live_cols = list(range(n))
        for _ in range(min(m, n)):
            # sparse-aware pivot: nonzero entry minimising (row nnz, col nnz)
            best = None
            row_nnz = {i: sum(1 for j in live_cols if M[i][j]) for i in live_rows}
            col_nnz = {j: sum(1 for i in live_rows if M[i][j]) for j in live_cols}
            for i in live_rows:
                if not row_nnz[i]:
                    continue
                for j in live_cols:
                    if M[i][j]:
                        key = ((row_nnz[i] - 1) * (col_nnz[j] - 1), i, j)
                        if best is None or key < best:
                            best = key
            if best is None:
                break
            _, pi, pj = best
            # track permutation parity relative to natural order for det
            ri, cj = live_rows.index(pi), live_cols.index(pj)
            if ri:
                sgn = -sgn if ri % 2 else sgn
            if cj:
                sgn = -sgn if cj % 2 else sgn
            live_rows.pop(ri)
            live_cols.pop(cj)
            p = M[pi][pj]
            for i in live_rows:
                a = M[i][pj]
                Mi, Mp = M[i], M[pi]
                for j in live_cols:
                    v = p * Mi[j]
                    if a and Mp[j]:
                        v = v - a * Mp[j]
                    Mi[j] = to_scalar(v / prev) if v else Fraction(0)
                Mi[pj] = Fraction(0)
            prev = p
            rank += 1
        if not want_det:
            return rank, None
        if rank < m:
            return rank, Fraction(0)
        return rank, to_scalar(sgn * prev)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return self._bareiss(False)[0]

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        if self.rows == 0:
            return Fraction(1)
        return self._bareiss(True)[1]

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        M = [list(r) for r in self.entries]
        m, n = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = next((i for i in range(r, m) if M[i][c]), None)
            if piv is None:
                continue
            M[r], M[piv] = M[piv], M[r]
            inv = 1 / M[r][c]
            M[r] = [to_scalar(x * inv) if x else Fraction(0) for x in M[r]]
            for i in range(m):
                if i != r and M[i][c]:
                    f = M[i][c]
                    M[i] = [to_scalar(x - f * y) if y else x for x, y in zip(M[i], M[r])]
            pivots.append(c)
            r += 1
        return ExactMatrix(M, n), tuple(pivots)

    def nullspace(self) -> list[list[Scalar]]:
        """Basis of ``{v : M v = 0}``."""
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for row, pc in enumerate(pivots):
                v[pc] = to_scalar(-R.entries[row][fc])
            basis.append(v)
        return basis

    def colspan_member(self, v: Sequence) -> tuple[bool, list[Scalar] | None]:
        """Is ``v`` in the column span?  On success also return ``c`` with ``M c = v``."""
        if len(v) != self.rows:
            raise DimensionError("vector length does not match row count")
        aug = self.hstack(ExactMatrix([[x] for x in v], 1))
        R, pivots = aug.rref()
        if self.cols in pivots:
            return False, None
        c = [Fraction(0)] * self.cols
        for row, pc in enumerate(pivots):
            c[pc] = R.entries[row][self.cols]
        return True, c


def exact_linear_algebra(M: ExactMatrix, task: str, v: Sequence | None = None):
    if task == "rank":
        return M.rank()
    if task == "det":
        return M.det()
    if task == "rref":
        return M.rref()
    if task == "nullspace":
        return M.nullspace()
    if task == "colspan_member":
        if v is None:
            raise DimensionError("colspan_member needs a vector")
        return M.colspan_member(v)
    raise ValueError(f"unknown task {task!r}")
