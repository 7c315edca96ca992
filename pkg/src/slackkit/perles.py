"""The Perles polytope: a projectively unique polytope with no rational realization.

Everything here works in the 12 x 34 slack pattern (rows A..H, -F, -G,
-H, -I of the Gale diagram) and in the 12 x 13 submatrix on its first 13
columns, whose variables are ``x1 .. x36`` row-major.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import Budget, BudgetExceeded
from .exactnum import ALPHA1, ALPHA2, QuadExt, format_scalar
from .groebner import Ideal, saturate
from .linalg import ExactMatrix
from .poly import Polynomial, classify_polynomial, evaluate_substitute, parse_polynomial
from .polytope import SlackPattern, gale_facets, match_columns, perles_gale_diagram, printed_pattern
from .slackcore import ScalingAssignment, SymbolicSlackMatrix, is_morally_2_level, minor_generators

__all__ = [
    "PerlesCase",
    "perles_case",
    "perles_subideal",
    "perles_parametric_verify",
    "SUBMATRIX_FIXED",
    "SUBIDEAL_GENERATORS",
]

NVARS_SUB = 36

# variables set to 1 in the 12 x 13 submatrix (1-based); a spanning tree of its graph
SUBMATRIX_FIXED = (1, 4, 5, 6, 7, 8, 9, 10, 13, 15, 16, 17, 18, 21, 22, 26, 27, 28, 29, 30, 31, 32, 33, 35)

SUBIDEAL_GENERATORS = (
    "x36^2 + x36 - 1",
    "x34 - x36 - 1",
    "x25 - x36",
    "x24 - x36",
    "x23 - 1",
    "x20 - x36",
    "x19 - x36",
    "x14 - x36 - 1",
    "x12 - x36",
    "x11 - 1",
    "x3 - 1",
    "x2 - x36 - 1",
)

WITNESS = "(x10*x15*x36)^2 + (x10*x15*x36)*(x9*x16*x35) - (x9*x16*x35)^2"

# the 12 x 13 scaled submatrix, entries in the tokens 0, 1, a, a+1, a+2, 1-a
SUBMATRIX = """
0 0 0 1 a+1 1 0 0 0 0 0 0 0
0 0 0 1 0 0 1 1 1 0 0 0 0
0 0 0 0 0 0 1 0 0 1 1 0 0
0 0 0 0 1 0 0 0 0 0 0 a 1
0 0 0 0 0 0 0 a+1 0 1 0 1 0
1 0 0 0 0 0 0 0 0 0 1 0 a
0 a 0 0 0 0 0 0 1 0 0 0 0
0 0 1 0 0 1 0 0 0 0 0 0 0
a 0 0 a 0 0 0 1 0 0 0 0 0
0 1 0 0 1 0 0 0 0 1 0 0 0
0 0 1 0 0 0 1 0 0 0 0 0 1
0 0 0 0 0 1 0 0 a+1 0 1 a 0
"""

# the completed 12 x 34 parametrised slack matrix, columns in printed order
FULL_MATRIX = """
0 0 0 1 a+1 1 0 0 0 0 0 0 0 1 1 a a+1 a 1 1 a+1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 1 1 1 0 0 0 0 1-a 1 a a 0 0 0 0 a 1-a 1 a+2 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 1 1 0 0 1 1 0 0 1 a 0 0 1 0 0 0 1-a a+1 0 0 0 0 0 0 0
0 0 0 0 1 0 0 0 0 0 0 a 1 0 0 1 1 0 0 1 0 0 1 1 0 0 0 1 1 1 0 0 0 0
0 0 0 0 0 0 0 a+1 0 1 0 1 0 0 0 0 0 0 0 0 0 1 a 0 0 1 0 a+2 1 0 1 a+2 a+1 0
1 0 0 0 0 0 0 0 0 0 1 0 a 0 0 0 0 1-a 0 a 0 0 0 0 0 0 1 0 0 a+1 0 0 0 1
0 a 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1-a 1 0 0 0 0 1 1-a 0 0 1
0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 1-a 0 1 0 0 0 0 a 0 0 0 0 1 1 1 1
a 0 0 a 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 1-a 0 0 0 1 0 0 a 0 0 0 1 1-a 0
0 1 0 0 1 0 0 0 0 1 0 0 0 1 0 0 0 1 1 0 1 0 0 0 0 0 1 1 1-a 0 0 1 0 0
0 0 1 0 0 0 1 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 1 a+1 a+1 0 a 0 a 0 0 0 0 0
0 0 0 0 0 1 0 0 a+1 0 1 a 0 0 1 0 1 0 0 1 0 1 0 0 0 1 0 0 0 a+2 a+1 0 1 a+2
"""

_TOKENS = {"0": (0, 0), "1": (1, 0), "a": (0, 1), "a+1": (1, 1), "a+2": (2, 1), "1-a": (1, -1)}


def witness_polynomial() -> Polynomial:
    """``u^2 + u w - w^2`` with ``u = x10 x15 x36`` and ``w = x9 x16 x35``."""
    u = parse_polynomial("x10*x15*x36", NVARS_SUB)
    w = parse_polynomial("x9*x16*x35", NVARS_SUB)
    return u * u + u * w - w * w


def _table(text: str, alpha: QuadExt) -> ExactMatrix:
    rows = []
    for line in text.strip().splitlines():
        row = []
        for tok in line.split():
            c, k = _TOKENS[tok]
            row.append(QuadExt(c) + alpha * k)
        rows.append(row)
    return ExactMatrix(rows)


@dataclass
class PerlesCase:
    pattern: SlackPattern
    submatrix_columns: tuple[int, ...]
    scaling: ScalingAssignment
    alpha: QuadExt
    witness: Polynomial = field(default_factory=lambda: witness_polynomial())

    @property
    def subpattern(self) -> SlackPattern:
        return self.scaling.pattern

    def factors(self) -> tuple[Polynomial, Polynomial]:
        """The two linear factors of the witness in ``u = x10 x15 x36``, ``w = x9 x16 x35``."""
        u = parse_polynomial("x10*x15*x36", NVARS_SUB)
        w = parse_polynomial("x9*x16*x35", NVARS_SUB)
        return u - w.scale(ALPHA1), u - w.scale(ALPHA2)


def perles_case(alpha: QuadExt = ALPHA1, pattern: SlackPattern | None = None) -> PerlesCase:
    P = pattern or printed_pattern("perles")
    cols = tuple(range(13))
    sub = SlackPattern(P.d, [[r[j] for j in cols] for r in P.support], "perles[1..13]", P.row_labels)
    scaling = ScalingAssignment.from_fixed(sub, [k - 1 for k in SUBMATRIX_FIXED])
    return PerlesCase(P, cols, scaling, alpha)


@dataclass
class SubidealResult:
    ideal: Ideal | None
    equals_listed: bool | None
    memberships: dict[str, bool]
    minors: int
    budget_status: str
    seconds: float

    def to_json(self) -> dict:
        return {
            "generators": [str(g) for g in self.ideal.groebner()] if self.ideal is not None else None,
            "equals_listed": self.equals_listed,
            "memberships": self.memberships,
            "minors": self.minors,
            "budget-status": self.budget_status,
            "seconds": round(self.seconds, 3),
        }


def perles_subideal(case: PerlesCase | None = None, budget=None) -> SubidealResult:
    """Scaled 10 x 10 minor ideal of the 12 x 13 submatrix, saturated by the free variables."""
    case = case or perles_case()
    budget = Budget.coerce(budget)
    S = SymbolicSlackMatrix(case.subpattern, case.scaling.substitution())
    listed = Ideal(NVARS_SUB, [parse_polynomial(s, NVARS_SUB) for s in SUBIDEAL_GENERATORS])
    minors = 0
    try:
        gens = minor_generators(S, case.pattern.d + 2, budget)
        minors = len(gens)
        J = saturate(Ideal(NVARS_SUB, gens), S.free_vars, budget)
        member = {s: J.contains(parse_polynomial(s, NVARS_SUB), budget) for s in SUBIDEAL_GENERATORS}
        equal = J.equals(listed, budget)
    except BudgetExceeded:
        return SubidealResult(None, None, {}, minors, "exceeded", budget.elapsed())
    return SubidealResult(J, equal, member, minors, "ok", budget.elapsed())


def _assignment(M: ExactMatrix, pattern: SlackPattern) -> dict[int, object]:
    return {k: M[i, j] for k, (i, j) in enumerate(pattern.cells)}


def _is_zero(x) -> bool:
    return not x


def complete_columns(
    sub: ExactMatrix,
    pattern: SlackPattern,
    first: int,
    alpha: QuadExt | None = None,
    normalize: str = "simplest",
) -> tuple[list[list], list[int]]:
    """Extend ``sub`` column by column to the full pattern inside its column span.

    For every column ``j >= first`` the vectors of the span with the
    pattern's zeros in column ``j`` must form a line; a line of dimension
    other than one raises ``ValueError``.  One star of the column is then
    scaled to 1.  ``normalize="first-star"`` scales the first star;
    ``"simplest"`` picks the star giving the most unit entries, then the
    smallest :func:`entry_height` total, then the first such star.
    """
    if normalize not in ("simplest", "first-star"):
        raise ValueError(f"unknown normalization {normalize!r}")
    cols = [list(sub.column(j)) for j in range(sub.cols)]
    dims = []
    for j in range(first, pattern.ncols):
        zeros = [i for i in range(pattern.nrows) if not pattern.support[i][j]]
        stars = [i for i in range(pattern.nrows) if pattern.support[i][j]]
        Z = sub.submatrix(zeros, range(sub.cols))
        basis = Z.nullspace()
        # the span of sub applied to the kernel of the zero rows
        vecs = ExactMatrix([sub.apply(b) for b in basis]) if basis else None
        dim = vecs.rank() if vecs is not None else 0
        dims.append(dim)
        if dim != 1:
            raise ValueError(f"column {j + 1}: completion space has dimension {dim}, expected 1")
        v = next(sub.apply(b) for b in basis if any(sub.apply(b)))
        if any(_is_zero(v[i]) for i in stars):
            raise ValueError(f"column {j + 1}: completed column vanishes at a star")
        choices = [[x / v[k] for x in v] for k in (stars if normalize == "simplest" else stars[:1])]
        v = min(
            choices,
            key=lambda c: (-sum(1 for i in stars if c[i] == 1), sum(entry_height(c[i], alpha) for i in stars)),
        )
        cols.append(v)
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(pattern.nrows)]
    return rows, dims


def entry_height(x, alpha: QuadExt | None = None):
    """``|A| + |B|`` for ``x = A + B*alpha`` (or ``x = A + B*sqrt5`` without ``alpha``)."""
    x = x if isinstance(x, QuadExt) else QuadExt(x)
    if alpha is None or not alpha.b:
        return abs(x.a) + abs(x.b)
    # sqrt5 = (alpha - alpha.a) / alpha.b
    B = x.b / alpha.b
    A = x.a - B * alpha.a
    return abs(A) + abs(B)


def _columns_proportional(a, b) -> bool:
    k = next((i for i, x in enumerate(a) if x), None)
    if k is None or not b[k]:
        return not any(a) and not any(b)
    r = b[k] / a[k]
    return all(y == x * r for x, y in zip(a, b))


def perles_parametric_verify(case: PerlesCase | None = None, normalize: str = "simplest") -> dict:
    """Check the parametrised matrices for one root of ``x^2 + x - 1``.

    ``normalize`` selects the column scaling of the completion (see
    :func:`complete_columns`); the up-to-scale comparison is independent
    of it.
    """
    case = case or perles_case()
    a = case.alpha
    P, sub_pattern = case.pattern, case.subpattern
    report: dict = {"alpha": format_scalar(a)}
    # (a) submatrix support, and the listed generators vanish on it
    M = _table(SUBMATRIX, a)
    report["submatrix_support_ok"] = M.support() == sub_pattern.support
    values = _assignment(M, sub_pattern)
    report["submatrix_scaling_ok"] = all(values[k - 1] == 1 for k in SUBMATRIX_FIXED)
    report["submatrix_generators_vanish"] = all(
        not evaluate_substitute(parse_polynomial(s, NVARS_SUB), values) for s in SUBIDEAL_GENERATORS
    )
    report["submatrix_rank"] = M.rank()
    # (b) completion
    try:
        rows, dims = complete_columns(M, P, len(case.submatrix_columns), a, normalize)
    except ValueError as exc:
        report["completion_unique"] = False
        report["completion_error"] = str(exc)
        return report
    report["completion_unique"] = all(d == 1 for d in dims)
    full = ExactMatrix(rows)
    printed = _table(FULL_MATRIX, a)
    report["printed_entrywise"] = full == printed
    report["printed_columns_up_to_scale"] = all(
        _columns_proportional(full.column(j), printed.column(j)) for j in range(P.ncols)
    )
    report["scaled_column_mismatches"] = [
        j + 1 for j in range(P.ncols) if full.column(j) != printed.column(j)
    ]
    # (c) slack-matrix conditions
    from .polytope import validate_slack_matrix

    # points of the slack variety are slack matrices only up to row scaling:
    # dividing each row by its row sum puts the all-ones vector in the span
    for label, mat in (("completed", full), ("printed", printed)):
        sums = [sum(r, QuadExt(0)) for r in mat.entries]
        report[f"{label}_rank"] = mat.rank()
        report[f"{label}_nonnegative"] = validate_slack_matrix(mat, P)["nonnegative"]
        if all(sums):
            scaled = ExactMatrix([[x / s for x in r] for r, s in zip(mat.entries, sums)])
            v = validate_slack_matrix(scaled, P)
            report[f"{label}_valid"] = v["valid"]
            report[f"{label}_ones_in_column_span"] = v["ones_in_column_span"]
        else:
            report[f"{label}_valid"] = False
            report[f"{label}_ones_in_column_span"] = False
    # (d) witness and its factors
    f = case.witness
    report["witness_value"] = format_scalar(evaluate_substitute(f, values))
    f1, f2 = case.factors()
    v1, v2 = evaluate_substitute(f1, values), evaluate_substitute(f2, values)
    report["factor_alpha1_value"] = format_scalar(v1)
    report["factor_alpha2_value"] = format_scalar(v2)
    report["factor_alpha1_vanishes"] = not v1
    report["factor_alpha2_vanishes"] = not v2
    report["witness_factorization_ok"] = f1 * f2 == f
    # (e) homogeneity under row and column scaling
    report["witness_row_column_homogeneous"] = classify_polynomial(f, sub_pattern.cell_map())[
        "is_row_column_homogeneous"
    ]
    report["morally_2_level"] = is_morally_2_level(P)
    report["support_rank"] = P.support_rank()
    return report


def gale_check() -> dict:
    """Derive the pattern from the Gale diagram and compare with the printed support."""
    G = perles_gale_diagram()
    derived = gale_facets(G, "perles-gale")
    printed = printed_pattern("perles")
    perm = match_columns(derived, printed.support)
    return {
        "circuits": derived.ncols,
        "dimension": derived.d,
        "matches_printed": perm is not None,
        "column_permutation": [p + 1 for p in perm] if perm else None,
    }


def non_primeness_certificate(budget=None) -> dict:
    """Witness that the vanishing ideal of the slack variety is not prime.

    ``f`` vanishes at both parametrised matrices, while each linear factor
    of ``f`` is nonzero at one of them.
    """
    r1 = perles_parametric_verify(perles_case(ALPHA1))
    r2 = perles_parametric_verify(perles_case(ALPHA2))
    ok = (
        r1["witness_value"] == "0"
        and r2["witness_value"] == "0"
        and r1["factor_alpha1_vanishes"]
        and not r1["factor_alpha2_vanishes"]
        and r2["factor_alpha2_vanishes"]
        and not r2["factor_alpha1_vanishes"]
        and r1["witness_row_column_homogeneous"]
    )
    return {
        "claim": "slack ideal of the Perles polytope is not prime",
        "witness": WITNESS,
        "factors": [str(x) for x in perles_case().factors()],
        "alpha1": r1,
        "alpha2": r2,
        "verified": ok,
    }


def perles_verify(budget=None, with_subideal: bool = True) -> dict:
    budget = Budget.coerce(budget)
    out = {"gale": gale_check(), "certificate": non_primeness_certificate()}
    if with_subideal:
        out["subideal"] = perles_subideal(perles_case(), budget).to_json()
    out["seconds"] = round(budget.elapsed(), 3)
    return out


__all__ += ["gale_check", "non_primeness_certificate", "perles_verify", "complete_columns", "entry_height"]
