"""Command-line front end.

Exit status: 0 computed / claim holds, 1 claim false, 2 budget exceeded,
3 input error.  JSON output is deterministic (sorted keys, canonical
generator order, no timings unless ``--timings``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .budget import Budget, BudgetExceeded
from .exactnum import format_scalar
from .groebner import Ideal, LatticeIdeal, classify_ideal, ideal_containment, krull_dimension
from .kernels import IMPLEMENTATION
from .poly import TermOrder
from .polytope import (
    GaleDiagram,
    PolytopeError,
    SlackPattern,
    VRep,
    catalog_names,
    construct_catalog,
    facet_enumeration,
    gale_facets,
    pattern_of,
    perles_gale_diagram,
    printed_pattern,
    slack_matrix,
)
from .slackcore import (
    SymbolicSlackMatrix,
    certify_projective_uniqueness,
    is_morally_2_level,
    minor_generators,
    slack_ideal,
    toric_ideal_TP,
    verify_certificate,
)

EXIT_OK, EXIT_FALSE, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


class InputError(ValueError):
    """Bad input: unreadable file, malformed data or unknown catalog name."""


# --------------------------------------------------------------------------
# inputs


def _json_path_error(path: str, exc: Exception) -> InputError:
    return InputError(f"{path}: {exc}")


def _load_json_file(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None


def _looks_like_json(path: Path) -> bool:
    try:
        with path.open() as fh:
            return fh.read(256).lstrip().startswith(("{", "["))
    except (OSError, UnicodeDecodeError):
        return False


def _pattern_from_text(path: Path) -> SlackPattern:
    """Star/zero rows preceded by a ``d <int>`` line; ``#`` starts a comment."""
    d = None
    rows = []
    width = None
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if d is None:
            head = line.split()
            if len(head) != 2 or head[0] != "d" or not head[1].isdigit():
                raise InputError(f"{path}:{lineno}: expected 'd <dimension>' before the pattern rows")
            d = int(head[1])
            continue
        toks = line.split()
        for col, t in enumerate(toks, 1):
            if t not in ("*", "0", "1"):
                raise InputError(f"{path}:{lineno}:{col}: expected '*', '1' or '0', got {t!r}")
        if width is None:
            width = len(toks)
        elif len(toks) != width:
            raise InputError(f"{path}:{lineno}: ragged pattern row ({len(toks)} entries, expected {width})")
        rows.append([0 if t == "0" else 1 for t in toks])
    if d is None or not rows:
        raise InputError(f"{path}: no pattern rows")
    try:
        return SlackPattern(d, rows, path.stem)
    except PolytopeError as exc:
        raise InputError(f"{path}: {exc}") from None


def _object_from_json(data, path: str):
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    kind = data.get("type")
    if kind is None:
        kind = "vrep" if "vertices" in data else "pattern" if "support" in data else "gale" if "vectors" in data else None
    name = data.get("name", Path(path).stem)
    try:
        if kind == "vrep":
            return VRep.from_json(data, name)
        if kind == "pattern":
            sup = data["support"]
            if not isinstance(sup, list) or not all(isinstance(r, list) for r in sup):
                raise InputError(f"{path}: 'support' must be a list of rows")
            widths = {len(r) for r in sup}
            if len(widths) > 1:
                bad = next(i for i, r in enumerate(sup) if len(r) != len(sup[0]))
                raise InputError(f"{path}: ragged support matrix at row {bad + 1}")
            return SlackPattern.from_json(data, name)
        if kind == "gale":
            return GaleDiagram.from_json(data)
    except InputError:
        raise
    except (KeyError, TypeError) as exc:
        raise _json_path_error(path, f"missing or mistyped field {exc}") from None
    except (ValueError, PolytopeError) as exc:
        raise _json_path_error(path, exc) from None
    raise InputError(f"{path}: cannot tell whether this is a polytope, a pattern or a Gale diagram")


def parse_inputs(target: str):
    """A catalog name or a file: VRep / SlackPattern / GaleDiagram JSON, or a star-pattern text file."""
    p = Path(target)
    if p.exists():
        if p.suffix == ".json" or _looks_like_json(p):
            return _object_from_json(_load_json_file(p), str(p))
        return _pattern_from_text(p)
    try:
        return construct_catalog(target)
    except PolytopeError as exc:
        raise InputError(str(exc)) from None


def _pattern(obj, column_order: str, target: str) -> SlackPattern:
    if isinstance(obj, GaleDiagram):
        P = gale_facets(obj, target)
    elif isinstance(obj, VRep):
        P = None
        if column_order == "paper":
            try:
                P = printed_pattern(target)
            except KeyError:
                pass
        if P is None:
            try:
                P = pattern_of(obj, name=obj.name or target)
            except PolytopeError as exc:
                raise InputError(str(exc)) from None
    else:
        P = obj
    return P.canonical() if column_order == "canonical" else P


# --------------------------------------------------------------------------
# reports


def _order(args, n: int) -> TermOrder:
    return TermOrder.lex(n) if args.order == "lex" else TermOrder.grevlex(n)


def _ideal_json(I: Ideal, order: TermOrder | None, budget) -> dict:
    if isinstance(I, LatticeIdeal):
        # a full basis of a large lattice ideal is often much bigger than its lattice
        return I.to_json()
    return {"vars": I.nvars, "generators": [str(g) for g in I.groebner(order, budget)], "order": order.kind}


def _pattern_json(P: SlackPattern) -> dict:
    out = P.to_json()
    out.update({"rows": P.nrows, "cols": P.ncols, "vars": P.nvars})
    if P.name:
        out["name"] = P.name
    return out


def cmd_catalog(args) -> tuple[int, dict]:
    if args.action == "list":
        return EXIT_OK, {"catalog": catalog_names()}
    if not args.target:
        raise InputError("catalog show needs a name")
    obj = parse_inputs(args.target)
    out: dict = {"name": args.target}
    if isinstance(obj, VRep):
        out["vrep"] = obj.to_json()
    out["pattern"] = _pattern_json(_pattern(obj, args.column_order, args.target))
    return EXIT_OK, out


def cmd_slack(args, budget) -> tuple[int, dict]:
    obj = parse_inputs(args.target)
    P = _pattern(obj, args.column_order, args.target)
    out: dict = {"pattern": _pattern_json(P)}
    if args.action == "matrix":
        out["symbolic"] = SymbolicSlackMatrix(P).to_text().splitlines()
        if isinstance(obj, VRep):
            S = slack_matrix(obj, facet_enumeration(obj))
            # printed or canonical orders can differ from the facet enumeration order
            if S.support() == P.support:
                out["numeric"] = [[format_scalar(x) for x in S.row(i)] for i in range(S.rows)]
        return EXIT_OK, out
    if args.no_saturate:
        gens = minor_generators(SymbolicSlackMatrix(P), P.d + 2, budget)
        out["ideal"] = {"vars": P.nvars, "generators": [str(g) for g in gens], "saturated": False}
        return EXIT_OK, out
    I = slack_ideal(P, budget=budget)
    out["ideal"] = _ideal_json(I, _order(args, P.nvars), budget)
    out["ideal"]["saturated"] = True
    return EXIT_OK, out


def cmd_toric(args, budget) -> tuple[int, dict]:
    P = _pattern(parse_inputs(args.target), args.column_order, args.target)
    res = toric_ideal_TP(P, args.method, budget)
    out = {"pattern": _pattern_json(P), "method": args.method}
    if args.method == "cycles":
        out["ideal"] = {"vars": P.nvars, "generators": [str(c.binomial) for c in res.cycles]}
        out["cycles"] = [c.to_json() for c in res.cycles]
    else:
        out["ideal"] = res.ideal.to_json()
    return EXIT_OK, out


def cmd_check(args, budget) -> tuple[int, dict]:
    P = _pattern(parse_inputs(args.target), args.column_order, args.target)
    prop = args.property
    out: dict = {"pattern": _pattern_json(P), "property": prop}
    if prop == "morally-2-level":
        verdict = is_morally_2_level(P)
        out["evidence"] = {"support_rank": P.support_rank(), "d_plus_1": P.d + 1}
    else:
        I = slack_ideal(P, budget=budget)
        if prop == "graphic":
            T = toric_ideal_TP(P, "kernel" if isinstance(I, LatticeIdeal) else "cycles", budget).ideal
            cmp = ideal_containment(I, T, budget)
            verdict = cmp["equal"]
            out["evidence"] = {
                "I_P_subset_T_P": cmp["subset"],
                "T_P_subset_I_P": cmp["superset"],
                "strict": cmp["strict"],
                "krull_dimension_I_P": krull_dimension(I, budget),
                "krull_dimension_T_P": krull_dimension(T, budget),
            }
        else:
            flags = classify_ideal(I, budget)
            key = {"toric": "is_toric", "pure-difference": "is_pure_difference", "binomial": "is_binomial"}[prop]
            verdict = flags[key]
            out["evidence"] = {k: v for k, v in flags.items() if k != "lattice"}
            if flags.get("lattice") is not None:
                out["evidence"]["lattice_rank"] = flags["lattice"].rank()
    out["verdict"] = verdict
    return (EXIT_OK if verdict else EXIT_FALSE), out


def cmd_certify(args, budget) -> tuple[int, dict]:
    P = _pattern(parse_inputs(args.target), args.column_order, args.target)
    rep = certify_projective_uniqueness(P, budget)
    if rep["budget-status"] == "exceeded":
        return EXIT_BUDGET, rep
    return (EXIT_OK if rep["is_graphic"] else EXIT_FALSE), rep


def cmd_gale(args, budget) -> tuple[int, dict]:
    if args.target == "perles":
        G = perles_gale_diagram()
    else:
        G = parse_inputs(args.target)
        if not isinstance(G, GaleDiagram):
            raise InputError(f"{args.target} is not a Gale diagram")
    P = gale_facets(G, args.target)
    P = P.canonical() if args.column_order == "canonical" else P
    return EXIT_OK, {"gale": G.to_json(), "circuits": P.ncols, "pattern": _pattern_json(P)}


def cmd_perles(args, budget) -> tuple[int, dict]:
    from .perles import perles_verify

    rep = perles_verify(budget, with_subideal=not args.no_subideal)
    ok = rep["gale"]["matches_printed"] and rep["certificate"]["verified"]
    if "subideal" in rep:
        ok = ok and rep["subideal"].get("equals_listed", False)
    return (EXIT_OK if ok else EXIT_FALSE), rep


def cmd_verify(args, budget) -> tuple[int, dict]:
    rep = _load_json_file(Path(args.certificate))
    res = verify_certificate(rep)
    if not res.get("valid"):
        return EXIT_FALSE, res
    return (EXIT_OK if res["is_graphic"] else EXIT_FALSE), res


# --------------------------------------------------------------------------
# output


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k not in ("seconds", "timings")}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            lines.extend(f"{pad}{_scalar_text(v)}" for v in obj)
        elif all(isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v) for v in obj):
            lines.extend(pad + " ".join(_scalar_text(x) for x in v) for v in obj)
        else:
            for v in obj:
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
    else:
        lines.append(pad + _scalar_text(obj))
    return lines


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def emit(report: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        stream.write("\n".join(_text(report)) + "\n")


# --------------------------------------------------------------------------
# argument parsing


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error status, not argparse's 2 (which means budget here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--order", choices=["grevlex", "lex"], default="grevlex", help="term order for printed bases")
    common.add_argument("--budget", type=_positive, default=None, metavar="SECONDS", help="wall-clock budget")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument(
        "--column-order",
        choices=["canonical", "paper"],
        default="paper",
        help="'paper' keeps printed row/column orders where the catalog has them",
    )
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")

    ap = _Parser(prog="slackkit", description="Slack ideals, toric ideals and projective uniqueness.")
    ap.add_argument("--version", action="version", version=f"slackkit 0.1.0 ({IMPLEMENTATION} kernels)")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", parents=[common], help="list or show catalog polytopes")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("target", nargs="?")

    p = sub.add_parser("slack", parents=[common], help="symbolic slack matrix or slack ideal")
    p.add_argument("action", choices=["matrix", "ideal"])
    p.add_argument("target")
    p.add_argument("--no-saturate", action="store_true", help="print the unsaturated minor ideal instead")

    p = sub.add_parser("toric", parents=[common], help="toric ideal of the non-incidence graph")
    p.add_argument("action", choices=["ideal"])
    p.add_argument("target")
    p.add_argument("--method", choices=["cycles", "kernel"], default="cycles")

    p = sub.add_parser("check", parents=[common], help="decide a property; exit 1 when false")
    p.add_argument("property", choices=["morally-2-level", "graphic", "toric", "pure-difference", "binomial"])
    p.add_argument("target")

    p = sub.add_parser("certify", parents=[common], help="replayable certificate")
    p.add_argument("claim", choices=["projective-uniqueness"])
    p.add_argument("target")

    p = sub.add_parser("gale", parents=[common], help="facets of a Gale diagram")
    p.add_argument("action", choices=["facets"])
    p.add_argument("target", help="Gale diagram JSON file, or 'perles'")

    p = sub.add_parser("perles", parents=[common], help="the Perles polytope checks")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--no-subideal", action="store_true", help="skip the subideal computation")

    p = sub.add_parser("verify-certificate", parents=[common], help="replay a certificate's witnesses")
    p.add_argument("certificate")
    return ap


def run_report(args) -> tuple[int, dict]:
    budget = Budget(args.budget)
    handlers = {
        "slack": cmd_slack,
        "toric": cmd_toric,
        "check": cmd_check,
        "certify": cmd_certify,
        "gale": cmd_gale,
        "perles": cmd_perles,
        "verify-certificate": cmd_verify,
    }
    try:
        if args.verb == "catalog":
            status, report = cmd_catalog(args)
        else:
            status, report = handlers[args.verb](args, budget)
    except BudgetExceeded as exc:
        status, report = EXIT_BUDGET, {"budget-status": "exceeded", "detail": str(exc)}
    except (InputError, PolytopeError) as exc:
        status, report = EXIT_INPUT, {"error": str(exc)}
    if args.timings:
        report = dict(report, seconds=round(budget.elapsed(), 3), kernels=IMPLEMENTATION)
    else:
        report = _strip_timings(report)
    return status, report


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status, report = run_report(args)
    emit(report, args.format, sys.stderr if status == EXIT_INPUT else sys.stdout)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
