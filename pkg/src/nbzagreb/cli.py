"""Command-line interface.

Five subcommands: ``compute`` (profiles, indices, reconstructions),
``bounds`` (bound reports plus congruence data), ``spectral`` (radius
estimate and lower bounds), ``verify`` (exhaustive sweep) and ``extremal``
(equality-attaining graph search).

Output is deterministic: JSON with fixed key order and floats rendered at
12 significant digits, so identical inputs produce byte-identical output.
Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 precondition violation, 4 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from dataclasses import asdict
from pathlib import Path

from ._bulk import RHO_CHAIN_EPS
from .bounds import (
    BOUND_SOURCES,
    congruence_classify,
    nm_bound_congruence,
    nm_bound_secant,
    nm_bound_unit,
)
from .enumeration import find_equality_graphs, verify_all
from .errors import (
    ConfigError,
    NbZagrebError,
    NoConvergence,
    ParseError,
    PreconditionError,
)
from .graphs import degree_profile, is_connected, parse_edge_list, parse_graph6
from .indices import (
    as_alpha,
    index_report,
    nm2_direct,
    nm2_reconstruct_secant,
    nm2_reconstruct_unit,
    nm_direct,
)
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, spectral_report

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_NO_CONVERGENCE = 4


# ---------------------------------------------------------------------------
# Deterministic serialization


def _format_float(x: float) -> str:
    if math.isnan(x):
        raise ValueError("NaN is not serializable")
    if math.isinf(x):
        return '"infinity"'
    if x == 0.0:
        return "0"
    return format(x, ".12g")


def dumps_stable(obj) -> str:
    """JSON text with insertion-order keys and 12-significant-digit floats."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        escaped = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(obj, dict):
        items = ", ".join(f"{dumps_stable(str(k))}: {dumps_stable(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps_stable(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


_SNAKE = re.compile(r"(?<!^)(?=[A-Z])")


def _reason(exc: NbZagrebError) -> str:
    return _SNAKE.sub("_", type(exc).__name__).lower()


# ---------------------------------------------------------------------------
# Input handling


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path!r}: {exc}")


def _load_graph(args):
    text = _read_text(args.input)
    if args.format == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _require_alphas(parser: argparse.ArgumentParser, args) -> list:
    if not args.alpha:
        parser.error("at least one --alpha is required")
    return [as_alpha(a) for a in args.alpha]


# ---------------------------------------------------------------------------
# Subcommands


def _hist_doc(hist: dict[int, int]) -> dict:
    return {str(k): v for k, v in hist.items()}


def cmd_compute(parser, args):
    alphas = _require_alphas(parser, args)
    g = _load_graph(args)
    p = degree_profile(g)
    entries = []
    for alpha in alphas:
        entry: dict = {"alpha": alpha.value}
        try:
            entry["nm_alpha"] = nm_direct(p, alpha)
        except PreconditionError as exc:
            entry["nm_alpha"] = None
            entry["nm_alpha_inapplicable"] = _reason(exc)
        try:
            rep = index_report(p, alpha)
            entry["reconstruction"] = {
                "s_alpha": rep.s_alpha,
                "secant": rep.via_secant,
                "unit": rep.via_unit,
                "residual_secant": rep.residual_secant,
                "residual_unit": rep.residual_unit,
            }
        except PreconditionError as exc:
            entry["reconstruction"] = {"inapplicable": _reason(exc)}
        try:
            entry["nm2_alpha"] = nm2_direct(p, alpha)
        except PreconditionError as exc:
            entry["nm2_alpha"] = None
            entry["nm2_alpha_inapplicable"] = _reason(exc)
        try:
            direct2 = nm2_direct(p, alpha)
            via_s = nm2_reconstruct_secant(p, alpha)
            via_u = nm2_reconstruct_unit(p, alpha)
            entry["reconstruction_dist2"] = {
                "secant": via_s,
                "unit": via_u,
                "residual_secant": abs(via_s - direct2),
                "residual_unit": abs(via_u - direct2),
            }
        except PreconditionError as exc:
            entry["reconstruction_dist2"] = {"inapplicable": _reason(exc)}
        entries.append(entry)
    doc = {
        "command": "compute",
        "input": args.input,
        "format": args.format,
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "diameter": p.diameter,
        "m1": p.m1,
        "profile": {
            "degree": list(p.deg),
            "nbr_degree": list(p.nbr_deg),
            "dist2_degree": list(p.dist2_deg),
            "deg_hist": _hist_doc(p.deg_hist),
            "nbr_hist": _hist_doc(p.nbr_hist),
            "dist2_hist": _hist_doc(p.dist2_hist),
            "delta_min": p.delta_min,
            "delta_max": p.delta_max,
            "d2_min": p.d2_min,
            "d2_max": p.d2_max,
        },
        "indices": entries,
    }
    if args.output == "csv":
        lines = ["vertex,degree,nbr_degree,dist2_degree"]
        for u in range(g.n):
            lines.append(f"{u},{p.deg[u]},{p.nbr_deg[u]},{p.dist2_deg[u]}")
        return "\n".join(lines) + "\n", EXIT_OK
    return dumps_stable(doc) + "\n", EXIT_OK


def cmd_bounds(parser, args):
    alphas = _require_alphas(parser, args)
    g = _load_graph(args)
    p = degree_profile(g)
    try:
        cd = congruence_classify(p)
        congruence_doc = asdict(cd)
    except PreconditionError as exc:
        congruence_doc = {"inapplicable": _reason(exc)}
    alpha_docs = []
    for alpha in alphas:
        reports = []
        inapplicable = []
        for source, fn in (
            ("secant", nm_bound_secant),
            ("unit", nm_bound_unit),
            ("congruence", nm_bound_congruence),
        ):
            try:
                reports.append(asdict(fn(p, alpha, args.tolerance)))
            except PreconditionError as exc:
                inapplicable.append({"source": source, "reason": _reason(exc)})
        alpha_docs.append(
            {"alpha": alpha.value, "bounds": reports, "inapplicable": inapplicable}
        )
    doc = {
        "command": "bounds",
        "input": args.input,
        "format": args.format,
        "n": g.n,
        "m": g.m,
        "m1": p.m1,
        "delta_min": p.delta_min,
        "delta_max": p.delta_max,
        "congruence": congruence_doc,
        "alphas": alpha_docs,
    }
    return dumps_stable(doc) + "\n", EXIT_OK


def cmd_spectral(parser, args):
    g = _load_graph(args)
    result = spectral_report(g, tol=args.power_tol, max_iter=args.max_iter)
    doc = {
        "command": "spectral",
        "input": args.input,
        "format": args.format,
        "n": g.n,
        "m": g.m,
        "rho": result.rho,
        "rho_squared": result.rho_squared,
        "iterations": result.iterations,
        "residual": result.residual,
        "bound_nm2_ratio": result.bound_nm2_ratio,
        "bound_min_nbr": result.bound_min_nbr,
        "ratio_bound_holds": result.rho_squared + RHO_CHAIN_EPS >= result.bound_nm2_ratio,
        "min_nbr_bound_holds": result.rho_squared + RHO_CHAIN_EPS >= result.bound_min_nbr,
    }
    return dumps_stable(doc) + "\n", EXIT_OK


def cmd_verify(parser, args):
    alphas = _require_alphas(parser, args)
    report = verify_all(
        args.n_max,
        alphas,
        tolerance=args.tolerance,
        jobs=args.jobs,
        allow_n8=args.allow_n8,
        engine=args.engine,
    )
    code = EXIT_OK if report.ok else EXIT_VERIFY_FAILED
    return dumps_stable(report.to_dict()) + "\n", code


def cmd_extremal(parser, args):
    alpha = as_alpha(args.alpha)
    records = find_equality_graphs(args.n, alpha, args.source, allow_n8=args.allow_n8)
    doc = {
        "command": "extremal",
        "n": args.n,
        "alpha": alpha.value,
        "source": args.source,
        "count": len(records),
        "records": [r.to_dict() for r in records],
    }
    return dumps_stable(doc) + "\n", EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbzagreb",
        description="Neighborhood Zagreb indices: computation, bounds, spectral "
        "lower bounds, exhaustive verification and extremal search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_flags(sp, with_alpha=True):
        sp.add_argument("--input", required=True, help="graph file, or '-' for stdin")
        sp.add_argument("--format", choices=("edges", "graph6"), default="edges")
        if with_alpha:
            sp.add_argument(
                "--alpha", type=float, action="append", default=[],
                help="index exponent, repeatable (not 0 or 1)",
            )
        sp.add_argument("--tolerance", type=float, default=1e-9,
                        help="relative comparison tolerance (default 1e-9)")

    sp = sub.add_parser("compute", help="profiles, indices and reconstructions")
    add_input_flags(sp)
    sp.add_argument("--output", choices=("json", "csv"), default="json",
                    help="csv emits the per-vertex degree table")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("bounds", help="bound reports and congruence data")
    add_input_flags(sp)
    sp.add_argument("--output", choices=("json",), default="json")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("spectral", help="spectral radius and lower bounds")
    add_input_flags(sp, with_alpha=False)
    sp.add_argument("--power-tol", type=float, default=DEFAULT_TOL,
                    help="power-iteration convergence tolerance")
    sp.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    sp.add_argument("--output", choices=("json",), default="json")
    sp.set_defaults(func=cmd_spectral)

    sp = sub.add_parser("verify", help="exhaustive sweep over all connected graphs")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--alpha", type=float, action="append", default=[])
    sp.add_argument("--tolerance", type=float, default=1e-9)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--allow-n8", action="store_true",
                    help="permit the 2^28-mask sweep at n = 8")
    sp.add_argument("--engine", choices=("bulk", "scalar"), default="bulk")
    sp.add_argument("--output", choices=("json",), default="json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("extremal", help="equality-attaining graph search")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--source", required=True,
                    help=f"bound source: one of {', '.join(BOUND_SOURCES)}")
    sp.add_argument("--allow-n8", action="store_true")
    sp.add_argument("--dedup", action="store_true",
                    help="one record per isomorphism class (always on)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--output", choices=("json",), default="json")
    sp.set_defaults(func=cmd_extremal)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        output, code = args.func(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (ParseError, ConfigError, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except PreconditionError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_PRECONDITION
    except NoConvergence as exc:
        sys.stderr.write(f"error: NoConvergence: {exc}\n")
        return EXIT_NO_CONVERGENCE
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
