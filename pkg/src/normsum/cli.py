"""Command-line front door.

Subcommands map one-to-one onto the library: construct (paley, hadamard,
kyfan-extremal, opnorm-extremal), spectrum, norms, check (main, shifted,
kyfan, opnorm, weyl, equality), search (exhaustive, local), and sweep.

Exit codes: 0 success with all verdicts holding, 1 when a checked bound is
violated (a scientific alarm, not a crash), 2 for usage or domain errors.

JSON output is a single RunReport document; identical invocations are
byte-identical except for elapsed_ms. Floats are printed with 17
significant digits so doubles round-trip exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__
from .bounds import (
    EQUALITY_TOL,
    HOLD_TOL,
    check_bound,
    equality_analysis,
    weyl_complement_check,
)
from .constructions import hadamard, kyfan_extremal_matrix, opnorm_extremal_matrix
from .errors import NormsumError
from .graphs import (
    Graph,
    adjacency_matrix,
    graph6_decode,
    graph6_encode,
    paley_graph,
)
from .linalg import SYMMETRY_TOL, DenseMatrix, ky_fan_norm, svd, sym_eigen
from .search import SearchConfig, exhaustive_max, local_search_max, property_sweep


# ---------------------------------------------------------------------------
# JSON with fixed float formatting


def format_float(x: float) -> str:
    """Shortest-ish decimal with 17 significant digits; round-trip exact."""
    if not math.isfinite(x):
        return "null"
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return format(x, ".17g")


def render_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {render_json(v, indent + 1)}"
            for k, v in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not len(obj):
            return "[]"
        inner = ",\n".join(f"{pad}  {render_json(v, indent + 1)}" for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


# ---------------------------------------------------------------------------
# Input loading


def _load_matrix_file(path: str) -> DenseMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return DenseMatrix.from_json(json.loads(text))
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            rows.append([float(tok) for tok in line.split(",")])
    if not rows:
        raise ValueError(f"no matrix rows found in {path}")
    return DenseMatrix(rows)


def _resolve_input(args) -> Graph | DenseMatrix:
    """Pick the one graph/matrix source the flags name."""
    sources = [
        s
        for s in ("paley", "graph6", "edges", "matrix")
        if getattr(args, s, None) is not None
    ]
    if len(sources) != 1:
        raise ValueError(
            "exactly one input source required: --paley, --graph6, --edges, or --matrix"
        )
    src = sources[0]
    if src == "paley":
        return paley_graph(args.paley)
    if src == "graph6":
        return graph6_decode(args.graph6)
    if src == "edges":
        with open(args.edges, "r", encoding="utf-8") as fh:
            return Graph.from_json(json.load(fh))
    return _load_matrix_file(args.matrix)


def _threads(args) -> int:
    if args.threads is None:
        return 1
    if args.threads == "auto":
        return os.cpu_count() or 1
    t = int(args.threads)
    if t < 1:
        raise ValueError(f"--threads must be positive, got {t}")
    return t


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (results dict, failed verdict flag,
# optional raw text for the graph6/text/csv formats)


def _matrix_json(mat: DenseMatrix) -> dict:
    return mat.to_json()


def _csv_matrix(mat: DenseMatrix) -> str:
    lines = []
    arr = mat.array
    for row in arr:
        lines.append(",".join(format_float(float(x)) for x in row))
    return "\n".join(lines)


def cmd_construct(args):
    kind = args.what
    if kind == "paley":
        g = paley_graph(args.order)
        results = {
            "kind": "paley",
            "n": g.n,
            "edge_count": g.edge_count,
            "graph6": graph6_encode(g),
        }
        return results, False, {"graph6": results["graph6"], "csv": None}
    if kind == "hadamard":
        h = hadamard(args.order)
        results = {"kind": "hadamard", "order": h.order, "matrix": _matrix_json(h.entries)}
        return results, False, {"csv": _csv_matrix(h.entries)}
    if kind == "kyfan-extremal":
        mat = kyfan_extremal_matrix(args.order, args.p, args.q)
        results = {
            "kind": "kyfan-extremal",
            "k": args.order,
            "p": args.p,
            "q": args.q,
            "rows": mat.rows,
            "cols": mat.cols,
            "matrix": _matrix_json(mat),
        }
        return results, False, {"csv": _csv_matrix(mat)}
    mat = opnorm_extremal_matrix(args.rows, args.cols, args.orientation)
    results = {
        "kind": "opnorm-extremal",
        "rows": mat.rows,
        "cols": mat.cols,
        "orientation": args.orientation,
        "matrix": _matrix_json(mat),
    }
    return results, False, {"csv": _csv_matrix(mat)}


def cmd_spectrum(args):
    obj = _resolve_input(args)
    if isinstance(obj, Graph):
        mat = adjacency_matrix(obj)
    else:
        mat = obj
    results: dict = {"rows": mat.rows, "cols": mat.cols}
    symmetric = (
        mat.rows == mat.cols and float(np.abs(mat.array - mat.array.T).max()) <= SYMMETRY_TOL
    )
    if symmetric:
        eig = sym_eigen(mat)
        results["eigenvalues"] = list(eig.values)
        results["eigen_residual"] = eig.offdiag_residual
    sing = svd(mat)
    results["singular_values"] = list(sing.values)
    results["svd_residual"] = sing.residual
    rows = []
    for i, s in enumerate(sing.values):
        e = results.get("eigenvalues", [None] * len(sing.values))[i]
        rows.append((i + 1, e, s))
    csv = "index,eigenvalue,singular_value\n" + "\n".join(
        f"{i},{'' if e is None else format_float(e)},{format_float(s)}" for i, e, s in rows
    )
    return results, False, {"csv": csv}


def cmd_norms(args):
    obj = _resolve_input(args)
    mat = adjacency_matrix(obj) if isinstance(obj, Graph) else obj
    sing = svd(mat)
    results: dict = {
        "rows": mat.rows,
        "cols": mat.cols,
        "trace_norm": float(sum(sing.values)),
        "operator_norm": float(sing.values[0]),
    }
    if args.k is not None:
        results["ky_fan_k"] = args.k
        results["ky_fan_norm"] = ky_fan_norm(mat, args.k)
    if isinstance(obj, Graph):
        n = obj.n
        comp = np.ones((n, n)) - np.eye(n) - mat.array
        comp_trace = float(sum(svd(comp).values))
        results["complement_trace_norm"] = comp_trace
        results["trace_sum"] = results["trace_norm"] + comp_trace
    return results, False, {}


def cmd_check(args):
    kind = args.kind
    if kind == "kyfan" and args.order is not None:
        obj: Graph | DenseMatrix = kyfan_extremal_matrix(
            args.order, args.p if args.p is not None else 1, args.q if args.q is not None else 1
        )
        k = args.k if args.k is not None else args.order
    elif kind == "opnorm" and args.rows is not None:
        if args.cols is None or args.orientation is None:
            raise ValueError("--rows needs --cols and --orientation")
        obj = opnorm_extremal_matrix(args.rows, args.cols, args.orientation)
        k = args.k
    else:
        obj = _resolve_input(args)
        k = args.k

    if kind == "equality":
        report = equality_analysis(obj, tol=args.tol if args.tol is not None else EQUALITY_TOL)
        return report.to_json(), False, {}
    if kind == "weyl":
        wreport = weyl_complement_check(obj, tol=args.tol if args.tol is not None else HOLD_TOL)
        return wreport.to_json(), not wreport.ok, {}
    verdict = check_bound(kind, obj, k=k, tol=args.tol if args.tol is not None else HOLD_TOL)
    payload = verdict.to_json()
    csv = (
        "kind,lhs,rhs,slack,holds,equality\n"
        f"{verdict.kind},{format_float(verdict.lhs)},{format_float(verdict.rhs)},"
        f"{format_float(verdict.slack)},{verdict.holds},{verdict.equality}"
    )
    return payload, not verdict.holds, {"csv": csv}


def cmd_search(args):
    threads = _threads(args)
    if args.mode == "exhaustive":
        result = exhaustive_max(args.n, args.objective, k=args.k, threads=threads)
    else:
        cfg = SearchConfig(
            restarts=args.restarts,
            max_steps=args.steps,
            temperature_initial=args.t0,
            cooling=args.cooling,
            seed=args.seed if args.seed is not None else 0,
        )
        result = local_search_max(args.n, args.objective, k=args.k, cfg=cfg, threads=threads)
    return result.to_json(), False, {}


def cmd_sweep(args):
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    report = property_sweep(
        trials=args.trials,
        seed=args.seed if args.seed is not None else 0,
        n_range=(args.n_min, args.n_max),
        kinds=kinds,
        tol=args.tol if args.tol is not None else HOLD_TOL,
    )
    payload = report.to_json()
    lines = ["kind,trials,passes,violations,worst_slack"]
    for r in report.results:
        lines.append(
            f"{r.kind},{r.trials},{r.passes},{r.violations},{format_float(r.worst_slack)}"
        )
    return payload, report.total_violations > 0, {"csv": "\n".join(lines)}


# ---------------------------------------------------------------------------
# Parser


def _add_common(sub):
    sub.add_argument("--tol", type=float, default=None, help="verdict tolerance (default 1e-7)")
    sub.add_argument("--seed", type=int, default=None, help="64-bit seed for randomized runs")
    sub.add_argument("--threads", default=None, help="worker threads: an integer or 'auto'")
    sub.add_argument(
        "--format",
        choices=("json", "csv", "graph6", "text"),
        default="text",
        dest="format",
        help="output format (default text)",
    )
    sub.add_argument("--json", action="store_true", help="shorthand for --format json")
    sub.add_argument("--csv", action="store_true", help="shorthand for --format csv")
    sub.add_argument("--out", default=None, help="write output to this path instead of stdout")


def _add_input_flags(sub):
    sub.add_argument("--paley", type=int, default=None, help="use the Paley graph of this order")
    sub.add_argument("--graph6", default=None, help="graph given as a graph6 string")
    sub.add_argument("--edges", default=None, help="path to a JSON edge-list file")
    sub.add_argument("--matrix", default=None, help="path to a JSON or CSV matrix file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normsum",
        description="Trace/Ky Fan/operator norm sums of graphs and matrices: "
        "constructions, bound checks, searches, sweeps.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("construct", help="build a named object")
    csub = p.add_subparsers(dest="what", required=True)
    cp = csub.add_parser("paley", help="Paley graph of prime-power order q = 1 (mod 4)")
    cp.add_argument("order", type=int)
    _add_common(cp)
    ch = csub.add_parser("hadamard", help="Hadamard matrix of a supported order")
    ch.add_argument("order", type=int)
    _add_common(ch)
    ck = csub.add_parser("kyfan-extremal", help="Ky Fan equality witness for index k")
    ck.add_argument("order", type=int, help="the norm index k (needs a Hadamard of order k-1)")
    ck.add_argument("--p", type=int, default=1, help="row block multiplicity")
    ck.add_argument("--q", type=int, default=1, help="column block multiplicity")
    _add_common(ck)
    co = csub.add_parser("opnorm-extremal", help="half-ones operator norm equality witness")
    co.add_argument("rows", type=int)
    co.add_argument("cols", type=int)
    co.add_argument("--orientation", choices=("rows", "columns"), required=True)
    _add_common(co)

    p = subs.add_parser("spectrum", help="eigen/singular values of a graph or matrix")
    _add_input_flags(p)
    _add_common(p)

    p = subs.add_parser("norms", help="trace, operator, and Ky Fan norms")
    _add_input_flags(p)
    p.add_argument("--k", type=int, default=None, help="also report the Ky Fan k-norm")
    _add_common(p)

    p = subs.add_parser("check", help="evaluate a bound or equality analysis")
    p.add_argument(
        "kind", choices=("main", "shifted", "kyfan", "opnorm", "weyl", "equality")
    )
    _add_input_flags(p)
    p.add_argument("--k", type=int, default=None, help="Ky Fan index for kind kyfan")
    p.add_argument("--order", type=int, default=None, help="kyfan: build the witness for this k")
    p.add_argument("--p", type=int, default=None, help="kyfan witness row multiplicity")
    p.add_argument("--q", type=int, default=None, help="kyfan witness column multiplicity")
    p.add_argument("--rows", type=int, default=None, help="opnorm: build the witness, row count")
    p.add_argument("--cols", type=int, default=None, help="opnorm witness column count")
    p.add_argument("--orientation", choices=("rows", "columns"), default=None)
    _add_common(p)

    p = subs.add_parser("search", help="maximize a norm sum over graphs")
    ssub = p.add_subparsers(dest="mode", required=True)
    se = ssub.add_parser("exhaustive", help="all labeled graphs, n <= 8")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--objective", choices=("trace_sum", "kyfan_sum"), default="trace_sum")
    se.add_argument("--k", type=int, default=None)
    _add_common(se)
    sl = ssub.add_parser("local", help="seeded annealing over edge flips, n <= 64")
    sl.add_argument("--n", type=int, required=True)
    sl.add_argument("--objective", choices=("trace_sum", "kyfan_sum"), default="trace_sum")
    sl.add_argument("--k", type=int, default=None)
    sl.add_argument("--restarts", type=int, default=10)
    sl.add_argument("--steps", type=int, default=20000)
    sl.add_argument("--t0", type=float, default=1.0)
    sl.add_argument("--cooling", type=float, default=0.995)
    _add_common(sl)

    p = subs.add_parser("sweep", help="randomized property sweep over the checkers")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument(
        "--kinds",
        default="main,main_matrix,shifted,kyfan,opnorm,weyl",
        help="comma-separated subset of main,main_matrix,shifted,kyfan,opnorm,weyl",
    )
    p.add_argument("--n-min", type=int, default=4, dest="n_min")
    p.add_argument("--n-max", type=int, default=12, dest="n_max")
    _add_common(p)

    return parser


_HANDLERS = {
    "construct": cmd_construct,
    "spectrum": cmd_spectrum,
    "norms": cmd_norms,
    "check": cmd_check,
    "search": cmd_search,
    "sweep": cmd_sweep,
}


def _text_lines(results: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, val in results.items():
        if isinstance(val, dict):
            lines.append(f"{prefix}{key}:")
            lines.extend(_text_lines(val, prefix + "  "))
        elif isinstance(val, (list, tuple)) and val and isinstance(val[0], (int, float)):
            body = " ".join(
                format_float(float(v)) if isinstance(v, float) else str(v) for v in val
            )
            lines.append(f"{prefix}{key}: {body}")
        elif isinstance(val, (list, tuple)):
            lines.append(f"{prefix}{key}: {', '.join(str(v) for v in val)}")
        elif isinstance(val, float):
            lines.append(f"{prefix}{key}: {format_float(val)}")
        else:
            lines.append(f"{prefix}{key}: {val}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if getattr(args, "json", False) and getattr(args, "csv", False):
        print("error: --json and --csv are mutually exclusive", file=sys.stderr)
        return 2
    fmt = args.format
    if getattr(args, "json", False):
        fmt = "json"
    elif getattr(args, "csv", False):
        fmt = "csv"

    started = time.perf_counter()
    try:
        results, failed, extras = _HANDLERS[args.command](args)
    except (NormsumError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = int(round((time.perf_counter() - started) * 1000))

    if fmt == "json":
        inputs = {
            k: v
            for k, v in sorted(vars(args).items())
            if k
            not in ("command", "what", "mode", "format", "json", "csv", "out")
            and v is not None
        }
        report = {
            "command": args.command if args.command != "construct" else f"construct {args.what}",
            "inputs": inputs,
            "results": results,
            "tool_version": __version__,
            "elapsed_ms": elapsed_ms,
        }
        out = render_json(report)
    elif fmt == "csv":
        out = extras.get("csv") if isinstance(extras, dict) else None
        if not out:
            print("error: no CSV form for this subcommand", file=sys.stderr)
            return 2
    elif fmt == "graph6":
        out = extras.get("graph6") if isinstance(extras, dict) else None
        if not out:
            print("error: graph6 output only applies to graph constructions", file=sys.stderr)
            return 2
    else:
        out = "\n".join(_text_lines(results))

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
