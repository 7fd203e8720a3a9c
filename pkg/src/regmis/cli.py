"""Command-line front end.

Exit codes: 0 success / verification pass, 1 verification fail or
infeasible request, 2 malformed input, 3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import gadgets
from .graph import Graph, GraphError, InfeasibleError, triangle_count
from .io import FORMATS, parse_graph, serialize_graph, sniff_format
from .reduction import (
    ReductionCertificate,
    recover,
    reduce_to_regular,
    regularize_planar,
)
from .solvers import ResourceLimitError, SolverLimits, solve_mis
from .verify import verify_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _read_graph(path: str, fmt: str) -> Graph:
    text = Path(path).read_text()
    return parse_graph(text, fmt if fmt != "auto" else sniff_format(path))


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _limits(args: argparse.Namespace) -> SolverLimits:
    return SolverLimits(
        node_budget=getattr(args, "budget_nodes", None),
        time_budget=getattr(args, "budget_secs", None),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regmis",
        description="Degree-regularizing reductions for maximum independent set, "
        "with certificates, exact solvers, and verification.",
    )
    parser.add_argument("--seed", type=int, help="reserved for future randomized features")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="graph file (- reads nothing; use a path)")
        p.add_argument("--format", choices=("auto",) + FORMATS, default="auto")

    p = sub.add_parser("regularize", help="transform a graph into a regular one")
    add_io(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--degree", type=int, help="odd target degree")
    group.add_argument("--planar", action="store_true", help="5-regular planar pipeline")
    p.add_argument("--strict", action="store_true", help="reject even-maximum-degree inputs instead of parity-fixing")
    p.add_argument("--output", help="reduced graph output path (default stdout)")
    p.add_argument("--cert", help="certificate JSON output path")
    p.add_argument("--out-format", choices=FORMATS, default="dimacs-col")

    p = sub.add_parser("solve", help="exact maximum independent set")
    add_io(p)
    p.add_argument("--method", choices=("auto", "brute", "bb"), default="auto")
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-secs", type=float)

    p = sub.add_parser("verify", help="check a reduction against its certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--reduced", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--format", choices=("auto",) + FORMATS, default="auto")
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-secs", type=float)

    p = sub.add_parser("recover", help="map a reduced-graph solution back to the source")
    p.add_argument("--reduced", required=True)
    p.add_argument("--cert", required=True)
    p.add_argument("--solution", required=True, help="newline-separated 0-indexed vertex ids")
    p.add_argument("--format", choices=("auto",) + FORMATS, default="auto")

    p = sub.add_parser("gadget", help="dump a gadget and its role map")
    p.add_argument("--kind", choices=(gadgets.GENERAL, gadgets.PLANAR5, gadgets.ICOSA), default=gadgets.GENERAL)
    p.add_argument("--delta", type=int, help="odd target degree (general gadget)")
    p.add_argument("--out-format", choices=FORMATS, default="edge-list")
    p.add_argument("--output", help="graph output path (default stdout)")
    p.add_argument("--roles", help="role map JSON output path (default stdout)")

    p = sub.add_parser("stats", help="basic instance statistics")
    add_io(p)
    return parser


def _cmd_regularize(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    if args.planar:
        g_prime, cert = regularize_planar(g)
    else:
        if args.degree is None:
            raise GraphError("--degree or --planar is required")
        g_prime, cert = reduce_to_regular(g, args.degree, strict=args.strict)
    _write(args.output, serialize_graph(g_prime, args.out_format))
    _write(args.cert, cert.to_json())
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    start = time.monotonic()
    result = solve_mis(g, _limits(args), args.method)
    doc = {
        "alpha": result.alpha,
        "witness": sorted(result.witness),
        "nodes": result.nodes_explored,
        "millis": round((time.monotonic() - start) * 1000, 3),
        "method": result.method,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.format)
    g_prime = _read_graph(args.reduced, args.format)
    cert = ReductionCertificate.from_json(Path(args.cert).read_text())
    report = verify_all(g, g_prime, cert, with_oracle=args.with_oracle, limits=_limits(args))
    print(report.to_json(), end="")
    return EXIT_OK if report.overall == "pass" else EXIT_FAIL


def _cmd_recover(args: argparse.Namespace) -> int:
    g_prime = _read_graph(args.reduced, args.format)
    cert = ReductionCertificate.from_json(Path(args.cert).read_text())
    ids = [
        int(line)
        for line in Path(args.solution).read_text().splitlines()
        if line.strip()
    ]
    recovered = recover(g_prime, ids, cert)
    doc = {
        "recovered": sorted(recovered),
        "recovered_size": len(recovered),
        "input_size": len(set(ids)),
        "offset": cert.total_offset,
        "size_bound_met": len(recovered) >= len(set(ids)) - cert.total_offset,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if doc["size_bound_met"] else EXIT_FAIL


def _cmd_gadget(args: argparse.Namespace) -> int:
    delta = args.delta
    if args.kind == gadgets.GENERAL and delta is None:
        raise GraphError("the general gadget needs --delta")
    g, layout = gadgets.build_gadget(args.kind, delta)
    _write(args.output, serialize_graph(g, args.out_format))
    doc = {
        "kind": layout.kind,
        "delta": layout.delta,
        "port": layout.port,
        "internal_alpha": layout.internal_alpha,
        "roles": {str(v): r for v, r in layout.role_map().items()},
        "alpha_report": gadgets.alpha_report(args.kind, delta),
    }
    _write(args.roles, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    histogram: dict[int, int] = {}
    for v in range(g.n):
        histogram[g.degree(v)] = histogram.get(g.degree(v), 0) + 1
    doc = {
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree(),
        "degree_histogram": {str(d): c for d, c in sorted(histogram.items())},
        "triangles": triangle_count(g),
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


_COMMANDS = {
    "regularize": _cmd_regularize,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "recover": _cmd_recover,
    "gadget": _cmd_gadget,
    "stats": _cmd_stats,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (GraphError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc} (best lower bound {exc.best_so_far})", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
