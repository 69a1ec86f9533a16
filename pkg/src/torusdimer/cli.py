"""Command-line front end over canonical JSON files.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
failure (a property that holds in general failed on this input).
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .circulant import (
    CirculantDigraph,
    build_lattice_path,
    circuit_lattice,
    is_hamiltonian,
    path_to_circuit,
)
from .errors import BadParameters, NoMatchings, TorusDimerError, VerificationFailure
from .families import (
    bnr_full_support,
    build_bnr,
    build_honeycomb,
    lozenge_convex_combination_check,
    realize_height_change,
)
from .kasteleyn import (
    count_from_four_evaluations,
    kasteleyn_polynomial,
    kasteleyn_signing,
)
from .matchings import (
    enumerate_matchings,
    height_change,
    height_function,
    rot90,
    tilde_height_change,
    uncovered_vertex_certificate,
)
from .newton import full_support_report
from .torus_graph import lift_block, validate_graph


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; route that to exit 1 instead.
    def error(self, message):
        raise _UsageError(message)


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise BadParameters(f"expected X,Y, got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise BadParameters(f"bad pair {text!r}") from exc


def _parse_patch(text: str) -> tuple[int, int]:
    parts = text.replace("x", ",").split(",")
    if len(parts) != 2:
        raise BadParameters(f"expected KxL, got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise BadParameters(f"bad patch size {text!r}") from exc


def _cmd_graph_check(args) -> int:
    g = io.read_graph(args.file)
    report = validate_graph(g)
    print(io.dumps(io.validation_to_obj(report)))
    return 0 if report.ok else 2


def _cmd_match_enum(args) -> int:
    g = io.read_graph(args.file)
    ms = enumerate_matchings(g)
    obj: dict = {"count": len(ms), "matchings": [list(m) for m in ms]}
    if not ms:
        cert = uncovered_vertex_certificate(g)
        if cert is not None:
            obj["uncovered"] = [cert[0], cert[1]]
    print(io.dumps(obj))
    return 0


def _cmd_heights(args) -> int:
    g = io.read_graph(args.file)
    base = io.parse_ids(args.base)
    m = io.parse_ids(args.match)
    k, l = _parse_patch(args.patch)
    patch = lift_block(g, k, l)
    field = height_function(patch, base, m)
    change = height_change(g, base, m)
    tilde = tilde_height_change(patch, base, m)
    if tilde != rot90(change):
        raise VerificationFailure(
            f"height periods {tilde} are not the rotation of {change}"
        )
    obj = {
        "patch": [k, l],
        "base_face": list(field.base_face),
        "height_change": list(change),
        "tilde": list(tilde),
        "heights": {
            f"{f},{cx},{cy}": v for (f, cx, cy), v in field.heights.items()
        },
    }
    print(io.dumps(obj))
    return 0


def _cmd_operator(args) -> int:
    g = io.read_graph(args.file)
    signing = kasteleyn_signing(g)
    p = kasteleyn_polynomial(g, signing)
    obj = {"signing": list(signing), "poly": io.poly_to_obj(p)}
    if args.four_eval:
        count = len(enumerate_matchings(g))
        obj["four_eval"] = io.four_eval_to_obj(count_from_four_evaluations(p, count))
    print(io.dumps(obj))
    return 0


def _cmd_newton(args) -> int:
    g = io.read_graph(args.file)
    ms = enumerate_matchings(g)
    if args.base is not None:
        base = io.parse_ids(args.base)
    else:
        if not ms:
            raise NoMatchings("graph admits no perfect matching")
        base = ms[0]
    report = full_support_report(g, base)
    print(io.dumps(io.newton_to_obj(report, matching_count=len(ms))))
    return 0 if report.full_support else 3


def _cmd_bnr(args) -> int:
    if args.realize is not None:
        m = realize_height_change(args.n, args.r, _parse_pair(args.realize))
        print(io.matching_to_json(m))
        return 0
    if args.full_support:
        report = bnr_full_support(args.n, args.r)
        obj = io.newton_to_obj(
            report, matching_count=sum(c for _, c in report.realized)
        )
        obj["triangle"] = [[0, 0], [1, 0], [args.r, args.n]]
        print(io.dumps(obj))
        return 0 if report.full_support else 3
    print(io.graph_to_json(build_bnr(args.n, args.r).graph))
    return 0


_METHOD_NAMES = {
    "rankin": "rankin",
    "visibility": "visibility",
    "brute": "brute_force",
    "cross": "cross_check",
}


def _cmd_circulant_ham(args) -> int:
    c = CirculantDigraph(args.n, args.a, args.b)
    res = is_hamiltonian(c, _METHOD_NAMES[args.method])
    obj = {
        "hamiltonian": res.hamiltonian,
        "method": res.method,
        "witness": list(res.witness) if res.witness is not None else None,
        "agreed": {name: verdict for name, verdict in res.agreed},
    }
    print(io.dumps(obj))
    return 0


def _cmd_circulant_path(args) -> int:
    target = _parse_pair(args.target)
    basis = circuit_lattice(args.n, args.a, args.b)
    path = build_lattice_path(basis, target)
    circuit = path_to_circuit(CirculantDigraph(args.n, args.a, args.b), path)
    obj = {
        "basis": [[basis.p, 0], [basis.q, basis.s]],
        "path": [[x, y] for x, y in path],
        "circuit": list(circuit),
    }
    print(io.dumps(obj))
    return 0


def _cmd_honeycomb(args) -> int:
    parts = args.matrix.split(",")
    if len(parts) != 4:
        raise BadParameters(f"expected B11,B12,B21,B22, got {args.matrix!r}")
    try:
        b11, b12, b21, b22 = (int(p) for p in parts)
    except ValueError as exc:
        raise BadParameters(f"bad matrix {args.matrix!r}") from exc
    h = build_honeycomb(((b11, b12), (b21, b22)))
    if args.verify:
        loz = lozenge_convex_combination_check(h)
        report = full_support_report(h.graph, h.matching_of_type("z"))
        obj = {
            "cells": loz.cells,
            "h_x": list(loz.h_x),
            "h_y": list(loz.h_y),
            "matchings": loz.matchings,
            "failures": list(loz.failures),
            "combination_ok": loz.ok,
            "full_support": report.full_support,
            "newton": io.newton_to_obj(report),
        }
        print(io.dumps(obj))
        return 0 if loz.ok and report.full_support else 3
    print(io.graph_to_json(h.graph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="torusdimer",
        description="exact homology, Kasteleyn and Newton-polygon reports "
        "for bipartite toroidal graphs",
    )
    sub = parser.add_subparsers(dest="command")

    graph = sub.add_parser("graph", help="graph file operations")
    graph_sub = graph.add_subparsers(dest="subcommand")
    check = graph_sub.add_parser("check", help="validate a graph file")
    check.add_argument("file")
    check.set_defaults(func=_cmd_graph_check)

    match = sub.add_parser("match", help="matching operations")
    match_sub = match.add_subparsers(dest="subcommand")
    enum = match_sub.add_parser("enum", help="enumerate perfect matchings")
    enum.add_argument("file")
    enum.set_defaults(func=_cmd_match_enum)

    heights = sub.add_parser("heights", help="face heights on a lifted block")
    heights.add_argument("file")
    heights.add_argument("--base", required=True, metavar="IDS")
    heights.add_argument("--match", required=True, metavar="IDS")
    heights.add_argument("--patch", default="2x2", metavar="KxL")
    heights.set_defaults(func=_cmd_heights)

    operator = sub.add_parser("operator", help="signed operator determinant")
    operator.add_argument("file")
    operator.add_argument("--four-eval", action="store_true", dest="four_eval")
    operator.set_defaults(func=_cmd_operator)

    newton = sub.add_parser("newton", help="support hull and lattice audit")
    newton.add_argument("file")
    newton.add_argument("--base", default=None, metavar="IDS")
    newton.set_defaults(func=_cmd_newton)

    bnr = sub.add_parser("bnr", help="the B(n, r) family")
    bnr.add_argument("--n", type=int, required=True)
    bnr.add_argument("--r", type=int, required=True)
    bnr_mode = bnr.add_mutually_exclusive_group()
    bnr_mode.add_argument("--realize", default=None, metavar="X,Y")
    bnr_mode.add_argument("--full-support", action="store_true", dest="full_support")
    bnr.set_defaults(func=_cmd_bnr)

    circ = sub.add_parser("circulant", help="circulant digraph machinery")
    circ_sub = circ.add_subparsers(dest="subcommand")
    ham = circ_sub.add_parser("ham", help="Hamiltonicity deciders")
    path_cmd = circ_sub.add_parser("path", help="staircase path to a circuit")
    for p in (ham, path_cmd):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
    ham.add_argument(
        "--method",
        choices=tuple(_METHOD_NAMES),
        default="cross",
    )
    ham.set_defaults(func=_cmd_circulant_ham)
    path_cmd.add_argument("--target", required=True, metavar="U,V")
    path_cmd.set_defaults(func=_cmd_circulant_path)

    honeycomb = sub.add_parser("honeycomb", help="hexagonal quotient graphs")
    honeycomb.add_argument("--matrix", required=True, metavar="B11,B12,B21,B22")
    honeycomb.add_argument("--verify", action="store_true")
    honeycomb.set_defaults(func=_cmd_honeycomb)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except TorusDimerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
