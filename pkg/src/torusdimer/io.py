"""Canonical JSON for graphs, matchings, polynomials and reports.

Graph files keep the fixed key order num_white, num_black, edges, rotation
and compact separators, so identical graphs serialize to identical bytes.
The reader is lenient: any key order, optional rotation, extra keys
ignored.  Report serializers sort keys and stay compact for the same
byte-stability.
"""

from __future__ import annotations

import json

from .errors import BadParameters
from .kasteleyn import FourEvalReport, LaurentPoly2
from .matchings import DivideReport, Matching, TransitionCycles
from .newton import NewtonReport
from .torus_graph import TorusGraph, ValidationReport, torus_graph


def dumps(obj) -> str:
    """Compact JSON with sorted keys, for report payloads."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps_ordered(obj) -> str:
    """Compact JSON keeping insertion order, for canonical graph files."""
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# graphs

def graph_to_obj(g: TorusGraph) -> dict:
    obj: dict = {
        "num_white": g.num_white,
        "num_black": g.num_black,
        "edges": [[e.white, e.black, e.offset[0], e.offset[1]] for e in g.edges],
    }
    if g.rotation is not None:
        obj["rotation"] = {
            "white": [list(lst) for lst in g.rotation.white],
            "black": [list(lst) for lst in g.rotation.black],
        }
    return obj


def graph_to_json(g: TorusGraph) -> str:
    return dumps_ordered(graph_to_obj(g))


def graph_from_obj(obj) -> TorusGraph:
    if not isinstance(obj, dict):
        raise BadParameters("graph JSON must be an object")
    try:
        num_white = int(obj["num_white"])
        num_black = int(obj["num_black"])
        edges = [
            (int(e[0]), int(e[1]), int(e[2]), int(e[3])) for e in obj["edges"]
        ]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise BadParameters(f"malformed graph JSON: {exc}") from exc
    rotation = None
    if obj.get("rotation") is not None:
        rot = obj["rotation"]
        try:
            rotation = (
                [[int(e) for e in lst] for lst in rot["white"]],
                [[int(e) for e in lst] for lst in rot["black"]],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise BadParameters(f"malformed rotation JSON: {exc}") from exc
    return torus_graph(num_white, num_black, edges, rotation)


def parse_graph(text: str) -> TorusGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"not valid JSON: {exc}") from exc
    return graph_from_obj(obj)


def read_graph(path: str) -> TorusGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# matchings

def matching_to_json(m: Matching) -> str:
    return dumps_ordered(list(m))


def parse_ids(text: str) -> tuple[int, ...]:
    """Edge ids from either a JSON array or a comma-separated list."""
    text = text.strip()
    if not text:
        return ()
    if text.startswith("["):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BadParameters(f"not valid JSON: {exc}") from exc
        if not isinstance(obj, list):
            raise BadParameters("matching JSON must be an array of edge ids")
        return tuple(int(e) for e in obj)
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise BadParameters(f"bad id list {text!r}") from exc


# ---------------------------------------------------------------------------
# polynomials and reports

def poly_to_obj(p: LaurentPoly2) -> dict:
    return {
        "terms": [
            {"i": ij[0], "j": ij[1], "c": c} for ij, c in p.items_sorted()
        ]
    }


def validation_to_obj(r: ValidationReport) -> dict:
    return {
        "ok": r.ok,
        "balanced": r.balanced,
        "findings": [[code, msg] for code, msg in r.findings],
    }


def newton_to_obj(r: NewtonReport, matching_count: int | None = None) -> dict:
    obj: dict = {
        "base": list(r.base),
        "hull": [[x, y] for x, y in r.hull],
        "lattice_points": [[x, y] for x, y in r.lattice_points],
        "realized": [[[x, y], c] for (x, y), c in r.realized],
        "missing": [[x, y] for x, y in r.missing],
        "full_support": r.full_support,
    }
    if matching_count is not None:
        obj["matching_count"] = matching_count
    return obj


def transition_to_obj(tc: TransitionCycles) -> dict:
    return {
        "discarded_pairs": tc.discarded_pairs,
        "total_homology": list(tc.total_homology()),
        "circuits": [
            {
                "homology": list(c.homology),
                "steps": [[e, s] for e, s in c.steps],
            }
            for c in tc.circuits
        ],
    }


def divide_to_obj(r: DivideReport) -> dict:
    return {
        "applicable": r.applicable,
        "total": list(r.total),
        "d": r.d,
        "positives": r.positives,
        "negatives": r.negatives,
        "zeros": r.zeros,
        "ok": r.ok,
    }


def four_eval_to_obj(r: FourEvalReport) -> dict:
    return {
        "values": list(r.values),
        "count": r.count,
        "patterns": [list(p) for p in r.patterns],
    }
