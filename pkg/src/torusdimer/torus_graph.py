"""Bipartite graphs on the torus, encoded by one fundamental domain.

A TorusGraph stores the quotient of a doubly periodic bipartite plane graph:
white and black vertices, and edges carrying an integer offset (dx, dy).  The
offset counts signed crossings of the two cuts of the torus, read along the
edge from its white endpoint to its black endpoint, so the lift of an edge
joins white (v, c) to black (v', c + offset) for every cell c in Z^2.

An optional rotation system (the counterclockwise cyclic order of incident
edges at every vertex) upgrades the data to a combinatorial map.  Faces are
traced with the standard rule: after arriving at a vertex, leave along the
counterclockwise successor of the reversed edge side.  With that rule each
face lies to the left of the directed sides in its cycle.

Directed edge sides ("darts") are encoded as integers: dart 2*e runs
white -> black along edge e, dart 2*e + 1 runs black -> white.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameters, MissingRotation

Vec2 = tuple[int, int]


@dataclass(frozen=True)
class Edge:
    white: int
    black: int
    offset: Vec2


@dataclass(frozen=True)
class RotationSystem:
    """Counterclockwise edge order at each white and each black vertex."""

    white: tuple[tuple[int, ...], ...]
    black: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TorusGraph:
    num_white: int
    num_black: int
    edges: tuple[Edge, ...]
    rotation: RotationSystem | None = None


def torus_graph(num_white, num_black, edges, rotation=None) -> TorusGraph:
    """Build a TorusGraph from plain tuples.

    edges: iterable of Edge or (white, black, dx, dy).
    rotation: RotationSystem, or a (white_lists, black_lists) pair, or None.
    """
    built = []
    for spec in edges:
        if isinstance(spec, Edge):
            built.append(spec)
        else:
            w, b, dx, dy = spec
            built.append(Edge(int(w), int(b), (int(dx), int(dy))))
    rot = None
    if rotation is not None:
        if isinstance(rotation, RotationSystem):
            rot = rotation
        else:
            white_lists, black_lists = rotation
            rot = RotationSystem(
                tuple(tuple(int(e) for e in lst) for lst in white_lists),
                tuple(tuple(int(e) for e in lst) for lst in black_lists),
            )
    return TorusGraph(int(num_white), int(num_black), tuple(built), rot)


# ---------------------------------------------------------------------------
# darts

def dart_edge(d: int) -> int:
    return d >> 1


def dart_is_white_to_black(d: int) -> bool:
    return d & 1 == 0


def reversed_dart(d: int) -> int:
    return d ^ 1


def dart_displacement(g: TorusGraph, d: int) -> Vec2:
    """Cell displacement from tail to head of a lifted dart."""
    dx, dy = g.edges[d >> 1].offset
    return (dx, dy) if d & 1 == 0 else (-dx, -dy)


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    balanced: bool
    findings: tuple[tuple[str, str], ...]


def validate_graph(g: TorusGraph) -> ValidationReport:
    """Check index ranges and, when present, the rotation system.

    The rotation system is valid when each vertex lists exactly the edges
    incident to it, each exactly once.  Validity does not require the graph
    to be balanced; that is reported separately.
    """
    findings: list[tuple[str, str]] = []
    if g.num_white < 0 or g.num_black < 0:
        findings.append(("vertex-count", "negative vertex count"))
    for i, e in enumerate(g.edges):
        if not (0 <= e.white < g.num_white):
            findings.append(("edge-white-range", f"edge {i} has white endpoint {e.white}"))
        if not (0 <= e.black < g.num_black):
            findings.append(("edge-black-range", f"edge {i} has black endpoint {e.black}"))
    if g.rotation is not None:
        findings.extend(_rotation_findings(g))
    balanced = g.num_white == g.num_black
    return ValidationReport(ok=not findings, balanced=balanced, findings=tuple(findings))


def _rotation_findings(g: TorusGraph) -> list[tuple[str, str]]:
    rot = g.rotation
    findings: list[tuple[str, str]] = []
    if len(rot.white) != g.num_white:
        findings.append(("rotation-shape", f"{len(rot.white)} white lists for {g.num_white} whites"))
    if len(rot.black) != g.num_black:
        findings.append(("rotation-shape", f"{len(rot.black)} black lists for {g.num_black} blacks"))
    for color, lists, endpoint in (
        ("white", rot.white, lambda e: g.edges[e].white),
        ("black", rot.black, lambda e: g.edges[e].black),
    ):
        seen: dict[int, int] = {}
        for v, lst in enumerate(lists):
            for e in lst:
                if not (0 <= e < len(g.edges)):
                    findings.append(("rotation-edge-range", f"{color} vertex {v} lists edge {e}"))
                    continue
                if endpoint(e) != v:
                    findings.append(
                        ("rotation-wrong-vertex", f"edge {e} listed at {color} vertex {v}")
                    )
                if e in seen:
                    findings.append(("rotation-duplicate", f"edge {e} listed twice on {color} side"))
                seen[e] = v
        for e in range(len(g.edges)):
            target = endpoint(e)
            if 0 <= target < len(lists) and e not in seen:
                findings.append(("rotation-missing-edge", f"edge {e} absent from {color} lists"))
    return findings


def require_valid(g: TorusGraph) -> None:
    report = validate_graph(g)
    if not report.ok:
        code, msg = report.findings[0]
        raise BadParameters(f"invalid graph ({code}): {msg}")


# ---------------------------------------------------------------------------
# faces

@dataclass(frozen=True)
class FaceSet:
    """Face cycles of the combinatorial map, as tuples of darts.

    face_of[d] is the face index of dart d; offset_in_face[d] is the cell of
    d's tail relative to the tail of the first dart of its face, in a lift of
    the face to the plane.  cellular records the torus Euler count
    V - E + F == 0; closed records that every face cycle lifts to a closed
    walk (net displacement zero), which holds exactly for disc faces.
    """

    faces: tuple[tuple[int, ...], ...]
    face_of: tuple[int, ...]
    offset_in_face: tuple[Vec2, ...]
    cellular: bool
    closed: bool

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)


def compute_faces(g: TorusGraph) -> FaceSet:
    """Trace all faces of the combinatorial map.

    Raises MissingRotation when the graph carries no rotation system, and
    BadParameters when validate_graph fails.
    """
    if g.rotation is None:
        raise MissingRotation("face tracing needs a rotation system")
    require_valid(g)
    return _faces_cached(g)


@lru_cache(maxsize=256)
def _faces_cached(g: TorusGraph) -> FaceSet:
    rot = g.rotation
    # position of each edge within its vertex's cyclic list
    succ_white = _successor_table(rot.white)
    succ_black = _successor_table(rot.black)

    def next_dart(d: int) -> int:
        e = d >> 1
        if d & 1 == 0:  # arrived at the black endpoint
            e2 = succ_black[g.edges[e].black][e]
            return 2 * e2 + 1
        e2 = succ_white[g.edges[e].white][e]
        return 2 * e2

    n_darts = 2 * len(g.edges)
    face_of = [-1] * n_darts
    offset_in_face: list[Vec2] = [(0, 0)] * n_darts
    faces: list[tuple[int, ...]] = []
    closed = True
    for start in range(n_darts):
        if face_of[start] != -1:
            continue
        cycle = []
        d = start
        cell = (0, 0)
        while True:
            face_of[d] = len(faces)
            offset_in_face[d] = cell
            cycle.append(d)
            dx, dy = dart_displacement(g, d)
            cell = (cell[0] + dx, cell[1] + dy)
            d = next_dart(d)
            if d == start:
                break
        if cell != (0, 0):
            closed = False
        faces.append(tuple(cycle))
    euler = (g.num_white + g.num_black) - len(g.edges) + len(faces)
    return FaceSet(
        faces=tuple(faces),
        face_of=tuple(face_of),
        offset_in_face=tuple(offset_in_face),
        cellular=euler == 0,
        closed=closed,
    )


def _successor_table(lists) -> list[dict[int, int]]:
    tables = []
    for lst in lists:
        k = len(lst)
        tables.append({e: lst[(i + 1) % k] for i, e in enumerate(lst)})
    return tables


# ---------------------------------------------------------------------------
# lifting

@dataclass(frozen=True)
class PatchVertex:
    color: str  # "w" or "b"
    base: int
    cell: Vec2


@dataclass(frozen=True)
class PatchEdge:
    edge: int
    cell: Vec2  # cell of the white endpoint
    black_cell: Vec2
    dangling: bool


@dataclass(frozen=True)
class PlanarPatch:
    graph: TorusGraph
    k: int
    l: int
    vertices: tuple[PatchVertex, ...]
    edges: tuple[PatchEdge, ...]


def lift_block(g: TorusGraph, k: int, l: int) -> PlanarPatch:
    """Lift a k x l block of fundamental-domain copies to a finite patch.

    One edge instance is created per edge and per cell of its white endpoint;
    instances whose black endpoint falls outside the block are dangling.
    """
    if k < 1 or l < 1:
        raise BadParameters("block dimensions must be at least 1x1")
    require_valid(g)
    cells = [(cx, cy) for cx in range(k) for cy in range(l)]
    vertices = [PatchVertex("w", i, c) for c in cells for i in range(g.num_white)]
    vertices += [PatchVertex("b", i, c) for c in cells for i in range(g.num_black)]
    edges = []
    for c in cells:
        for eid, e in enumerate(g.edges):
            bc = (c[0] + e.offset[0], c[1] + e.offset[1])
            dangling = not (0 <= bc[0] < k and 0 <= bc[1] < l)
            edges.append(PatchEdge(eid, c, bc, dangling))
    return PlanarPatch(g, k, l, tuple(vertices), tuple(edges))


# ---------------------------------------------------------------------------
# gauge moves

def apply_gauge(g: TorusGraph, white_shifts, black_shifts) -> TorusGraph:
    """Re-lift vertices: shift every vertex representative by a cell vector.

    Edge offsets become offset + black_shift[black] - white_shift[white].
    Homology differences of matchings are unchanged because every matching
    picks up the same constant.
    """
    ws = [tuple(map(int, s)) for s in white_shifts]
    bs = [tuple(map(int, s)) for s in black_shifts]
    if len(ws) != g.num_white or len(bs) != g.num_black:
        raise BadParameters("one shift per vertex required")
    edges = tuple(
        Edge(
            e.white,
            e.black,
            (
                e.offset[0] + bs[e.black][0] - ws[e.white][0],
                e.offset[1] + bs[e.black][1] - ws[e.white][1],
            ),
        )
        for e in g.edges
    )
    return TorusGraph(g.num_white, g.num_black, edges, g.rotation)
