"""Perfect matchings, transition circuits, and height functions.

A matching is a sorted tuple of edge ids.  The homology exponent of a
matching is the sum of its edge offsets; the height change from a base
matching is the difference of homology exponents, which equals the homology
class of the transition graph (matching edges traversed white to black, base
edges reversed).

Height functions live on the faces of a lifted block.  Crossing an edge of
the transition graph changes the height by one, with the sign fixed so that
the height increases when the transition side is traversed from its right
face to its left face; under that convention the per-cell height increments
are the quarter-turn of the height change, (a, b) |-> (-b, a).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import (
    BadParameters,
    InconsistentHeights,
    InvalidMatching,
    NotCellular,
    Unbalanced,
    VerificationFailure,
    ZeroHomology,
)
from .torus_graph import PlanarPatch, TorusGraph, Vec2, compute_faces, require_valid

Matching = tuple[int, ...]


def as_matching(edge_ids) -> Matching:
    ids = sorted(int(e) for e in edge_ids)
    return tuple(ids)


def validate_matching(g: TorusGraph, m) -> Matching:
    """Return m as a sorted tuple, or raise InvalidMatching."""
    ids = as_matching(m)
    whites = [0] * g.num_white
    blacks = [0] * g.num_black
    seen = set()
    for e in ids:
        if not (0 <= e < len(g.edges)):
            raise InvalidMatching(f"edge id {e} out of range")
        if e in seen:
            raise InvalidMatching(f"edge id {e} repeated")
        seen.add(e)
        whites[g.edges[e].white] += 1
        blacks[g.edges[e].black] += 1
    for v, count in enumerate(whites):
        if count != 1:
            raise InvalidMatching(f"white vertex {v} covered {count} times")
    for v, count in enumerate(blacks):
        if count != 1:
            raise InvalidMatching(f"black vertex {v} covered {count} times")
    return ids


def white_incidence(g: TorusGraph) -> tuple[tuple[int, ...], ...]:
    inc: list[list[int]] = [[] for _ in range(g.num_white)]
    for eid, e in enumerate(g.edges):
        inc[e.white].append(eid)
    return tuple(tuple(lst) for lst in inc)


def enumerate_matchings(g: TorusGraph) -> list[Matching]:
    """All perfect matchings, sorted lexicographically as edge-id tuples.

    Backtracks over white vertices in index order.  Raises Unbalanced when
    num_white != num_black; an unmatchable balanced graph yields [].
    """
    require_valid(g)
    if g.num_white != g.num_black:
        raise Unbalanced(f"{g.num_white} whites vs {g.num_black} blacks")
    inc = white_incidence(g)
    black_used = [False] * g.num_black
    chosen: list[int] = []
    found: list[Matching] = []

    def extend(w: int) -> None:
        if w == g.num_white:
            found.append(tuple(sorted(chosen)))
            return
        for eid in inc[w]:
            b = g.edges[eid].black
            if not black_used[b]:
                black_used[b] = True
                chosen.append(eid)
                extend(w + 1)
                chosen.pop()
                black_used[b] = False

    extend(0)
    found.sort()
    return found


def uncovered_vertex_certificate(g: TorusGraph) -> tuple[str, int] | None:
    """A vertex with no incident edge, witnessing that no matching exists."""
    whites = set(e.white for e in g.edges)
    for v in range(g.num_white):
        if v not in whites:
            return ("white", v)
    blacks = set(e.black for e in g.edges)
    for v in range(g.num_black):
        if v not in blacks:
            return ("black", v)
    return None


# ---------------------------------------------------------------------------
# homology

def homology_exponent(g: TorusGraph, m) -> Vec2:
    """Sum of the edge offsets of a matching."""
    ids = validate_matching(g, m)
    x = y = 0
    for e in ids:
        dx, dy = g.edges[e].offset
        x += dx
        y += dy
    return (x, y)


def height_change(g: TorusGraph, base, m) -> Vec2:
    """Homology class of the transition graph of m against base."""
    bx, by = homology_exponent(g, base)
    mx, my = homology_exponent(g, m)
    return (mx - bx, my - by)


def rot90(v: Vec2) -> Vec2:
    return (-v[1], v[0])


# ---------------------------------------------------------------------------
# transition circuits

@dataclass(frozen=True)
class Circuit:
    """One alternating circuit: (edge, +1) sides from the matching traversed
    white to black, (edge, -1) sides from the base traversed black to white."""

    steps: tuple[tuple[int, int], ...]
    homology: Vec2

    def edges(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.steps)


@dataclass(frozen=True)
class TransitionCycles:
    circuits: tuple[Circuit, ...]
    discarded_pairs: int

    def total_homology(self) -> Vec2:
        x = sum(c.homology[0] for c in self.circuits)
        y = sum(c.homology[1] for c in self.circuits)
        return (x, y)


def transition_cycles(g: TorusGraph, base, m) -> TransitionCycles:
    """Decompose the transition graph into doubled edges and circuits.

    Circuits are reported in order of their smallest white vertex, each
    starting at that vertex with its matching edge.
    """
    base_ids = validate_matching(g, base)
    m_ids = validate_matching(g, m)
    m_of_white = {g.edges[e].white: e for e in m_ids}
    base_of_black = {g.edges[e].black: e for e in base_ids}
    doubled = set(base_ids) & set(m_ids)
    visited: set[int] = set(g.edges[e].white for e in doubled)
    circuits = []
    for w0 in range(g.num_white):
        if w0 in visited:
            continue
        steps: list[tuple[int, int]] = []
        hx = hy = 0
        w = w0
        while True:
            visited.add(w)
            fwd = m_of_white[w]
            steps.append((fwd, +1))
            hx += g.edges[fwd].offset[0]
            hy += g.edges[fwd].offset[1]
            back = base_of_black[g.edges[fwd].black]
            steps.append((back, -1))
            hx -= g.edges[back].offset[0]
            hy -= g.edges[back].offset[1]
            w = g.edges[back].white
            if w == w0:
                break
        circuits.append(Circuit(tuple(steps), (hx, hy)))
    return TransitionCycles(tuple(circuits), discarded_pairs=len(doubled))


@dataclass(frozen=True)
class DivideReport:
    applicable: bool
    total: Vec2
    d: int
    positives: int
    negatives: int
    zeros: int
    ok: bool


def check_divide_structure(tc: TransitionCycles) -> DivideReport:
    """Audit the circuit homologies of a transition graph.

    For total homology u != 0 and d = gcd(|u1|, |u2|), every circuit must
    have homology 0, +u/d or -u/d, and (#positive - #negative) must be d.
    With u = 0 the lemma does not apply and the report says so.
    """
    u = tc.total_homology()
    if u == (0, 0):
        return DivideReport(False, u, 0, 0, 0, sum(1 for _ in tc.circuits), True)
    d = gcd(abs(u[0]), abs(u[1]))
    step = (u[0] // d, u[1] // d)
    pos = neg = zero = 0
    ok = True
    for c in tc.circuits:
        if c.homology == step:
            pos += 1
        elif c.homology == (-step[0], -step[1]):
            neg += 1
        elif c.homology == (0, 0):
            zero += 1
        else:
            ok = False
    ok = ok and (pos - neg == d)
    return DivideReport(True, u, d, pos, neg, zero, ok)


def reduce_to_single_circuit(g: TorusGraph, base, m) -> Matching:
    """Keep one +u/d circuit of the transition graph and drop the rest.

    Returns a matching m' that agrees with base except along one circuit of
    homology u/d, where u = height_change(g, base, m) and d = gcd of |u|.
    Raises ZeroHomology when u = 0.
    """
    base_ids = validate_matching(g, base)
    m_ids = validate_matching(g, m)
    u = height_change(g, base_ids, m_ids)
    if u == (0, 0):
        raise ZeroHomology("transition graph has homology (0, 0)")
    d = gcd(abs(u[0]), abs(u[1]))
    step = (u[0] // d, u[1] // d)
    tc = transition_cycles(g, base_ids, m_ids)
    target = next((c for c in tc.circuits if c.homology == step), None)
    if target is None:
        raise VerificationFailure(
            f"no circuit of homology {step} in a transition graph of class {u}"
        )
    circuit_m = {e for e, s in target.steps if s == +1}
    circuit_base = {e for e, s in target.steps if s == -1}
    result = (set(base_ids) - circuit_base) | circuit_m
    out = validate_matching(g, result)
    check = transition_cycles(g, base_ids, out)
    if len(check.circuits) != 1 or check.circuits[0].homology != step:
        raise VerificationFailure("single-circuit reduction produced a wrong transition graph")
    return out


# ---------------------------------------------------------------------------
# height functions

@dataclass(frozen=True)
class HeightField:
    """Heights on face instances (face, cx, cy) of a lifted block."""

    k: int
    l: int
    base_face: tuple[int, int, int]
    heights: dict[tuple[int, int, int], int]


@dataclass(frozen=True)
class _PatchDual:
    """Dual adjacency of the face instances of a k x l block.

    Constraint (L, R, e): across any lift of edge e, the face left of the
    white-to-black side (L) and the face right of it (R) satisfy
    h[R] - h[L] = t(e), where t = 1 on matching edges, -1 on base edges,
    0 elsewhere: crossing a transition arc from its left to its right
    raises the height by the arc's sign.
    """

    num_nodes: int
    node_of: dict[tuple[int, int, int], int]
    nodes: tuple[tuple[int, int, int], ...]
    constraints: tuple[tuple[int, int, int], ...]
    adjacency: tuple[tuple[tuple[int, int, int], ...], ...]  # (nbr, edge, coef)


@lru_cache(maxsize=64)
def _patch_dual(g: TorusGraph, k: int, l: int) -> _PatchDual:
    fs = compute_faces(g)
    if not (fs.cellular and fs.closed):
        raise NotCellular("height functions need a cellular torus embedding")
    node_of: dict[tuple[int, int, int], int] = {}
    nodes: list[tuple[int, int, int]] = []
    for f in range(len(fs.faces)):
        for cx in range(k):
            for cy in range(l):
                node_of[(f, cx, cy)] = len(nodes)
                nodes.append((f, cx, cy))
    constraints: list[tuple[int, int, int]] = []
    adjacency: list[list[tuple[int, int, int]]] = [[] for _ in nodes]
    for eid, e in enumerate(g.edges):
        d_wb = 2 * eid
        d_bw = d_wb + 1
        lf = fs.face_of[d_wb]
        lo = fs.offset_in_face[d_wb]
        rf = fs.face_of[d_bw]
        ro = fs.offset_in_face[d_bw]
        for cx in range(k):
            for cy in range(l):
                lc = (lf, cx - lo[0], cy - lo[1])
                rc = (rf, cx + e.offset[0] - ro[0], cy + e.offset[1] - ro[1])
                li = node_of.get(lc)
                ri = node_of.get(rc)
                if li is None or ri is None:
                    continue
                constraints.append((li, ri, eid))
                # moving L -> R adds t(e); R -> L subtracts it
                adjacency[li].append((ri, eid, +1))
                adjacency[ri].append((li, eid, -1))
    return _PatchDual(
        num_nodes=len(nodes),
        node_of=node_of,
        nodes=tuple(nodes),
        constraints=tuple(constraints),
        adjacency=tuple(tuple(a) for a in adjacency),
    )


def _edge_weights(g: TorusGraph, base: Matching, m: Matching) -> list[int]:
    t = [0] * len(g.edges)
    for e in m:
        t[e] += 1
    for e in base:
        t[e] -= 1
    return t


def height_function(patch: PlanarPatch, base, m, base_face=None) -> HeightField:
    """Integrate the transition graph of (base, m) to heights on the patch.

    base_face is a (face, cx, cy) triple that gets height 0; it defaults to
    (0, 0, 0).  The patch must be at least 2 x 2 so both periods are visible.
    Every dual constraint is re-checked after integration; a violation means
    an implementation bug and raises InconsistentHeights.
    """
    g = patch.graph
    if patch.k < 2 or patch.l < 2:
        raise BadParameters("height functions need a block of at least 2x2 cells")
    base_ids = validate_matching(g, base)
    m_ids = validate_matching(g, m)
    dual = _patch_dual(g, patch.k, patch.l)
    if base_face is None:
        base_face = (0, 0, 0)
    else:
        base_face = (int(base_face[0]), int(base_face[1]), int(base_face[2]))
    start = dual.node_of.get(base_face)
    if start is None:
        raise BadParameters(f"base face {base_face} not in the patch")
    t = _edge_weights(g, base_ids, m_ids)
    h: list[int | None] = [None] * dual.num_nodes
    h[start] = 0
    queue = deque([start])
    while queue:
        a = queue.popleft()
        ha = h[a]
        for b, eid, coef in dual.adjacency[a]:
            hb = ha + coef * t[eid]
            if h[b] is None:
                h[b] = hb
                queue.append(b)
    for li, ri, eid in dual.constraints:
        if h[li] is None or h[ri] is None:
            continue
        if h[ri] - h[li] != t[eid]:
            raise InconsistentHeights(
                f"edge {eid}: h{dual.nodes[ri]} - h{dual.nodes[li]} != {t[eid]}"
            )
    heights = {dual.nodes[i]: hv for i, hv in enumerate(h) if hv is not None}
    return HeightField(patch.k, patch.l, base_face, heights)


def tilde_height_change(patch: PlanarPatch, base, m, base_face=None) -> Vec2:
    """Per-cell height increments (h(F+(1,0)) - h(F), h(F+(0,1)) - h(F)).

    The increment must be the same for every face instance; a disagreement
    raises InconsistentHeights.
    """
    field = height_function(patch, base, m, base_face)
    return _field_periods(field)


def _field_periods(field: HeightField) -> Vec2:
    h = field.heights
    dx = _uniform_difference(h, 1, 0)
    dy = _uniform_difference(h, 0, 1)
    return (dx, dy)


def _uniform_difference(h: dict, sx: int, sy: int) -> int:
    value: int | None = None
    for (f, cx, cy), hv in h.items():
        other = h.get((f, cx + sx, cy + sy))
        if other is None:
            continue
        diff = other - hv
        if value is None:
            value = diff
        elif value != diff:
            raise InconsistentHeights(
                f"period in direction ({sx},{sy}) not constant: {value} vs {diff}"
            )
    if value is None:
        raise BadParameters("patch too small to read off a height period")
    return value
