"""Shared builders and independent oracles for the test suite.

The random-graph generator only applies embedding-preserving moves (face
splits, edge subdivisions, edge deletions between distinct faces, gauges)
to family seeds, so every emitted graph is a genuine cellular torus
embedding carrying a known perfect matching.  Arbitrary offset-labelled
multigraphs would not do: a 4-cycle whose offsets sum to (2, 0) is a legal
data structure but admits no torus embedding, and the support theorems do
not apply to it.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import gcd
from random import Random

from torusdimer import (
    BadParameters,
    Edge,
    LatticeBasis,
    TorusGraph,
    apply_gauge,
    boundary_point_count,
    build_bnr,
    build_honeycomb,
    compute_faces,
    lift_block,
    polygon_area2,
    require_valid,
    tilde_height_change,
    torus_graph,
    validate_matching,
)


# ---------------------------------------------------------------------------
# deterministic builders

def honeycomb_cell() -> TorusGraph:
    return build_bnr(1, 0).graph


def square_grid_torus(k: int, l: int) -> TorusGraph:
    """k x l square-grid torus quotient, k and l even, checkerboard colors.

    White (x, y) carries edges 4i+0..4i+3 toward east, north, west, south.
    """
    assert k >= 2 and l >= 2 and k % 2 == 0 and l % 2 == 0
    whites = [(x, y) for x in range(k) for y in range(l) if (x + y) % 2 == 0]
    blacks = [(x, y) for x in range(k) for y in range(l) if (x + y) % 2 == 1]
    wi = {c: i for i, c in enumerate(whites)}
    bi = {c: i for i, c in enumerate(blacks)}

    def step(c, dx, dy):
        x, y = c
        return (
            ((x + dx) % k, (y + dy) % l),
            ((x + dx) // k if dx >= 0 else -(x == 0), 0)
            if dy == 0
            else (0, (y + dy) // l if dy >= 0 else -(y == 0)),
        )

    edges = []
    for c in whites:
        for dx, dy in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            target, off = step(c, dx, dy)
            edges.append((wi[c], bi[target], off[0], off[1]))
    white_rot = [(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i in range(len(whites))]
    black_rot = []
    for c in blacks:
        x, y = c
        black_rot.append(
            (
                4 * wi[((x + 1) % k, y)] + 2,
                4 * wi[(x, (y + 1) % l)] + 3,
                4 * wi[((x - 1) % k, y)] + 0,
                4 * wi[(x, (y - 1) % l)] + 1,
            )
        )
    return torus_graph(len(whites), len(blacks), edges, (white_rot, black_rot))


def grid_east_matching(g: TorusGraph) -> tuple[int, ...]:
    return tuple(4 * i for i in range(g.num_white))


def hnf_period_matrices(max_det: int):
    """All period matrices ((p, q), (0, s)) with p*s <= max_det, 0 <= q < p.

    Their column lattices are exactly the sublattices of Z^2 of index up to
    max_det, each appearing once.
    """
    out = []
    for p in range(1, max_det + 1):
        for s in range(1, max_det // p + 1):
            for q in range(p):
                out.append(((p, q), (0, s)))
    return out


def hnf_lattices(max_vol: int) -> list[LatticeBasis]:
    return [
        LatticeBasis(p=m[0][0], q=m[0][1], s=m[1][1])
        for m in hnf_period_matrices(max_vol)
    ]


# ---------------------------------------------------------------------------
# independent oracles

def oracle_matchings(g: TorusGraph) -> list[tuple[int, ...]]:
    """Perfect matchings by brute subset scan, in lexicographic order."""
    n = g.num_white
    assert g.num_white == g.num_black
    out = []
    for combo in combinations(range(len(g.edges)), n):
        ws = sorted(g.edges[e].white for e in combo)
        bs = sorted(g.edges[e].black for e in combo)
        if ws == list(range(n)) and bs == list(range(n)):
            out.append(combo)
    return out


def pick_point_count(hull) -> int:
    """Lattice points in a hull via the area and boundary counts."""
    if len(hull) == 0:
        return 0
    if len(hull) == 1:
        return 1
    if len(hull) == 2:
        (x1, y1), (x2, y2) = hull
        return gcd(abs(x2 - x1), abs(y2 - y1)) + 1
    area2 = polygon_area2(hull)
    b = boundary_point_count(hull)
    assert (area2 + b) % 2 == 0
    return (area2 + b + 2) // 2


def exhaustive_staircase(basis: LatticeBasis, v) -> bool:
    """Does any monotone staircase 0 -> v keep all node differences off the
    lattice (endpoints excepted)?  Plain depth-first search."""
    if v == (0, 0):
        return False
    found = False

    def extend(points):
        nonlocal found
        if found:
            return
        last = points[-1]
        if last == v:
            found = True
            return
        for dx, dy in ((1, 0), (0, 1)):
            q = (last[0] + dx, last[1] + dy)
            if q[0] > v[0] or q[1] > v[1]:
                continue
            ok = True
            for t in points:
                if t == (0, 0) and q == v:
                    continue
                if basis.contains((q[0] - t[0], q[1] - t[1])):
                    ok = False
                    break
            if ok:
                extend(points + [q])

    extend([(0, 0)])
    return found


def height_window(g: TorusGraph, m):
    """(patch, anchor) big enough to read both height periods of g.

    Reachability in the windowed dual depends only on the graph, not on the
    matching pair, so one probe with the trivial pair settles the size.  The
    anchor sits at the window center, where reach is best.
    """
    for size in (2, 3, 4, 6, 8, 10, 14, 18):
        patch = lift_block(g, size, size)
        anchor = (0, size // 2, size // 2)
        try:
            tilde_height_change(patch, m, m, anchor)
        except BadParameters:
            continue
        return patch, anchor
    raise AssertionError("no window size up to 18 reads both periods")


# ---------------------------------------------------------------------------
# embedding-preserving random moves

def _rot_lists(g: TorusGraph):
    return (
        [list(lst) for lst in g.rotation.white],
        [list(lst) for lst in g.rotation.black],
    )


def face_split(g: TorusGraph, rng: Random) -> TorusGraph:
    """Insert a chord between a white and a black corner of one face.

    The chord's offset is the cell difference of the two corners in the
    lifted face, which keeps every face a disc.
    """
    fs = compute_faces(g)
    f = rng.randrange(len(fs.faces))
    face = fs.faces[f]
    i = rng.choice([k for k, d in enumerate(face) if d % 2 == 0])
    j = rng.choice([k for k, d in enumerate(face) if d % 2 == 1])
    di, dj = face[i], face[j]
    w = g.edges[di // 2].white
    b = g.edges[dj // 2].black
    pre_i = fs.offset_in_face[di]
    pre_j = fs.offset_in_face[dj]
    new_id = len(g.edges)
    edges = list(g.edges)
    edges.append(Edge(w, b, (pre_j[0] - pre_i[0], pre_j[1] - pre_i[1])))
    wrot, brot = _rot_lists(g)
    wrot[w].insert(wrot[w].index(di // 2), new_id)
    brot[b].insert(brot[b].index(dj // 2), new_id)
    return torus_graph(g.num_white, g.num_black, edges, (wrot, brot))


def subdivide_edge(g: TorusGraph, rng: Random, m: tuple[int, ...]):
    """Replace an edge by a three-edge path through two fresh vertices."""
    e = rng.randrange(len(g.edges))
    old = g.edges[e]
    new_b = g.num_black
    new_w = g.num_white
    mid = len(g.edges)
    last = mid + 1
    edges = list(g.edges)
    edges[e] = Edge(old.white, new_b, (0, 0))
    edges.append(Edge(new_w, new_b, (0, 0)))
    edges.append(Edge(new_w, old.black, old.offset))
    wrot, brot = _rot_lists(g)
    brot[old.black][brot[old.black].index(e)] = last
    wrot.append([mid, last])
    brot.append([e, mid])
    g2 = torus_graph(g.num_white + 1, g.num_black + 1, edges, (wrot, brot))
    if e in m:
        m2 = tuple(sorted(set(m) | {last}))
    else:
        m2 = tuple(sorted(set(m) | {mid}))
    return g2, m2


def delete_edge(g: TorusGraph, rng: Random, m: tuple[int, ...]):
    """Remove a non-matching edge whose two sides lie on distinct faces.

    Merging two distinct disc faces along one edge leaves a disc, so the
    embedding stays cellular; degree-1 endpoints are left alone.
    """
    fs = compute_faces(g)
    deg_w = Counter(e.white for e in g.edges)
    deg_b = Counter(e.black for e in g.edges)
    protected = set(m)
    candidates = [
        e
        for e in range(len(g.edges))
        if e not in protected
        and fs.face_of[2 * e] != fs.face_of[2 * e + 1]
        and deg_w[g.edges[e].white] > 1
        and deg_b[g.edges[e].black] > 1
    ]
    if not candidates:
        return None
    e = rng.choice(candidates)

    def remap(x: int) -> int:
        return x - 1 if x > e else x

    edges = [ed for k, ed in enumerate(g.edges) if k != e]
    wrot = [[remap(x) for x in lst if x != e] for lst in g.rotation.white]
    brot = [[remap(x) for x in lst if x != e] for lst in g.rotation.black]
    m2 = tuple(sorted(remap(x) for x in m))
    return torus_graph(g.num_white, g.num_black, edges, (wrot, brot)), m2


def random_gauge(g: TorusGraph, rng: Random) -> TorusGraph:
    # unit shifts keep lifted faces compact, so height windows stay small
    ws = [(rng.randint(-1, 1), rng.randint(-1, 1)) for _ in range(g.num_white)]
    bs = [(rng.randint(-1, 1), rng.randint(-1, 1)) for _ in range(g.num_black)]
    return apply_gauge(g, ws, bs)


def random_embedded_graph(rng: Random, max_whites: int = 8, max_edges: int = 24):
    """(graph, matching): a random cellular torus embedding with a witness
    matching, grown from a family seed by embedding-preserving moves."""
    kind = rng.randrange(3)
    if kind == 0:
        n = rng.randint(1, 4)
        r = rng.randrange(n)
        bnr = build_bnr(n, r)
        g, m = bnr.graph, bnr.base_matching
    elif kind == 1:
        p = rng.randint(1, 4)
        s = rng.randint(1, max(1, 4 // p))
        q = rng.randrange(p)
        h = build_honeycomb(((p, q), (0, s)))
        g, m = h.graph, h.matching_of_type("z")
    else:
        g = square_grid_torus(2, 2)
        m = grid_east_matching(g)
    for _ in range(rng.randrange(7)):
        op = rng.choice(("split", "split", "subdivide", "delete", "gauge"))
        if op == "split" and len(g.edges) < max_edges:
            g = face_split(g, rng)
        elif op == "subdivide" and g.num_white < max_whites and len(g.edges) + 2 <= max_edges:
            g, m = subdivide_edge(g, rng, m)
        elif op == "delete":
            result = delete_edge(g, rng, m)
            if result is not None:
                g, m = result
        elif op == "gauge":
            g = random_gauge(g, rng)
    require_valid(g)
    fs = compute_faces(g)
    assert fs.cellular and fs.closed
    validate_matching(g, m)
    return g, m
