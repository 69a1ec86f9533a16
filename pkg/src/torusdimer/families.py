"""Generators for two toroidal graph families.

B(n, r): n whites and n blacks in a cycle, three edges per white (stay,
step by one, step by r), wired so matchings correspond to vertex-disjoint
circuit covers of the circulant digraph C(n; 1, r).  realize_height_change
turns a visible point of the realization triangle into a matching through
the staircase-path construction, one circulant arc per path step.

Honeycomb quotients: the hexagonal lattice (one white, one black, three
edges per cell) divided by an integer period matrix B, with |det B| cells
indexed by Hermite-form coset representatives.  The three edge types give
three constant matchings; every matching's height change is an exact
rational combination of the two relative vectors H_x and H_y, which
lozenge_convex_combination_check verifies matching by matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import gcd

from .circulant import (
    CirculantDigraph,
    LatticeBasis,
    build_lattice_path,
    circuit_lattice,
    path_to_circuit,
    visible_in_z2,
)
from .errors import (
    BadParameters,
    NotVisible,
    OutsideTriangle,
    SingularMatrix,
    VerificationFailure,
)
from .matchings import (
    Matching,
    enumerate_matchings,
    height_change,
    transition_cycles,
    validate_matching,
)
from .newton import NewtonReport, convex_hull, full_support_report, lattice_points
from .torus_graph import TorusGraph, Vec2, compute_faces, require_valid, torus_graph

Mat2 = tuple[Vec2, Vec2]  # rows of a 2x2 integer matrix


# ---------------------------------------------------------------------------
# the B(n, r) family

@dataclass(frozen=True)
class BnrGraph:
    """B(n, r) with typed edges: white i carries edge 3i (stay, to black i,
    offset (0,0)), 3i+1 (step, to black i+1, offset (1,0) on the wrap) and
    3i+2 (jump, to black i+r, offset (floor((i+r)/n), 1))."""

    n: int
    r: int
    graph: TorusGraph

    @property
    def base_matching(self) -> Matching:
        return tuple(3 * i for i in range(self.n))

    @property
    def step_matching(self) -> Matching:
        return tuple(3 * i + 1 for i in range(self.n))

    @property
    def jump_matching(self) -> Matching:
        return tuple(3 * i + 2 for i in range(self.n))


def build_bnr(n: int, r: int) -> BnrGraph:
    """Construct B(n, r) with its canonical rotation system."""
    if n < 1 or not 0 <= r < n:
        raise BadParameters(f"need n >= 1 and 0 <= r < n, got n={n}, r={r}")
    edges = []
    for i in range(n):
        edges.append((i, i, 0, 0))
        edges.append((i, (i + 1) % n, 1 if i + 1 == n else 0, 0))
        edges.append((i, (i + r) % n, (i + r) // n, 1))
    white_rot = [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(n)]
    black_rot = [
        (3 * j, 3 * ((j - 1) % n) + 1, 3 * ((j - r) % n) + 2) for j in range(n)
    ]
    g = torus_graph(n, n, edges, (white_rot, black_rot))
    require_valid(g)
    fs = compute_faces(g)
    assert fs.cellular and fs.closed
    return BnrGraph(n, r, g)


@dataclass(frozen=True)
class RealizationTriangle:
    """Triangle with vertices (0,0), (1,0), (r,n); the set of height changes
    of B(n, r) relative to the stay matching when gcd(r, n) = 1."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 1 or not 0 <= self.r < max(self.n, 1):
            raise BadParameters(f"need 0 <= r < n, got n={self.n}, r={self.r}")
        if gcd(self.r, self.n) != 1:
            raise BadParameters(f"need gcd(r, n) = 1, got r={self.r}, n={self.n}")

    @property
    def vertices(self) -> tuple[Vec2, Vec2, Vec2]:
        return ((0, 0), (1, 0), (self.r, self.n))

    def abelianized(self, u: Vec2) -> Vec2:
        """(x, y) -> (n x - r y, y): arc counts of the circuit realizing u."""
        return (self.n * u[0] - self.r * u[1], u[1])

    def contains(self, u: Vec2) -> bool:
        tx, ty = self.abelianized(u)
        return ty >= 0 and tx >= 0 and tx + ty <= self.n

    def points(self) -> tuple[Vec2, ...]:
        return tuple(sorted(lattice_points(convex_hull(self.vertices))))


def realize_height_change(n: int, r: int, u, allow_search: bool = False) -> Matching:
    """Matching of B(n, r) whose height change against the stay matching is u.

    For visible u the construction is direct: walk the staircase path for
    the arc-count vector of u, matching each visited white along its circuit
    arc and every other white to its own black.  Non-visible points are only
    found by enumeration, which must be requested with allow_search.
    """
    tri = RealizationTriangle(n, r)
    u = (int(u[0]), int(u[1]))
    if not tri.contains(u):
        raise OutsideTriangle(f"{u} is outside the triangle {tri.vertices}")
    bnr = build_bnr(n, r)
    if u == (0, 0):
        return bnr.base_matching
    if not visible_in_z2(u):
        if not allow_search:
            raise NotVisible(
                f"{u} has gcd {gcd(abs(u[0]), abs(u[1]))} > 1; "
                "pass allow_search=True to fall back to enumeration"
            )
        for m in enumerate_matchings(bnr.graph):
            if height_change(bnr.graph, bnr.base_matching, m) == u:
                return m
        raise VerificationFailure(f"no matching of B({n},{r}) realizes {u}")
    target = tri.abelianized(u)
    basis = circuit_lattice(n, 1, r)
    assert target[0] + target[1] <= n
    path = build_lattice_path(basis, target)
    cycle = path_to_circuit(CirculantDigraph(n, 1, r), path)
    chosen: dict[int, int] = {}
    for k in range(len(path) - 1):
        step = (path[k + 1][0] - path[k][0], path[k + 1][1] - path[k][1])
        w = cycle[k]
        chosen[w] = 3 * w + 1 if step == (1, 0) else 3 * w + 2
    m = tuple(sorted(chosen.get(i, 3 * i) for i in range(n)))
    validate_matching(bnr.graph, m)
    got = height_change(bnr.graph, bnr.base_matching, m)
    tc = transition_cycles(bnr.graph, bnr.base_matching, m)
    if got != u or len(tc.circuits) != 1:
        raise VerificationFailure(
            f"realization of {u} on B({n},{r}) produced height change {got} "
            f"with {len(tc.circuits)} circuits"
        )
    return m


def bnr_full_support(n: int, r: int, check_realizations: bool = True) -> NewtonReport:
    """Enumerate B(n, r), audit its support against the triangle.

    Verifies that the realized height changes are exactly the triangle's
    lattice points and (optionally) that the direct construction hits every
    visible one.  Any discrepancy raises VerificationFailure.
    """
    tri = RealizationTriangle(n, r)
    bnr = build_bnr(n, r)
    report = full_support_report(bnr.graph, bnr.base_matching)
    expected = tri.points()
    if tuple(sorted(report.realized_points())) != expected:
        raise VerificationFailure(
            f"B({n},{r}) support {sorted(report.realized_points())} is not the "
            f"triangle point set {expected}"
        )
    if check_realizations:
        for point in expected:
            if visible_in_z2(point):
                realize_height_change(n, r, point)
    return report


# ---------------------------------------------------------------------------
# honeycomb quotients

def _det(b: Mat2) -> int:
    return b[0][0] * b[1][1] - b[0][1] * b[1][0]


def _adjugate(b: Mat2) -> Mat2:
    return ((b[1][1], -b[0][1]), (-b[1][0], b[0][0]))


def _apply(m: Mat2, v: Vec2) -> Vec2:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


@dataclass(frozen=True)
class HoneycombQuotient:
    """Hexagonal lattice modulo the lattice spanned by the columns of the
    period matrix.  Cell c has white w_c and black b_c; edge types z, x, y
    join w_c to b_c, b_{c+(1,0)}, b_{c+(0,1)} and get edge ids 3t, 3t+1,
    3t+2 where t is the coset index of c.  Offsets are coordinates in the
    period basis, so homology vectors live in Z^2 regardless of B."""

    period: Mat2
    hnf: LatticeBasis
    graph: TorusGraph
    cosets: tuple[Vec2, ...]

    @property
    def determinant(self) -> int:
        return _det(self.period)

    @property
    def cells(self) -> int:
        return abs(self.determinant)

    def reduce(self, cell) -> Vec2:
        """Coset representative of a cell: (i, j) with 0 <= i < p, 0 <= j < s."""
        x, y = int(cell[0]), int(cell[1])
        j = y % self.hnf.s
        k = (y - j) // self.hnf.s
        i = (x - k * self.hnf.q) % self.hnf.p
        return (i, j)

    def index_of(self, cell) -> int:
        i, j = self.reduce(cell)
        return i * self.hnf.s + j

    def matching_of_type(self, kind: str) -> Matching:
        shift = {"z": 0, "x": 1, "y": 2}[kind]
        return tuple(3 * t + shift for t in range(self.cells))

    def type_counts(self, m) -> tuple[int, int, int]:
        """(x, y, z) edge-type counts of a matching."""
        counts = [0, 0, 0]
        for e in m:
            counts[e % 3] += 1
        return (counts[1], counts[2], counts[0])


def build_honeycomb(period) -> HoneycombQuotient:
    """Quotient of the hexagonal lattice by the columns of a 2x2 matrix."""
    b: Mat2 = (
        (int(period[0][0]), int(period[0][1])),
        (int(period[1][0]), int(period[1][1])),
    )
    det = _det(b)
    if det == 0:
        raise SingularMatrix(f"period matrix {b} is singular")
    hnf = LatticeBasis.from_generators((b[0][0], b[1][0]), (b[0][1], b[1][1]))
    cosets = tuple((i, j) for i in range(hnf.p) for j in range(hnf.s))
    index = {c: t for t, c in enumerate(cosets)}
    adj = _adjugate(b)

    def reduce(x: int, y: int) -> Vec2:
        j = y % hnf.s
        k = (y - j) // hnf.s
        return ((x - k * hnf.q) % hnf.p, j)

    def offset(cell: Vec2, delta: Vec2) -> Vec2:
        tx, ty = cell[0] + delta[0], cell[1] + delta[1]
        rx, ry = reduce(tx, ty)
        wx, wy = tx - rx, ty - ry
        ox, oy = _apply(adj, (wx, wy))
        assert ox % det == 0 and oy % det == 0
        return (ox // det, oy // det)

    edges = []
    for c in cosets:
        t = index[c]
        for delta in ((0, 0), (1, 0), (0, 1)):
            black = index[reduce(c[0] + delta[0], c[1] + delta[1])]
            dx, dy = offset(c, delta)
            edges.append((t, black, dx, dy))
    white_rot = [(3 * t, 3 * t + 1, 3 * t + 2) for t in range(len(cosets))]
    black_rot = []
    for c in cosets:
        black_rot.append(
            (
                3 * index[c],
                3 * index[reduce(c[0] - 1, c[1])] + 1,
                3 * index[reduce(c[0], c[1] - 1)] + 2,
            )
        )
    g = torus_graph(len(cosets), len(cosets), edges, (white_rot, black_rot))
    require_valid(g)
    fs = compute_faces(g)
    assert fs.cellular and fs.closed
    return HoneycombQuotient(b, hnf, g, cosets)


@dataclass(frozen=True)
class LozengeReport:
    """Per-matching audit of the combination identity: with D = cells and
    H_x, H_y the height changes of the constant x- and y-matchings against
    the constant z-matching, every matching with type counts (x, y, z)
    satisfies D * height_change = x*H_x + y*H_y and x + y + z = D."""

    cells: int
    h_x: Vec2
    h_y: Vec2
    matchings: int
    failures: tuple[int, ...]
    ok: bool


def constant_height_changes(h: HoneycombQuotient) -> tuple[Vec2, Vec2]:
    """(H_x, H_y): height changes of the x- and y-matchings over the
    z-matching.  Equal to sign(det) times the adjugate columns."""
    base = h.matching_of_type("z")
    hx = height_change(h.graph, base, h.matching_of_type("x"))
    hy = height_change(h.graph, base, h.matching_of_type("y"))
    return hx, hy


def lozenge_convex_combination_check(h: HoneycombQuotient) -> LozengeReport:
    """Verify the combination identity on every matching of the quotient."""
    base = h.matching_of_type("z")
    h_x, h_y = constant_height_changes(h)
    d = h.cells
    failures = []
    all_matchings = enumerate_matchings(h.graph)
    for idx, m in enumerate(all_matchings):
        x, y, z = h.type_counts(m)
        change = height_change(h.graph, base, m)
        scaled = (d * change[0], d * change[1])
        combo = (x * h_x[0] + y * h_y[0], x * h_x[1] + y * h_y[1])
        if x + y + z != d or scaled != combo:
            failures.append(idx)
    return LozengeReport(
        cells=d,
        h_x=h_x,
        h_y=h_y,
        matchings=len(all_matchings),
        failures=tuple(failures),
        ok=not failures,
    )


# ---------------------------------------------------------------------------
# convention map against an externally drawn height-change triple

REFERENCE_PERIOD: Mat2 = ((3, -5), (4, 4))
REFERENCE_TRIPLE: tuple[Vec2, Vec2, Vec2] = ((1, 9), (-11, -3), (10, -6))


@dataclass(frozen=True)
class ConventionMapReport:
    """Search result relating an externally recorded height-change triple
    (one vector per constant matching, drawn under unknown axis conventions
    and an absolute normalization three times finer) to this library's
    relative vectors.  A match is a unimodular matrix M and a role
    assignment (ours x, y, z -> triple positions) with
    M*(triple[x] - triple[z]) = 3*H_x and M*(triple[y] - triple[z]) = 3*H_y.
    Reported for the record, never asserted."""

    period: Mat2
    triple: tuple[Vec2, Vec2, Vec2]
    h_x: Vec2
    h_y: Vec2
    matches: tuple[tuple[Mat2, tuple[int, int, int]], ...]
    found: bool


def convention_map_report(
    period: Mat2 = REFERENCE_PERIOD,
    triple: tuple[Vec2, Vec2, Vec2] = REFERENCE_TRIPLE,
) -> ConventionMapReport:
    h = build_honeycomb(period)
    h_x, h_y = constant_height_changes(h)
    target_x = (3 * h_x[0], 3 * h_x[1])
    target_y = (3 * h_y[0], 3 * h_y[1])
    matches = []
    for roles in permutations(range(3)):
        dx = tuple(triple[roles[0]][k] - triple[roles[2]][k] for k in range(2))
        dy = tuple(triple[roles[1]][k] - triple[roles[2]][k] for k in range(2))
        for entries in product((-1, 0, 1), repeat=4):
            m: Mat2 = ((entries[0], entries[1]), (entries[2], entries[3]))
            if abs(_det(m)) != 1:
                continue
            if _apply(m, dx) == target_x and _apply(m, dy) == target_y:
                matches.append((m, roles))
    return ConventionMapReport(
        period=(tuple(period[0]), tuple(period[1])),
        triple=tuple(triple),
        h_x=h_x,
        h_y=h_y,
        matches=tuple(matches),
        found=bool(matches),
    )
