"""Circulant digraphs, circuit lattices, staircase paths, Hamiltonicity.

The digraph C(n; a, b) has vertices Z/nZ and arcs i -> i+a, i -> i+b.  A
closed walk with u arcs of jump a and v arcs of jump b exists around each
vertex exactly when au + bv = 0 mod n; those pairs (u, v) form the circuit
lattice, a rank-2 sublattice of Z^2 of volume n when gcd(n, a, b) = 1.

build_lattice_path turns a visible lattice vector into a monotone staircase
whose node differences avoid the lattice, and path_to_circuit maps such a
staircase to a simple directed circuit.  Three Hamiltonicity deciders (an
arithmetic scan, the visibility construction, and plain DFS) cross-check
each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    BadParameters,
    BruteForceTooLarge,
    Disconnected,
    NotClosed,
    NotInLattice,
    PreconditionViolated,
    RepeatedVertex,
    SingularMatrix,
    VerificationFailure,
)
from .torus_graph import Vec2

BRUTE_FORCE_LIMIT = 12


def visible_in_z2(v: Vec2) -> bool:
    """Visibility in Z^2: the origin counts, otherwise coprime coordinates."""
    x, y = v
    return (x, y) == (0, 0) or gcd(abs(x), abs(y)) == 1


@dataclass(frozen=True)
class CirculantDigraph:
    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BadParameters(f"n must be >= 1, got {self.n}")
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "b", self.b % self.n)

    @property
    def connected(self) -> bool:
        return gcd(self.n, self.a, self.b) == 1

    def out_neighbors(self, i: int) -> tuple[int, ...]:
        first = (i + self.a) % self.n
        second = (i + self.b) % self.n
        return (first,) if first == second else (first, second)


@dataclass(frozen=True)
class LatticeBasis:
    """Rank-2 sublattice of Z^2 with basis vectors (p, 0) and (q, s).

    Hermite form: p > 0, s > 0, 0 <= q < p.  volume = p * s.
    """

    p: int
    q: int
    s: int

    def __post_init__(self) -> None:
        if self.p <= 0 or self.s <= 0 or not 0 <= self.q < self.p:
            raise BadParameters(
                f"not a Hermite basis: p={self.p}, q={self.q}, s={self.s}"
            )

    @classmethod
    def from_generators(cls, v1: Vec2, v2: Vec2) -> "LatticeBasis":
        a1, b1 = v1
        a2, b2 = v2
        det = a1 * b2 - a2 * b1
        if det == 0:
            raise SingularMatrix(f"generators {v1}, {v2} do not span a rank-2 lattice")
        # Combine generators to reach the minimal positive second coordinate,
        # then reduce the first coordinate modulo the horizontal generator.
        g = gcd(b1, b2)
        x0, y0 = _bezout(b1, b2)
        p = abs(det) // g
        q = (a1 * x0 + a2 * y0) % p
        return cls(p=p, q=q, s=g)

    @property
    def volume(self) -> int:
        return self.p * self.s

    def vectors(self) -> tuple[Vec2, Vec2]:
        return ((self.p, 0), (self.q, self.s))

    def contains(self, v: Vec2) -> bool:
        u, w = v
        if w % self.s != 0:
            return False
        return (u - (w // self.s) * self.q) % self.p == 0


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(x, y) with a*x + b*y = gcd(a, b), the nonnegative gcd."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_x, x = x, old_x - qt * x
        old_y, y = y, old_y - qt * y
    if old_r < 0:
        return (-old_x, -old_y)
    return (old_x, old_y)


def circuit_lattice(n: int, a: int, b: int) -> LatticeBasis:
    """Lattice {(u, v) : au + bv = 0 mod n}, volume n.

    Requires gcd(n, a, b) = 1; a disconnected digraph has a coarser lattice
    and none of the path machinery applies to it.
    """
    if n < 1:
        raise BadParameters(f"n must be >= 1, got {n}")
    a %= n
    b %= n
    if gcd(n, gcd(a, b)) != 1:
        raise Disconnected(f"gcd({n}, {a}, {b}) != 1")
    g = gcd(a, n)
    p = n // g
    s = g
    q = 0 if p == 1 else (-b * pow(a // g, -1, p)) % p
    basis = LatticeBasis(p=p, q=q, s=s)
    assert basis.volume == n
    return basis


def visible_in_lattice(basis: LatticeBasis, v: Vec2) -> bool:
    """Segment visibility: no other lattice point strictly between 0 and v.

    The origin itself is not visible (the segment degenerates).  This is a
    different predicate from visible_in_z2, which admits the origin.
    """
    if not basis.contains(v):
        raise NotInLattice(f"{v} is not in the lattice {basis.vectors()}")
    if v == (0, 0):
        return False
    g = gcd(abs(v[0]), abs(v[1]))
    for d in range(2, g + 1):
        if g % d == 0 and basis.contains((v[0] // d, v[1] // d)):
            return False
    return True


LatticePath = tuple[Vec2, ...]


def build_lattice_path(basis: LatticeBasis, v: Vec2) -> LatticePath:
    """Monotone staircase 0 -> v whose node differences avoid the lattice.

    Needs v in the lattice and the closed first quadrant, v visible, and
    |v|_1 <= volume.  Node i sits on the diagonal x + y = i at the integer
    point nearest to the segment from 0 to v, ties to the bigger first
    coordinate.  Every returned path passes a full pairwise difference audit.
    """
    if v[0] < 0 or v[1] < 0 or not basis.contains(v):
        raise PreconditionViolated(
            "membership", f"{v} is not in the lattice intersected with N^2"
        )
    if not visible_in_lattice(basis, v):
        raise PreconditionViolated("visibility", f"{v} is not visible in the lattice")
    length = v[0] + v[1]
    if length > basis.volume:
        raise PreconditionViolated(
            "norm", f"|{v}|_1 = {length} exceeds the lattice volume {basis.volume}"
        )
    # Rounding half up implements the bigger-first-coordinate tie rule.
    path = []
    for i in range(length + 1):
        x = (2 * v[0] * i + length) // (2 * length)
        path.append((x, i - x))
    for i in range(length + 1):
        for j in range(i + 1, length + 1):
            if (i, j) == (0, length):
                continue
            diff = (path[j][0] - path[i][0], path[j][1] - path[i][1])
            if basis.contains(diff):
                raise VerificationFailure(
                    f"path node difference {diff} (nodes {i}, {j}) lies in the "
                    f"lattice {basis.vectors()} despite valid preconditions"
                )
    return tuple(path)


def path_to_circuit(c: CirculantDigraph, path: LatticePath) -> tuple[int, ...]:
    """Read a staircase as a directed circuit in C(n; a, b).

    Node (x, y) maps to the vertex a*x + b*y mod n; an x-step is an a-arc
    and a y-step a b-arc.  The endpoint must map back to the start and the
    interior vertices must be pairwise distinct.
    """
    if len(path) < 2:
        raise NotClosed(f"path of {len(path)} nodes traces no circuit")
    if path[0] != (0, 0):
        raise BadParameters(f"path must start at (0, 0), got {path[0]}")
    for k in range(1, len(path)):
        step = (path[k][0] - path[k - 1][0], path[k][1] - path[k - 1][1])
        if step not in ((1, 0), (0, 1)):
            raise BadParameters(f"non-staircase step {step} at position {k}")
    end = path[-1]
    if (c.a * end[0] + c.b * end[1]) % c.n != 0:
        raise NotClosed(f"endpoint {end} does not return to vertex 0")
    vertices = []
    for x, y in path[:-1]:
        vertices.append((c.a * x + c.b * y) % c.n)
    if len(set(vertices)) != len(vertices):
        raise RepeatedVertex(f"vertex sequence {vertices} revisits a vertex")
    return tuple(vertices)


METHODS = ("rankin", "visibility", "brute_force", "cross_check")


@dataclass(frozen=True)
class HamiltonicityResult:
    hamiltonian: bool
    method: str
    witness: tuple[int, ...] | None
    agreed: tuple[tuple[str, bool], ...] = ()


def _rankin(c: CirculantDigraph) -> bool:
    # Scan i + j = d = gcd(b - a, n) for gcd(a*i + b*j, n) = d.
    d = gcd(abs(c.b - c.a), c.n)
    for i in range(d + 1):
        j = d - i
        if gcd(c.a * i + c.b * j, c.n) == d:
            return True
    return False


def _diagonal_points(c: CirculantDigraph) -> tuple[Vec2, ...]:
    # The circuit lattice meets the diagonal x + y = n in d + 1 points.
    d = gcd(abs(c.b - c.a), c.n)
    step = c.n // d
    return tuple((c.n - i * step, i * step) for i in range(d + 1))


def _visibility(c: CirculantDigraph) -> tuple[bool, tuple[int, ...] | None]:
    basis = circuit_lattice(c.n, c.a, c.b)
    for point in _diagonal_points(c):
        if visible_in_lattice(basis, point):
            path = build_lattice_path(basis, point)
            cycle = path_to_circuit(c, path)
            return True, cycle
    return False, None


def _brute_force(c: CirculantDigraph) -> tuple[bool, tuple[int, ...] | None]:
    if c.n > BRUTE_FORCE_LIMIT:
        raise BruteForceTooLarge(f"n = {c.n} exceeds the DFS bound {BRUTE_FORCE_LIMIT}")
    if c.n == 1:
        return True, (0,)
    seen = [False] * c.n
    seen[0] = True
    trail = [0]

    def extend(vertex: int, remaining: int) -> bool:
        if remaining == 0:
            return 0 in c.out_neighbors(vertex)
        for nxt in c.out_neighbors(vertex):
            if not seen[nxt]:
                seen[nxt] = True
                trail.append(nxt)
                if extend(nxt, remaining - 1):
                    return True
                trail.pop()
                seen[nxt] = False
        return False

    if extend(0, c.n - 1):
        return True, tuple(trail)
    return False, None


def check_witness(c: CirculantDigraph, cycle: tuple[int, ...]) -> None:
    if sorted(cycle) != list(range(c.n)):
        raise VerificationFailure(f"cycle {cycle} does not visit each vertex once")
    for k in range(len(cycle)):
        jump = (cycle[(k + 1) % len(cycle)] - cycle[k]) % c.n
        if jump not in (c.a, c.b):
            raise VerificationFailure(f"illegal jump {jump} in cycle {cycle}")


def is_hamiltonian(c: CirculantDigraph, method: str = "cross_check") -> HamiltonicityResult:
    """Decide whether C(n; a, b) has a directed Hamiltonian cycle.

    rankin is the arithmetic scan, visibility constructs a witness from the
    circuit lattice, brute_force is a DFS oracle for n <= 12, and
    cross_check runs all applicable deciders and demands agreement.
    """
    if method not in METHODS:
        raise BadParameters(f"method must be one of {METHODS}, got {method!r}")
    if not c.connected:
        raise Disconnected(f"gcd({c.n}, {c.a}, {c.b}) != 1")
    if method == "rankin":
        return HamiltonicityResult(_rankin(c), method, None)
    if method == "visibility":
        ok, cycle = _visibility(c)
        if cycle is not None:
            check_witness(c, cycle)
        return HamiltonicityResult(ok, method, cycle)
    if method == "brute_force":
        ok, cycle = _brute_force(c)
        if cycle is not None:
            check_witness(c, cycle)
        return HamiltonicityResult(ok, method, cycle)
    verdicts = [("rankin", _rankin(c))]
    ok, cycle = _visibility(c)
    verdicts.append(("visibility", ok))
    if c.n <= BRUTE_FORCE_LIMIT:
        brute_ok, brute_cycle = _brute_force(c)
        verdicts.append(("brute_force", brute_ok))
        if cycle is None:
            cycle = brute_cycle
    if len(set(v for _, v in verdicts)) != 1:
        raise VerificationFailure(
            f"deciders disagree on C({c.n}; {c.a}, {c.b}): {verdicts}"
        )
    if cycle is not None:
        check_witness(c, cycle)
    return HamiltonicityResult(verdicts[0][1], method, cycle, tuple(verdicts))


def nearest_diagonal_point(v: Vec2, i: int) -> Vec2:
    """Integer point on x + y = i nearest the segment 0 -> v, ties to the
    bigger first coordinate.  Exposed for the exhaustive-search cross-check."""
    length = v[0] + v[1]
    if not 0 <= i <= length:
        raise BadParameters(f"diagonal index {i} outside 0..{length}")
    exact = Fraction(v[0] * i, length) if length else Fraction(0)
    x = (2 * v[0] * i + length) // (2 * length) if length else 0
    assert abs(Fraction(x) - exact) <= Fraction(1, 2)
    return (x, i - x)
