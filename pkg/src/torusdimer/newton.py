"""Newton polygons of matching supports, in exact integer arithmetic.

The support of a graph is the set of height changes of its matchings against
a base matching.  Its convex hull is computed by the monotone chain with
integer cross products; lattice points of the hull come from a bounding-box
scan with half-plane tests.  full_support_report compares the two sets and
reports any hull lattice point that no matching realizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NoMatchings, Unbalanced
from .matchings import (
    Matching,
    enumerate_matchings,
    height_change,
    validate_matching,
)
from .torus_graph import TorusGraph, Vec2


def _cross(o: Vec2, a: Vec2, b: Vec2) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> tuple[Vec2, ...]:
    """Hull vertices in counterclockwise order, first vertex lexicographic
    minimum, collinear points dropped.  Degenerate inputs give the empty
    tuple, a single point, or the two endpoints of a segment."""
    pts = sorted(set((int(x), int(y)) for x, y in points))
    if len(pts) <= 1:
        return tuple(pts)
    if all(_cross(pts[0], pts[-1], p) == 0 for p in pts):
        return (pts[0], pts[-1])
    lower: list[Vec2] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vec2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def polygon_area2(vertices) -> int:
    """Twice the signed area (positive for counterclockwise order)."""
    n = len(vertices)
    total = 0
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total


def boundary_point_count(vertices) -> int:
    """Number of lattice points on the boundary of the hull."""
    n = len(vertices)
    if n == 0:
        return 0
    if n == 1:
        return 1
    if n == 2:
        (x1, y1), (x2, y2) = vertices
        return gcd(abs(x2 - x1), abs(y2 - y1)) + 1
    total = 0
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        total += gcd(abs(x2 - x1), abs(y2 - y1))
    return total


def lattice_points(vertices) -> frozenset[Vec2]:
    """All integer points inside or on the hull given by its vertex tuple."""
    n = len(vertices)
    if n == 0:
        return frozenset()
    if n == 1:
        return frozenset(vertices)
    if n == 2:
        (x1, y1), (x2, y2) = vertices
        g = gcd(abs(x2 - x1), abs(y2 - y1))
        sx, sy = (x2 - x1) // g, (y2 - y1) // g
        return frozenset((x1 + t * sx, y1 + t * sy) for t in range(g + 1))
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    found = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if all(
                _cross(vertices[i], vertices[(i + 1) % n], p) >= 0 for i in range(n)
            ):
                found.append(p)
    return frozenset(found)


@dataclass(frozen=True)
class NewtonReport:
    base: Matching
    realized: tuple[tuple[Vec2, int], ...]  # (height change, matching count)
    hull: tuple[Vec2, ...]
    lattice_points: tuple[Vec2, ...]
    missing: tuple[Vec2, ...]
    full_support: bool

    def realized_points(self) -> frozenset[Vec2]:
        return frozenset(p for p, _ in self.realized)


def full_support_report(g: TorusGraph, base) -> NewtonReport:
    """Enumerate matchings, group by height change, audit the hull.

    full_support is true when every lattice point of the hull is the height
    change of at least one matching.  A false value is a finding to report,
    not an error.
    """
    if g.num_white != g.num_black:
        raise Unbalanced(f"{g.num_white} whites vs {g.num_black} blacks")
    matchings = enumerate_matchings(g)
    if not matchings:
        raise NoMatchings("graph admits no perfect matching")
    base_ids = validate_matching(g, base)
    counts: dict[Vec2, int] = {}
    for m in matchings:
        h = height_change(g, base_ids, m)
        counts[h] = counts.get(h, 0) + 1
    hull = convex_hull(counts)
    pts = lattice_points(hull)
    missing = tuple(sorted(pts - set(counts)))
    return NewtonReport(
        base=base_ids,
        realized=tuple(sorted(counts.items())),
        hull=hull,
        lattice_points=tuple(sorted(pts)),
        missing=missing,
        full_support=not missing,
    )
