"""
Newton polygons with no holes
=============================

Group the matchings of a torus graph by height change and take the convex
hull of the realized classes.  For genuine torus embeddings every lattice
point of that hull is realized by at least one matching.  Offset data that
no embedding produces can violate this, and the report says so instead of
certifying it.
"""

from torusdimer import bnr_full_support, full_support_report, torus_graph

rep = bnr_full_support(5, 2)
print("B(5, 2) support report")
print("  hull vertices: ", rep.hull)
print("  lattice points:", rep.lattice_points)
for point, count in rep.realized:
    print("   ", point, "realized by", count, "matchings")
print("  full support:", rep.full_support)

# the three hull corners come from the three uniform matchings; interior
# visible points come from explicit staircase circuits, and the rest from
# search, so the realization is constructive wherever it can be

# a 4-cycle whose offsets sum to (2, 0) is legal data but cannot be drawn
# on the torus: an embedded essential simple closed curve is primitive
fake = torus_graph(
    2,
    2,
    [(0, 0, 0, 0), (1, 0, 1, 0), (1, 1, 0, 0), (0, 1, 1, 0)],
)
gap = full_support_report(fake, (0, 2))
print("\nnon-embeddable 4-cycle")
print("  realized points:", sorted(gap.realized_points()))
print("  hull lattice points:", gap.lattice_points)
print("  missing:", gap.missing)
print("  full support:", gap.full_support)
