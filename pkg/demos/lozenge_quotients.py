"""
Hexagonal quotients and the combination identity
================================================

Quotient the infinite honeycomb by a rank-2 period lattice and every
vertex class carries three edge types.  The three uniform matchings pin
down two constant height changes H_x and H_y, and every matching's height
change is the type-count combination (x*H_x + y*H_y) / cells, exactly.
"""

from torusdimer import (
    build_honeycomb,
    constant_height_changes,
    convention_map_report,
    enumerate_matchings,
    height_change,
    lozenge_convex_combination_check,
)

h = build_honeycomb(((2, 0), (0, 1)))
g = h.graph
print("period [[2,0],[0,1]]:", h.cells, "cells,", len(g.edges), "edges")

hx, hy = constant_height_changes(h)
print("H_x =", hx, " H_y =", hy)

base = h.matching_of_type("z")
print("\nmatchings, type counts and height changes:")
for m in enumerate_matchings(g):
    x, y, z = h.type_counts(m)
    u = height_change(g, base, m)
    print("  ", m, "types", (x, y, z), "->", u,
          " check:", (x * hx[0] + y * hy[0], x * hx[1] + y * hy[1]),
          "=", (h.cells * u[0], h.cells * u[1]))

rep = lozenge_convex_combination_check(h)
print("\ncombination identity holds for all", rep.matchings, "matchings:", rep.ok)

big = build_honeycomb(((3, -5), (4, 4)))
print("\nperiod [[3,-5],[4,4]]:", big.cells, "cells")
print("constant height changes:", constant_height_changes(big))
print("combination identity:", lozenge_convex_combination_check(big).ok)

conv = convention_map_report()
print("\nexternally recorded triple", conv.triple)
print("reproduced by a unimodular map and role assignment:", conv.found)
for matrix, roles in conv.matches:
    print("  matrix", matrix, "roles", roles)
