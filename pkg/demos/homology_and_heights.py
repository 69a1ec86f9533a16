"""
Homology classes and height functions on a small torus graph
============================================================

The fundamental-domain encoding assigns every edge a cell offset; summing
offsets over a perfect matching gives its homology exponent, and the
difference of two matchings is the height change of the pair.  Lifting a
block of cells to the plane turns that class into an honest integer height
function on faces.
"""

from torusdimer import (
    build_bnr,
    enumerate_matchings,
    height_change,
    height_function,
    homology_exponent,
    lift_block,
    rot90,
    tilde_height_change,
    transition_cycles,
)

b = build_bnr(2, 1)
g = b.graph
print("B(2, 1):", g.num_white, "whites,", len(g.edges), "edges")

matchings = enumerate_matchings(g)
print("\nperfect matchings and their homology exponents:")
for m in matchings:
    print(" ", m, "->", homology_exponent(g, m))

base = b.base_matching
other = (2, 5)
u = height_change(g, base, other)
print("\nheight change of", other, "against base", base, "is", u)

# the transition graph of the pair decomposes into alternating circuits
tc = transition_cycles(g, base, other)
print("transition circuits:")
for c in tc.circuits:
    print("  homology", c.homology, "through edges", c.edges())
print("doubled edges discarded:", tc.discarded_pairs)

# integrate the same data to a height function on a 2 x 2 block of cells
patch = lift_block(g, 2, 2)
field = height_function(patch, base, other)
print("\nface heights on the 2 x 2 block (face, cell x, cell y) -> h:")
for key in sorted(field.heights):
    print("  ", key, "->", field.heights[key])

# moving one cell east or north shifts every height by a constant; that
# per-cell increment is the homology class rotated a quarter turn
tilde = tilde_height_change(patch, base, other)
print("\nper-cell increments:", tilde)
print("rot90 of the height change:", rot90(u))
assert tilde == rot90(u)
