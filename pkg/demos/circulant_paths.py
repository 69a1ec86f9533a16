"""
Staircase walks and Hamiltonian circuits in circulant digraphs
==============================================================

Circuits of the digraph with steps +a and +b mod n correspond to monotone
lattice walks whose endpoint lies in the congruence lattice
a*x + b*y = 0 (mod n).  A walk gives a simple circuit exactly when its
node differences avoid the lattice, which pins down an explicit staircase
whenever the target is primitive and short enough.
"""

from math import gcd

from torusdimer import (
    build_lattice_path,
    circuit_lattice,
    is_hamiltonian,
    path_to_circuit,
    visible_in_lattice,
)
from torusdimer.circulant import CirculantDigraph

n, a, b = 5, 1, 2
basis = circuit_lattice(n, a, b)
print(f"C({n}; {a}, {b}) circuit lattice basis:", basis.vectors())

target = (3, 1)
print("target", target, "in lattice:", basis.contains(target))
print("target visible:", visible_in_lattice(basis, target))

path = build_lattice_path(basis, target)
print("staircase:", path)

circuit = path_to_circuit(CirculantDigraph(n, a, b), path)
print("circuit through vertices:", circuit)

print("\nHamiltonicity by three independent deciders, n up to 8:")
for n in range(1, 9):
    hits = []
    for a in range(n):
        for b in range(a, n):
            if gcd(gcd(a, b), n) != 1:
                continue
            res = is_hamiltonian(CirculantDigraph(n, a, b))
            if res.hamiltonian:
                hits.append((a, b))
    print(f"  n={n}: hamiltonian step pairs {hits}")

res = is_hamiltonian(CirculantDigraph(8, 1, 3))
print("\nC(8; 1, 3):", res.hamiltonian, "witness", res.witness)
print("methods agreed:", dict(res.agreed))
