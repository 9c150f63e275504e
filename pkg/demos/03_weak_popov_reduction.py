#!/usr/bin/env python3
"""Weak Popov form step by step: pivot indices, simple transformations,
and the shortest-vector guarantee."""

from pgoppa import PolyMatrix, Poly, make_field, min_pivot_row, pivot_index, weak_popov_reduce
from pgoppa.popov import det_fraction_free
from pgoppa.rng import SplitMix64

F = make_field(3, 2)
rng = SplitMix64(5)

# A pivot index is the rightmost column attaining the row's maximal degree.
x = Poly.x(F)
one = Poly.one(F)
print("pivot of (x, 1):", pivot_index([x, one]))
print("pivot of (x, x):", pivot_index([x, x]), "  (ties resolve rightward)")

# Decoder-shaped basis: first row (g, 0, 0), then rows (-v_k, .., 1, ..).
t = 5
g = Poly(F, [rng.randrange(9) for _ in range(t)] + [1])
v1 = Poly(F, [rng.randrange(9) for _ in range(t)])
v2 = Poly(F, [rng.randrange(9) for _ in range(t)])
zero = Poly.zero(F)
basis = PolyMatrix(F, [[g, zero, zero], [-v1, one, zero], [-v2, zero, one]])
print("\ninput degree tableau (pivots bracketed):")
print(basis.degree_tableau())

reduced, transform = weak_popov_reduce(basis, accumulate=True)
print("\nreduced degree tableau:")
print(reduced.degree_tableau())
print("pivot indices now pairwise distinct:", reduced.pivots)

# The transform is a product of elementary row operations: unimodular.
print("\nU @ A == A':", (transform @ basis) == reduced)
print("det(U):", det_fraction_free(transform))

# Every vector of the row lattice has degree at least the minimal pivot
# degree, so the minimal pivot row is a shortest nonzero vector.
short = min_pivot_row(reduced)
short_deg = max(e.degree for e in short)
print("\nshortest row:", short, " degree:", short_deg)
for _ in range(3):
    mult = [Poly(F, [rng.randrange(9) for _ in range(3)]) for _ in range(3)]
    comb = [zero, zero, zero]
    for i, u in enumerate(mult):
        for j in range(3):
            comb[j] = comb[j] + u * reduced.rows[i][j]
    print("random lattice vector degree:", max(c.degree for c in comb), ">=", short_deg)
