#!/usr/bin/env python3
"""A complete decode, opened up: syndrome, radicands, lattice reduction,
locator assembly, root multiplicities, and verification."""

from pgoppa import (
    Poly,
    assemble_locator,
    build_code,
    build_key_lattice,
    decode,
    find_roots_multiplicities,
    sample_error,
)
from pgoppa.errors import DegreeBoundError
from pgoppa.popov import weak_popov_reduce
from pgoppa.rng import SplitMix64

rng = SplitMix64(99)
p = 3
code = build_code(p, 3, 8, rng=rng)
print(code)

# Corrupt a codeword with 8 errors, all of magnitude 2.
error = sample_error(code.n, 8, ("equal", 2), p, rng)
codeword = code.random_codeword(rng)
received = tuple((a + b) % p for a, b in zip(codeword, error.values))
print("true error positions:", {i: v for i, v in enumerate(error.values) if v})

# Step 1: the syndrome from the received word.
s = Poly(code.field, code.syndrome_from_word(received))
print("\nsyndrome degree:", s.degree)

# Step 2: for each scale guess phi, radicand p-th roots define the lattice.
for phi in range(1, p):
    lattice = build_key_lattice(code, s, phi)
    reduced, _ = weak_popov_reduce(lattice.basis)
    print(f"\nphi = {phi}: reduced degree tableau")
    print(reduced.degree_tableau())
    for row in reduced.rows:
        try:
            locator = assemble_locator(row, phi, code.t)
        except DegreeBoundError:
            continue
        mults = find_roots_multiplicities(locator, code)
        errs = {j: (phi * mu) % p for j, mu in mults.items()}
        verdict = code.syndrome_from_word(
            [errs.get(j, 0) for j in range(code.n)]
        ) == list(s.coeffs) + [0] * (code.t - len(s.coeffs))
        print(f"  locator degree {locator.poly.degree}, roots {mults}, verifies: {verdict}")

# The decode() wrapper does all of the above, tries every phi, verifies each
# candidate against the syndrome, and deduplicates.
outcome = decode(code, received)
print("\ndecode status:", outcome.status)
for cand in outcome.candidates:
    print("candidate via phi =", cand.phi, " error =", {i: v for i, v in enumerate(cand.error.values) if v})
print("true codeword recovered:", codeword in outcome.codewords())
