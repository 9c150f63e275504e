#!/usr/bin/env python3
"""Building a Goppa code and inspecting its two parity-check views:
the t x n matrix over GF(q) and its trace expansion over GF(p)."""

import numpy as np

from pgoppa import build_code, sample_error
from pgoppa.rng import SplitMix64

rng = SplitMix64(2024)
code = build_code(3, 3, 8, rng=rng)
print(code)
print("support size n =", code.n, " generator degree t =", code.t)
print("generator g =", code.g)
print("code dimension (kernel of the GF(p) parity check):", code.dimension)

# The syndrome of a word can be computed two independent ways: the rational
# sum  s_e = sum e_i/(x - L_i) mod g, or the parity-check product H @ e.
e = sample_error(code.n, 5, "uniform", 3, rng)
print("\nerror pattern:", {i: v for i, v in enumerate(e.values) if v})
s_poly = code.syndrome_poly(e.values)
s_vec = code.syndrome_from_word(e.values)
print("rational-sum syndrome:", s_poly)
print("H @ e:               ", s_vec)
print("coefficients agree:", list(s_poly.coeffs) + [0] * (code.t - len(s_poly.coeffs)) == s_vec)

# The trace construction turns each GF(q) row into m rows over GF(p); the
# kernel (the code itself) is unchanged, and the GF(q) syndrome can be
# reassembled from the GF(p) one.
sbar = (code.Hbar @ np.array(e.values)) % 3
print("\nGF(p) syndrome has", len(sbar), "entries =", code.field.m, "x", code.t)
print("expand matches Hbar @ e:", list(sbar) == code.expand_syndrome(s_vec))
print("reassembled GF(q) syndrome:", code.assemble_syndrome(list(sbar)) == s_vec)

# Codewords are sampled from the cached kernel basis.
w = code.random_codeword(rng)
print("\nrandom codeword weight:", sum(1 for v in w if v), " in code:", code.contains(w))

# The whole code serializes to four text lines (header, modulus, g, support).
print("\nserialized code record:")
print(code.to_text())
