"""Goppa codes over GF(p): construction, parity checks, syndromes, sampling.

A code is determined by a support L of distinct field elements and a
monic square-free generator g with g(L_i) != 0.  The parity-check matrix
over GF(q) and its trace expansion over GF(p) are cached eagerly; the
codeword kernel basis is computed on first use.  Support order is part of
the code identity and of the serialized form.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import modp
from .errors import ParamError
from .fields import Field, make_field
from .polyring import Poly, inv_mod, is_irreducible, is_square_free, random_irreducible


@dataclass(frozen=True)
class ErrorPattern:
    """Length-n vector of mod-p magnitudes with weight bookkeeping."""

    values: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(1 for v in self.values if v)

    @property
    def magnitude_profile(self) -> dict[int, int]:
        return dict(Counter(v for v in self.values if v))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v)


def sample_error(n: int, w: int, dist, p: int, rng) -> ErrorPattern:
    """Random error pattern: w distinct positions, magnitudes per dist.

    dist is one of:
      "equal"          one random magnitude shared by all positions
      ("equal", v)     fixed magnitude v
      "uniform"        independent uniform magnitudes in 1..p-1
      {v: count, ...}  explicit magnitude profile (counts sum to w)
    """
    if not 0 <= w <= n:
        raise ParamError(f"weight {w} out of range for length {n}")
    values = [0] * n
    positions = rng.sample(range(n), w)
    if isinstance(dist, dict):
        if sum(dist.values()) != w:
            raise ParamError("magnitude profile counts do not sum to the weight")
        bag: list[int] = []
        for v, cnt in sorted(dist.items()):
            if not 1 <= v <= p - 1:
                raise ParamError(f"magnitude {v} outside 1..{p - 1}")
            bag.extend([v] * cnt)
        rng.shuffle(bag)
        mags = bag
    elif dist == "uniform":
        mags = [1 + rng.randrange(p - 1) for _ in range(w)]
    elif dist == "equal":
        v = 1 + rng.randrange(p - 1)
        mags = [v] * w
    elif isinstance(dist, tuple) and len(dist) == 2 and dist[0] == "equal":
        v = dist[1]
        if not 1 <= v <= p - 1:
            raise ParamError(f"magnitude {v} outside 1..{p - 1}")
        mags = [v] * w
    else:
        raise ParamError(f"unknown magnitude distribution {dist!r}")
    for pos, v in zip(positions, mags):
        values[pos] = v
    return ErrorPattern(tuple(values))


class GoppaCode:
    """Immutable Goppa code with cached parity-check matrices."""

    __slots__ = ("field", "L", "g", "n", "t", "H", "Hbar", "_kernel")

    def __init__(self, field: Field, support: Sequence[int], g: Poly):
        n = len(support)
        t = g.degree
        if t < 1:
            raise ParamError("generator must have degree >= 1")
        if g.lc() != 1:
            raise ParamError("generator must be monic")
        if len(set(support)) != n:
            raise ParamError("support elements must be distinct")
        if n > field.q:
            raise ParamError(f"support length {n} exceeds field size {field.q}")
        if n - field.m * t <= 0:
            raise ParamError(f"dimension bound violated: n - m*t = {n - field.m * t}")
        if not is_square_free(g):
            raise ParamError("generator must be square-free")
        for a in support:
            if g(a) == 0:
                raise ParamError("support must avoid the roots of the generator")
        self.field = field
        self.L = tuple(support)
        self.g = g
        self.n = n
        self.t = t
        self.H = self._build_parity_check()
        self.Hbar = self._expand_trace(self.H)
        self._kernel = None

    # -- parity checks -------------------------------------------------------

    def _toeplitz_vandermonde_diag(self) -> list[list[int]]:
        """The raw product toep(g_1..g_t) @ vdm_t(L) @ diag(1/g(L_j))."""
        f, t, n = self.field, self.t, self.n
        gc = self.g.coeffs
        out = [[0] * n for _ in range(t)]
        for j, lj in enumerate(self.L):
            dj = f.inv(self.g(lj))
            powers = [1] * t
            for k in range(1, t):
                powers[k] = f.mul(powers[k - 1], lj)
            for i in range(t):
                acc = 0
                # row i of the Toeplitz factor is (g_{t-i}, ..., g_t, 0, ...)
                for k in range(i + 1):
                    acc = f.add(acc, f.mul(gc[t - i + k], powers[k]))
                out[i][j] = f.mul(acc, dj)
        return out

    def _build_parity_check(self) -> list[list[int]]:
        """t x n matrix over GF(q) with H @ e equal to the coefficient
        vector (low to high) of the syndrome polynomial.

        The Toeplitz-Vandermonde-diagonal product yields those coefficients
        in reversed order and negated; rows are flipped and negated here so
        the two syndrome computation paths agree exactly.
        """
        raw = self._toeplitz_vandermonde_diag()
        neg = self.field.neg
        return [[neg(c) for c in row] for row in reversed(raw)]

    def _expand_trace(self, h: list[list[int]]) -> np.ndarray:
        """mt x n matrix over GF(p): each GF(q) row becomes m coordinate rows."""
        f = self.field
        out = np.zeros((f.m * self.t, self.n), dtype=np.int64)
        for i, row in enumerate(h):
            for j, entry in enumerate(row):
                for d, c in enumerate(f.coeffs(entry)):
                    out[i * f.m + d, j] = c
        return out

    # -- syndromes -------------------------------------------------------------

    def syndrome_poly(self, e: Sequence[int]) -> Poly:
        """sum of e_i / (x - L_i) mod g, by per-position modular inversion."""
        f = self.field
        acc = Poly.zero(f)
        for i, ei in enumerate(e):
            if ei:
                term = inv_mod(Poly(f, (f.neg(self.L[i]), 1)), self.g)
                acc = acc + term.scale(ei)
        return acc

    def syndrome_from_word(self, word: Sequence[int]) -> list[int]:
        """H @ word over GF(q); entries are the syndrome coefficients."""
        f = self.field
        add, mul = f.add, f.mul
        out = [0] * self.t
        for j, wj in enumerate(word):
            if wj:
                col_scale = wj
                for i in range(self.t):
                    hij = self.H[i][j]
                    if hij:
                        out[i] = add(out[i], mul(hij, col_scale) if col_scale != 1 else hij)
        return out

    def expand_syndrome(self, s: Sequence[int]) -> list[int]:
        """GF(q) syndrome -> mt GF(p) coordinates (trace construction)."""
        f = self.field
        out: list[int] = []
        for c in s:
            out.extend(f.coeffs(c))
        return out

    def assemble_syndrome(self, sbar: Sequence[int]) -> list[int]:
        """Inverse of expand_syndrome: mt GF(p) values -> t GF(q) ranks."""
        f = self.field
        m = f.m
        if len(sbar) != m * self.t:
            raise ValueError(f"expected {m * self.t} coordinates, got {len(sbar)}")
        return [f.from_coeffs(sbar[i * m : (i + 1) * m]) for i in range(self.t)]

    # -- codewords ---------------------------------------------------------------

    @property
    def kernel_basis(self) -> np.ndarray:
        if self._kernel is None:
            self._kernel = modp.kernel_mod_p(self.Hbar, self.field.p)
        return self._kernel

    @property
    def dimension(self) -> int:
        return self.kernel_basis.shape[0]

    def random_codeword(self, rng) -> tuple[int, ...]:
        basis = self.kernel_basis
        coeffs = np.array([rng.randrange(self.field.p) for _ in range(basis.shape[0])])
        word = (coeffs @ basis) % self.field.p
        return tuple(int(v) for v in word)

    def contains(self, word: Sequence[int]) -> bool:
        return all(c == 0 for c in self.syndrome_from_word(word))

    # -- serialization -------------------------------------------------------------

    def to_text(self) -> str:
        lines = [
            f"{self.field.p} {self.field.m} {self.t} {self.n}",
            " ".join(map(str, self.field.modulus)),
            self.g.to_text(),
            " ".join(map(str, self.L)),
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GoppaCode":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 4:
            raise ValueError(f"expected 4 lines in code record, got {len(lines)}")
        p, m, t, n = (int(tok) for tok in lines[0].split())
        field = make_field(p, m, [int(tok) for tok in lines[1].split()])
        g = Poly(field, [int(tok) for tok in lines[2].split()])
        support = [int(tok) for tok in lines[3].split()]
        if g.degree != t or len(support) != n:
            raise ValueError("code record header disagrees with body")
        return cls(field, support, g)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_text())

    @classmethod
    def load(cls, path) -> "GoppaCode":
        with open(path) as fh:
            return cls.from_text(fh.read())

    def __repr__(self) -> str:
        f = self.field
        return f"GoppaCode(p={f.p}, m={f.m}, t={self.t}, n={self.n})"


def _random_square_free(t: int, field: Field, rng) -> Poly:
    """Product of distinct random irreducibles with total degree t."""
    while True:
        degrees = []
        remaining = t
        while remaining:
            d = 1 + rng.randrange(remaining)
            degrees.append(d)
            remaining -= d
        factors: list[Poly] = []
        ok = True
        for d in degrees:
            for _ in range(50):
                cand = random_irreducible(d, field, rng)
                if cand not in factors:
                    factors.append(cand)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        g = Poly.one(field)
        for fac in factors:
            g = g * fac
        return g


def build_code(
    p: int,
    m: int,
    t: int,
    n: int | None = None,
    *,
    rng,
    irreducible_only: bool = True,
) -> GoppaCode:
    """Random Goppa code: random (square-free) generator, then a uniform
    random support of size n among elements avoiding the generator's roots.

    n defaults to the maximum possible length (all of GF(q) when the
    generator is irreducible of degree >= 2).
    """
    if t < 1:
        raise ParamError("t must be >= 1")
    field = make_field(p, m)
    if n is not None:
        if n > field.q:
            raise ParamError(f"n = {n} exceeds field size {field.q}")
        if n - m * t <= 0:
            raise ParamError(f"dimension bound violated: n - m*t = {n - m * t}")
    if irreducible_only:
        g = random_irreducible(t, field, rng)
    else:
        g = _random_square_free(t, field, rng)
    if is_irreducible(g) and t >= 2:
        candidates = list(field.elements())
    else:
        candidates = [a for a in field.elements() if g(a) != 0]
    target = len(candidates) if n is None else n
    if target > len(candidates):
        raise ParamError(
            f"support of size {target} impossible: only {len(candidates)} usable elements"
        )
    if target - m * t <= 0:
        raise ParamError(f"dimension bound violated: n - m*t = {target - m * t}")
    support = rng.sample(candidates, target)
    return GoppaCode(field, support, g)


def word_to_text(word: Sequence[int]) -> str:
    return " ".join(map(str, word))


def word_from_text(line: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in line.split())
