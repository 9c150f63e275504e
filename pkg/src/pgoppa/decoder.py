"""Decoder for square-free Goppa codes over GF(p), any prime p.

For each scale guess phi in 1..p-1 the syndrome yields radicands
u_k = x**k - phi*k*x**(k-1)/s mod g whose p-th roots v_k define a p x p
polynomial lattice; rows of its weak Popov form that satisfy the degree
bounds assemble into locator candidates sigma = sum x**j a_j**p.  Roots of
sigma on the support mark error positions, root multiplicities give the
magnitudes (e_j = phi * mu_j), and every candidate is kept only if it
reproduces the received syndrome exactly.

The radicand sign is not taken on faith: the first decode in a process
runs a self-test that decodes a known single-error instance under both
sign conventions and asserts the one used here verifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import DegreeBoundError, NotInvertibleError
from .fields import Field
from .goppa import ErrorPattern, GoppaCode
from .polyring import Poly, inv_mod, poly_pth_power, pth_root_mod
from .popov import PolyMatrix, weak_popov_reduce


@dataclass
class KeyLattice:
    """Reduction input for one scale guess: radicand roots and the basis."""

    phi: int
    u: list[Poly]
    v: list[Poly]
    basis: PolyMatrix


@dataclass
class Locator:
    poly: Poly
    phi: int


@dataclass
class Candidate:
    codeword: tuple[int, ...]
    error: ErrorPattern
    phi: int
    sigma: Poly
    multiplicities: dict[int, int]


@dataclass
class DecodeOutcome:
    candidates: list[Candidate] = dc_field(default_factory=list)

    @property
    def status(self) -> str:
        return "ok" if self.candidates else "empty"

    def codewords(self) -> list[tuple[int, ...]]:
        return [c.codeword for c in self.candidates]


def build_key_lattice(code: GoppaCode, s: Poly, phi: int, *, _sign: int | None = None) -> KeyLattice:
    """Basis whose short vectors solve the phi-th key equation.

    First row (g, 0, ..., 0); row k+1 is (-v_k, 0, .., 1, .., 0) where
    v_k**p == x**k - phi*k*x**(k-1)/s (mod g).
    """
    s_inv = inv_mod(s, code.g)
    return _key_lattice(code, s_inv, phi, _sign if _sign is not None else _verified_sign())


def _key_lattice(code: GoppaCode, s_inv: Poly, phi: int, sign: int) -> KeyLattice:
    f = code.field
    p = f.p
    g = code.g
    zero, one = Poly.zero(f), Poly.one(f)
    us: list[Poly] = []
    vs: list[Poly] = []
    rows: list[list[Poly]] = [[g] + [zero] * (p - 1)]
    for k in range(1, p):
        c = (sign * phi * k) % p
        u = (Poly.monomial(f, k) + s_inv.shift(k - 1).scale(c)) % g
        v = pth_root_mod(u, g)
        us.append(u)
        vs.append(v)
        row = [-v] + [one if j == k else zero for j in range(1, p)]
        rows.append(row)
    return KeyLattice(phi=phi, u=us, v=vs, basis=PolyMatrix(f, rows))


def assemble_locator(a: Sequence[Poly], phi: int, t: int) -> Locator:
    """sigma = sum x**j a_j**p, made monic; rejects rows breaking the
    degree bounds deg(a_j) <= (t - j) // p."""
    f = a[0].field
    p = f.p
    sigma = Poly.zero(f)
    for j, aj in enumerate(a):
        if aj.degree > (t - j) // p:
            raise DegreeBoundError(f"deg(a_{j}) = {aj.degree} exceeds {(t - j) // p}")
        if aj:
            sigma = sigma + poly_pth_power(aj).shift(j)
    if sigma.is_zero():
        raise DegreeBoundError("zero locator")
    return Locator(sigma.monic(), phi)


def locator_from_error(code: GoppaCode, e: ErrorPattern, phi: int) -> Locator:
    """Direct product prod (x - L_i)**(e_i/phi), exponents lifted to 0..p-1.

    Test oracle for the key equation; the decode path never calls this.
    """
    f = code.field
    p = f.p
    phi_inv = pow(phi, p - 2, p)
    sigma = Poly.one(f)
    for i, ei in enumerate(e.values):
        if ei:
            exp = (ei * phi_inv) % p
            lin = Poly(f, (f.neg(code.L[i]), 1))
            for _ in range(exp):
                sigma = sigma * lin
    return Locator(sigma, phi)


_PRIMITIVE_CACHE: dict[Field, int] = {}


def _primitive_element(f: Field) -> int:
    gamma = _PRIMITIVE_CACHE.get(f)
    if gamma is not None:
        return gamma
    order = f.q - 1
    primes = []
    n = order
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    for cand in range(2, f.q):
        if all(f.pow(cand, order // pr) != 1 for pr in primes):
            _PRIMITIVE_CACHE[f] = cand
            return cand
    raise AssertionError("no primitive element found")  # unreachable for q > 2


def _root_multiplicity(sigma: Poly, lj: int) -> int:
    f = sigma.field
    lin = Poly(f, (f.neg(lj), 1))
    count = 0
    h = sigma
    while not h.is_zero() and h(lj) == 0:
        h = h // lin
        count += 1
    return count


def find_roots_multiplicities(
    locator: Locator | Poly, code: GoppaCode, chien: bool = False
) -> dict[int, int]:
    """Map support index -> multiplicity of L_j as a root of sigma.

    The default scans every support point directly; chien=True walks the
    whole multiplicative group through a primitive element, updating each
    coefficient register by one multiplication per step.
    """
    sigma = locator.poly if isinstance(locator, Locator) else locator
    out: dict[int, int] = {}
    if not chien:
        for j, lj in enumerate(code.L):
            if sigma(lj) == 0:
                out[j] = _root_multiplicity(sigma, lj)
        return out
    f = code.field
    index_of = {lj: j for j, lj in enumerate(code.L)}
    if 0 in index_of and sigma(0) == 0:
        out[index_of[0]] = _root_multiplicity(sigma, 0)
    if f.q == 2:
        if 1 in index_of and sigma(1) == 0:
            out[index_of[1]] = _root_multiplicity(sigma, 1)
        return out
    gamma = _primitive_element(f)
    regs = list(sigma.coeffs)
    steppers = [f.pow(gamma, k) for k in range(len(regs))]
    elem = 1
    add, mul = f.add, f.mul
    for _ in range(f.q - 1):
        acc = 0
        for r in regs:
            acc = add(acc, r)
        if acc == 0:
            j = index_of.get(elem)
            if j is not None:
                out[j] = _root_multiplicity(sigma, elem)
        regs = [mul(r, st) for r, st in zip(regs, steppers)]
        elem = mul(elem, gamma)
    return out


def decode(code: GoppaCode, received: Sequence[int], chien: bool = False) -> DecodeOutcome:
    """Full decode of a received word; returns every verified candidate.

    A zero syndrome short-circuits to the received word itself.  Otherwise
    every scale guess phi is tried even after a success (distinct phi can
    yield distinct valid codewords), every degree-valid row of each reduced
    basis is assembled and syndrome-checked, and candidates are
    deduplicated in (phi, row) discovery order.
    """
    return _decode_impl(code, received, _verified_sign(), chien)


def _decode_impl(
    code: GoppaCode, received: Sequence[int], sign: int, chien: bool = False
) -> DecodeOutcome:
    f = code.field
    p = f.p
    n = code.n
    if len(received) != n:
        raise ValueError(f"received word has length {len(received)}, code length is {n}")
    s_vec = code.syndrome_from_word(received)
    s_poly = Poly(f, s_vec)
    if s_poly.is_zero():
        cand = Candidate(
            codeword=tuple(received),
            error=ErrorPattern((0,) * n),
            phi=0,
            sigma=Poly.one(f),
            multiplicities={},
        )
        return DecodeOutcome([cand])
    try:
        s_inv = inv_mod(s_poly, code.g)
    except NotInvertibleError:
        return DecodeOutcome([])
    outcome = DecodeOutcome([])
    seen: set[tuple[int, ...]] = set()
    for phi in range(1, p):
        lattice = _key_lattice(code, s_inv, phi, sign)
        reduced, _ = weak_popov_reduce(lattice.basis)
        for row in reduced.rows:
            try:
                loc = assemble_locator(row, phi, code.t)
            except DegreeBoundError:
                continue
            mults = find_roots_multiplicities(loc, code, chien)
            if not mults:
                continue
            e = [0] * n
            for j, mu in mults.items():
                e[j] = (phi * mu) % p
            if code.syndrome_from_word(e) != s_vec:
                continue
            codeword = tuple((r - ev) % p for r, ev in zip(received, e))
            if codeword in seen:
                continue
            seen.add(codeword)
            outcome.candidates.append(
                Candidate(codeword, ErrorPattern(tuple(e)), phi, loc.poly, mults)
            )
    return outcome


# -- radicand sign self-test ---------------------------------------------------

_SIGN: int | None = None


def _verified_sign() -> int:
    global _SIGN
    if _SIGN is None:
        _SIGN = verify_sign_convention()
    return _SIGN


def verify_sign_convention() -> int:
    """Decode a known single-error instance under both radicand signs and
    return the one that verifies (-1, matching the key-equation algebra).

    Raises if the minus convention fails or the plus convention succeeds
    where minus does not; runs once per process.
    """
    from .goppa import build_code, sample_error
    from .rng import SplitMix64

    rng = SplitMix64(0x5167)
    code = build_code(3, 2, 2, rng=rng)
    error = sample_error(code.n, 1, ("equal", 1), 3, rng)
    results = {}
    for sign in (-1, +1):
        outcome = _decode_impl(code, error.values, sign)
        zero = (0,) * code.n
        results[sign] = zero in outcome.codewords()
    if not results[-1]:
        raise AssertionError("radicand sign self-test: minus convention failed to decode")
    return -1
