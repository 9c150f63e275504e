"""Dense univariate polynomials over GF(q), plus the characteristic-p
decomposition and modular p-th root the decoder is built on.

Coefficients are stored low-to-high with no trailing zeros; the zero
polynomial has degree NEG_INF, a sentinel ordered below every integer
(pivot bookkeeping in the lattice reduction relies on that total order).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np

from . import modp
from .errors import NoRootError, NotInvertibleError
from .fields import Field

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial over a Field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: Field, deg: int, c: int = 1) -> "Poly":
        return cls(field, (0,) * deg + (c,))

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check(self, other: "Poly") -> None:
        if self.field is not other.field and self.field != other.field:
            raise ValueError("polynomials belong to different fields")

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        add = self.field.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.field, out)

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field)
        mul = self.field.mul
        add = self.field.add
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly(self.field, out)

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly(self.field)
        mul = self.field.mul
        return Poly(self.field, [mul(c, x) for x in self.coeffs])

    def shift(self, e: int) -> "Poly":
        """Multiply by x**e."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * e + self.coeffs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        db = other.degree
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return Poly(f), self
        inv_lb = f.inv(other.lc())
        q = [0] * (len(r) - db)
        bc = other.coeffs
        mul, sub = f.mul, f.sub
        for k in range(len(r) - 1 - db, -1, -1):
            c = mul(r[k + db], inv_lb)
            if c:
                q[k] = c
                for i, bi in enumerate(bc):
                    if bi:
                        r[k + i] = sub(r[k + i], mul(c, bi))
        return Poly(f, q), Poly(f, r[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        """Evaluate at a field element (Horner)."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def deriv(self) -> "Poly":
        """Formal derivative; exponents act through the prime subfield."""
        f = self.field
        p = f.p
        out = [f.mul(i % p, c) for i, c in enumerate(self.coeffs)][1:]
        return Poly(f, out)

    def monic(self) -> "Poly":
        if self.is_zero() or self.lc() == 1:
            return self
        return self.scale(self.field.inv(self.lc()))

    def pow_mod(self, e: int, g: "Poly") -> "Poly":
        f = self.field
        if f._mul is not None and g.lc() == 1:
            return Poly(f, _raw_powmod(list((self % g).coeffs), e, list(g.coeffs), f))
        result = Poly.one(f)
        acc = self % g
        while e:
            if e & 1:
                result = (result * acc) % g
            acc = (acc * acc) % g
            e >>= 1
        return result

    # -- plumbing ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.coeffs == other.coeffs
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def to_text(self) -> str:
        """Decimal coefficient ranks, low to high, one line; zero is "0"."""
        return " ".join(map(str, self.coeffs)) if self.coeffs else "0"


def poly_from_text(field: Field, line: str) -> Poly:
    return Poly(field, [int(tok) for tok in line.split()])


# -- raw coefficient-list kernels ------------------------------------------
#
# Table-backed fields get fused multiply/reduce loops on bare lists; this is
# the hot path for irreducibility testing and repeated-squaring, where the
# per-coefficient method-call overhead of Poly would dominate.  Only monic
# moduli are handled; callers fall back to Poly arithmetic otherwise.


def _raw_mulmod(a: list[int], b: list[int], gc: list[int], field: Field) -> list[int]:
    if not a or not b:
        return []
    mul, add, neg, q = field._mul, field._add, field._neg, field.q
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            xq = x * q
            for j, y in enumerate(b):
                if y:
                    k = i + j
                    out[k] = add[out[k] * q + mul[xq + y]]
    t = len(gc) - 1
    for k in range(len(out) - 1, t - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            cq = c * q
            base = k - t
            for i in range(t):
                gi = gc[i]
                if gi:
                    out[base + i] = add[out[base + i] * q + neg[mul[cq + gi]]]
    while out and out[-1] == 0:
        out.pop()
    return out


def _raw_powmod(base: list[int], e: int, gc: list[int], field: Field) -> list[int]:
    result = [1]
    acc = list(base)
    while e:
        if e & 1:
            result = _raw_mulmod(result, acc, gc, field)
        acc = _raw_mulmod(acc, acc, gc, field)
        e >>= 1
    return result


def _raw_rem(a: list[int], b: list[int], field: Field) -> list[int]:
    mul, add, neg, q = field._mul, field._add, field._neg, field.q
    r = list(a)
    db = len(b) - 1
    inv_lb = field.inv(b[-1])
    while len(r) - 1 >= db:
        c = mul[r[-1] * q + inv_lb]
        k = len(r) - 1 - db
        if c:
            cq = c * q
            for i in range(db):
                bi = b[i]
                if bi:
                    r[k + i] = add[r[k + i] * q + neg[mul[cq + bi]]]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _raw_gcd(a: list[int], b: list[int], field: Field) -> list[int]:
    while b:
        a, b = b, _raw_rem(a, b, field)
    return a


def mod_mul(a: Poly, b: Poly, g: Poly) -> Poly:
    return (a * b) % g


def ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Monic gcd d plus Bezout coefficients with u*a + v*b = d."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = f.inv(r0.lc())
    return r0.scale(c), s0.scale(c), t0.scale(c)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def inv_mod(f: Poly, g: Poly) -> Poly:
    """Inverse of f modulo g; NotInvertibleError when gcd(f, g) != 1."""
    d, u, _ = ext_gcd(f % g, g)
    if d.degree != 0:
        raise NotInvertibleError(f"not invertible, gcd has degree {d.degree}", gcd=d)
    return u % g


def is_square_free(g: Poly) -> bool:
    """True iff g has no repeated factor.  A vanishing derivative means g
    is a p-th power, hence not square-free."""
    d = g.deriv()
    if d.is_zero():
        return False
    return poly_gcd(g, d).degree == 0


def is_irreducible(g: Poly, full_check: bool = False) -> bool:
    """Irreducibility over GF(q) by powers of the q-Frobenius.

    g of degree t is reducible iff it has an irreducible factor of degree
    i <= t/2, iff gcd(x**(q**i) - x, g) is non-constant for some such i.
    With full_check the redundant trailing congruence x**(q**t) == x mod g
    is evaluated as well (it follows from the scan; kept for validation).
    """
    t = g.degree
    if t < 1:
        return False
    if t == 1:
        return True
    if g.coeffs[0] == 0:
        return False  # divisible by x
    f = g.field
    if f._mul is not None:
        gc = list(g.monic().coeffs)
        h = [0, 1]
        for _ in range(t // 2):
            h = _raw_powmod(h, f.q, gc, f)
            diff = h + [0] * (2 - len(h))
            diff[1] = f.sub(diff[1], 1)
            while diff and diff[-1] == 0:
                diff.pop()
            if len(_raw_gcd(gc, diff, f)) != 1:
                return False
        if full_check:
            for _ in range(t - t // 2):
                h = _raw_powmod(h, f.q, gc, f)
            if h != [0, 1]:
                return False
        return True
    h = Poly.x(f)
    x = Poly.x(f)
    for _ in range(t // 2):
        h = h.pow_mod(f.q, g)
        if poly_gcd(h - x, g).degree != 0:
            return False
    if full_check:
        for _ in range(t - t // 2):
            h = h.pow_mod(f.q, g)
        if h != x % g:
            return False
    return True


def random_irreducible(t: int, field: Field, rng) -> Poly:
    """Uniform monic irreducible of degree exactly t (rejection sampling)."""
    if t < 1:
        raise ValueError("degree must be >= 1")
    q = field.q
    while True:
        g = Poly(field, [rng.randrange(q) for _ in range(t)] + [1])
        if is_irreducible(g):
            return g


def pth_power_decompose(f: Poly) -> list[Poly]:
    """Split f into (a_0, ..., a_{p-1}) with f = sum x**k * a_k**p.

    In characteristic p the coefficient of x**(p*i + k) in f is the p-th
    power of coefficient i of a_k, so each a_k is read off by taking p-th
    roots of a stride-p slice.
    """
    fld = f.field
    p = fld.p
    root = fld.pth_root
    parts: list[list[int]] = [[] for _ in range(p)]
    for idx, c in enumerate(f.coeffs):
        parts[idx % p].append(root(c))
    return [Poly(fld, cs) for cs in parts]


def poly_pth_power(a: Poly) -> Poly:
    """Exact a**p using (sum c_i x**i)**p = sum c_i**p x**(p*i)."""
    fld = a.field
    p = fld.p
    out = [0] * (p * len(a.coeffs))
    for i, c in enumerate(a.coeffs):
        out[p * i] = fld.pow(c, p)
    return Poly(fld, out)


class _FrobeniusSolver:
    """Inverse of y -> y**p on GF(q)[x]/g, as a GF(p)-linear system.

    The residue ring is an m*t-dimensional GF(p)-space; the Frobenius is
    linear over GF(p), so its matrix is materialized once per modulus.  For
    square-free g the ring is a product of fields and the map is bijective
    (matrix invertible); otherwise roots are found, when they exist, by
    per-call elimination.
    """

    def __init__(self, field: Field, g: Poly):
        self.field = field
        self.g = g
        p, m, t = field.p, field.m, g.degree
        self.t = t
        dim = m * t
        xp = Poly.monomial(field, p) % g
        cols = []
        power = Poly.one(field)
        for j in range(t):
            if j:
                power = (power * xp) % g
            for i in range(m):
                fp = field.pow(field.p**i if i else 1, p)  # (y**i)**p as a field element
                col = self._digits(power.scale(fp))
                cols.append(col)
        self.matrix = np.array(cols, dtype=np.int64).T
        self.inverse = modp.inv_mod_p(self.matrix, p)

    def _digits(self, poly: Poly) -> list[int]:
        f = self.field
        out: list[int] = []
        cs = poly.coeffs + (0,) * (self.t - len(poly.coeffs))
        for c in cs:
            out.extend(f.coeffs(c))
        return out

    def root(self, z: Poly) -> Poly:
        f = self.field
        p = f.p
        v = np.array(self._digits(z % self.g), dtype=np.int64)
        if self.inverse is not None:
            sol = (self.inverse @ v) % p
        else:
            sol = modp.solve_mod_p(self.matrix, v, p)
            if sol is None:
                raise NoRootError("no p-th root modulo a non-square-free modulus")
        m = f.m
        coeffs = [f.from_coeffs(sol[j * m : (j + 1) * m]) for j in range(self.t)]
        return Poly(f, coeffs)


@lru_cache(maxsize=128)
def _frobenius_solver(field: Field, g_coeffs: tuple[int, ...]) -> _FrobeniusSolver:
    return _FrobeniusSolver(field, Poly(field, g_coeffs))


def pth_root_mod(z: Poly, g: Poly) -> Poly:
    """The v with v**p == z (mod g), unique when g is square-free."""
    if g.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    solver = _frobenius_solver(g.field, g.coeffs)
    return solver.root(z)
