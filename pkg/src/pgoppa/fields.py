"""Exact arithmetic in GF(p) and GF(p^m) for prime p.

Elements are plain Python ints in [0, q): the integer rank of the
coefficient vector in the polynomial basis, rank = sum(c_i * p**i).
Ranks below p are exactly the prime subfield, and rank arithmetic is
what the on-disk formats use, so no wrapper type is needed.

Small fields (q <= 512) eagerly build add/mul/inverse/p-th-root lookup
tables from the generic digit arithmetic; larger fields stay on the
generic path.  No discrete-log or Zech tables anywhere, so q is bounded
only by patience.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import NotPrimeError, ReducibleModulusError

_TABLE_LIMIT = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


# -- digit-list polynomial helpers over GF(p), used for modulus handling --

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _fp_trim([c % p for c in out])


def _fp_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    r = [c % p for c in a]
    _fp_trim(r)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(r) - 1 >= df:
        k = len(r) - 1 - df
        c = (r[-1] * inv_lead) % p
        for i, fi in enumerate(f):
            r[i + k] = (r[i + k] - c * fi) % p
        _fp_trim(r)
    return r


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _fp_mod(base, f, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, acc, p), f, p)
        acc = _fp_mod(_fp_mul(acc, acc, p), f, p)
        e >>= 1
    return result


def _fp_irreducible(f: Sequence[int], p: int) -> bool:
    """Degree-m monic f is irreducible iff it has no factor of degree <= m/2."""
    m = len(f) - 1
    if m == 1:
        return True
    h = [0, 1]
    for _ in range(m // 2):
        h = _fp_powmod(h, p, f, p)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_fp_gcd(f, _fp_trim(diff), p)) != 1:
            return False
    return True


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, candidates ordered by the
    base-p integer value of their low coefficient vector."""
    for k in range(p**m):
        digits = []
        kk = k
        for _ in range(m):
            kk, d = divmod(kk, p)
            digits.append(d)
        cand = digits + [1]
        if _fp_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """Immutable GF(p^m) context; all element operations are pure."""

    __slots__ = ("p", "m", "q", "modulus", "_red", "_add", "_mul", "_neg", "_inv", "_proot")

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(c % p for c in modulus)
        # digit rows for y^j mod modulus, j = m .. 2m-2
        self._red = [[(-c) % p for c in self.modulus[:m]]]
        for _ in range(m - 2):
            row = self._red[-1]
            nxt = [0] + row[:-1] if row[-1] == 0 else self._shift_reduce(row)
            self._red.append(nxt)
        self._add = self._mul = self._neg = self._inv = self._proot = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    def _shift_reduce(self, row: list[int]) -> list[int]:
        p, m = self.p, self.m
        top = row[-1]
        out = [0] + row[:-1]
        if top:
            base = self._red[0]
            out = [(out[i] + top * base[i]) % p for i in range(m)]
        return out

    # -- coordinate view ---------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coordinates of element a in the polynomial basis, low to high."""
        p = self.p
        out = []
        for _ in range(self.m):
            a, d = divmod(a, p)
            out.append(d)
        return tuple(out)

    def from_coeffs(self, cs: Iterable[int]) -> int:
        rank = 0
        for i, c in enumerate(cs):
            rank += (c % self.p) * self.p**i
        return rank

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a * self.q + b]
        return self._add_raw(a, b)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        p = self.p
        return self.from_coeffs((-c) % p for c in self.coeffs(a))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a * self.q + b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def pth_root(self, a: int) -> int:
        """Unique b with b**p == a; the Frobenius x -> x**p has order m,
        so its inverse is x -> x**(p**(m-1))."""
        if self._proot is not None:
            return self._proot[a]
        return self.pow(a, self.p ** (self.m - 1))

    def _add_raw(self, a: int, b: int) -> int:
        p = self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs((x + y) % p for x, y in zip(ca, cb))

    def _mul_raw(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        if a == 0 or b == 0:
            return 0
        ca, cb = self.coeffs(a), self.coeffs(b)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    conv[i + j] += x * y
        for k in range(2 * m - 2, m - 1, -1):
            t = conv[k] % p
            if t:
                row = self._red[k - m]
                for i in range(m):
                    conv[i] += t * row[i]
            conv[k] = 0
        return self.from_coeffs(c % p for c in conv[:m])

    def _build_tables(self) -> None:
        q = self.q
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            base = a * q
            for b in range(a, q):
                s = self._add_raw(a, b)
                add[base + b] = s
                add[b * q + a] = s
                pr = self._mul_raw(a, b)
                mul[base + b] = pr
                mul[b * q + a] = pr
        neg = [self.from_coeffs((-c) % self.p for c in self.coeffs(a)) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow(a, q - 2)
        proot = [0] * q
        for a in range(q):
            proot[self.mul(a, self.pow(a, self.p - 1))] = a
        self._add, self._mul, self._neg, self._inv, self._proot = add, mul, neg, inv, proot

    # -- misc ----------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def to_text(self) -> str:
        """Textual record: p m c_0 c_1 ... c_m (modulus low to high)."""
        return " ".join(map(str, (self.p, self.m, *self.modulus)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


_FIELD_CACHE: dict[tuple, Field] = {}


def make_field(p: int, m: int, modulus: Sequence[int] | None = None) -> Field:
    """Build (or fetch the cached) GF(p^m) context.

    When no modulus is given, the deterministic default is the
    lexicographically smallest monic irreducible of degree m, so codes
    serialized against the default field deserialize identically anywhere.
    """
    if not is_prime(p):
        raise NotPrimeError(f"characteristic must be prime, got {p}")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if modulus is not None:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ReducibleModulusError(
                f"modulus must be monic of degree {m}, got {list(modulus)}"
            )
        if not _fp_irreducible(list(modulus), p):
            raise ReducibleModulusError(f"modulus {list(modulus)} is reducible over GF({p})")
        key = (p, m, modulus)
    else:
        key = (p, m, None)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = Field(p, m, modulus if modulus is not None else _default_modulus(p, m))
        _FIELD_CACHE[key] = field
        _FIELD_CACHE[(p, m, field.modulus)] = field
    return field


def field_from_text(text: str) -> Field:
    parts = [int(tok) for tok in text.split()]
    if len(parts) < 3:
        raise ValueError(f"malformed field record: {text!r}")
    p, m, coeffs = parts[0], parts[1], parts[2:]
    if len(coeffs) != m + 1:
        raise ValueError(f"field record has {len(coeffs)} coefficients, expected {m + 1}")
    return make_field(p, m, coeffs)
