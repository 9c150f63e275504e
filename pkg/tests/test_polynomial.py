"""Polynomial ring tests: ring laws, gcd machinery, characteristic-p
decomposition, and the modular inverse Frobenius."""

import random

import pytest

from pgoppa.errors import NoRootError, NotInvertibleError
from pgoppa.fields import make_field
from pgoppa.polyring import (
    NEG_INF,
    Poly,
    ext_gcd,
    inv_mod,
    is_irreducible,
    is_square_free,
    mod_mul,
    poly_from_text,
    poly_gcd,
    poly_pth_power,
    pth_power_decompose,
    pth_root_mod,
    random_irreducible,
)
from pgoppa.rng import SplitMix64

F3 = make_field(3, 1)


def rand_poly(field, deg_max, rng):
    return Poly(field, [rng.randrange(field.q) for _ in range(deg_max + 1)])


def test_degree_sentinel():
    assert Poly.zero(F3).degree == NEG_INF
    assert Poly.zero(F3).degree < -(10**9)
    assert Poly.one(F3).degree == 0


def test_divmod_random():
    rng = random.Random(5)
    f = make_field(3, 2)
    for _ in range(1000):
        a = rand_poly(f, rng.randrange(12), rng)
        b = rand_poly(f, rng.randrange(8), rng)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_mod_mul_matches_direct():
    rng = random.Random(6)
    f = make_field(5, 1)
    g = Poly(f, [2, 0, 1, 1])
    for _ in range(200):
        a = rand_poly(f, 6, rng)
        b = rand_poly(f, 6, rng)
        assert mod_mul(a, b, g) == (a * b) % g


def test_derivative_kills_pth_powers():
    for p in (2, 3, 5):
        f = make_field(p, 1)
        xp = Poly.monomial(f, p)
        assert xp.deriv().is_zero()


def test_derivative_worked_example():
    # over GF(3): (x^4 + 2x^2 + x + 1)' = x^3 + x + 1
    f = Poly(F3, [1, 1, 2, 0, 1])
    assert f.deriv() == Poly(F3, [1, 1, 0, 1])


def test_eval_matches_power_sum():
    rng = random.Random(7)
    f = make_field(3, 2)
    for _ in range(100):
        a = rand_poly(f, 6, rng)
        x = rng.randrange(f.q)
        direct = 0
        for i, c in enumerate(a.coeffs):
            direct = f.add(direct, f.mul(c, f.pow(x, i)))
        assert a(x) == direct


def test_ext_gcd_base_case():
    f = make_field(3, 2)
    a = Poly(f, [2, 5, 7])
    d, u, v = ext_gcd(a, Poly.zero(f))
    assert d == a.monic()
    assert u == Poly(f, [f.inv(a.lc())])
    assert v.is_zero()


def test_ext_gcd_worked_example():
    a = Poly(F3, [2, 0, 1])  # x^2 - 1
    b = Poly(F3, [2, 1])  # x - 1
    d, u, v = ext_gcd(a, b)
    assert d == Poly(F3, [2, 1])  # monic gcd = x - 1
    assert u * a + v * b == d


def test_ext_gcd_bezout_random():
    rng = random.Random(8)
    f = make_field(2, 4)
    for _ in range(300):
        a = rand_poly(f, rng.randrange(8), rng)
        b = rand_poly(f, rng.randrange(8), rng)
        if a.is_zero() and b.is_zero():
            continue
        d, u, v = ext_gcd(a, b)
        assert u * a + v * b == d
        assert d.lc() == 1
        assert (a % d).is_zero() and (b % d).is_zero()


def test_inv_mod_examples():
    g = Poly(F3, [1, 0, 1])  # x^2 + 1
    assert inv_mod(Poly.one(F3), g) == Poly.one(F3)
    inv_x = inv_mod(Poly.x(F3), g)
    assert inv_x == Poly(F3, [0, 2])
    assert (Poly.x(F3) * inv_x) % g == Poly.one(F3)
    with pytest.raises(NotInvertibleError):
        inv_mod(Poly.x(F3), Poly(F3, [0, 0, 1]))  # gcd x


def test_is_square_free():
    assert is_square_free(Poly(F3, [1, 0, 1]))  # irreducible quadratic
    assert not is_square_free(Poly(F3, [0, 0, 1]))  # x^2
    for c in range(3):
        # x^3 + c has zero derivative: a cube, never square-free
        assert not is_square_free(Poly(F3, [c, 0, 0, 1]))


def test_random_irreducible_linear_always():
    f = make_field(5, 1)
    rng = SplitMix64(9)
    for _ in range(20):
        g = random_irreducible(1, f, rng)
        assert g.degree == 1 and g.lc() == 1


def test_random_irreducible_no_roots_small_degree():
    f = make_field(3, 2)
    rng = SplitMix64(10)
    for t in (2, 3):
        for _ in range(25):
            g = random_irreducible(t, f, rng)
            assert all(g(a) != 0 for a in f.elements())


def test_random_irreducible_square_free():
    f = make_field(3, 3)
    rng = SplitMix64(11)
    for _ in range(30):
        assert is_square_free(random_irreducible(8, f, rng))


def test_irreducible_scan_equals_full_criterion():
    # the degree <= t/2 factor scan and the criterion with the trailing
    # x^(q^t) == x congruence decide the same predicate
    rng = SplitMix64(12)
    for p, m, t in [(2, 2, 6), (3, 2, 5), (5, 1, 6)]:
        f = make_field(p, m)
        for _ in range(150):
            g = Poly(f, [rng.randrange(f.q) for _ in range(t)] + [1])
            assert is_irreducible(g) == is_irreducible(g, full_check=True)


def test_pth_power_decompose_zero():
    parts = pth_power_decompose(Poly.zero(F3))
    assert len(parts) == 3 and all(p.is_zero() for p in parts)


def test_pth_power_decompose_worked_example():
    # f = x^4 + 2x^2 + x + 1 over GF(3): a_0 = 1, a_1 = x + 1, a_2 = 2
    f = Poly(F3, [1, 1, 2, 0, 1])
    a0, a1, a2 = pth_power_decompose(f)
    assert a0 == Poly.one(F3)
    assert a1 == Poly(F3, [1, 1])
    assert a2 == Poly(F3, [2])
    recomposed = poly_pth_power(a0) + poly_pth_power(a1).shift(1) + poly_pth_power(a2).shift(2)
    assert recomposed == f


def test_pth_power_decompose_roundtrip_and_bounds():
    rng = random.Random(13)
    for p, m in [(2, 3), (3, 2), (5, 1)]:
        f = make_field(p, m)
        for _ in range(300):
            a = rand_poly(f, rng.randrange(15), rng)
            parts = pth_power_decompose(a)
            t = a.degree
            total = Poly.zero(f)
            for k, ak in enumerate(parts):
                if not a.is_zero():
                    assert ak.degree <= (t - k) // p or ak.is_zero()
                total = total + poly_pth_power(ak).shift(k)
            assert total == a


def test_pth_root_mod_identity_and_roundtrip():
    rng = SplitMix64(14)
    for p, m in [(2, 4), (3, 3), (5, 2)]:
        f = make_field(p, m)
        g = random_irreducible(5, f, rng)
        assert pth_root_mod(Poly.one(f), g) == Poly.one(f)
        for _ in range(200):
            z = Poly(f, [rng.randrange(f.q) for _ in range(5)])
            zp = z.pow_mod(p, g)
            assert pth_root_mod(zp, g) == z % g


def test_pth_root_mod_exhaustive_tiny():
    g = Poly(F3, [1, 0, 1])
    for c0 in range(3):
        for c1 in range(3):
            z = Poly(F3, [c0, c1])
            v = pth_root_mod(z, g)
            assert v.pow_mod(3, g) == z


def test_pth_root_mod_frobenius_linearity():
    rng = SplitMix64(15)
    f = make_field(3, 2)
    g = random_irreducible(4, f, rng)
    for _ in range(100):
        z1 = Poly(f, [rng.randrange(9) for _ in range(4)])
        z2 = Poly(f, [rng.randrange(9) for _ in range(4)])
        c = rng.randrange(9)
        lhs = pth_root_mod(z1 + z2, g)
        assert lhs == pth_root_mod(z1, g) + pth_root_mod(z2, g)
        scaled = pth_root_mod(z1.scale(f.pow(c, 3)), g)
        assert scaled == pth_root_mod(z1, g).scale(c)


def test_pth_root_mod_no_root():
    with pytest.raises(NoRootError):
        pth_root_mod(Poly.x(F3), Poly(F3, [0, 0, 1]))  # x is no cube mod x^2


def test_square_free_composite_modulus_roots_exist():
    # product of distinct irreducibles: Frobenius still bijective
    f = make_field(3, 2)
    rng = SplitMix64(16)
    g1 = random_irreducible(2, f, rng)
    g2 = random_irreducible(3, f, rng)
    g = g1 * g2
    assert is_square_free(g)
    for _ in range(100):
        z = Poly(f, [rng.randrange(9) for _ in range(5)])
        v = pth_root_mod(z, g)
        assert v.pow_mod(3, g) == z % g


def test_serialization():
    f = make_field(3, 2)
    a = Poly(f, [4, 0, 7])
    assert poly_from_text(f, a.to_text()) == a
    assert Poly.zero(f).to_text() == "0"
    assert poly_from_text(f, "0").is_zero()


def test_gcd_monic():
    rng = random.Random(17)
    f = make_field(2, 3)
    for _ in range(100):
        a = rand_poly(f, 6, rng)
        b = rand_poly(f, 6, rng)
        c = rand_poly(f, 3, rng)
        if (a * c).is_zero() and (b * c).is_zero():
            continue
        d = poly_gcd(a * c, b * c)
        if not c.is_zero():
            assert ((a * c) % d).is_zero()
            assert (d % c.monic()).is_zero()
