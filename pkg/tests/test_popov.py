"""Weak Popov reduction tests: pivot semantics, the worked 2x2 example,
unimodularity, the shortest-vector property, and the Euclid equivalence
in characteristic 2."""

import pytest

from pgoppa.fields import Field, make_field
from pgoppa.polyring import Poly, random_irreducible
from pgoppa.popov import (
    PolyMatrix,
    det_fraction_free,
    min_pivot_row,
    pivot_index,
    weak_popov_reduce,
)
from pgoppa.rng import SplitMix64

F3 = make_field(3, 1)
X = Poly.x(F3)
ONE = Poly.one(F3)
ZERO = Poly.zero(F3)


def random_lattice_basis(p, m, t, rng):
    """p x p basis shaped like the decoder's: first row (g, 0, ..), then
    rows (-v_k, .., 1, ..)."""
    f = make_field(p, m)
    g = Poly(f, [rng.randrange(f.q) for _ in range(t)] + [1])
    rows = [[g] + [Poly.zero(f)] * (p - 1)]
    for k in range(1, p):
        v = Poly(f, [rng.randrange(f.q) for _ in range(t)])
        rows.append([-v] + [Poly.one(f) if j == k else Poly.zero(f) for j in range(1, p)])
    return PolyMatrix(f, rows)


def test_pivot_index_examples():
    assert pivot_index([ZERO, ZERO]) == 0
    assert pivot_index([X, ONE]) == 1
    assert pivot_index([X, X]) == 2  # ties resolve rightward


def test_identity_already_reduced():
    a = PolyMatrix.identity(F3, 3)
    r, u = weak_popov_reduce(a, accumulate=True)
    assert r == a
    assert u == PolyMatrix.identity(F3, 3)


def test_worked_2x2_example():
    a = PolyMatrix(F3, [[X * X, ZERO], [X, ONE]])
    r, u = weak_popov_reduce(a, accumulate=True)
    assert r == PolyMatrix(F3, [[ZERO, -X], [X, ONE]])
    assert r.pivots == [2, 1]
    assert (u @ a) == r
    d = det_fraction_free(u)
    assert d.degree == 0 and d.lc() != 0


def test_min_pivot_row_tie_breaks_to_lowest_row_index():
    a = PolyMatrix(F3, [[ZERO, -X], [X, ONE]])
    # both pivot degrees are 1; the first row wins the tie
    assert min_pivot_row(a) == [ZERO, -X]
    b = PolyMatrix.identity(F3, 2)
    assert min_pivot_row(b) == [ONE, ZERO]


def test_min_pivot_row_rejects_zero_matrix():
    with pytest.raises(ValueError):
        min_pivot_row(PolyMatrix(F3, [[ZERO, ZERO]]))


def test_degenerate_constant_off_diagonal():
    # constant v rows: the general pivot rule labels them correctly and the
    # basis is already in weak Popov form
    g = Poly(F3, [1, 2, 0, 1])
    c = Poly(F3, [2])
    a = PolyMatrix(F3, [[g, ZERO], [c, ONE]])
    r, _ = weak_popov_reduce(a)
    assert r == a
    assert r.pivots == [1, 2]


@pytest.mark.parametrize("p,m,t", [(2, 3, 6), (3, 2, 6), (5, 1, 5), (7, 1, 4)])
def test_random_bases_reduce_correctly(p, m, t):
    rng = SplitMix64(100 + p)
    for _ in range(60):
        a = random_lattice_basis(p, m, t, rng)
        r, u = weak_popov_reduce(a, accumulate=True)
        piv = [x for x in r.pivots if x]
        assert len(piv) == len(set(piv))
        assert (u @ a) == r
        d = det_fraction_free(u)
        assert d.degree == 0 and d.lc() != 0


def test_shortest_vector_lemma_sampled():
    rng = SplitMix64(321)
    f = make_field(3, 2)
    for _ in range(20):
        a = random_lattice_basis(3, 2, 6, rng)
        r, _ = weak_popov_reduce(a)
        mind = min(row[pivot_index(row) - 1].degree for row in r.rows if pivot_index(row))
        assert max(e.degree for e in min_pivot_row(r)) == mind
        for _ in range(10):
            mult = [Poly(f, [rng.randrange(9) for _ in range(4)]) for _ in range(3)]
            comb = [Poly.zero(f) for _ in range(3)]
            for i, ui in enumerate(mult):
                for j in range(3):
                    comb[j] = comb[j] + ui * r.rows[i][j]
            if any(not c.is_zero() for c in comb):
                assert max(c.degree for c in comb) >= mind


def euclid_with_stop(g: Poly, v: Poly, stop: int):
    """Extended Euclid on (g, v), returning the first remainder of degree
    <= stop together with its v-cofactor: r = u*v (mod g)."""
    f = g.field
    r0, r1 = g, v
    u0, u1 = Poly.zero(f), Poly.one(f)
    while r1.degree > stop:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
    return r1, u1


def test_p2_reduction_coincides_with_euclid():
    rng = SplitMix64(777)
    f = make_field(2, 4)
    for _ in range(50):
        t = 4 + rng.randrange(5)
        g = random_irreducible(t, f, rng)
        v = Poly(f, [rng.randrange(16) for _ in range(t)])
        if v.is_zero():
            continue
        basis = PolyMatrix(f, [[g, Poly.zero(f)], [v, Poly.one(f)]])
        r, _ = weak_popov_reduce(basis)
        degs = sorted(row[pivot_index(row) - 1].degree for row in r.rows)
        if degs[0] == degs[1]:
            continue  # shortest vector not unique; no canonical comparison
        a0, a1 = min_pivot_row(r)
        e0, e1 = euclid_with_stop(g, v, t // 2)
        # agreement up to a scalar: cross-multiply
        assert a0 * e1 == e0 * a1
        assert not a1.is_zero() and not e1.is_zero()


def test_cost_scaling_trend():
    """Operation count grows no faster than a fitted c * p^3 * t^2 curve."""

    class CountingField(Field):
        __slots__ = ("ops",)

        def __init__(self, p, m, modulus):
            self.ops = 0
            super().__init__(p, m, modulus)

        def mul(self, a, b):
            self.ops += 1
            return super().mul(a, b)

        def add(self, a, b):
            self.ops += 1
            return super().add(a, b)

    def measure(p, t, reps=4):
        base = make_field(p, 1)
        f = CountingField(p, 1, base.modulus)
        rng = SplitMix64(1000 * p + t)
        total = 0
        for _ in range(reps):
            g = Poly(f, [rng.randrange(p) for _ in range(t)] + [1])
            rows = [[g] + [Poly.zero(f)] * (p - 1)]
            for k in range(1, p):
                v = Poly(f, [rng.randrange(p) for _ in range(t)])
                rows.append(
                    [-v] + [Poly.one(f) if j == k else Poly.zero(f) for j in range(1, p)]
                )
            f.ops = 0
            weak_popov_reduce(PolyMatrix(f, rows))
            total += f.ops
        return total / reps

    # t-scaling at fixed p: quadrupling t should stay within ~(ratio^2) * slack
    for p in (3, 5):
        small, large = measure(p, 4), measure(p, 16)
        assert large <= small * (16 / 4) ** 2 * 3.0
    # p-scaling at fixed t: cost ratio bounded by (p ratio)^3 * slack
    c3, c7 = measure(3, 6), measure(7, 6)
    assert c7 <= c3 * (7 / 3) ** 3 * 3.0
