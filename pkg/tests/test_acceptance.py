"""Acceptance suite: one test per criterion, each printing a PASS line.

Criterion 1 is statistical (3-sigma binomial around the modeled rates) and
is the slowest part; its per-row success counts are cached so the
determinism criterion can re-run the identical configurations and compare.
Run with `pytest -s tests/test_acceptance.py` to watch the lines appear.
"""

import warnings

import pytest

from pgoppa.alternant import feasibility_probe
from pgoppa.decoder import decode, locator_from_error
from pgoppa.experiments import (
    TrialConfig,
    binomial_sigma,
    run_trials,
    success_prob_model,
)
from pgoppa.fields import make_field
from pgoppa.goppa import build_code, sample_error
from pgoppa.polyring import Poly, pth_root_mod, random_irreducible
from pgoppa.popov import (
    PolyMatrix,
    det_fraction_free,
    min_pivot_row,
    pivot_index,
    weak_popov_reduce,
)
from pgoppa.rng import SplitMix64

ACCEPTANCE_SEED = 20240811

TABLE_ROWS = [
    (3, 3, 8, 8, 0.962963),
    (3, 3, 8, 7, 0.998628),
    (5, 2, 12, 12, 0.960000),
]

_criterion1_cache: dict[tuple, int] = {}


def _run_table_row(p, m, t, w, trials=2000):
    cfg = TrialConfig(p=p, m=m, t=t, w=w, trials=trials, dist="equal", seed=ACCEPTANCE_SEED)
    return run_trials(cfg).successes


def _announce(number, name, ok, detail=""):
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {number} {name}: {verdict}{suffix}")
    assert ok, f"criterion {number} {name} failed{suffix}"


def test_criterion_1_table_reproduction():
    details = []
    ok = True
    for p, m, t, w, prsuc in TABLE_ROWS:
        successes = _run_table_row(p, m, t, w)
        _criterion1_cache[(p, m, t, w)] = successes
        observed = successes / 2000
        sigma = binomial_sigma(prsuc, 2000)
        details.append(f"({p},{m},{t},{w}): {observed:.4f} vs {prsuc:.4f}")
        if abs(observed - prsuc) > 3 * sigma:
            ok = False
    _announce(1, "table reproduction", ok, "; ".join(details))


def test_criterion_2_patterson_regime():
    successes = 0
    for i in range(500):
        rng = SplitMix64(ACCEPTANCE_SEED + 7_000_000 + i)
        code = build_code(2, 4, 3, 16, rng=rng)
        error = sample_error(16, 3, ("equal", 1), 2, rng)
        codeword = code.random_codeword(rng)
        received = tuple((a + b) % 2 for a, b in zip(codeword, error.values))
        successes += codeword in decode(code, received).codewords()
    _announce(2, "binary regime w = t", successes == 500, f"{successes}/500")


def test_criterion_3_two_over_p_regime():
    successes = 0
    for i in range(200):
        rng = SplitMix64(ACCEPTANCE_SEED + 8_000_000 + i)
        code = build_code(5, 2, 12, rng=rng)
        error = sample_error(code.n, 4, "uniform", 5, rng)
        codeword = code.random_codeword(rng)
        received = tuple((a + b) % 5 for a, b in zip(codeword, error.values))
        successes += codeword in decode(code, received).codewords()
    _announce(3, "(2/p)t regime p = 5", successes == 200, f"{successes}/200")


def test_criterion_4_key_equation_suite():
    rng = SplitMix64(ACCEPTANCE_SEED + 4)
    checked = 0
    failures = 0
    while checked < 500:
        p = (2, 3, 5)[rng.randrange(3)]
        m = rng.randint(1, 3 if p == 2 else 2)
        q = p**m
        tmax = min((q - 2) // m, 6)
        if tmax < 1:
            continue
        t = rng.randint(1, tmax)
        code = build_code(p, m, t, rng=rng)
        error = sample_error(code.n, rng.randrange(code.n + 1), "uniform", p, rng)
        phi = 1 + rng.randrange(p - 1)
        sigma = locator_from_error(code, error, phi).poly
        s = code.syndrome_poly(error.values)
        if (sigma.deriv().scale(phi) % code.g) != ((sigma * s) % code.g):
            failures += 1
        checked += 1
    _announce(4, "key equation identity", failures == 0, f"{failures} failures in 500")


def test_criterion_5_weak_popov_suite():
    rng = SplitMix64(ACCEPTANCE_SEED + 5)
    lemma_checks = 0
    for i in range(1000):
        p = (2, 3, 5, 7)[i % 4]
        m = 2 if p in (2, 3) else 1
        f = make_field(p, m)
        t = 2 + rng.randrange(5)
        g = Poly(f, [rng.randrange(f.q) for _ in range(t)] + [1])
        rows = [[g] + [Poly.zero(f)] * (p - 1)]
        for k in range(1, p):
            v = Poly(f, [rng.randrange(f.q) for _ in range(t)])
            rows.append([-v] + [Poly.one(f) if j == k else Poly.zero(f) for j in range(1, p)])
        basis = PolyMatrix(f, rows)
        reduced, u = weak_popov_reduce(basis, accumulate=True)
        piv = [x for x in reduced.pivots if x]
        assert len(piv) == len(set(piv)), "pivot indices repeat after reduction"
        assert (u @ basis) == reduced, "U @ A != A'"
        det = det_fraction_free(u)
        assert det.degree == 0 and det.lc() != 0, "det(U) not a nonzero constant"
        if lemma_checks < 200:
            mind = min(row[pivot_index(row) - 1].degree for row in reduced.rows if pivot_index(row))
            mult = [Poly(f, [rng.randrange(f.q) for _ in range(4)]) for _ in range(p)]
            comb = [Poly.zero(f) for _ in range(p)]
            for r_idx, ui in enumerate(mult):
                for j in range(p):
                    comb[j] = comb[j] + ui * reduced.rows[r_idx][j]
            if any(not c.is_zero() for c in comb):
                assert max(c.degree for c in comb) >= mind, "lattice vector beats min pivot degree"
                lemma_checks += 1
    _announce(5, "weak Popov suite", True, f"1000 bases, {lemma_checks} lemma samples")


def test_criterion_6_pth_root_suites():
    rng = SplitMix64(ACCEPTANCE_SEED + 6)
    for p, m in [(2, 4), (3, 3), (5, 2)]:
        f = make_field(p, m)
        g = random_irreducible(6, f, rng)
        for _ in range(1000):
            z = Poly(f, [rng.randrange(f.q) for _ in range(6)])
            assert pth_root_mod(z.pow_mod(p, g), g) == z % g
    count = 0
    for p, m in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
                 (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2),
                 (7, 1), (7, 2), (11, 1), (13, 1)]:
        f = make_field(p, m)
        assert f.q <= 81
        for a in range(f.q):
            assert f.pow(f.pth_root(a), p) == a
            count += 1
    _announce(6, "p-th root suites", True, f"3x1000 modular + {count} field elements")


def test_criterion_7_syndrome_equivalence():
    rng = SplitMix64(ACCEPTANCE_SEED + 7)
    code = build_code(3, 3, 8, rng=rng)
    for _ in range(1000):
        e = sample_error(code.n, rng.randrange(code.n + 1), "uniform", 3, rng)
        coeffs = list(code.syndrome_poly(e.values).coeffs)
        coeffs += [0] * (code.t - len(coeffs))
        assert coeffs == code.syndrome_from_word(e.values), "syndrome paths disagree"
    import numpy as np

    zero_agree = 0
    for _ in range(1000):
        w = tuple(rng.randrange(3) for _ in range(code.n))
        in_q_kernel = all(v == 0 for v in code.syndrome_from_word(w))
        in_p_kernel = not ((code.Hbar @ np.array(w)) % 3).any()
        assert in_q_kernel == in_p_kernel, "kernel equivalence broken"
        zero_agree += 1
    _announce(7, "syndrome equivalence", True, "1000 coefficient + 1000 kernel checks")


def test_criterion_8_alternant_probe_soft():
    rng = SplitMix64(ACCEPTANCE_SEED + 8)
    report = feasibility_probe(2, 2, 4, 20000, rng)
    within = report.predicted / 2 <= report.estimate <= report.predicted * 2
    line = report.line()
    if not within:
        warnings.warn(
            "alternant feasibility outside factor 2 of the closed-form estimate "
            f"(soft bound; the estimate assumes uniform radicands): {line}",
            stacklevel=1,
        )
    _announce(8, "alternant probe (soft)", True, f"{line}; within factor 2: {within}")


def test_criterion_9_determinism():
    ok = True
    details = []
    for p, m, t, w, _ in TABLE_ROWS:
        first = _criterion1_cache.get((p, m, t, w))
        if first is None:
            first = _run_table_row(p, m, t, w)
        again = _run_table_row(p, m, t, w)
        details.append(f"({p},{m},{t},{w}): {first} == {again}")
        if first != again:
            ok = False
    _announce(9, "determinism", ok, "; ".join(details))
