"""Restricted alternant codes attacked with the same lattice machinery,
working modulo x**r instead of a square-free generator.

The restriction is D_j / L_j in GF(p) \\ {0}; locator roots are then the
inverses of support elements and magnitudes follow e_j = phi * mu_j / xi_j.
Because x**r is not square-free, the radicands u_k must be p-th powers by
coefficient support alone (every index not divisible by p must vanish on
the truncation), which is rare; feasibility_probe measures how rare
against the closed-form estimate.

A structural note the probe makes visible: for p >= 3 and k >= 2 the
radicand u_k = x**k + phi*k*x**(k-1)/s always carries the nonzero
coefficient phi*k/s(0) at index k-1, which is not a multiple of p, so
whenever r > p - 2 no invertible syndrome is ever feasible and the
observed rate is exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .decoder import KeyLattice, _root_multiplicity
from .errors import NotInvertibleError, ParamError
from .fields import Field, make_field
from .polyring import Poly, inv_mod
from .popov import PolyMatrix


@dataclass(frozen=True)
class AlternantCode:
    """Alternant code with syndrome length r and prime-subfield ratios."""

    field: Field
    L: tuple[int, ...]
    D: tuple[int, ...]
    r: int

    def __post_init__(self):
        f = self.field
        if self.r < 1:
            raise ParamError("syndrome length r must be >= 1")
        if len(self.L) != len(self.D):
            raise ParamError("L and D must have equal length")
        if len(set(self.L)) != len(self.L):
            raise ParamError("support elements must be distinct")
        if any(l == 0 for l in self.L) or any(d == 0 for d in self.D):
            raise ParamError("support and column multipliers must be nonzero")
        for x in self.xi:
            if not 1 <= x <= f.p - 1:
                raise ParamError("each D_j / L_j must lie in the prime subfield, nonzero")

    @property
    def n(self) -> int:
        return len(self.L)

    @property
    def xi(self) -> tuple[int, ...]:
        f = self.field
        return tuple(f.mul(d, f.inv(l)) for l, d in zip(self.L, self.D))


def random_restricted_alternant(p: int, m: int, r: int, rng) -> AlternantCode:
    """Full-length code: L is a random ordering of all nonzero elements,
    ratios xi uniform in 1..p-1, D = xi * L."""
    f = make_field(p, m)
    nonzero = [a for a in f.elements() if a]
    support = rng.sample(nonzero, len(nonzero))
    xi = [1 + rng.randrange(p - 1) for _ in support]
    d = [f.mul(x, l) for x, l in zip(xi, support)]
    return AlternantCode(f, tuple(support), tuple(d), r)


def alternant_syndrome(code: AlternantCode, e: Sequence[int]) -> Poly:
    """Power-sum syndrome: coefficient i is sum_j e_j * D_j * L_j**i, i < r."""
    f = code.field
    s = [0] * code.r
    for j, ej in enumerate(e):
        if ej:
            c = f.mul(ej, code.D[j])
            power = 1
            for i in range(code.r):
                s[i] = f.add(s[i], f.mul(c, power))
                power = f.mul(power, code.L[j])
    return Poly(f, s)


def alternant_syndrome_series(code: AlternantCode, e: Sequence[int]) -> Poly:
    """Same syndrome via sum_j e_j * D_j / (1 - x L_j) mod x**r."""
    f = code.field
    xr = Poly.monomial(f, code.r)
    acc = Poly.zero(f)
    for j, ej in enumerate(e):
        if ej:
            denom = Poly(f, (1, f.neg(code.L[j])))
            acc = acc + inv_mod(denom, xr).scale(f.mul(ej, code.D[j]))
    return acc % xr


def pth_root_mod_xr(u: Poly, r: int) -> Poly | None:
    """p-th root modulo x**r, or None when u is not a p-th power there.

    h**p = sum h_i**p x**(p*i) exactly in characteristic p, so u has a root
    iff its coefficients at indices not divisible by p vanish below r.
    """
    f = u.field
    p = f.p
    cs = u.coeffs
    for idx, c in enumerate(cs):
        if c and idx % p:
            return None
    return Poly(f, [f.pth_root(cs[i]) if i < len(cs) else 0 for i in range(0, r, p)])


def alternant_locator_from_error(code: AlternantCode, e: Sequence[int], phi: int) -> Poly:
    """prod (1 - x L_i)**(e_i xi_i / phi), exponents lifted to 0..p-1."""
    f = code.field
    p = f.p
    phi_inv = pow(phi, p - 2, p)
    sigma = Poly.one(f)
    for li, xii, ei in zip(code.L, code.xi, e):
        if ei:
            exp = (ei * xii * phi_inv) % p
            lin = Poly(f, (1, f.neg(li)))
            for _ in range(exp):
                sigma = sigma * lin
    return sigma


def try_build_alternant_lattice(code: AlternantCode, s: Poly, phi: int) -> KeyLattice | None:
    """Basis for the phi-th key equation mod x**r, if the radicands admit
    p-th roots; None otherwise.

    The key equation here is -phi*sigma' == sigma*s (mod x**r), so the
    radicands carry the opposite sign from the Goppa case:
    u_k = x**k + phi*k*x**(k-1)/s.
    """
    f = code.field
    p = f.p
    r = code.r
    xr = Poly.monomial(f, r)
    if s.is_zero() or s.coeffs[0] == 0:
        raise NotInvertibleError("syndrome not invertible modulo x**r (constant term zero)")
    s_inv = inv_mod(s, xr)
    zero, one = Poly.zero(f), Poly.one(f)
    us: list[Poly] = []
    vs: list[Poly] = []
    rows: list[list[Poly]] = [[xr] + [zero] * (p - 1)]
    for k in range(1, p):
        c = (phi * k) % p
        u = (Poly.monomial(f, k) + s_inv.shift(k - 1).scale(c)) % xr
        v = pth_root_mod_xr(u, r)
        if v is None:
            return None
        us.append(u)
        vs.append(v)
        rows.append([-v] + [one if j == k else zero for j in range(1, p)])
    return KeyLattice(phi=phi, u=us, v=vs, basis=PolyMatrix(f, rows))


def recover_error_values(code: AlternantCode, sigma: Poly, phi: int) -> dict[int, int]:
    """Support index -> magnitude, reading roots of sigma at inverse
    support points: e_j = phi * mu_j / xi_j."""
    f = code.field
    p = f.p
    out: dict[int, int] = {}
    for j, lj in enumerate(code.L):
        point = f.inv(lj)
        if sigma(point) == 0:
            mu = _root_multiplicity(sigma, point)
            out[j] = (phi * mu * pow(code.xi[j], p - 2, p)) % p
    return out


@dataclass
class ProbeReport:
    p: int
    m: int
    r: int
    trials: int
    feasible: int
    estimate: float
    predicted: float
    ci_low: float
    ci_high: float

    def line(self) -> str:
        return (
            f"{self.p} {self.m} {self.r} {self.trials} {self.feasible} "
            f"{self.estimate:.6f} {self.predicted:.6f} {self.ci_low:.6f} {self.ci_high:.6f}"
        )


def predicted_feasibility(p: int, m: int, r: int) -> float:
    """Closed-form estimate p**(-m*r*(p-1)**2/p) under the (optimistic)
    assumption of uniformly distributed radicands."""
    return float(p) ** (-(m * r * (p - 1) ** 2) / p)


def feasibility_probe(p: int, m: int, r: int, trials: int, rng) -> ProbeReport:
    """Monte-Carlo rate at which random codes plus random error patterns
    admit the full radicand p-th-root computation (phi = 1).

    Per trial: a fresh full-length restricted code, an error vector uniform
    over GF(p)^n, success iff the syndrome is invertible mod x**r and every
    u_k is a p-th power there.  Non-invertible syndromes count as
    infeasible.  A 3-sigma binomial interval around the observed rate is
    reported alongside the closed-form estimate.
    """
    if trials < 1:
        raise ParamError("trials must be >= 1")
    feasible = 0
    for i in range(trials):
        code = random_restricted_alternant(p, m, r, rng)
        e = [rng.randrange(p) for _ in range(code.n)]
        s = alternant_syndrome(code, e)
        try:
            if try_build_alternant_lattice(code, s, 1) is not None:
                feasible += 1
        except NotInvertibleError:
            pass
    est = feasible / trials
    sigma = math.sqrt(est * (1.0 - est) / trials)
    return ProbeReport(
        p=p,
        m=m,
        r=r,
        trials=trials,
        feasible=feasible,
        estimate=est,
        predicted=predicted_feasibility(p, m, r),
        ci_low=max(0.0, est - 3.0 * sigma),
        ci_high=min(1.0, est + 3.0 * sigma),
    )
