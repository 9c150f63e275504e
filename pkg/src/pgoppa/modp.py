"""Dense exact linear algebra over Z/pZ, on numpy int64 arrays.

Entries are kept reduced to [0, p).  p is assumed prime (inverses via
Fermat), and small enough that products fit in int64, which holds for
every field this package constructs.
"""

from __future__ import annotations

import numpy as np


def rref_mod_p(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p.  Returns (rref, pivot column list)."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right null space, one basis vector per row."""
    a, pivots = rref_mod_p(mat, p)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-a[r, fc]) % p
    return basis


def solve_mod_p(mat: np.ndarray, rhs: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of mat @ x = rhs mod p, or None if inconsistent."""
    a = np.array(mat, dtype=np.int64) % p
    b = np.array(rhs, dtype=np.int64).reshape(-1, 1) % p
    aug, pivots = rref_mod_p(np.hstack([a, b]), p)
    cols = a.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = aug[r, cols]
    return x


def inv_mod_p(mat: np.ndarray, p: int) -> np.ndarray | None:
    """Matrix inverse mod p, or None if singular."""
    a = np.array(mat, dtype=np.int64) % p
    n = a.shape[0]
    aug, pivots = rref_mod_p(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return None
    return aug[:, n:]


def matmul_mod_p(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p
