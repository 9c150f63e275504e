"""Polynomial-matrix machinery: pivot indices, simple transformations, and
reduction to weak Popov form.

A matrix over GF(q)[x] is in weak Popov form when its nonzero pivot
indices are pairwise distinct; the row whose pivot degree is minimal is
then a shortest nonzero vector of the row lattice under the maximal-degree
length.  Reduction repeatedly cancels leading terms between rows (simple
transformations), which preserves the row span and keeps the transform
unimodular.
"""

from __future__ import annotations

from typing import Sequence

from .fields import Field
from .polyring import NEG_INF, Poly


def pivot_index(row: Sequence[Poly]) -> int:
    """1-based index of the rightmost entry of maximal degree; 0 for a zero row."""
    best = 0
    best_deg = NEG_INF
    for j, entry in enumerate(row, start=1):
        d = entry.degree
        if d is not NEG_INF and d >= best_deg:
            best_deg = d
            best = j
    return best


class PolyMatrix:
    """Rectangular matrix of Poly entries over one field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence[Poly]]):
        self.field = field
        self.rows = [list(r) for r in rows]

    @classmethod
    def identity(cls, field: Field, n: int) -> "PolyMatrix":
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def pivots(self) -> list[int]:
        return [pivot_index(r) for r in self.rows]

    def is_weak_popov(self) -> bool:
        nonzero = [p for p in self.pivots if p != 0]
        return len(nonzero) == len(set(nonzero))

    def copy(self) -> "PolyMatrix":
        return PolyMatrix(self.field, self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        zero = Poly.zero(self.field)
        out = []
        for row in self.rows:
            new = []
            for j in range(other.ncols):
                acc = zero
                for k, a in enumerate(row):
                    if a:
                        acc = acc + a * other.rows[k][j]
                new.append(acc)
            out.append(new)
        return PolyMatrix(self.field, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols})"

    def degree_tableau(self) -> str:
        """Entry degrees as text, '.' for zero entries; pivots bracketed."""
        lines = []
        for row in self.rows:
            piv = pivot_index(row)
            cells = []
            for j, entry in enumerate(row, start=1):
                d = "." if entry.is_zero() else str(entry.degree)
                cells.append(f"[{d}]" if j == piv else f" {d} ")
            lines.append(" ".join(cells))
        return "\n".join(lines)


def _row_submul(dst: list[Poly], src: list[Poly], c: int, e: int) -> None:
    """dst -= c * x**e * src, entrywise."""
    for j, s in enumerate(src):
        if s:
            dst[j] = dst[j] - s.scale(c).shift(e)


def weak_popov_reduce(
    a: PolyMatrix, accumulate: bool = False
) -> tuple[PolyMatrix, PolyMatrix | None]:
    """Reduce to weak Popov form by sweeps of simple transformations.

    Sweep order is deterministic: source row k ascending, target row l
    ascending, repeated until no positive pivot index repeats.  Returns the
    reduced matrix and, when accumulate is set, the unimodular U with
    U @ a == reduced (U is a product of elementary row operations, so its
    determinant is a nonzero constant).
    """
    field = a.field
    rows = [list(r) for r in a.rows]
    n = len(rows)
    u = PolyMatrix.identity(field, n).rows if accumulate else None
    piv = [pivot_index(r) for r in rows]

    def has_repeat() -> bool:
        seen = set()
        for p in piv:
            if p:
                if p in seen:
                    return True
                seen.add(p)
        return False

    while has_repeat():
        for k in range(n):
            if piv[k] == 0:
                continue
            col = piv[k] - 1
            for ell in range(n):
                if ell == k:
                    continue
                src = rows[k][col]
                while rows[ell][col].degree >= src.degree:
                    c = field.div(rows[ell][col].lc(), src.lc())
                    e = rows[ell][col].degree - src.degree
                    _row_submul(rows[ell], rows[k], c, e)
                    if u is not None:
                        _row_submul(u[ell], u[k], c, e)
                piv[ell] = pivot_index(rows[ell])
    reduced = PolyMatrix(field, rows)
    return reduced, (PolyMatrix(field, u) if u is not None else None)


def min_pivot_row(a: PolyMatrix) -> list[Poly]:
    """A row of minimal pivot degree (ties: lowest row index).

    For a matrix in weak Popov form this is a shortest nonzero lattice
    vector: every vector in the row span has degree at least the minimal
    pivot degree.
    """
    best_row = None
    best_deg = None
    for row in a.rows:
        p = pivot_index(row)
        if p == 0:
            continue
        d = row[p - 1].degree
        if best_deg is None or d < best_deg:
            best_deg = d
            best_row = row
    if best_row is None:
        raise ValueError("matrix has no nonzero row")
    return list(best_row)


def det_fraction_free(a: PolyMatrix) -> Poly:
    """Determinant by Bareiss one-step fraction-free elimination.

    Divisions are exact in GF(q)[x]; intended for the small audit matrices
    produced alongside reductions, not for production linear algebra.
    """
    n = a.nrows
    if n != a.ncols:
        raise ValueError("determinant of a non-square matrix")
    field = a.field
    m = [list(r) for r in a.rows]
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(field)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r.is_zero(), "fraction-free elimination division not exact"
                m[i][j] = q
            m[i][k] = Poly.zero(field)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det
