"""Dense exact linear algebra over QScalar: row echelon form and kernels."""
from __future__ import annotations

from typing import Sequence

from .scalar import ONE, ZERO, QScalar, scalar

__all__ = ["Matrix", "rref", "rank", "kernel_basis", "mat_vec"]


class Matrix:
    """Rectangular grid of QScalar entries, stored row-major."""

    def __init__(self, rows: Sequence[Sequence], cols: int | None = None):
        self.rows = [[e if isinstance(e, QScalar) else scalar(e) for e in row] for row in rows]
        if cols is None:
            cols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != cols for r in self.rows):
            raise ValueError("ragged matrix")
        self.nrows = len(self.rows)
        self.ncols = cols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def copy(self) -> "Matrix":
        return Matrix([list(r) for r in self.rows], self.ncols)

    def __repr__(self):
        return "Matrix(%dx%d)" % (self.nrows, self.ncols)


def rref(M: Matrix, column_order: Sequence[int] | None = None):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``pivots`` lists the pivot column of
    each nonzero row.  ``column_order`` changes the order in which columns
    are scanned for pivots (used to cross-check the rank).
    """
    rows = [list(r) for r in M.rows]
    cols = list(range(M.ncols)) if column_order is None else list(column_order)
    pivots = []
    r = 0
    for c in cols:
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                pr = rows[r]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(M: Matrix, column_order: Sequence[int] | None = None) -> int:
    return len(rref(M, column_order)[1])


def kernel_basis(M: Matrix) -> list[list[QScalar]]:
    """Basis of the right null space, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other
    free columns.  Injective matrices give an empty list.
    """
    rows, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * M.ncols
        v[free] = ONE
        for row, pc in zip(rows, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def mat_vec(M: Matrix, v: Sequence[QScalar]) -> list[QScalar]:
    out = []
    for row in M.rows:
        acc = ZERO
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out
