"""Exact integer linear algebra: Smith normal form, kernels, cokernels.

Everything runs on Python ints, so intermediate entries may grow without
overflow.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "IntMatrix",
    "SNFResult",
    "smith_normal_form",
    "kernel_basis",
    "cokernel_invariants",
    "solve_integer",
    "determinant",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    @classmethod
    def from_rows(cls, rows: int, cols: int, data) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in data)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("row data does not match declared shape")
        return cls(rows=rows, cols=cols, entries=entries)

    @classmethod
    def from_columns(cls, rows: int, cols: int, columns) -> "IntMatrix":
        data = [[columns[j][i] for j in range(cols)] for i in range(rows)]
        return cls.from_rows(rows, cols, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows(n, n, [[1 if i == j else 0 for j in range(n)]
                                    for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls.from_rows(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def vstack(cls, blocks) -> "IntMatrix":
        blocks = list(blocks)
        if not blocks:
            return cls.zeros(0, 0)
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise ValueError("column count mismatch in vstack")
        data = [row for b in blocks for row in b.entries]
        return cls.from_rows(sum(b.rows for b in blocks), cols, data)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            self.cols, self.rows,
            [[self.entries[i][j] for i in range(self.rows)]
             for j in range(self.cols)])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        data = [[sum(self.entries[i][k] * other.entries[k][j]
                     for k in range(self.cols))
                 for j in range(other.cols)]
                for i in range(self.rows)]
        return IntMatrix.from_rows(self.rows, other.cols, data)

    def matvec(self, vec) -> tuple:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(self.entries[i][j] * vec[j]
                         for j in range(self.cols))
                     for i in range(self.rows))

    def to_lists(self) -> list:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class SNFResult:
    """Decomposition U @ M @ V = S with U, V unimodular and S diagonal,
    diagonal entries non-negative and each dividing the next."""

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> list:
        return [self.s[i, i] for i in range(min(self.s.rows, self.s.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _find_pivot(a, t, rows, cols):
    """Smallest nonzero absolute value in a[t:, t:]; ties broken by lowest
    row, then lowest column."""
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            x = a[i][j]
            if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(m: IntMatrix) -> SNFResult:
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        piv = _find_pivot(a, t, rows, cols)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            # Clear the pivot column with row operations.
            residue_row = None
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0 and residue_row is None:
                        residue_row = i
            if residue_row is not None:
                swap_rows(t, residue_row)
                continue
            # Clear the pivot row with column operations.
            residue_col = None
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0 and residue_col is None:
                        residue_col = j
            if residue_col is not None:
                swap_cols(t, residue_col)
                continue
            if any(a[i][t] != 0 for i in range(t + 1, rows)):
                continue  # column operations disturbed the pivot column
            # Enforce divisibility: the pivot must divide every remaining entry.
            d = a[t][t]
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % d != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                add_row(t, bad, 1)
                continue
            break
        t += 1

    return SNFResult(
        u=IntMatrix.from_rows(rows, rows, u),
        s=IntMatrix.from_rows(rows, cols, a),
        v=IntMatrix.from_rows(cols, cols, v),
    )


def kernel_basis(m: IntMatrix):
    """Saturated lattice basis of the integer kernel {x : Mx = 0}.

    The vectors come from the unimodular column transform of the Smith
    decomposition, so every integer kernel vector is an integer combination.
    """
    snf = smith_normal_form(m)
    r = snf.rank
    return [snf.v.column(j) for j in range(r, m.cols)]


def cokernel_invariants(m: IntMatrix):
    """(torsion, free_rank) with coker(M) = sum of Z/d (d the torsion list,
    all > 1) plus Z^free_rank."""
    snf = smith_normal_form(m)
    torsion = [d for d in snf.diagonal if d > 1]
    return torsion, m.rows - snf.rank


def solve_integer(a: IntMatrix, b):
    """Some integer solution of Ax = b, or None when none exists.

    Unique when A has full column rank.
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    snf = smith_normal_form(a)
    c = snf.u.matvec(b)
    diag = snf.diagonal
    r = snf.rank
    y = [0] * a.cols
    for i in range(r):
        if c[i] % diag[i] != 0:
            return None
        y[i] = c[i] // diag[i]
    for i in range(r, a.rows):
        if c[i] != 0:
            return None
    return snf.v.matvec(y)


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
