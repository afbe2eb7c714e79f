"""Exact dense and sparse linear algebra over a cyclotomic field.

Dense matrices are lists of lists of Cyclotomic; sparse operators are
row-major dicts.  Everything is fraction-free-by-field: exact Gaussian
elimination with field inverses.
"""

from __future__ import annotations

from .cyclotomic import CyclotomicField, Cyclotomic
from .errors import SingularGram


def zeros(field: CyclotomicField, n: int, m: int):
    return [[field.zero] * m for _ in range(n)]


def identity(field: CyclotomicField, n: int):
    out = zeros(field, n, n)
    for i in range(n):
        out[i][i] = field.one
    return out


def mat_mul(a, b, field: CyclotomicField):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(field, n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(k):
            c = ai[j]
            if not c.is_zero():
                bj = b[j]
                for l in range(m):
                    if not bj[l].is_zero():
                        oi[l] = oi[l] + c * bj[l]
    return out


def mat_inverse(a, field: CyclotomicField):
    """Inverse by Gauss-Jordan; raises SingularGram when not invertible."""
    n = len(a)
    aug = [list(row) + list(idrow) for row, idrow in zip(a, identity(field, n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise SingularGram("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col:
                c = aug[r][col]
                if not c.is_zero():
                    aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_rank(a, field: CyclotomicField) -> int:
    if not a:
        return 0
    rows = [list(r) for r in a]
    m = len(rows[0])
    rank = 0
    for col in range(m):
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                c = rows[r][col]
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class RowSpace:
    """Incremental reduced row space with expression of members in the
    originally inserted rows.

    insert(row) returns None when the row is independent (it is added), or
    the coefficient list over previously added rows when dependent.
    """

    def __init__(self, field: CyclotomicField, width: int):
        self.field = field
        self.width = width
        self.echelon = []          # reduced rows
        self.pivcols = []          # pivot column of each echelon row
        self.history = []          # expression of each echelon row in inserted rows
        self.count = 0             # number of independent rows inserted

    def _reduce(self, row):
        row = list(row)
        coeffs = [self.field.zero] * self.count
        for erow, pc, hist in zip(self.echelon, self.pivcols, self.history):
            c = row[pc]
            if not c.is_zero():
                for j in range(self.width):
                    if not erow[j].is_zero():
                        row[j] = row[j] - c * erow[j]
                for k in range(self.count):
                    if not hist[k].is_zero():
                        coeffs[k] = coeffs[k] + c * hist[k]
        return row, coeffs

    def insert(self, row):
        red, coeffs = self._reduce(row)
        pc = next((j for j in range(self.width) if not red[j].is_zero()), None)
        if pc is None:
            return coeffs
        inv = red[pc].inverse()
        red = [x * inv for x in red]
        hist = [(-c) * inv for c in coeffs] + [inv]
        # normalize existing echelon rows against the new pivot column
        for i in range(len(self.echelon)):
            c = self.echelon[i][pc]
            if not c.is_zero():
                self.echelon[i] = [x - c * y for x, y in zip(self.echelon[i], red)]
                self.history[i] = [
                    a - c * b
                    for a, b in zip(self.history[i] + [self.field.zero], hist)
                ]
            else:
                self.history[i] = self.history[i] + [self.field.zero]
        self.echelon.append(red)
        self.pivcols.append(pc)
        self.history.append(hist)
        self.count += 1
        return None


class SparseOp:
    """Sparse linear operator: rows[r] = {c: scalar}; shape (n, n) or (n, m)."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: CyclotomicField, nrows: int, ncols: int, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {i: {i: field.one} for i in range(n)})

    @classmethod
    def diagonal(cls, field, diag):
        rows = {i: {i: d} for i, d in enumerate(diag) if not d.is_zero()}
        return cls(field, len(diag), len(diag), rows)

    def set(self, r, c, v):
        if v.is_zero():
            self.rows.get(r, {}).pop(c, None)
        else:
            self.rows.setdefault(r, {})[c] = v

    def add_to(self, r, c, v):
        row = self.rows.setdefault(r, {})
        new = row.get(c, self.field.zero) + v
        if new.is_zero():
            row.pop(c, None)
        else:
            row[c] = new

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def copy(self):
        return SparseOp(self.field, self.nrows, self.ncols,
                        {r: dict(cols) for r, cols in self.rows.items()})

    def __add__(self, other):
        out = self.copy()
        for r, cols in other.rows.items():
            for c, v in cols.items():
                out.add_to(r, c, v)
        return out

    def __sub__(self, other):
        out = self.copy()
        for r, cols in other.rows.items():
            for c, v in cols.items():
                out.add_to(r, c, -v)
        return out

    def scale(self, s):
        if s.is_zero():
            return SparseOp(self.field, self.nrows, self.ncols)
        return SparseOp(self.field, self.nrows, self.ncols,
                        {r: {c: s * v for c, v in cols.items()}
                         for r, cols in self.rows.items()})

    def __matmul__(self, other: "SparseOp") -> "SparseOp":
        assert self.ncols == other.nrows
        out_rows = {}
        orows = other.rows
        for r, cols in self.rows.items():
            acc = {}
            for k, a in cols.items():
                brow = orows.get(k)
                if brow:
                    for c, b in brow.items():
                        prev = acc.get(c)
                        acc[c] = a * b if prev is None else prev + a * b
            acc = {c: v for c, v in acc.items() if not v.is_zero()}
            if acc:
                out_rows[r] = acc
        return SparseOp(self.field, self.nrows, other.ncols, out_rows)

    def is_zero(self):
        return all(not cols for cols in self.rows.values())

    def __eq__(self, other):
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("SparseOp is unhashable")

    def tensor(self, other: "SparseOp") -> "SparseOp":
        """Kronecker product; index (i, j) -> i * other.n + j."""
        out = SparseOp(self.field, self.nrows * other.nrows, self.ncols * other.ncols)
        for r1, cols1 in self.rows.items():
            for c1, v1 in cols1.items():
                for r2, cols2 in other.rows.items():
                    base_r = r1 * other.nrows + r2
                    for c2, v2 in cols2.items():
                        out.set(base_r, c1 * other.ncols + c2, v1 * v2)
        return out

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse column vector {index: scalar}."""
        out = {}
        for r, cols in self.rows.items():
            acc = None
            for c, v in cols.items():
                x = vec.get(c)
                if x is not None:
                    acc = v * x if acc is None else acc + v * x
            if acc is not None and not acc.is_zero():
                out[r] = acc
        return out

    def to_dense(self):
        out = zeros(self.field, self.nrows, self.ncols)
        for r, cols in self.rows.items():
            for c, v in cols.items():
                out[r][c] = v
        return out

    def inverse(self) -> "SparseOp":
        """Dense Gauss-Jordan inverse; intended for moderate sizes."""
        dense = mat_inverse(self.to_dense(), self.field)
        out = SparseOp(self.field, self.nrows, self.ncols)
        for r, row in enumerate(dense):
            for c, v in enumerate(row):
                if not v.is_zero():
                    out.set(r, c, v)
        return out
