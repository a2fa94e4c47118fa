"""Exact linear algebra: kernels over Q and fraction-free determinants."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch
from .exact import canon, exact_quotient
from .poly import MultiPoly

__all__ = ["RationalMatrix", "rref", "kernel_basis", "rank", "determinant_fraction_free"]


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ArityMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ArityMismatch("ragged rows")
        return cls(len(rows), cols, tuple(canon(Fraction(c)) for r in rows for c in r))

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def apply(self, v):
        if len(v) != self.cols:
            raise ArityMismatch("vector length does not match column count")
        return [canon(sum(a * b for a, b in zip(self.row(i), v))) for i in range(self.rows)]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ArityMismatch("inner dimensions differ")
        cols = [[other.entries[r * other.cols + c] for r in range(other.rows)]
                for c in range(other.cols)]
        return RationalMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), col)) for col in cols]
             for i in range(self.rows)],
            other.cols,
        )


def _as_rows(M):
    if isinstance(M, RationalMatrix):
        return M.to_rows(), M.cols
    rows = [list(r) for r in M]
    return rows, (len(rows[0]) if rows else 0)


def rref(M):
    """Reduced row echelon form over Q; returns ``(rows, pivot_columns)``.

    The pivot is the first nonzero entry at or below the current row, scanning
    columns left to right, which keeps the output deterministic.
    """
    rows, ncols = _as_rows(M)
    rows = [[Fraction(c) for c in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(M):
    return len(rref(M)[1])


def kernel_basis(M):
    """Basis of ``{v : M v = 0}``, one vector per free column (in column order).

    Each vector has a 1 in its free column and zeros in the other free columns.
    """
    rows, ncols = _as_rows(M)
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = canon(-reduced[i][f])
        basis.append(v)
    return basis


def _div(a, b):
    if isinstance(a, MultiPoly):
        return a.exact_div(b)
    if isinstance(b, MultiPoly):
        if not b.is_constant():
            raise ArithmeticError("polynomial division is not exact")
        b = b.constant_value()
    return exact_quotient(a, b)


def determinant_fraction_free(M):
    """Determinant by Bareiss elimination.

    Entries may be exact scalars or MultiPoly values over a common variable
    list; every division in the recurrence is exact, so no fractions of
    polynomials ever appear.
    """
    rows, n = _as_rows(M)
    if len(rows) != n:
        raise ArityMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return _zero_like(a[k][k])
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                if lead == 0 or row_k[j] == 0:
                    val = row_i[j] * pivot
                else:
                    val = row_i[j] * pivot - lead * row_k[j]
                row_i[j] = _div(val, prev) if val != 0 else val
            row_i[k] = 0
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _zero_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.zero(x.variables)
    return 0
