"""Exact rational scalars and dense linear algebra.

Scalars are :class:`fractions.Fraction`; elimination is fraction-free
(Bareiss) on rows scaled to integers, so intermediate entries stay integral
and small compared to naive rational Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix

Rational = Fraction
Vec = tuple  # tuple[Fraction, ...]

__all__ = [
    "Rational",
    "Vec",
    "DenseMatrix",
    "as_rational",
    "format_rational",
    "parse_rational",
    "solve_linear",
    "kernel_basis",
    "rank",
    "inverse",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str | int) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise TypeError(f"expected a 'p/q' string, got {type(s).__name__}")
    return Fraction(s.strip())


class DenseMatrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        data = tuple(as_rational(e) for e in entries)
        if len(data) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> DenseMatrix:
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(nrows, ncols, (e for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> DenseMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> DenseMatrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def entries(self) -> tuple:
        return self._data

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i * self.cols + j]

    def row(self, i: int) -> Vec:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vec:
        return self._data[j::self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(
            self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def __matmul__(self, other):
        if isinstance(other, DenseMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.column(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                nz = [(k, a) for k, a in enumerate(r) if a]
                out.extend(sum((a * c[k] for k, a in nz), Fraction(0)) for c in cols)
            return DenseMatrix(self.rows, other.cols, out)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
            for i in range(self.rows)
        )

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        self._check_same_shape(other)
        return DenseMatrix(self.rows, self.cols, (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        self._check_same_shape(other)
        return DenseMatrix(self.rows, self.cols, (a - b for a, b in zip(self._data, other._data)))

    def scale(self, c) -> DenseMatrix:
        c = as_rational(c)
        return DenseMatrix(self.rows, self.cols, (c * a for a in self._data))

    def is_zero(self) -> bool:
        return not any(self._data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def _check_same_shape(self, other: DenseMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other) -> bool:
        return isinstance(other, DenseMatrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))
        return f"DenseMatrix({self.rows}x{self.cols}: [{body}])"


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # Scaling a row by a nonzero constant preserves its row space.
    out = []
    for r in rows:
        d = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * d) for x in r])
    return out


def _bareiss_echelon(m: list[list[int]], ncols: int) -> list[int]:
    """In-place fraction-free row echelon form; returns the pivot columns.

    Only the first ``ncols`` columns are searched for pivots, trailing columns
    (an augmented right-hand side) are carried along.
    """
    nrows = len(m)
    width = len(m[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        prow = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                for j in range(c + 1, width):
                    row[j] = (piv * row[j] - a * prow[j]) // prev
            else:
                for j in range(c + 1, width):
                    if row[j]:
                        row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _rref_from_echelon(m: list[list[int]], pivots: list[int]) -> list[list[Fraction]]:
    width = len(m[0]) if m else 0
    red = []
    for r, c in enumerate(pivots):
        piv = m[r][c]
        red.append([Fraction(x, piv) for x in m[r]])
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        for s in range(r):
            f = red[s][c]
            if f:
                rs, rr = red[s], red[r]
                for j in range(c, width):
                    if rr[j]:
                        rs[j] -= f * rr[j]
    return red


def _as_rows(A: DenseMatrix) -> list[list[Fraction]]:
    return [list(A.row(i)) for i in range(A.rows)]


def solve_linear(A: DenseMatrix, b: Sequence) -> Vec | None:
    """Solve ``A x = b`` exactly.

    Returns ``None`` if the system is inconsistent. Free variables of an
    underdetermined system are set to zero.
    """
    b = tuple(as_rational(x) for x in b)
    if A.rows != len(b):
        raise DimensionMismatch(f"matrix has {A.rows} rows but right-hand side has length {len(b)}")
    n = A.cols
    aug = [list(A.row(i)) + [b[i]] for i in range(A.rows)]
    m = _integer_rows(aug)
    pivots = _bareiss_echelon(m, n)
    for i in range(len(pivots), A.rows):
        if m[i][n]:
            return None
    red = _rref_from_echelon(m, pivots)
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = red[r][n]
    return tuple(x)


def kernel_basis(A: DenseMatrix) -> list[Vec]:
    """Basis of the null space, one vector per free column.

    Each vector has a 1 in its free column, zeros in the other free columns,
    and the negated reduced-echelon entries in the pivot columns.
    """
    n = A.cols
    if A.rows == 0:
        return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    m = _integer_rows(_as_rows(A))
    pivots = _bareiss_echelon(m, n)
    red = _rref_from_echelon(m, pivots)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return basis


def rank(A: DenseMatrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    m = _integer_rows(_as_rows(A))
    return len(_bareiss_echelon(m, A.cols))


def pivot_columns(A: DenseMatrix) -> list[int]:
    if A.rows == 0 or A.cols == 0:
        return []
    m = _integer_rows(_as_rows(A))
    return _bareiss_echelon(m, A.cols)


def inverse(A: DenseMatrix) -> DenseMatrix:
    if A.rows != A.cols:
        raise DimensionMismatch(f"cannot invert a non-square {A.shape} matrix")
    n = A.rows
    aug = [list(A.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m = _integer_rows(aug)
    pivots = _bareiss_echelon(m, n)
    if len(pivots) < n:
        raise SingularMatrix(f"matrix has rank {len(pivots)} < {n}")
    red = _rref_from_echelon(m, pivots)
    return DenseMatrix(n, n, (red[i][n + j] for i in range(n) for j in range(n)))
