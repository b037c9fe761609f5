"""Exact integer linear algebra.

Dense matrices of Python integers with Hermite and Smith normal forms
(including the unimodular transforms), Bareiss determinants and ranks over
the rationals and over prime fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers.

    Stored row-major.  Shapes with zero rows or zero columns are allowed and
    keep their other dimension.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Sequence[int]] = (), *, shape: tuple[int, int] | None = None):
        data = [tuple(int(v) for v in row) for row in data]
        if shape is None:
            nrows = len(data)
            ncols = len(data[0]) if data else 0
        else:
            nrows, ncols = shape
            if len(data) != nrows:
                raise ValueError(f"expected {nrows} rows, got {len(data)}")
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimension")
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")
        self.rows = nrows
        self.cols = ncols
        self.entries = tuple(v for row in data for v in row)

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], nrows: int | None = None) -> IntMatrix:
        columns = [tuple(c) for c in columns]
        if nrows is None:
            if not columns:
                raise ValueError("cannot infer row count from zero columns")
            nrows = len(columns[0])
        data = [[c[i] for c in columns] for i in range(nrows)]
        return cls(data, shape=(nrows, len(columns)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], shape=(n, n))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls([[0] * ncols for _ in range(nrows)], shape=(nrows, ncols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, idx: Iterable[int]) -> IntMatrix:
        idx = list(idx)
        return IntMatrix([[self[i, j] for j in idx] for i in range(self.rows)], shape=(self.rows, len(idx)))

    def transpose(self) -> IntMatrix:
        return IntMatrix([self.column(j) for j in range(self.cols)], shape=(self.cols, self.rows))

    T = property(transpose)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        data = [[sum(a * b for a, b in zip(self.row(i), oc)) for oc in ocols] for i in range(self.rows)]
        return IntMatrix(data, shape=(self.rows, other.cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, shape={self.shape})"

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)


@dataclass(frozen=True)
class SmithDecomposition:
    """``s_transform @ m @ t_transform`` is diagonal with ``d`` then zeros."""

    d: tuple[int, ...]
    s_transform: IntMatrix
    t_transform: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.d)

    @property
    def largest(self) -> int:
        """Largest invariant factor; 0 for a zero matrix."""
        return self.d[-1] if self.d else 0


def _as_lists(m: IntMatrix) -> list[list[int]]:
    return m.tolist()


def _col_op(a, dst, src, k):
    # column dst += k * column src
    for row in a:
        row[dst] += k * row[src]


def _col_swap(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _col_neg(a, j):
    for row in a:
        row[j] = -row[j]


def _row_op(a, dst, src, k):
    a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form.

    Returns ``(h, u)`` with ``m @ u == h`` and ``u`` unimodular.  ``h`` is
    lower-triangular echelon: each pivot is positive, everything to its right
    in the pivot row is zero, and entries to its left are reduced into
    ``[0, pivot)``.
    """
    nrows, ncols = m.shape
    a = _as_lists(m)
    u = IntMatrix.identity(ncols).tolist()
    k = 0
    for i in range(nrows):
        if k == ncols:
            break
        while True:
            nz = [j for j in range(k, ncols) if a[i][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda j: abs(a[i][j]))
            if piv != k:
                _col_swap(a, k, piv)
                _col_swap(u, k, piv)
            done = True
            for j in range(k + 1, ncols):
                if a[i][j]:
                    q = a[i][j] // a[i][k]
                    _col_op(a, j, k, -q)
                    _col_op(u, j, k, -q)
                    if a[i][j]:
                        done = False
            if done:
                break
        if a[i][k] == 0:
            continue
        if a[i][k] < 0:
            _col_neg(a, k)
            _col_neg(u, k)
        p = a[i][k]
        for j in range(k):
            q = a[i][j] // p
            if q:
                _col_op(a, j, k, -q)
                _col_op(u, j, k, -q)
        k += 1
    return IntMatrix(a, shape=m.shape), IntMatrix(u, shape=(ncols, ncols))


def snf(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular row and column transforms."""
    nrows, ncols = m.shape
    a = _as_lists(m)
    s = IntMatrix.identity(nrows).tolist()
    t = IntMatrix.identity(ncols).tolist()
    d: list[int] = []
    for k in range(min(nrows, ncols)):
        nz = [(abs(a[i][j]), i, j) for i in range(k, nrows) for j in range(k, ncols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            s[k], s[pi] = s[pi], s[k]
        if pj != k:
            _col_swap(a, k, pj)
            _col_swap(t, k, pj)
        while True:
            changed = False
            for i in range(k + 1, nrows):
                if a[i][k]:
                    q = a[i][k] // a[k][k]
                    _row_op(a, i, k, -q)
                    _row_op(s, i, k, -q)
                    if a[i][k]:
                        changed = True
            for j in range(k + 1, ncols):
                if a[k][j]:
                    q = a[k][j] // a[k][k]
                    _col_op(a, j, k, -q)
                    _col_op(t, j, k, -q)
                    if a[k][j]:
                        changed = True
            if changed:
                # move the smallest remainder in row/column k to the pivot
                cand = [(abs(a[i][k]), i, k) for i in range(k, nrows) if a[i][k]]
                cand += [(abs(a[k][j]), k, j) for j in range(k, ncols) if a[k][j]]
                _, pi, pj = min(cand)
                if pi != k:
                    a[k], a[pi] = a[pi], a[k]
                    s[k], s[pi] = s[pi], s[k]
                if pj != k:
                    _col_swap(a, k, pj)
                    _col_swap(t, k, pj)
                continue
            # pivot must divide the whole trailing block
            bad = next(((i, j) for i in range(k + 1, nrows) for j in range(k + 1, ncols)
                        if a[i][j] % a[k][k]), None)
            if bad is None:
                break
            _row_op(a, k, bad[0], 1)
            _row_op(s, k, bad[0], 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            s[k] = [-x for x in s[k]]
        d.append(a[k][k])
    return SmithDecomposition(
        tuple(d),
        IntMatrix(s, shape=(nrows, nrows)),
        IntMatrix(t, shape=(ncols, ncols)),
    )


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n, c = m.shape
    if n != c:
        raise ValueError(f"determinant of non-square {n}x{c} matrix")
    if n == 0:
        return 1
    a = _as_lists(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_rational(m: IntMatrix) -> int:
    """Rank over the rationals (fraction-free elimination)."""
    a = _as_lists(m)
    nrows, ncols = m.shape
    r = 0
    prev = 1
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for jj in range(j + 1, ncols):
                a[i][jj] = (a[i][jj] * a[r][j] - a[i][j] * a[r][jj]) // prev
            a[i][j] = 0
        prev = a[r][j]
        r += 1
        if r == nrows:
            break
    return r


def rank_mod_p(m: IntMatrix, p: int) -> int:
    """Rank of ``m`` reduced entrywise modulo the prime ``p``."""
    a = [[v % p for v in row] for row in m.tolist()]
    return len(_echelon_mod_p(a, p))


def _echelon_mod_p(a: list[list[int]], p: int) -> list[int]:
    # in-place reduced row echelon form over F_p; returns pivot columns
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][j], -1, p)
        a[r] = [(v * inv) % p for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][j]:
                f = a[i][j]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == nrows:
            break
    return pivots


def rref_mod_p(rows: Sequence[Sequence[int]], p: int) -> tuple[tuple[int, ...], ...]:
    """Nonzero rows of the reduced row echelon form over F_p, entries in [0, p)."""
    a = [[v % p for v in row] for row in rows]
    k = len(_echelon_mod_p(a, p))
    return tuple(tuple(row) for row in a[:k])


def rref_rational(rows: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Nonzero rows of the reduced row echelon form over the rationals."""
    a = [[Fraction(v) for v in row] for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][j]
        a[r] = [v / pv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][j]:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in a[:r])
