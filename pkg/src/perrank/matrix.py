"""Exact dense matrices over the rationals.

Entries are :class:`fractions.Fraction` throughout; nothing on the computation
path touches floating point. Matrices are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from .errors import InputError


def as_scalar(value) -> Fraction:
    """Coerce ``value`` (int, Fraction or a ``"p/q"`` string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not an exact scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse exact scalar {value!r}") from exc
    raise InputError(f"not an exact scalar: {value!r} (floats are rejected)")


def format_scalar(value: Fraction) -> str:
    """Exact decimal/rational string, ``"p"`` or ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def index_set(indices: Iterable[int], bound: int) -> tuple[int, ...]:
    """Validate a strictly increasing tuple of 0-based indices below ``bound``."""
    out = tuple(indices)
    for a, b in zip(out, out[1:]):
        if not a < b:
            raise InputError(f"index set must be strictly increasing: {out}")
    for i in out:
        if not isinstance(i, int) or i < 0 or i >= bound:
            raise InputError(f"index {i!r} out of range for dimension {bound}")
    return out


class Matrix:
    """Immutable dense rectangular matrix with exact rational entries."""

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        data = tuple(tuple(as_scalar(v) for v in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise InputError("ragged rows: every row needs the same length")
        self.nrows = len(data)
        self.ncols = ncols
        self._rows = data

    # construction helpers

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def ones(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[1] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_flat(cls, nrows: int, ncols: int, entries: Sequence) -> "Matrix":
        if len(entries) != nrows * ncols:
            raise InputError(
                f"expected {nrows * ncols} entries for {nrows}x{ncols}, got {len(entries)}"
            )
        return cls([entries[i * ncols:(i + 1) * ncols] for i in range(nrows)], ncols)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat tuple of entries."""
        return tuple(v for row in self._rows for v in row)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(format_scalar(v) for v in row) + "]" for row in self._rows
        )
        return f"Matrix([{body}])"

    # structure predicates

    def require_square(self, what: str = "operation") -> None:
        if not self.is_square:
            raise InputError(f"{what} needs a square matrix, got {self.nrows}x{self.ncols}")

    @cached_property
    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.nrows
        return all(self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i))

    @cached_property
    def is_integer(self) -> bool:
        return all(v.denominator == 1 for row in self._rows for v in row)

    @cached_property
    def is_nonnegative(self) -> bool:
        return all(v >= 0 for row in self._rows for v in row)

    @cached_property
    def is_zero_pm1(self) -> bool:
        """Entries all in {0, 1, -1}."""
        return all(v in (0, 1, -1) for row in self._rows for v in row)

    @cached_property
    def has_zero_diagonal(self) -> bool:
        return all(self._rows[i][i] == 0 for i in range(min(self.nrows, self.ncols)))

    @cached_property
    def is_zero(self) -> bool:
        return all(v == 0 for row in self._rows for v in row)

    # algebra

    def transpose(self) -> "Matrix":
        return Matrix([[row[j] for row in self._rows] for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.transpose().rows()
        return Matrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows],
            other.ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-v for v in row] for row in self._rows], self.ncols)

    def abs(self) -> "Matrix":
        return Matrix([[abs(v) for v in row] for row in self._rows], self.ncols)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int] | None = None) -> "Matrix":
        """Matrix with entry (i, j) = self[row_perm[i], col_perm[j]]."""
        col_perm = row_perm if col_perm is None else col_perm
        return Matrix([[self._rows[r][c] for c in col_perm] for r in row_perm], len(col_perm))

    def integer_rows(self) -> tuple[list[list[int]], list[int]]:
        """Rows scaled to integers, plus the per-row scale factors used.

        Row ``i`` of the result equals ``scales[i]`` times row ``i`` of the
        matrix. Multilinear quantities (permanent, rank) can then be computed on
        Python ints and corrected afterwards.
        """
        return self._integer_rows

    @cached_property
    def _integer_rows(self):
        out, scales = [], []
        for row in self._rows:
            d = lcm(*(v.denominator for v in row)) if row else 1
            scales.append(d)
            out.append([v.numerator * (d // v.denominator) for v in row])
        return out, scales


def as_matrix(obj) -> Matrix:
    """Accept a Matrix or a nested sequence of exact scalars."""
    if isinstance(obj, Matrix):
        return obj
    return Matrix(obj)


def submatrix(a: Matrix, rows: Iterable[int], cols: Iterable[int]) -> Matrix:
    """Rows indexed by ``rows`` and columns indexed by ``cols``, in order."""
    a = as_matrix(a)
    rows = index_set(rows, a.nrows)
    cols = index_set(cols, a.ncols)
    data = a.rows()
    return Matrix([[data[i][j] for j in cols] for i in rows], len(cols))


def principal(a: Matrix, s: Iterable[int]) -> Matrix:
    s = tuple(s)
    return submatrix(a, s, s)


def diag_similar(a: Matrix, d: Sequence[int]) -> Matrix:
    """``D A D`` for the diagonal sign matrix ``D = diag(d)``."""
    a = as_matrix(a)
    a.require_square("diagonal similarity")
    if len(d) != a.nrows:
        raise InputError(f"switching vector has length {len(d)}, matrix has order {a.nrows}")
    if any(x not in (1, -1) for x in d):
        raise InputError("switching vector entries must be +1 or -1")
    return Matrix(
        [[d[i] * v * d[j] for j, v in enumerate(row)] for i, row in enumerate(a.rows())],
        a.ncols,
    )


def rank_exact(a: Matrix) -> int:
    """Classical rank by fraction-free (Bareiss) elimination on scaled integer rows."""
    a = as_matrix(a)
    m, _ = a.integer_rows()
    m = [row[:] for row in m]
    nrows, ncols = a.nrows, a.ncols
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            # exact division is guaranteed by Sylvester's identity
            m[r] = [(p * row[c] - f * prow[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
    return rank


def psd_check(a: Matrix) -> bool:
    """True iff the symmetric matrix ``a`` is positive semidefinite.

    Recursive pivoted exact decomposition: eliminate on a strictly positive
    diagonal entry and recurse into the Schur complement. A matrix whose
    diagonal is entirely zero is PSD only if it is the zero matrix.
    """
    a = as_matrix(a)
    a.require_square("psd_check")
    if not a.is_symmetric:
        raise InputError("psd_check needs a symmetric matrix")
    m = a.to_lists()
    while m:
        n = len(m)
        diag = [m[i][i] for i in range(n)]
        best = max(range(n), key=lambda i: diag[i])
        if diag[best] < 0:
            return False
        if diag[best] == 0:
            return all(v == 0 for row in m for v in row)
        p = diag[best]
        prow = m[best]
        rest = [i for i in range(n) if i != best]
        m = [[m[i][j] - m[i][best] * prow[j] / p for j in rest] for i in rest]
    return True
