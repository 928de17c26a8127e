"""Exact matrix permanents.

``permanent`` is Ryser's inclusion-exclusion formula with the column subsets
visited in Gray-code order, so each step updates the running row sums by a
single column. ``permanent_naive`` sums over all permutations and exists only
as an oracle for the fast kernel.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import prod
from operator import add, getitem, sub
from typing import Iterable

from .errors import InputError, ResourceError
from .matrix import Matrix, as_matrix, index_set, submatrix

NAIVE_CAP = 9
RYSER_CAP = 30


def permanent_naive(a, cap: int = NAIVE_CAP) -> Fraction:
    """Sum over every permutation of the products a[i, s(i)]."""
    a = as_matrix(a)
    a.require_square("permanent")
    n = a.nrows
    if n > cap:
        raise ResourceError(f"permanent_naive refuses n={n} (oracle cap {cap})")
    rows, scales = a.integer_rows()
    total = 0
    for p in permutations(range(n)):
        total += prod(map(getitem, rows, p))
    return Fraction(total, prod(scales))


def _gray_block(cols: list[list[int]], n: int, low: int, high_mask: int) -> int:
    """Signed Ryser sum over subsets whose columns >= ``low`` are fixed by ``high_mask``.

    Returns sum over S of (-1)^|S| * prod_i rowsum_i(S).
    """
    rs = [0] * n
    neg = False
    for j in range(low, n):
        if (high_mask >> (j - low)) & 1:
            rs = list(map(add, rs, cols[j]))
            neg = not neg
    p = prod(rs)
    total = -p if neg else p
    inside = [False] * low
    for k in range(1, 1 << low):
        j = (k & -k).bit_length() - 1
        if inside[j]:
            rs = list(map(sub, rs, cols[j]))
            inside[j] = False
        else:
            rs = list(map(add, rs, cols[j]))
            inside[j] = True
        neg = not neg
        p = prod(rs)
        if p:
            if neg:
                total -= p
            else:
                total += p
    return total


def _split_bits(n: int, threads: int) -> int:
    if threads <= 1 or n < 8:
        return 0
    return min(n - 4, (threads - 1).bit_length() + 2)


def ryser_int(rows: list[list[int]], threads: int = 1) -> int:
    """Permanent of a square integer matrix given as a list of rows."""
    n = len(rows)
    if n == 0:
        return 1
    cols = [list(c) for c in zip(*rows)]
    high = _split_bits(n, threads)
    low = n - high
    if high == 0:
        total = _gray_block(cols, n, n, 0)
    else:
        masks = range(1 << high)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_gray_block, *zip(*((cols, n, low, m) for m in masks)))
            total = sum(parts)
    return -total if n % 2 else total


def permanent(a, threads: int = 1) -> Fraction:
    """Exact permanent in O(2^n * n) scalar operations.

    Rational rows are scaled to integers first (the permanent is linear in each
    row), so the inner loop runs on Python ints.
    """
    a = as_matrix(a)
    a.require_square("permanent")
    n = a.nrows
    if n > RYSER_CAP:
        raise ResourceError(f"permanent capped at n={RYSER_CAP}, got n={n}")
    rows, scales = a.integer_rows()
    value = ryser_int(rows, threads)
    return Fraction(value, prod(scales))


def permanent_sub(a, rows: Iterable[int], cols: Iterable[int]) -> Fraction:
    """Permanent of the submatrix a[rows, cols]; the empty permanent is 1."""
    a = as_matrix(a)
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise InputError(f"row/column index sets differ in size: {len(rows)} vs {len(cols)}")
    return permanent(submatrix(a, index_set(rows, a.nrows), index_set(cols, a.ncols)))


__all__ = ["permanent", "permanent_naive", "permanent_sub", "ryser_int", "NAIVE_CAP", "RYSER_CAP"]
