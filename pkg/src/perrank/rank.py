"""Permanental rank: the order of the largest submatrix with nonzero permanent.

The maximum bipartite matching on the nonzero pattern bounds the permanental
rank from above for every matrix and equals it for nonnegative ones. The exact
search walks down from that bound and stops at the first nonzero submatrix
permanent, enumerating index sets lexicographically so the witness is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import InputError
from .matrix import Matrix, as_matrix
from .permanent import permanent_sub, ryser_int


@dataclass(frozen=True)
class PermRankResult:
    rank: int
    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    permanent: Fraction = Fraction(1)

    @property
    def is_principal(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class SupportDigraph:
    """Arc i -> j whenever A(i, j) != 0."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def out_neighbours(self, i: int) -> list[int]:
        return sorted(j for (u, j) in self.arcs if u == i)


def support_digraph(a) -> SupportDigraph:
    a = as_matrix(a)
    a.require_square("support digraph")
    arcs = frozenset((i, j) for i, row in enumerate(a.rows()) for j, v in enumerate(row) if v != 0)
    return SupportDigraph(a.nrows, arcs)


def max_matching(adj: Sequence[Sequence[int]], ncols: int) -> int:
    """Maximum bipartite matching size by repeated augmenting-path search.

    ``adj[r]`` lists the columns adjacent to row ``r``.
    """
    match_col = [-1] * ncols

    def augment(r, seen):
        for c in adj[r]:
            if seen[c]:
                continue
            seen[c] = True
            if match_col[c] < 0 or augment(match_col[c], seen):
                match_col[c] = r
                return True
        return False

    size = 0
    for r in range(len(adj)):
        if adj[r] and augment(r, [False] * ncols):
            size += 1
    return size


def _support_rank(rows: Sequence[Sequence], row_idx, col_idx) -> int:
    adj = [[k for k, j in enumerate(col_idx) if rows[i][j] != 0] for i in row_idx]
    return max_matching(adj, len(col_idx))


def support_matching_bound(a) -> int:
    """Maximum number of nonzero entries with no two in a common row or column."""
    a = as_matrix(a)
    return _support_rank(a.rows(), range(a.nrows), range(a.ncols))


def perm_rank_exact(a, principal_only: bool = False) -> PermRankResult:
    """Exact permanental rank together with the lexicographically first witness.

    With ``principal_only`` only principal submatrices are searched, which is
    exact for positive semidefinite input.
    """
    a = as_matrix(a)
    if principal_only:
        a.require_square("principal-only permanental rank")
    int_rows, _ = a.integer_rows()
    nz_rows = [i for i in range(a.nrows) if any(int_rows[i])]
    nz_cols = [j for j in range(a.ncols) if any(r[j] for r in int_rows)]
    bound = support_matching_bound(a)

    def nonzero_per(I, J):
        if _support_rank(int_rows, I, J) < len(I):
            return False
        return ryser_int([[int_rows[i][j] for j in J] for i in I]) != 0

    for k in range(bound, 0, -1):
        if principal_only:
            # a principal witness needs nonzero rows and columns on the same indices
            usable = [i for i in nz_rows if i in nz_cols]
            for S in combinations(usable, k):
                if nonzero_per(S, S):
                    return PermRankResult(k, S, S, permanent_sub(a, S, S))
            continue
        for I in combinations(nz_rows, k):
            touched = [j for j in nz_cols if any(int_rows[i][j] for i in I)]
            for J in combinations(touched, k):
                if nonzero_per(I, J):
                    return PermRankResult(k, I, J, permanent_sub(a, I, J))
    return PermRankResult(0)


def perm_rank(a, principal_only: bool = False) -> int:
    return perm_rank_exact(a, principal_only).rank


def perm_rank_nonnegative(a) -> int:
    """Permanental rank of a nonnegative matrix, read off its support matching."""
    a = as_matrix(a)
    if not a.is_nonnegative:
        raise InputError("perm_rank_nonnegative needs a matrix with no negative entries")
    return support_matching_bound(a)
