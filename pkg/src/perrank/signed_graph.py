"""Signed graphs: balance, switching and cycle parity.

A signed graph is simple and loopless; every edge carries a sign in {+1, -1}.
Its signed adjacency matrix is the symmetric {0, +-1} matrix with zero
diagonal. Vertices are 0-based here; files use 1-based labels.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError, ResourceError
from .matrix import Matrix, as_matrix

CYCLE_CAP = 200_000


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: frozenset[tuple[int, int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        seen = {}
        for u, v, s in edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if s not in (1, -1):
                raise InputError(f"edge sign must be +1 or -1, got {s!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"parallel edge {key}")
            seen[key] = s
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset((u, v, s) for (u, v), s in seen.items()))

    def sorted_edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.edges)

    def sign(self, u: int, v: int) -> int:
        """Edge sign, or 0 if u and v are not adjacent."""
        return self._signs.get((min(u, v), max(u, v)), 0)

    @property
    def _signs(self) -> dict:
        cache = self.__dict__.get("_sign_cache")
        if cache is None:
            cache = {(u, v): s for u, v, s in self.edges}
            object.__setattr__(self, "_sign_cache", cache)
        return cache

    def neighbours(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def adjacency(self) -> Matrix:
        """Signed adjacency matrix."""
        rows = [[0] * self.n for _ in range(self.n)]
        for u, v, s in self.edges:
            rows[u][v] = rows[v][u] = s
        return Matrix(rows, self.n)

    @property
    def is_all_positive(self) -> bool:
        return all(s == 1 for _, _, s in self.edges)


def graph_from_matrix(a) -> SignedGraph:
    """Signed graph of a symmetric {0, +-1} matrix with zero diagonal."""
    a = as_matrix(a)
    a.require_square("graph conversion")
    if not a.is_symmetric:
        raise InputError("signed adjacency matrix must be symmetric")
    if not a.is_zero_pm1:
        raise InputError("signed adjacency entries must lie in {0, 1, -1}")
    if not a.has_zero_diagonal:
        raise InputError("signed adjacency matrix must have zero diagonal (no loops)")
    n = a.nrows
    return SignedGraph(n, [(i, j, int(a[i, j])) for i in range(n) for j in range(i + 1, n) if a[i, j] != 0])


def matrix_from_graph(g: SignedGraph) -> Matrix:
    return g.adjacency()


def underlying_unsigned(g: SignedGraph) -> Matrix:
    """0/1 adjacency matrix of the same edge set."""
    return SignedGraph(g.n, [(u, v, 1) for u, v, _ in g.edges]).adjacency()


@dataclass(frozen=True)
class BalanceCertificate:
    """Switching vector when balanced, otherwise a negative cycle (vertex sequence)."""

    switching: tuple[int, ...] | None = None
    negative_cycle: tuple[int, ...] | None = None

    def check(self, g: SignedGraph) -> bool:
        if self.switching is not None:
            d = self.switching
            return len(d) == g.n and all(d[u] * d[v] == s for u, v, s in g.edges)
        cyc = self.negative_cycle
        if not cyc or len(cyc) < 3 or len(set(cyc)) != len(cyc):
            return False
        return cycle_sign(g, cyc) == -1


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    sign = 1
    for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
        s = g.sign(a, b)
        if s == 0:
            raise InputError(f"({a}, {b}) is not an edge")
        sign *= s
    return sign


def is_balanced(g: SignedGraph) -> tuple[bool, BalanceCertificate]:
    """Breadth-first sign propagation with a certificate either way."""
    adj = g.neighbours()
    label = [0] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if label[root]:
            continue
        label[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                s = g.sign(u, v)
                if not label[v]:
                    label[v] = s * label[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif label[v] != s * label[u]:
                    return False, BalanceCertificate(negative_cycle=_tree_cycle(u, v, parent, depth))
    return True, BalanceCertificate(switching=tuple(label))


def _tree_cycle(u, v, parent, depth) -> tuple[int, ...]:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    right.pop()
    return tuple(left + right[::-1])


def switch(g: SignedGraph, d: Sequence[int]) -> SignedGraph:
    """Re-sign every edge (u, v) as d[u] * sign * d[v]."""
    if len(d) != g.n:
        raise InputError(f"switching vector has length {len(d)}, graph has {g.n} vertices")
    if any(x not in (1, -1) for x in d):
        raise InputError("switching vector entries must be +1 or -1")
    return SignedGraph(g.n, [(u, v, d[u] * s * d[v]) for u, v, s in g.edges])


def simple_cycles(g: SignedGraph, cap: int = CYCLE_CAP) -> Iterator[tuple[int, ...]]:
    """Every simple cycle exactly once, as a vertex tuple starting at its minimum.

    Orientation is canonical: the second vertex is smaller than the last.
    Raises ResourceError after ``cap`` cycles.
    """
    adj = g.neighbours()
    count = 0
    for start in range(g.n):
        path = [start]
        on_path = [False] * g.n
        on_path[start] = True
        stack = [iter(w for w in adj[start] if w > start)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            path.append(nxt)
            on_path[nxt] = True
            if len(path) >= 3 and start in adj[nxt] and path[1] < nxt:
                count += 1
                if count > cap:
                    raise ResourceError(f"more than {cap} simple cycles")
                yield tuple(path)
            stack.append(iter(w for w in adj[nxt] if w > start and not on_path[w]))
        # the start vertex was popped with the last frame
    return


class CycleParity(str, enum.Enum):
    ACYCLIC = "acyclic"
    ALL_POSITIVE = "all_positive"
    ALL_NEGATIVE = "all_negative"
    MIXED = "mixed"

    @property
    def is_uniform(self) -> bool:
        return self is not CycleParity.MIXED


def cycle_parity_class(g: SignedGraph, cap: int = CYCLE_CAP) -> CycleParity:
    """Classify by the signs of all simple cycles (exhaustive enumeration)."""
    signs = set()
    for cyc in simple_cycles(g, cap):
        signs.add(cycle_sign(g, cyc))
        if len(signs) == 2:
            return CycleParity.MIXED
    if not signs:
        return CycleParity.ACYCLIC
    return CycleParity.ALL_POSITIVE if 1 in signs else CycleParity.ALL_NEGATIVE
