"""Signed Sachs subgraphs and the coefficients they determine.

A Sachs subgraph has only single edges and cycles as components. On a signed
graph the permanental coefficient is

    s_i = (-1)^i * sum over Sachs subgraphs U on i vertices of (-1)^{c-(U)} 2^{c(U)}

with c the number of cycles and c- the number of negative ones. E_i and O_i
split that sum by the parity of c-, keeping the (-1)^i prefactor, so that
s_i = E_i - O_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import InputError
from .polynomial import perm_poly
from .rank import perm_rank_exact
from .signed_graph import SignedGraph, cycle_sign


@dataclass(frozen=True)
class SachsSubgraph:
    edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    cycle_signs: tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.cycles)

    @property
    def c_minus(self) -> int:
        return sum(1 for s in self.cycle_signs if s < 0)

    @property
    def vertex_count(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    def vertices(self) -> set[int]:
        out = {v for e in self.edges for v in e}
        for cyc in self.cycles:
            out.update(cyc)
        return out

    @property
    def weight(self) -> int:
        """(-1)^{c-} 2^c, the unprefixed contribution."""
        return (-1) ** self.c_minus * 2 ** self.c


@dataclass(frozen=True)
class EkOk:
    k: int
    E: Fraction
    O: Fraction

    @property
    def s(self) -> Fraction:
        return self.E - self.O


def enumerate_sachs(g: SignedGraph, i: int) -> Iterator[SachsSubgraph]:
    """Yield every Sachs subgraph of ``g`` covering exactly ``i`` vertices, once each.

    The lowest undecided vertex is either left out, matched to a neighbour, or
    made the minimum of a cycle; cycles are oriented so the second vertex is
    smaller than the last.
    """
    if not 0 <= i <= g.n:
        raise InputError(f"order {i} out of range 0..{g.n}")
    n = g.n
    adj = g.neighbours()
    edges: list[tuple[int, int]] = []
    cycles: list[tuple[int, ...]] = []

    def cycles_from(v, avail, max_len):
        path = [v]

        def grow(u, avail):
            for w in adj[u]:
                if not (avail >> w) & 1:
                    continue
                path.append(w)
                if len(path) >= 3 and path[1] < w and g.sign(w, v):
                    yield tuple(path)
                if len(path) < max_len:
                    yield from grow(w, avail & ~(1 << w))
                path.pop()

        yield from grow(v, avail)

    def rec(avail, need):
        # avail: bitmask of undecided vertices
        if need == 0:
            yield SachsSubgraph(tuple(edges), tuple(cycles), tuple(cycle_sign(g, c) for c in cycles))
            return
        if bin(avail).count("1") < need:
            return
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        yield from rec(rest, need)
        if need >= 2:
            for w in adj[v]:
                if (rest >> w) & 1:
                    edges.append((v, w))
                    yield from rec(rest & ~(1 << w), need - 2)
                    edges.pop()
        if need >= 3:
            for cyc in list(cycles_from(v, rest, need)):
                mask = rest
                for x in cyc[1:]:
                    mask &= ~(1 << x)
                cycles.append(cyc)
                yield from rec(mask, need - len(cyc))
                cycles.pop()

    yield from rec((1 << n) - 1, i)


def ek_ok(g: SignedGraph, k: int) -> EkOk:
    even = odd = 0
    for u in enumerate_sachs(g, k):
        if u.c_minus % 2:
            odd += 2 ** u.c
        else:
            even += 2 ** u.c
    sign = -1 if k % 2 else 1
    return EkOk(k, Fraction(sign * even), Fraction(sign * odd))


def sachs_coefficient(g: SignedGraph, i: int) -> Fraction:
    """s_i from the signed Sachs expansion; s_0 = 1."""
    total = sum(u.weight for u in enumerate_sachs(g, i))
    return Fraction(-total if i % 2 else total)


def sachs_coefficients(g: SignedGraph) -> list[Fraction]:
    return [sachs_coefficient(g, i) for i in range(g.n + 1)]


@dataclass(frozen=True)
class CriterionReport:
    k: int
    ek: EkOk
    identity_holds: bool
    rho: int
    eta: int
    n: int

    @property
    def direct_identity(self) -> bool:
        """rho + eta == n, computed without the Sachs expansion."""
        return self.rho + self.eta == self.n


def criterion_report(g: SignedGraph) -> CriterionReport:
    """Evaluate E_k != O_k at k = permanental rank, alongside the direct rank + nullity."""
    a = g.adjacency()
    k = perm_rank_exact(a).rank
    res = ek_ok(g, k)
    eta = perm_poly(a).zero_root_multiplicity()
    return CriterionReport(k, res, res.E != res.O, k, eta, g.n)
