import pytest
from hypothesis import given
from hypothesis import strategies as st

from perrank import (
    CycleParity,
    InputError,
    SignedGraph,
    criterion_report,
    cycle_parity_class,
    ek_ok,
    enumerate_sachs,
    graph_from_matrix,
    is_balanced,
    perm_poly,
    perm_rank,
    sachs_coefficient,
    switch,
)
from perrank.generators import GenConfig, generate
from perrank.sachs import sachs_coefficients
from strategies import sign_vectors, signed_graphs


def cycle_graph(signs):
    n = len(signs)
    return SignedGraph(n, [(k, (k + 1) % n, s) for k, s in enumerate(signs)])


def cycle_edges(c):
    return frozenset(frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c)))


def test_B(B):
    g = graph_from_matrix(B)
    r = ek_ok(g, 3)
    assert (r.E, r.O) == (-2, -2)
    assert r.s == 0 == perm_poly(B).coefficient(3)
    assert [int(c) for c in sachs_coefficients(g)] == [1, 0, 5, 0, 0]
    rep = criterion_report(g)
    assert rep.k == 3 and not rep.identity_holds and not rep.direct_identity


def test_triangle_subgraphs(triangle, neg_triangle):
    subs = list(enumerate_sachs(triangle, 3))
    assert len(subs) == 1 and subs[0].c == 1 and subs[0].weight == 2
    assert sachs_coefficient(triangle, 3) == -2
    assert sachs_coefficient(neg_triangle, 3) == 2
    assert len(list(enumerate_sachs(triangle, 2))) == 3
    assert sachs_coefficient(triangle, 0) == 1


def test_negative_four_cycle():
    # both perfect matchings and the negative cycle contribute: 1 + 1 - 2 = 0
    g = cycle_graph([1, 1, 1, -1])
    r = ek_ok(g, 4)
    assert (r.E, r.O) == (2, 2)
    assert perm_rank(g.adjacency()) == 2
    assert perm_poly(g.adjacency()).zero_root_multiplicity() == 2


def test_order_out_of_range(triangle):
    with pytest.raises(InputError):
        list(enumerate_sachs(triangle, 4))
    with pytest.raises(InputError):
        list(enumerate_sachs(triangle, -1))


def test_subgraph_bookkeeping():
    g = SignedGraph(5, [(0, 1, 1), (1, 2, -1), (0, 2, 1), (3, 4, 1)])
    subs = list(enumerate_sachs(g, 5))
    assert len(subs) == 1
    u = subs[0]
    assert u.vertices() == set(range(5))
    assert u.vertex_count == 5
    assert (u.c, u.c_minus, u.weight) == (1, 1, -2)


@given(signed_graphs(max_n=7))
def test_sachs_matches_polynomial(g):
    assert sachs_coefficients(g) == list(perm_poly(g.adjacency()).coeffs)


@given(signed_graphs(max_n=7), st.integers(0, 7))
def test_split_sums(g, k):
    k = min(k, g.n)
    r = ek_ok(g, k)
    assert r.s == sachs_coefficient(g, k)
    assert r.E * (-1) ** k >= 0 and r.O * (-1) ** k >= 0


@given(signed_graphs(max_n=7))
def test_each_subgraph_listed_once(g):
    for k in range(g.n + 1):
        seen = set()
        for u in enumerate_sachs(g, k):
            key = (frozenset(frozenset(e) for e in u.edges), frozenset(map(cycle_edges, u.cycles)))
            assert key not in seen
            seen.add(key)
            assert len(u.vertices()) == u.vertex_count == k


@given(signed_graphs(max_n=7))
def test_balanced_graphs_have_no_odd_part(g):
    if is_balanced(g)[0]:
        assert all(ek_ok(g, k).O == 0 for k in range(g.n + 1))


@given(signed_graphs(max_n=7))
def test_all_negative_graphs_have_only_negative_cycles(g):
    # in an all-negative graph every cycle of a Sachs subgraph is negative,
    # so c- = c; E_k need not vanish because matchings still contribute
    if cycle_parity_class(g) is CycleParity.ALL_NEGATIVE:
        for k in range(g.n + 1):
            for u in enumerate_sachs(g, k):
                assert u.c_minus == u.c


@given(st.data())
def test_switching_invariance(data):
    g = data.draw(signed_graphs(max_n=7))
    d = data.draw(sign_vectors(g.n))
    h = switch(g, d)
    assert sachs_coefficients(h) == sachs_coefficients(g)


@given(signed_graphs(max_n=7))
def test_criterion_agrees_with_direct_identity(g):
    rep = criterion_report(g)
    assert rep.identity_holds == rep.direct_identity


@given(signed_graphs(max_n=7))
def test_unsigned_graph_has_sachs_subgraph_at_rank(g):
    h = SignedGraph(g.n, [(u, v, 1) for u, v, _ in g.edges])
    k = perm_rank(h.adjacency())
    assert next(enumerate_sachs(h, k), None) is not None


@pytest.mark.parametrize("seed", range(40))
def test_cactus_identity(seed):
    g = generate(GenConfig("uniform_odd_parity", 3 + seed % 6, seed=seed))
    assert cycle_parity_class(g) is CycleParity.ALL_NEGATIVE
    rep = criterion_report(g)
    assert rep.direct_identity and rep.identity_holds
