import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_cycles
from perrank import (
    CycleParity,
    InputError,
    Matrix,
    ResourceError,
    SignedGraph,
    cycle_parity_class,
    graph_from_matrix,
    is_balanced,
    matrix_from_graph,
    switch,
    underlying_unsigned,
)
from perrank.signed_graph import cycle_sign, simple_cycles
from strategies import sign_vectors, signed_graphs


def complete(n, sign=1):
    return SignedGraph(n, [(i, j, sign) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(signs):
    n = len(signs)
    return SignedGraph(n, [(k, (k + 1) % n, s) for k, s in enumerate(signs)])


def test_construction_errors():
    with pytest.raises(InputError):
        SignedGraph(2, [(0, 0, 1)])
    with pytest.raises(InputError):
        SignedGraph(2, [(0, 1, 2)])
    with pytest.raises(InputError):
        SignedGraph(2, [(0, 2, 1)])
    with pytest.raises(InputError):
        SignedGraph(3, [(0, 1, 1), (1, 0, -1)])


def test_edges_are_normalised():
    g = SignedGraph(3, [(2, 0, -1)])
    assert g.sorted_edges() == [(0, 2, -1)]
    assert g.sign(0, 2) == g.sign(2, 0) == -1
    assert g.sign(0, 1) == 0
    assert g == SignedGraph(3, [(0, 2, -1)])


def test_graph_from_matrix_rejects():
    with pytest.raises(InputError):
        graph_from_matrix(Matrix([[0, 1], [0, 0]]))
    with pytest.raises(InputError):
        graph_from_matrix(Matrix([[0, 2], [2, 0]]))
    with pytest.raises(InputError):
        graph_from_matrix(Matrix([[1, 1], [1, 0]]))


def test_triangles(triangle, neg_triangle):
    assert is_balanced(triangle)[0]
    ok, cert = is_balanced(neg_triangle)
    assert not ok
    assert cert.check(neg_triangle)
    assert cycle_parity_class(triangle) is CycleParity.ALL_POSITIVE
    assert cycle_parity_class(neg_triangle) is CycleParity.ALL_NEGATIVE


def test_parity_classes():
    path = SignedGraph(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1)])
    assert cycle_parity_class(path) is CycleParity.ACYCLIC
    assert is_balanced(path)[0]
    # two triangles sharing an edge, one positive one negative
    mixed = SignedGraph(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (1, 3, 1), (2, 3, -1)])
    assert cycle_parity_class(mixed) is CycleParity.MIXED
    assert not CycleParity.MIXED.is_uniform
    assert CycleParity.ACYCLIC.is_uniform


def test_complete_graph_cycle_count():
    # K4: 4 triangles + 3 four-cycles; K5: 10 + 15 + 12
    assert len(list(simple_cycles(complete(4)))) == 7
    assert len(list(simple_cycles(complete(5)))) == 37


def test_cycle_cap():
    with pytest.raises(ResourceError):
        list(simple_cycles(complete(6), cap=10))
    with pytest.raises(ResourceError):
        cycle_parity_class(complete(6), cap=10)


def test_cycle_sign():
    g = cycle_graph([1, -1, -1, -1])
    assert cycle_sign(g, (0, 1, 2, 3)) == -1
    with pytest.raises(InputError):
        cycle_sign(g, (0, 2, 1))


def test_switch_errors(triangle):
    with pytest.raises(InputError):
        switch(triangle, (1, 1))
    with pytest.raises(InputError):
        switch(triangle, (1, 0, 1))


def test_underlying_unsigned(neg_triangle):
    assert underlying_unsigned(neg_triangle) == Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


@given(signed_graphs())
def test_adjacency_round_trip(g):
    a = matrix_from_graph(g)
    assert a.is_symmetric and a.is_zero_pm1 and a.has_zero_diagonal
    assert graph_from_matrix(a) == g


@given(signed_graphs())
def test_certificate_is_valid(g):
    ok, cert = is_balanced(g)
    assert cert.check(g)
    assert (cert.switching is not None) == ok


@given(signed_graphs())
def test_balance_agrees_with_cycle_signs(g):
    ok, _ = is_balanced(g)
    cls = cycle_parity_class(g)
    assert ok == (cls in (CycleParity.ACYCLIC, CycleParity.ALL_POSITIVE))


@given(signed_graphs())
def test_cycles_match_brute_force(g):
    found = list(simple_cycles(g))
    as_sets = {frozenset(frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))) for c in found}
    assert len(as_sets) == len(found)
    assert as_sets == brute_cycles(g.n, g.sorted_edges())
    for c in found:
        assert c[0] == min(c) and c[1] < c[-1]


@given(st.data())
def test_switching_preserves_cycle_signs(data):
    g = data.draw(signed_graphs())
    d = data.draw(sign_vectors(g.n))
    h = switch(g, d)
    assert switch(h, d) == g
    for c in simple_cycles(g):
        assert cycle_sign(h, c) == cycle_sign(g, c)
    assert is_balanced(h)[0] == is_balanced(g)[0]
    assert cycle_parity_class(h) == cycle_parity_class(g)


@given(signed_graphs())
def test_balanced_graph_switches_to_all_positive(g):
    ok, cert = is_balanced(g)
    if ok:
        assert switch(g, cert.switching).is_all_positive
