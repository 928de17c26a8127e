from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import sympy_perm_poly
from perrank import (
    InputError,
    Matrix,
    Poly,
    perm_nullity,
    perm_poly,
    perm_poly_principal_sums,
    perm_rank,
    permanent,
)
from perrank.matrix import diag_similar
from strategies import int_matrices, rational_matrices, sign_vectors, symmetric_pm1


def coeffs(p):
    return [int(c) if c.denominator == 1 else c for c in p.coeffs]


def test_B(B):
    assert coeffs(perm_poly(B)) == [1, 0, 5, 0, 0]
    assert str(perm_poly(B)) == "x^4 + 5x^2"
    assert coeffs(perm_poly_principal_sums(B)) == [1, 0, 5, 0, 0]
    assert perm_nullity(B) == 2


def test_B_second_coefficient_by_hand(B):
    # C(4,2) principal 2x2 permanents: the pair {0,1} is 0, the other five are 1
    from itertools import combinations

    from perrank import principal

    pers = [permanent(principal(B, S)) for S in combinations(range(4), 2)]
    assert pers == [0, 1, 1, 1, 1, 1]
    assert perm_poly(B).coefficient(2) == sum(pers)


def test_zero_matrix():
    for n in range(5):
        p = perm_poly(Matrix.zeros(n))
        assert coeffs(p) == [1] + [0] * n
        assert perm_nullity(Matrix.zeros(n)) == n


def test_triangles():
    c3 = Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    neg = Matrix([[0, 1, 1], [1, 0, -1], [1, -1, 0]])
    # sympy per(xI - A) oracle: x^3 + 3x - 2 and x^3 + 3x + 2
    assert sympy_perm_poly(c3.to_lists()) == [1, 0, 3, -2]
    assert sympy_perm_poly(neg.to_lists()) == [1, 0, 3, 2]
    assert coeffs(perm_poly(c3)) == [1, 0, 3, -2]
    assert str(perm_poly(c3)) == "x^3 + 3x - 2"
    assert coeffs(perm_poly_principal_sums(neg)) == [1, 0, 3, 2]


def test_identity():
    assert coeffs(perm_poly_principal_sums(Matrix.identity(2))) == [1, -2, 1]
    assert coeffs(perm_poly(Matrix.identity(2))) == [1, -2, 1]
    for n in range(5):
        assert perm_nullity(Matrix.identity(n)) == 0


def test_example_gen(example_gen):
    assert perm_nullity(example_gen) == 2
    assert coeffs(perm_poly(example_gen)) == [1, 0, 0]


def test_raw_sign_convention():
    c3 = Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert coeffs(perm_poly(c3).raw_sign()) == [-1, 0, -3, 2]
    assert perm_poly(c3).raw_sign().zero_root_multiplicity() == perm_nullity(c3)


def test_non_square():
    with pytest.raises(InputError):
        perm_poly(Matrix([[1, 2]]))
    with pytest.raises(InputError):
        perm_poly_principal_sums(Matrix([[1, 2]]))


def test_formatting():
    assert str(Poly((1, -1, 0))) == "x^2 - x"
    assert str(Poly((1, Fraction(-5, 2), 3))) == "x^2 - (5/2)x + 3"
    assert str(Poly((0, 0))) == "0"
    assert Poly((1, 0, 5, 0, 0))(2) == 36


@given(int_matrices(max_n=6))
def test_two_routes_agree(a):
    assert perm_poly(a) == perm_poly_principal_sums(a)


@given(rational_matrices(max_n=4))
def test_two_routes_agree_rational(a):
    assert perm_poly(a) == perm_poly_principal_sums(a)


@given(int_matrices(max_n=5))
def test_matches_sympy(a):
    assert list(perm_poly(a).coeffs) == sympy_perm_poly(a.to_lists())


@given(int_matrices(max_n=6))
def test_value_at_zero(a):
    n = a.nrows
    assert perm_poly(a)(0) == (-1) ** n * permanent(a)


@given(st.data())
def test_switching_invariance(data):
    a = data.draw(int_matrices(min_n=1, max_n=6))
    d = data.draw(sign_vectors(a.nrows))
    assert perm_poly(diag_similar(a, d)) == perm_poly(a)


@given(int_matrices(min_n=1, max_n=6), st.randoms(use_true_random=False))
def test_similarity_by_permutation(a, rnd):
    p = list(range(a.nrows))
    rnd.shuffle(p)
    assert perm_poly(a.permuted(p)) == perm_poly(a)


@given(int_matrices(max_n=5))
def test_truncation_and_inequality(a):
    n = a.nrows
    k = perm_rank(a)
    p = perm_poly(a)
    assert all(c == 0 for c in p.coeffs[k + 1:])
    assert perm_nullity(a) >= n - k


@given(symmetric_pm1(max_n=6))
def test_nullity_is_trailing_zero_count(a):
    p = perm_poly(a)
    last = max(i for i, c in enumerate(p.coeffs) if c != 0)
    assert perm_nullity(a) == a.nrows - last


def test_threaded_poly_identical():
    a = Matrix([[(i * 5 + j * 3) % 7 - 3 for j in range(9)] for i in range(9)])
    assert perm_poly(a, threads=2) == perm_poly(a)
