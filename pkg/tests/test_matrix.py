from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import sympy_det, sympy_rank
from perrank import InputError, Matrix, psd_check, rank_exact, submatrix
from perrank.matrix import as_scalar, diag_similar, format_scalar, index_set, principal
from strategies import gram_matrices, int_matrices, rational_matrices


def test_scalars_are_exact():
    assert as_scalar("3/6") == Fraction(1, 2)
    assert as_scalar(-4) == Fraction(-4)
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(Fraction(10**30)) == "1" + "0" * 30
    with pytest.raises(InputError):
        as_scalar(0.5)
    with pytest.raises(InputError):
        as_scalar("1/0")


def test_ragged_rows_rejected():
    with pytest.raises(InputError):
        Matrix([[1, 2], [3]])


def test_submatrix_principal_of_B(B):
    assert submatrix(B, (1, 2, 3), (1, 2, 3)) == Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def test_submatrix_identity_case(B):
    assert submatrix(B, range(4), range(4)) == B


def test_submatrix_leading_block(B):
    assert principal(B, (0, 1, 2)) == Matrix([[0, 0, 1], [0, 0, 1], [1, 1, 0]])


def test_submatrix_rectangular(B):
    assert submatrix(B, (0, 3), (1, 2, 3)).shape == (2, 3)


def test_submatrix_index_errors(B):
    with pytest.raises(InputError):
        submatrix(B, (0, 4), (0, 1))
    with pytest.raises(InputError):
        submatrix(B, (1, 0), (0, 1))
    with pytest.raises(InputError):
        index_set((0, 0), 3)


def test_rank_trivial():
    assert rank_exact(Matrix.identity(3)) == 3
    assert rank_exact(Matrix.zeros(3)) == 0
    assert rank_exact(Matrix.zeros(2, 5)) == 0


def test_rank_of_B(B):
    # sympy's exact elimination gives 4 (det(B) = 4)
    assert rank_exact(B) == 4


@given(int_matrices(max_n=8, square=False))
def test_rank_matches_sympy(a):
    assert rank_exact(a) == sympy_rank(a.to_lists())


@given(rational_matrices(max_n=5))
def test_rank_matches_sympy_rational(a):
    assert rank_exact(a) == sympy_rank(a.to_lists())


def test_psd_examples():
    assert psd_check(Matrix([[2, 1], [1, 2]]))
    assert not psd_check(Matrix([[0, 1], [1, 0]]))
    g = Matrix([[1, 2], [0, 1], [3, -1]])
    assert psd_check(g @ g.transpose())
    assert not psd_check(Matrix([[1, 2], [2, 1]]))
    assert not psd_check(Matrix([[-1]]))
    assert psd_check(Matrix.zeros(3))


def test_psd_input_errors():
    with pytest.raises(InputError):
        psd_check(Matrix([[1, 2], [0, 1]]))
    with pytest.raises(InputError):
        psd_check(Matrix([[1, 2, 3]]))


@given(int_matrices(min_n=1, max_n=8, square=False))
def test_gram_of_any_integer_matrix_is_psd(g):
    assert psd_check(g.transpose() @ g)
    assert psd_check(g @ g.transpose())


@given(gram_matrices(), st.data())
def test_principal_submatrices_of_psd_are_psd(a, data):
    s = data.draw(st.sets(st.integers(0, a.nrows - 1)))
    assert psd_check(principal(a, sorted(s)))


@given(gram_matrices(), st.randoms(use_true_random=False))
def test_psd_permutation_invariant(a, rnd):
    perm = list(range(a.nrows))
    rnd.shuffle(perm)
    assert psd_check(a.permuted(perm))


@given(int_matrices(min_n=1, max_n=5), st.integers(0, 4))
def test_psd_agrees_with_principal_minors(a, shift):
    # PSD iff every principal minor is nonnegative; minors taken with sympy
    s = a @ a.transpose()
    m = Matrix([[s[i, j] - (i == j) * shift for j in range(s.ncols)] for i in range(s.nrows)])
    n = m.nrows
    expected = all(
        sympy_det(principal(m, S).to_lists()) >= 0
        for k in range(1, n + 1) for S in combinations(range(n), k)
    )
    assert psd_check(m) == expected


def test_diag_similar():
    a = Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert diag_similar(a, (1, -1, 1)) == Matrix([[0, -1, 1], [-1, 0, -1], [1, -1, 0]])
    with pytest.raises(InputError):
        diag_similar(a, (1, 1))


def test_matrix_predicates(B):
    assert B.is_symmetric and B.is_zero_pm1 and B.has_zero_diagonal
    assert not B.is_nonnegative
    assert B.abs().is_nonnegative
    assert B.transpose() == B
    assert hash(B) == hash(Matrix(B.to_lists()))
