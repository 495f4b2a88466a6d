import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from decat.snf import elementary_divisors, matmul, smith_normal_form

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _sympy_divisors(A):
    D = sympy_snf(sympy.Matrix(A), domain=sympy.ZZ)
    return [abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0]


@settings(max_examples=150, deadline=None)
@given(matrices, st.sampled_from(["min", "first"]))
def test_divisors_match_sympy(A, strategy):
    assert smith_normal_form(A, strategy).diagonal == _sympy_divisors(A)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_diagonal_divisibility_chain(A):
    d = smith_normal_form(A).diagonal
    assert all(x > 0 for x in d)
    assert all(d[k + 1] % d[k] == 0 for k in range(len(d) - 1))


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_left_transform_is_unimodular(A):
    U = smith_normal_form(A, track_left=True).left
    assert abs(sympy.Matrix(U).det()) == 1
    # rows of U A beyond the rank are zero
    r = smith_normal_form(A).rank
    UA = matmul(U, A)
    assert all(v == 0 for row in UA[r:] for v in row)


@settings(max_examples=100, deadline=None)
@given(matrices, st.sampled_from(["min", "first"]))
def test_sparse_elimination_agrees_with_dense(A, strategy):
    columns = [{i: A[i][j] for i in range(len(A)) if A[i][j]} for j in range(len(A[0]))]
    assert elementary_divisors(columns, len(A), strategy) == smith_normal_form(A).diagonal


def test_known_examples():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).diagonal == [2, 6, 12]
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == []
    assert smith_normal_form([]).diagonal == []


def test_bad_input_is_rejected():
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2], [3]])
    with pytest.raises(ValueError):
        smith_normal_form([[1]], strategy="max")
