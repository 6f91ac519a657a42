import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpfunctors import linalg
from fpfunctors.errors import DimensionError

from oracles import invariant_factors_from_minors, permutation_det


def small_matrices(max_dim=4, bound=20, min_dim=0):
    return st.integers(min_dim, max_dim).flatmap(
        lambda m: st.integers(min_dim, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            ).map(lambda rows, n=n, m=m: linalg.matrix(rows, (m, n)))
        )
    )


def check_certificate(A, dec):
    m, n = A.shape
    assert np.array_equal(dec.U @ A @ dec.V, dec.S)
    assert np.array_equal(dec.U @ dec.U_inv, linalg.identity(m))
    assert np.array_equal(dec.V @ dec.V_inv, linalg.identity(n))
    S = dec.S
    for i in range(m):
        for j in range(n):
            if i != j:
                assert S[i, j] == 0
    d = dec.diagonal
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)


@pytest.mark.parametrize(
    "rows, diag",
    [([[2, 0], [0, 3]], [1, 6]), ([[2, 4], [6, 8]], [2, 4])],
)
def test_snf_examples(rows, diag):
    A = linalg.matrix(rows)
    dec = linalg.snf(A)
    check_certificate(A, dec)
    assert dec.diagonal == diag


def test_snf_zero_matrix():
    A = linalg.zeros(2, 3)
    dec = linalg.snf(A)
    assert linalg.is_zero(dec.S) and dec.S.shape == (2, 3)
    assert dec.rank == 0


@pytest.mark.parametrize("shape", [(0, 0), (0, 3), (3, 0)])
def test_snf_empty_shapes(shape):
    A = linalg.zeros(*shape)
    dec = linalg.snf(A)
    check_certificate(A, dec)
    assert dec.diagonal == []


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_snf_certificates_and_minors(A):
    dec = linalg.snf(A)
    check_certificate(A, dec)
    if A.size:
        assert abs(permutation_det(linalg.to_lists(dec.U))) == 1
        assert abs(permutation_det(linalg.to_lists(dec.V))) == 1
        nonzero = [d for d in dec.diagonal if d]
        assert nonzero == invariant_factors_from_minors(linalg.to_lists(A))


@pytest.mark.parametrize(
    "a, b, x",
    [([[2]], [[4]], [[2]]), ([[1, 0], [0, 2]], [[5], [6]], [[5], [3]])],
)
def test_solve_examples(a, b, x):
    assert linalg.to_lists(linalg.solve(linalg.matrix(a), linalg.matrix(b))) == x


def test_solve_no_solution():
    assert linalg.solve(linalg.matrix([[2]]), linalg.matrix([[3]])) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        linalg.solve(linalg.matrix([[1, 2]]), linalg.matrix([[1], [2]]))


@settings(max_examples=60, deadline=None)
@given(small_matrices(max_dim=2, bound=6, min_dim=1), st.data())
def test_solve_against_box_search(A, data):
    m, n = A.shape
    b = linalg.matrix(
        [[data.draw(st.integers(-12, 12))] for _ in range(m)], (m, 1)
    )
    x = linalg.solve(A, b)
    if x is not None:
        assert np.array_equal(A @ x, b)
    else:
        for cand in itertools.product(range(-20, 21), repeat=n):
            col = linalg.matrix([[c] for c in cand], (n, 1))
            assert not np.array_equal(A @ col, b)


def test_kernel_examples():
    K = linalg.kernel_basis(linalg.matrix([[2, -2]]))
    assert K.shape == (2, 1) and abs(K[0, 0]) == 1 and K[0, 0] == K[1, 0]
    assert linalg.kernel_basis(linalg.identity(2)).shape == (2, 0)
    assert linalg.to_lists(linalg.kernel_basis(linalg.matrix([[0]]))) == [[1]]


@settings(max_examples=80, deadline=None)
@given(small_matrices(max_dim=3, bound=5, min_dim=1))
def test_kernel_contains_small_vectors(A):
    K = linalg.kernel_basis(A)
    n = A.shape[1]
    assert linalg.is_zero(A @ K)
    assert linalg.rank_over_fractions(K) == K.shape[1]
    for cand in itertools.product(range(-3, 4), repeat=n):
        v = linalg.matrix([[c] for c in cand], (n, 1))
        if linalg.is_zero(A @ v):
            assert linalg.solve(K, v) is not None


@pytest.mark.parametrize(
    "A, r",
    [(linalg.diagonal([2, 3]), 2), (linalg.matrix([[1, 2], [2, 4]]), 1), (linalg.zeros(0, 5), 0)],
)
def test_rank_over_fractions(A, r):
    assert linalg.rank_over_fractions(A) == r


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: small_matrices(n, 9, n).filter(lambda A: A.shape[0] == A.shape[1])))
def test_determinant_matches_permutation_expansion(A):
    assert linalg.determinant(A) == permutation_det(linalg.to_lists(A))


def test_matrix_keeps_python_ints():
    A = linalg.matrix([[2**80, 1]])
    assert A.dtype == object
    assert (A @ A.T)[0, 0] == 2**160 + 1
