import numpy as np
import pytest
from hypothesis import given, strategies as st

import srfr.linalg as linalg
from srfr.field import PrimeField
from srfr.linalg import ScalarMatrix, SingularMatrixError, rref, solve_linear

F7 = PrimeField(7)


def test_identity_system():
    I = ScalarMatrix.identity(F7, 3)
    assert solve_linear(I, [1, 2, 3]) == [1, 2, 3]


def test_two_by_two_multiply_back():
    A = ScalarMatrix(F7, [[2, 3], [1, 4]])
    y = solve_linear(A, [5, 6])
    assert A @ y == [5, 6]


def test_singular_reports_rank():
    with pytest.raises(SingularMatrixError) as info:
        solve_linear(ScalarMatrix.zeros(F7, 2, 2), [1, 1])
    assert info.value.rank == 0
    with pytest.raises(SingularMatrixError) as info:
        solve_linear(ScalarMatrix(F7, [[1, 2], [2, 4]]), [1, 1])
    assert info.value.rank == 1


def test_profiles():
    A = ScalarMatrix(F7, [[0, 0, 0], [1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert A.rank() == 2
    assert A.row_rank_profile() == (1, 3)
    assert A.column_rank_profile() == (0, 2)


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_nullspace_and_rank_nullity(rows):
    A = ScalarMatrix(F7, rows)
    null = A.nullspace()
    assert len(null) + A.rank() == A.cols
    for v in null:
        assert all(x == 0 for x in A @ v)


@given(matrices)
def test_small_and_vectorized_rref_agree(rows):
    a = np.array(rows)
    small = rref(a, 7)
    old = linalg._SMALL
    linalg._SMALL = -1
    try:
        big = rref(a, 7)
    finally:
        linalg._SMALL = old
    assert small.pivots == big.pivots
    assert (small.matrix == big.matrix).all()


def test_large_prime_uses_exact_objects():
    p = 2**61 - 1
    F = PrimeField(p)
    A = ScalarMatrix(F, [[p - 1, 3], [5, p - 2]])
    y = solve_linear(A, [1, 2])
    assert A @ y == [1, 2]
