import pytest

from quiverhh import linalg
from quiverhh.bar import (BudgetExceeded, ReducedBarComplex, bar_cochain_count, bar_hh_dimension,
                          corner_dim_matrix, radical_count_matrix)
from quiverhh.algebra import algebra_make
from quiverhh.hochschild import cohomology_dimensions
from quiverhh.scalars import GF, QQ


def test_examples():
    assert bar_hh_dimension(0, 0, QQ) == 1
    assert bar_hh_dimension(0, 3, QQ) == 0
    assert bar_hh_dimension(1, 1, GF(3)) == 7


@pytest.mark.parametrize("T, N", [(0, 4), (1, 2)])
@pytest.mark.parametrize("field", [QQ, GF(3), GF(2)])
def test_agrees_with_resolution(T, N, field):
    for n in range(N + 1):
        assert bar_hh_dimension(T, n, field) == cohomology_dimensions(T, n, field).hh


def test_refuses_out_of_range():
    with pytest.raises(BudgetExceeded):
        bar_hh_dimension(0, 5)
    with pytest.raises(BudgetExceeded):
        bar_hh_dimension(1, 3)
    with pytest.raises(BudgetExceeded):
        bar_hh_dimension(2, 0)
    with pytest.raises(BudgetExceeded):
        bar_hh_dimension(1, 2, budget=100)
    with pytest.raises(ValueError):
        bar_hh_dimension(0, -1)


@pytest.mark.parametrize("T", [0, 1, 2])
def test_cochain_count(T):
    bc = ReducedBarComplex(T)
    for n in range(3 if T else 5):
        assert bc.cochain_dim(n) == bar_cochain_count(T, n)


@pytest.mark.parametrize("T", [0, 1, 3])
def test_count_matrices_match_algebra(T):
    A = algebra_make(T)
    D = corner_dim_matrix(T)
    R = radical_count_matrix(T)
    for i in range(4):
        for j in range(4):
            corner = A.between(i, j)
            assert D[i][j] == len(corner)
            assert R[i][j] == sum(1 for m in corner if m.length > 0)


def test_differential_squares_to_zero():
    bc = ReducedBarComplex(1, GF(3))
    f = bc.algebra.field
    for n in range(2):
        first, second = bc.differential_rows(n), bc.differential_rows(n + 1)
        for row in first:
            assert not linalg.vec_mat(f, row, second)


def test_weight_blocks_cover_space():
    bc = ReducedBarComplex(0)
    for n in range(4):
        assert sum(bc.weight_blocks(n).values()) == bc.cochain_dim(n)
