import pytest

from quiverhh import linalg
from quiverhh.algebra import algebra_make
from quiverhh.explicit import (hh_basis_list, image_basis_list, image_map_formula, kernel_basis_list,
                               verify_image_maps, verify_explicit_bases)
from quiverhh.hochschild import Cochain, hom_matrix
from quiverhh.scalars import GF, QQ

CASES = [(0, QQ), (1, QQ), (2, QQ), (1, GF(3)), (2, GF(5)), (0, GF(3)), (3, GF(7))]


@pytest.mark.parametrize("T, field", CASES)
def test_bases(T, field):
    for n in range(9):
        rep = verify_explicit_bases(T, n, field)
        assert rep.passed, rep.failures


@pytest.mark.parametrize("T, field", CASES)
def test_image_map_tables(T, field):
    for n in range(9):
        rep = verify_image_maps(T, n, field)
        assert rep.passed, rep.failures


def test_kernel_example_T0():
    rep = verify_explicit_bases(0, 2)
    assert len(kernel_basis_list(0, 2, False)) == 7
    assert rep.data["kernel"] == (7, 7)


def test_hh4_basis_T0():
    lst = hh_basis_list(0, 4, False)
    assert lst == [[(1, "beta", 0, i, j) for i in range(4)] for j in range(5)]
    assert verify_explicit_bases(0, 4).data["hh"] == (5, 5)


def test_divides_branch_pair():
    lst = hh_basis_list(1, 1, True)
    assert [(1, "gamma", 0, 0, 1), (1, "gamma", 0, 2, 1)] in lst
    assert [(1, "beta", 0, 1, 1), (1, "beta", 0, 3, 1)] in lst
    assert len(lst) == 7 and len(hh_basis_list(1, 1, False)) == 6


def test_printed_gamma_table_in_degree_4m3_is_off():
    # printed: γ^{3,0}_{0,0}∘∂^4 = 0 (β's parity pattern); the computation gives γ^{4,1}_{0,0} + γ^{4,1}_{3,0}
    A = algebra_make(1)
    M = hom_matrix(1, 4)
    k = next(k for k, b in enumerate(M.source) if (b.kind, b.l, b.i, b.j) == ("gamma", 0, 0, 0))
    got = Cochain(A, 4, M.rows[k])
    assert got == Cochain.from_terms(A, 4, image_map_formula(1, 3, "gamma", 0, 0, 0))
    assert got == Cochain.from_terms(A, 4, [(1, "gamma", 1, 0, 0), (1, "gamma", 1, 3, 0)])


def test_printed_kernel_element_in_degree_4m1_is_off():
    # printed: β_{0,k} + γ_{1,k} + γ_{2,k} + β_{3,k} (level T, degree 4m+1); only the alternating form is a cocycle
    for T, m in [(1, 0), (2, 0), (1, 1)]:
        n = 4 * m + 1
        A = algebra_make(T)
        rows = hom_matrix(T, n + 1).rows
        k = 2 * m + 1
        printed = Cochain.from_terms(A, n, [(1, "beta", T, 0, k), (1, "gamma", T, 1, k), (1, "gamma", T, 2, k),
                                            (1, "beta", T, 3, k)])
        fixed = Cochain.from_terms(A, n, [(1, "beta", T, 0, k), (1, "gamma", T, 1, k), (1, "beta", T, 2, k),
                                          (1, "gamma", T, 3, k)])
        assert linalg.vec_mat(A.field, printed.coordinates, rows)
        assert not linalg.vec_mat(A.field, fixed.coordinates, rows)


def test_image_lists_T0_vanish_where_stated():
    assert image_basis_list(0, 4, False) == []
    assert image_basis_list(0, 3, False) == []
    assert kernel_basis_list(0, 4, False) == []
