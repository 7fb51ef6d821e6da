import pytest

from quiverhh.algebra import NV, FreeElement, algebra_make
from quiverhh.gsz import (check_koszul_linearity, extract_right_differential, factor_over_previous, gsz_element,
                          gsz_generate, verify_right_resolution)
from quiverhh.scalars import GF, QQ


def path(start, letters):
    return FreeElement.path(start, letters)


@pytest.mark.parametrize("T", [0, 1, 3])
def test_degree_one_and_two(T):
    top = 4 * T + 2
    for i in range(NV):
        # the letter roles swap on odd vertices
        first, second = ("A", "B") if i % 2 == 0 else ("B", "A")
        assert gsz_element(T, 1, i, 0) == path(i, first)
        assert gsz_element(T, 1, i, 1) == path(i, second)
        # the minimal relations xy, x^top + y^top, yx
        G2 = {g.value for g in gsz_generate(T, 2) if g.i == i}
        assert G2 == {path(i, "AB"), path(i, "A" * top) + path(i, "B" * top), path(i, "BA")}


def test_T0_middle_relation():
    assert gsz_element(0, 2, 0, 1) == path(0, "AA") + path(0, "BB")


@pytest.mark.parametrize("T", [0, 1, 2])
def test_count_and_uniformity(T):
    for n in range(9):
        G = gsz_generate(T, n)
        assert len(G) == 4 * (n + 1)
        for g in G:
            assert g.value.starts() == {g.origin}
            assert g.value.ends() == {g.terminus}


def test_right_differential_examples():
    A = algebra_make(0)
    d1 = extract_right_differential(0, 1).matrix
    assert d1[(0, 0)] == {(0, 0): A.x(1, 0)}
    d2 = extract_right_differential(0, 2).matrix
    assert d2[(0, 1)] == {(0, 0): A.x(1, 1), (0, 1): A.y(1, 1)}
    assert d2[(0, 0)] == {(0, 0): A.y(1, 1)}


def test_factorization_reassembles():
    for T in (0, 1):
        for n in range(1, 7):
            for i in range(NV):
                for j in range(n + 1):
                    parts = factor_over_previous(T, n, i, j)
                    total = FreeElement()
                    for (r, s), coef in parts.items():
                        total = total + gsz_element(T, n - 1, r, s) * coef
                    assert total == gsz_element(T, n, i, j)


def test_right_resolution_examples():
    assert verify_right_resolution(0, 8, QQ).passed
    assert verify_right_resolution(1, 6, GF(3)).passed
    rep = verify_right_resolution(0, 4)
    assert rep.data["ranks"][1] == 12
    assert rep.data["dims"][0] == 16


@pytest.mark.parametrize("T", [1, 2])
def test_right_resolution_higher_T(T):
    assert verify_right_resolution(T, 9, QQ).passed


def test_koszul_linearity():
    assert check_koszul_linearity(10)
    assert check_koszul_linearity(0)
    assert not check_koszul_linearity(2, T=1)
    assert gsz_element(1, 2, 0, 1).lengths() == {6}
    assert gsz_element(1, 3, 0, 1).lengths() == {7}
    assert gsz_element(1, 4, 0, 2).lengths() == {12}


def test_negative_degree():
    with pytest.raises(ValueError):
        gsz_generate(0, -1)
