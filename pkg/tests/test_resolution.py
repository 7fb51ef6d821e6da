import pytest

from quiverhh.algebra import Monomial, algebra_make
from quiverhh.resolution import (BimoduleMap, Gen, differential, generators, induced_right_complex,
                                 verify_complex, verify_minimality)
from quiverhh.scalars import GF, QQ


def E(i):
    return Monomial(i % 4, "E", 0)


def X(i, k=1):
    return Monomial(i % 4, "X", k)


def Y(i, k=1):
    return Monomial(i % 4, "Y", k)


def test_generator_count():
    for n in range(8):
        gens = generators(n)
        assert len(gens) == 4 * (n + 1)
        assert all(g.terminus == (g.i + n) % 4 for g in gens)


def test_first_differentials():
    d1 = differential(0, 1)
    assert d1.image(Gen(1, 0, 0)) == {(E(0), Gen(0, 0, 0), X(0)): 1, (X(0), Gen(0, 1, 0), E(1)): -1}
    d2 = differential(1, 2)
    assert d2.image(Gen(2, 0, 0)) == {(E(0), Gen(1, 0, 0), Y(1)): 1, (X(0), Gen(1, 1, 0), E(2)): 1}


def test_T0_middle_case():
    # all four summation blocks reduce to their s = 0 terms
    d = differential(0, 2).image(Gen(2, 0, 1))
    assert d == {
        (E(0), Gen(1, 0, 0), X(1)): 1, (X(0), Gen(1, 1, 1), E(2)): 1,
        (E(0), Gen(1, 0, 1), Y(1)): 1, (Y(0), Gen(1, 1, 0), E(2)): 1,
    }


def test_T1_middle_case_has_all_blocks():
    d = differential(1, 2).image(Gen(2, 0, 1))
    lefts = sorted((p.letter, p.exp) for (p, h, q) in d)
    assert lefts == sorted([("E", 0), ("E", 0), ("X", 1), ("Y", 1), ("X", 2), ("Y", 2), ("X", 3), ("Y", 3),
                            ("X", 4), ("Y", 4), ("X", 5), ("Y", 5)])


def test_complex_multiplication_step():
    for g, a in differential(0, 1).multiplied().items():
        assert a.is_zero(), g


@pytest.mark.parametrize("T, N, p", [(0, 12, 0), (2, 8, 5), (1, 10, 2), (3, 9, 3)])
def test_complex(T, N, p):
    assert verify_complex(T, N, p).passed


@pytest.mark.parametrize("T", range(4))
def test_minimality(T):
    assert verify_minimality(T, 12, QQ).passed


@pytest.mark.parametrize("T, n", [(0, 1), (0, 2), (1, 5), (2, 6), (0, 9)])
def test_induced_right_complex(T, n):
    matrix, ok = induced_right_complex(T, n)
    assert ok
    assert len(matrix) == 4 * (n + 1)


def test_composition_detects_sign_error():
    A = algebra_make(1, GF(3))
    d3 = differential(1, 3, GF(3))
    d4 = differential(1, 4, GF(3))
    g = Gen(4, 0, 2)
    bad = dict(d4.images)
    img = dict(bad[g])
    key = next(iter(img))
    img[key] = A.field.neg(img[key])
    bad[g] = img
    broken = BimoduleMap(A, 4, 3, bad)
    assert not d3.compose(broken).is_zero()
    assert d3.compose(d4).is_zero()


def test_compose_type_checks():
    with pytest.raises(ValueError):
        differential(0, 1).compose(differential(0, 3))
    with pytest.raises(ValueError):
        differential(0, 1).compose(differential(1, 2))
    with pytest.raises(ValueError):
        differential(0, 0)
