import itertools

import pytest

from quiverhh.algebra import algebra_make, vertex_monomial
from quiverhh.explicit import hh_basis_list
from quiverhh.hochschild import Cochain
from quiverhh.resolution import Gen
from quiverhh.scalars import GF, QQ
from quiverhh.yoneda import (PRESENTATION, expected_monomial_count, lift_cocycle, product_formula, same_class,
                             sigma_chain, sigma_lifting, unit_cocycle, verify_graded_commutativity,
                             verify_nilpotent_part, verify_ring_presentation, verify_sigma_liftings,
                             yoneda_product, z_cocycle)


def targets(m):
    return {g: [(h.i, h.j) for (_, h, _) in img] for g, img in m.images.items()}


def test_sigma_examples():
    s = targets(sigma_lifting(0, 0))
    assert s == {Gen(4, r, 0): [(r, 0)] for r in range(4)}
    s = targets(sigma_lifting(4, 0))
    assert s == {Gen(4, r, 4): [(r, 0)] for r in range(4)}
    s = targets(sigma_lifting(2, 1))
    assert s == {Gen(5, r, q): [(r, q - 2)] for r in range(4) for q in (2, 3)}


def test_sigma_identity_coefficients():
    for (p, h, q), c in sigma_lifting(3, 2).images[Gen(6, 1, 4)].items():
        assert p == vertex_monomial(1) and q == vertex_monomial(h.terminus) and c == 1


@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_sigma_liftings(field):
    assert verify_sigma_liftings(7, field).passed


def test_solver_chain_is_a_lifting():
    A = algebra_make(0)
    for terms in hh_basis_list(0, 2, False)[:2]:
        chain = lift_cocycle(Cochain.from_terms(A, 2, terms), 4)
        assert chain.verify().passed
    assert sigma_chain(2, 4).verify().passed


def test_solver_and_sigma_routes_agree():
    chain = lift_cocycle(z_cocycle(0), 4)
    for v in range(5):
        assert yoneda_product(z_cocycle(v), chain) == yoneda_product(z_cocycle(v), sigma_chain(0, 4))


def test_products_of_two():
    for u, v in itertools.product(range(5), repeat=2):
        p = yoneda_product(z_cocycle(v), sigma_chain(u, 4))
        assert p == product_formula(2, u + v)
        for r in range(4):
            assert p.value(r, u + v) == algebra_make(0).e(r)


def test_unit_laws():
    u = unit_cocycle(0)
    uc = lift_cocycle(u, 4)
    for c in (z_cocycle(3), u):
        assert yoneda_product(c, uc) == c
    A = algebra_make(0)
    c = Cochain.from_terms(A, 2, hh_basis_list(0, 2, False)[1])
    assert yoneda_product(u, lift_cocycle(c, 0)) == c


def test_degree_two_lifting_exists():
    A = algebra_make(0)
    c = Cochain.from_terms(A, 2, [(1, "beta", 0, 0, 0)])
    assert lift_cocycle(c, 4).steps == 4


def test_non_cocycle_rejected():
    A = algebra_make(0)
    with pytest.raises(ValueError):
        lift_cocycle(Cochain.from_terms(A, 1, [(1, "beta", 0, 0, 0)]), 2)


def test_chain_too_short():
    with pytest.raises(ValueError):
        yoneda_product(z_cocycle(1), lift_cocycle(z_cocycle(0), 2))


def test_presentation_and_hilbert():
    assert len(PRESENTATION.relations) == 6
    assert PRESENTATION.relation_strings()[0] == "z0z2 - z1^2"
    assert [PRESENTATION.hilbert(w) for w in range(6)] == [1, 5, 9, 13, 17, 21]
    assert [expected_monomial_count(w) for w in range(3)] == [1, 5, 15]
    for (a, b), (c, d) in PRESENTATION.relations:
        assert a + b == c + d


@pytest.mark.parametrize("field", [QQ, GF(3)])
def test_ring_presentation(field):
    rep = verify_ring_presentation(4, field)
    assert rep.passed, rep.failures[:5]
    assert rep.data["counts"] == {1: 5, 2: 9, 3: 13, 4: 17}


def test_relation_degree_two_vanishes():
    z = {j: z_cocycle(j) for j in range(5)}
    diff = yoneda_product(z[0], sigma_chain(2, 4)) - yoneda_product(z[1], sigma_chain(1, 4))
    assert diff.is_zero()
    # while z0^2 and z1^2 differ
    assert yoneda_product(z[0], sigma_chain(0, 4)) != yoneda_product(z[1], sigma_chain(1, 4))


@pytest.mark.parametrize("field", [QQ, GF(3)])
def test_nilpotent_part(field):
    rep = verify_nilpotent_part(2, field)
    assert rep.passed, rep.failures
    assert set(rep.data["squares"].values()) == {"zero"}


def test_nilpotent_part_refuses_char_2():
    with pytest.raises(ValueError):
        verify_nilpotent_part(2, GF(2))


def test_higher_nilpotent_degrees():
    assert verify_nilpotent_part(6, QQ).passed


def test_graded_commutativity():
    assert verify_graded_commutativity(2, QQ).passed


def test_some_mixed_products_survive():
    A = algebra_make(0)
    cls = [Cochain.from_terms(A, 1, t) for t in hh_basis_list(0, 1, False)]
    products = [yoneda_product(a, lift_cocycle(b, 1)) for a in cls for b in cls]
    nonzero = [p for p in products if not same_class(p, Cochain(A, 2, {}))]
    assert nonzero
