import itertools
import random

import pytest
import sympy

from quiverhh.algebra import (NV, AlgebraElement, ContextMismatchError, FreeElement, Monomial, algebra_make,
                              compute_center)
from quiverhh.scalars import GF, QQ


def word_dimensions(T: int) -> dict[int, int]:
    """dim of the length-L part of KΓ/I_T at one vertex, from ranks of the ideal in the free algebra."""
    top = 4 * T + 2
    out = {}
    for L in range(0, top + 2):
        words = ["".join(w) for w in itertools.product("AB", repeat=L)]
        col = {w: k for k, w in enumerate(words)}
        rows = []
        for pos in range(L - 1):
            for rel in ("AB", "BA"):
                for pre in itertools.product("AB", repeat=pos):
                    for post in itertools.product("AB", repeat=L - pos - 2):
                        row = [0] * len(words)
                        row[col["".join(pre) + rel + "".join(post)]] = 1
                        rows.append(row)
        if L >= top:
            for pos in range(L - top + 1):
                for pre in itertools.product("AB", repeat=pos):
                    for post in itertools.product("AB", repeat=L - pos - top):
                        row = [0] * len(words)
                        row[col["".join(pre) + "A" * top + "".join(post)]] += 1
                        row[col["".join(pre) + "B" * top + "".join(post)]] += 1
                        rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        out[L] = len(words) - rank
    return out


@pytest.mark.parametrize("T", [0, 1])
def test_hilbert_function_matches_free_algebra(T):
    dims = word_dimensions(T)
    A = algebra_make(T)
    by_length = {L: sum(1 for m in A.basis if m.vertex == 0 and m.length == L) for L in dims}
    assert by_length == dims
    assert dims[4 * T + 3] == 0


@pytest.mark.parametrize("T, field, size", [(0, QQ, 16), (1, GF(3), 48), (2, QQ, 80)])
def test_basis_size(T, field, size):
    assert algebra_make(T, field).dim == size


def test_basis_order_is_deterministic():
    A = algebra_make(1)
    assert A.basis[:3] == [Monomial(0, "E", 0), Monomial(0, "X", 1), Monomial(0, "X", 2)]
    assert A.basis == sorted(A.basis, key=lambda m: (m.vertex, "EXY".index(m.letter), m.exp))


def test_multiplication_examples():
    A = algebra_make(0)
    assert A.x(1, 0) * A.x(1, 1) == A.x(2, 0)
    assert (A.x(1, 0) * A.y(1, 1)).is_zero()
    assert A.y(1, 0) * A.y(1, 1) == A.x(2, 0) * -1
    assert (A.x(1, 0) * A.x(1, 2)).is_zero()  # not composable


def test_normal_form_rules():
    A = algebra_make(1)
    assert A.normal_form(FreeElement.path(2, "AAA")) == A.x(3, 2)
    assert A.normal_form(FreeElement.path(2, "AAB")).is_zero()
    assert A.normal_form(FreeElement.path(1, "B" * 6)) == A.x(6, 1) * -1
    assert A.normal_form(FreeElement.path(1, "B" * 7)).is_zero()
    assert A.normal_form(FreeElement.path(1, "A" * 7)).is_zero()
    with pytest.raises(ContextMismatchError):
        A.normal_form(A.x(1))


def test_normal_form_is_idempotent():
    A = algebra_make(2)
    for m in A.basis:
        a = A.element({m: 3})
        assert A.normal_form(A.embed(a)) == a


def test_context_mismatch():
    with pytest.raises(ValueError):
        algebra_make(0) .x(1) + algebra_make(1).x(1)
    with pytest.raises(ValueError):
        algebra_make(0, QQ).x(1) * algebra_make(0, GF(3)).x(1)


@pytest.mark.parametrize("T", range(4))
def test_associativity_random(T):
    A = algebra_make(T, GF(5))
    rng = random.Random(T)

    def rand():
        return A.element({m: rng.randrange(5) for m in rng.sample(A.basis, 6)})

    for _ in range(40):
        a, b, c = rand(), rand(), rand()
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("T", range(5))
def test_dimension_over_fields(T):
    for p in (0, 2, 3, 5):
        assert algebra_make(T, p).dim == 16 * (2 * T + 1)


@pytest.mark.parametrize("T", range(3))
def test_socle(T):
    A = algebra_make(T)
    top = 4 * T + 2
    for i in range(NV):
        for j in range(1, top):
            assert A.x(j, i) * A.x(top - j, (i + j) % NV) == A.x(top, i)
        s = A.x(top, i)
        assert not s.is_zero()
        assert (s * A.x(1)).is_zero() and (s * A.y(1)).is_zero()
        assert (A.x(1) * s).is_zero() and (A.y(1) * s).is_zero()


def test_center_T0():
    Z = compute_center(algebra_make(0))
    assert Z.dimension == 1
    assert Z.basis[0] == algebra_make(0).one()
    assert Z.matches_presentation


def test_center_T1_products_vanish():
    A = algebra_make(1)
    Z = compute_center(A)
    assert Z.dimension == 3 and Z.matches_presentation
    X, Y = A.x(4), A.y(4)
    for z in (X, Y):
        assert all((z * g - g * z).is_zero() for g in (A.x(1), A.y(1), A.e(0)))
    assert (X * X).is_zero() and (X * Y).is_zero() and (Y * Y).is_zero()
    # structure constants: the identity is the only basis element with a nonzero square
    unit = [k for k, z in enumerate(Z.basis) if z == A.one()]
    assert len(unit) == 1
    for a in range(3):
        for b in range(3):
            if unit[0] not in (a, b):
                assert not Z.structure_constants[a][b]


@pytest.mark.parametrize("T", range(4))
def test_unit_is_central(T):
    A = algebra_make(T)
    Z = compute_center(A)
    assert Z.dimension == 2 * T + 1
    one = A.one()
    for m in A.basis:
        a = A.element({m: 1})
        assert one * a == a * one == a


def test_element_vector_roundtrip():
    A = algebra_make(1, GF(3))
    a = A.x(2) + A.y(3, 1) * 2
    assert AlgebraElement.from_vector(A, a.vector()) == a
    assert a.in_radical() and not A.one().in_radical()
