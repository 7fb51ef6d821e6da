"""The projective bimodule resolution (Q, ∂) of A_T.

Q^n is free on generators a^n_{i,j} = e_i ⊗ e_{i+n}; a bimodule map out of
Q^n is stored by the images of its generators, each image a sum of pure
tensors ``p · a^m_{r,s} · q`` with basis monomials p, q of A_T.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import NamedTuple

from .algebra import NV, Algebra, AlgebraElement, Monomial, algebra_make, vertex_monomial
from .gsz import extract_right_differential
from .report import Report
from .scalars import QQ, Field, as_field


class Gen(NamedTuple):
    """Generator a^n_{i,j} of Q^n."""

    n: int
    i: int
    j: int

    @property
    def origin(self) -> int:
        return self.i

    @property
    def terminus(self) -> int:
        return (self.i + self.n) % NV


def generators(n: int) -> list[Gen]:
    return [Gen(n, i, j) for i in range(NV) for j in range(n + 1)]


# a pure-tensor key: (left monomial, target generator, right monomial)
Term = tuple[Monomial, Gen, Monomial]


@dataclass
class BimoduleMap:
    """A bimodule map Q^source -> Q^target (or -> A_T when ``target is None``)."""

    algebra: Algebra
    source: int
    target: int | None
    images: dict[Gen, dict[Term, object]] = dc_field(default_factory=dict)

    def image(self, g: Gen) -> dict[Term, object]:
        return self.images.get(g, {})

    @property
    def entries(self) -> dict[tuple[Gen, Gen], dict[tuple[Monomial, Monomial], object]]:
        """Generator-indexed matrix of tensor coefficients."""
        out: dict = {}
        for g, img in self.images.items():
            for (p, h, q), c in img.items():
                out.setdefault((g, h), {})[(p, q)] = c
        return out

    def is_zero(self) -> bool:
        return not any(self.images.values())

    def compose(self, inner: "BimoduleMap") -> "BimoduleMap":
        """``self ∘ inner``: first ``inner``, then ``self``."""
        if inner.target != self.source:
            raise ValueError(f"cannot compose Q^{inner.source}->Q^{inner.target} with Q^{self.source}->...")
        if inner.algebra != self.algebra:
            raise ValueError("maps over different algebras")
        A = self.algebra
        f = A.field
        out: dict[Gen, dict] = {}
        for g, img in inner.images.items():
            acc: dict = {}
            for (p, h, q), c in img.items():
                for (p2, h2, q2), c2 in self.image(h).items():
                    left = A.mul_monomials(p, p2)
                    if left is None:
                        continue
                    right = A.mul_monomials(q2, q)
                    if right is None:
                        continue
                    key = (left[1], h2, right[1])
                    v = f.normalize(acc.get(key, 0) + left[0] * right[0] * c * c2)
                    if v:
                        acc[key] = v
                    else:
                        acc.pop(key, None)
            if acc:
                out[g] = acc
        return BimoduleMap(A, inner.source, self.target, out)

    def multiplied(self) -> dict[Gen, AlgebraElement]:
        """Post-compose with the multiplication map Q^target -> A (requires target 0)."""
        if self.target != 0:
            raise ValueError("multiplication map is defined on Q^0")
        A = self.algebra
        out = {}
        for g, img in self.images.items():
            acc: dict = {}
            for (p, h, q), c in img.items():
                r = A.mul_monomials(p, q)
                if r is not None:
                    acc[r[1]] = A.field.normalize(acc.get(r[1], 0) + r[0] * c)
            out[g] = AlgebraElement(A, acc)
        return out

    def __sub__(self, other: "BimoduleMap") -> "BimoduleMap":
        f = self.algebra.field
        out = {g: dict(img) for g, img in self.images.items()}
        for g, img in other.images.items():
            acc = out.setdefault(g, {})
            for k, c in img.items():
                v = f.normalize(acc.get(k, 0) - c)
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        return BimoduleMap(self.algebra, self.source, self.target, {g: i for g, i in out.items() if i})

    def __eq__(self, other):
        return isinstance(other, BimoduleMap) and (self - other).is_zero()


# --- the differentials ---------------------------------------------------------

def _parity_letters(i: int) -> tuple[str, str]:
    return ("X", "Y") if i % 2 == 0 else ("Y", "X")


def _differential_terms(T: int, n: int, i: int, j: int) -> list[tuple[int, tuple[str, int], int, int, tuple[str, int]]]:
    """∂^n(a^n_{i,j}) as (coef, (left letter, exp), r, s, (right letter, exp)); r is mod 4."""
    h = 4 * T + 1
    P, Q = _parity_letters(i)
    e = ("E", 0)
    t: list = []
    if n % 2 == 1:
        m = (n - 1) // 2
        if j == 0:
            t += [(1, e, i, 0, (P, 1)), (-1, (P, 1), i + 1, 0, e)]
        elif j <= m:
            t += [(1, e, i, j - 1, (Q, h)), (1, e, i, j, (P, 1)),
                  (-1, (P, 1), i + 1, j, e), (-1, (Q, h), i + 1, j - 1, e)]
        elif j <= 2 * m:
            t += [(1, e, i, j - 1, (Q, 1)), (1, e, i, j, (P, h)),
                  (-1, (P, h), i + 1, j, e), (-1, (Q, 1), i + 1, j - 1, e)]
        else:
            t += [(1, e, i, 2 * m, (Q, 1)), (-1, (Q, 1), i + 1, 2 * m, e)]
    else:
        m = n // 2
        if j == 0:
            t += [(1, e, i, 0, (Q, 1)), (1, (P, 1), i + 1, 0, e)]
        elif j <= m - 1:
            t += [(1, e, i, j - 1, (P, h)), (1, e, i, j, (Q, 1)),
                  (1, (P, 1), i + 1, j, e), (1, (Q, h), i + 1, j - 1, e)]
        elif j == m:
            # four blocks: sum_s L^(4s) (a_first L + L a_second) L^(4T-4s) and the shifted ones
            for L, first, second in ((P, m - 1, m), (Q, m, m - 1)):
                for s in range(T + 1):
                    t.append((1, (L, 4 * s), i, first, (L, 4 * T - 4 * s + 1)))
                    t.append((1, (L, 4 * s + 1), i + 1, second, (L, 4 * T - 4 * s)))
                for s in range(T):
                    t.append((1, (L, 4 * s + 2), i + 2, first, (L, 4 * T - 4 * s - 1)))
                    t.append((1, (L, 4 * s + 3), i + 3, second, (L, 4 * T - 4 * s - 2)))
        elif j <= 2 * m - 1:
            t += [(1, e, i, j - 1, (P, 1)), (1, e, i, j, (Q, h)),
                  (1, (P, h), i + 1, j, e), (1, (Q, 1), i + 1, j - 1, e)]
        else:
            t += [(1, e, i, 2 * m - 1, (P, 1)), (1, (Q, 1), i + 1, 2 * m - 1, e)]
    return [(c, lp, r % NV, s, rq) for c, lp, r, s, rq in t]


def _build_differential(A: Algebra, n: int) -> BimoduleMap:
    f = A.field
    images = {}
    for g in generators(n):
        acc: dict = {}
        for c, (ll, le), r, s, (rl, re) in _differential_terms(A.T, n, g.i, g.j):
            left = A.monomial(g.i, ll, le)
            right = A.monomial(r + n - 1, rl, re)
            if left is None or right is None:
                continue
            assert left[1].target == r, (n, g, r)
            assert right[1].target == g.terminus, (n, g, r)
            key = (left[1], Gen(n - 1, r, s), right[1])
            v = f.normalize(acc.get(key, 0) + c * left[0] * right[0])
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        images[g] = acc
    return BimoduleMap(A, n, n - 1, images)


@lru_cache(maxsize=None)
def _cached_differential(T: int, field: Field, n: int) -> BimoduleMap:
    return _build_differential(algebra_make(T, field), n)


def differential(T: int, n: int, field: Field | int = QQ) -> BimoduleMap:
    """∂^n : Q^n -> Q^(n-1)."""
    if n < 1:
        raise ValueError("∂^n is a map between projectives for n >= 1")
    return _cached_differential(T, as_field(field), n)


def vertex_check(m: BimoduleMap) -> list[str]:
    """Left monomials must run e_i -> e_r and right ones e_{r+deg} -> e_{i+n}."""
    bad = []
    for g, img in m.images.items():
        for (p, h, q) in img:
            if p.vertex != g.i or p.target != h.i:
                bad.append(f"{g}: left {p} vs {h}")
            if q.vertex != h.terminus or q.target != g.terminus:
                bad.append(f"{g}: right {q} vs {h}")
    return bad


def verify_complex(T: int, N: int, field: Field | int = QQ) -> Report:
    """∂^n ∂^(n+1) = 0 for 0 <= n <= N-1, with ∂^0 the multiplication map."""
    if N < 1:
        raise ValueError("N must be >= 1")
    f = as_field(field)
    rep = Report("bimodule_complex", data={"T": T, "N": N, "char": f.characteristic})
    for n in range(0, N):
        d_up = differential(T, n + 1, f)
        for msg in vertex_check(d_up):
            rep.fail(f"n={n + 1}: {msg}")
        if n == 0:
            for g, a in d_up.multiplied().items():
                rep.check(a.is_zero(), f"n=0 generator {g}: ∂^0∂^1 = {a}")
            continue
        comp = differential(T, n, f).compose(d_up)
        for g, img in comp.images.items():
            rep.check(not img, f"n={n} generator {g}: residual {len(img)} terms")
    return rep


def verify_minimality(T: int, N: int, field: Field | int = QQ) -> Report:
    """Every pure tensor p ⊗ q in ∂^n has p or q in the radical."""
    f = as_field(field)
    rep = Report("bimodule_minimality", data={"T": T, "N": N})
    for n in range(1, N + 1):
        for g, img in differential(T, n, f).images.items():
            for (p, h, q) in img:
                rep.check(p.length > 0 or q.length > 0, f"n={n} generator {g}: term {p}⊗{q} at {h}")
    return rep


def induced_right_complex(T: int, n: int, field: Field | int = QQ):
    """A/rad ⊗ ∂^n as a generator-indexed matrix over A_T, compared with the GSZ d^n.

    Returns ``(matrix, matches)``.
    """
    f = as_field(field)
    A = algebra_make(T, f)
    d = differential(T, n, f)
    matrix: dict[tuple[int, int], dict[tuple[int, int], AlgebraElement]] = {}
    for g, img in d.images.items():
        row: dict = {}
        for (p, h, q), c in img.items():
            if p.length > 0:
                continue
            row.setdefault((h.i, h.j), {})[q] = c
        matrix[(g.i, g.j)] = {k: AlgebraElement(A, v) for k, v in row.items() if AlgebraElement(A, v)}
    gsz = extract_right_differential(T, n, f).matrix
    matches = matrix == gsz
    return matrix, matches


def identity_term(A: Algebra, vertex: int, gen: Gen, end: int) -> Term:
    return (vertex_monomial(vertex), gen, vertex_monomial(end))
