"""Hochschild cochains Hom(Q^n, A_T) and the cohomology of the complex Hom(∂, A_T).

Hom(Q^n, A_T) is identified with the direct sum over generators of
e_i A_T e_{i+n}; the canonical basis consists of the maps

    beta^{n,l}_{i,j}:  a^n_{i,j} -> e_i x^(4l+t),   gamma^{n,l}_{i,j}: a^n_{i,j} -> e_i y^(4l+t)

(t = n mod 4), dropping gamma where it coincides with +-beta.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from . import linalg
from .algebra import NV, Algebra, AlgebraElement, Monomial, algebra_make, compute_center
from .report import Report
from .resolution import BimoduleMap, Gen, differential
from .scalars import QQ, Field, as_field, divides_two_t_plus_one


class StructuralError(ArithmeticError):
    """A computed cochain left the span of the canonical basis."""


class CochainBasisElement(NamedTuple):
    kind: str  # "beta" or "gamma"
    n: int
    l: int
    i: int
    j: int

    def sort_key(self):
        return (self.kind != "beta", self.l, self.i, self.j)

    def letter(self) -> str:
        return "X" if self.kind == "beta" else "Y"

    def exponent(self) -> int:
        return 4 * self.l + self.n % 4

    def __str__(self):
        k = "β" if self.kind == "beta" else "γ"
        return f"{k}^{{{self.n},{self.l}}}_{{{self.i},{self.j}}}"


def level_ranges(T: int, n: int) -> dict[str, range]:
    t = n % 4
    if t == 0:
        return {"beta": range(0, T + 1), "gamma": range(1, T + 1)}
    if t == 1:
        return {"beta": range(0, T + 1), "gamma": range(0, T + 1)}
    if t == 2:
        return {"beta": range(0, T + 1), "gamma": range(0, T)}
    return {"beta": range(0, T), "gamma": range(0, T)}


def cochain_basis(T: int, n: int, field: Field | int = QQ) -> list[CochainBasisElement]:
    """Canonical basis of Hom(Q^n, A_T) ordered by (kind, level, vertex, position)."""
    out = []
    for kind, levels in level_ranges(T, n).items():
        for l in levels:
            for i in range(NV):
                for j in range(n + 1):
                    out.append(CochainBasisElement(kind, n, l, i, j))
    return out


class CochainSpace:
    """Coordinates on Hom(Q^n, A_T)."""

    def __init__(self, A: Algebra, n: int):
        self.algebra = A
        self.n = n
        self.basis = cochain_basis(A.T, n)
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.slot: dict[tuple[int, int, Monomial], int] = {}
        for k, b in enumerate(self.basis):
            sign, mono = A.monomial(b.i, b.letter(), b.exponent())
            assert sign == 1
            self.slot[(b.i, b.j, mono)] = k

    def __len__(self):
        return len(self.basis)

    def value_of(self, b: CochainBasisElement):
        return self.algebra.monomial(b.i, b.letter(), b.exponent())[1]

    def coordinates(self, values: dict[tuple[int, int], dict[Monomial, object]]) -> dict[int, object]:
        out = {}
        for (i, j), elt in values.items():
            for mono, c in elt.items():
                if not c:
                    continue
                k = self.slot.get((i, j, mono))
                if k is None:
                    raise StructuralError(f"value {c}*{mono} at a^{self.n}_{{{i},{j}}} outside Hom basis")
                out[k] = c
        return out


@lru_cache(maxsize=None)
def cochain_space(T: int, field: Field, n: int) -> CochainSpace:
    return CochainSpace(algebra_make(T, field), n)


class Cochain:
    """An element of Hom(Q^n, A_T), stored as generator values and as coordinates."""

    def __init__(self, algebra: Algebra, n: int, coordinates: dict[int, object]):
        self.algebra = algebra
        self.n = n
        f = algebra.field
        self.coordinates = {k: f.coerce(c) for k, c in coordinates.items() if f.coerce(c)}

    @property
    def space(self) -> CochainSpace:
        return cochain_space(self.algebra.T, self.algebra.field, self.n)

    @classmethod
    def from_values(cls, algebra: Algebra, n: int, values) -> "Cochain":
        """``values`` maps (i, j) to an AlgebraElement or a raw monomial dict."""
        raw = {k: (v.terms if isinstance(v, AlgebraElement) else v) for k, v in values.items()}
        sp = cochain_space(algebra.T, algebra.field, n)
        return cls(algebra, n, sp.coordinates(raw))

    @classmethod
    def from_terms(cls, algebra: Algebra, n: int, terms) -> "Cochain":
        """Build from (coef, kind, l, i, j) tuples using the defining values (i taken mod 4)."""
        A = algebra
        t = n % 4
        vals: dict = {}
        for c, kind, l, i, j in terms:
            if not 0 <= j <= n:
                raise ValueError(f"position {j} out of range for degree {n}")
            r = A.monomial(i % NV, "X" if kind == "beta" else "Y", 4 * l + t)
            if r is None:
                continue
            d = vals.setdefault((i % NV, j), {})
            d[r[1]] = A.field.normalize(d.get(r[1], 0) + r[0] * A.field.coerce(c))
        return cls.from_values(A, n, vals)

    def values(self) -> dict[tuple[int, int], AlgebraElement]:
        sp = self.space
        out: dict = {}
        for k, c in self.coordinates.items():
            b = sp.basis[k]
            out.setdefault((b.i, b.j), {})[sp.value_of(b)] = c
        return {key: AlgebraElement(self.algebra, v) for key, v in out.items()}

    def value(self, i: int, j: int) -> AlgebraElement:
        return self.values().get((i % NV, j), AlgebraElement(self.algebra, {}))

    def compose(self, m: BimoduleMap) -> "Cochain":
        """The cochain ``self ∘ m`` of degree ``m.source``."""
        if m.target != self.n:
            raise ValueError(f"cochain of degree {self.n} cannot follow a map into Q^{m.target}")
        A = self.algebra
        f = A.field
        vals = {(k[0], k[1]): v.terms for k, v in self.values().items()}
        out: dict = {}
        for g, img in m.images.items():
            acc: dict = {}
            for (p, h, q), c in img.items():
                for mono, cv in vals.get((h.i, h.j), {}).items():
                    r = A.mul3(p, mono, q)
                    if r is None:
                        continue
                    acc[r[1]] = f.normalize(acc.get(r[1], 0) + r[0] * c * cv)
            if acc:
                out[(g.i, g.j)] = acc
        return Cochain.from_values(A, m.source, out)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        v = dict(self.coordinates)
        linalg.axpy(self.algebra.field, v, 1, other.coordinates)
        return Cochain(self.algebra, self.n, v)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        v = dict(self.coordinates)
        linalg.axpy(self.algebra.field, v, -1, other.coordinates)
        return Cochain(self.algebra, self.n, v)

    def scaled(self, c) -> "Cochain":
        return Cochain(self.algebra, self.n, linalg.scale(self.algebra.field, self.algebra.field.coerce(c), self.coordinates))

    def _check(self, other):
        if other.algebra != self.algebra or other.n != self.n:
            raise ValueError("cochains of different degree or algebra")

    def is_zero(self) -> bool:
        return not self.coordinates

    def __eq__(self, other):
        return isinstance(other, Cochain) and self.algebra == other.algebra and self.n == other.n \
            and self.coordinates == other.coordinates

    def __hash__(self):
        return hash((self.n, frozenset(self.coordinates.items())))

    def __repr__(self):
        sp = self.space
        if not self.coordinates:
            return f"Cochain(n={self.n}, 0)"
        parts = [f"{c}*{sp.basis[k]}" for k, c in sorted(self.coordinates.items())]
        return f"Cochain(n={self.n}, " + " + ".join(parts) + ")"


def basis_cochain(algebra: Algebra, b: CochainBasisElement) -> Cochain:
    sp = cochain_space(algebra.T, algebra.field, b.n)
    return Cochain(algebra, b.n, {sp.index[b]: 1})


# --- matrices of Hom(∂^n, A) --------------------------------------------------------

@dataclass
class HomMatrix:
    """ψ -> ψ∘∂^n from degree n-1 to degree n cochains; ``rows[k]`` is the image of source basis k."""

    n: int
    rows: list[dict[int, object]]
    source: list[CochainBasisElement]
    target: list[CochainBasisElement]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.source), len(self.target)

    def to_dense(self, field: Field) -> list[list]:
        out = [[field.zero] * len(self.target) for _ in self.source]
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                out[r][c] = v
        return out


def _hom_matrix(A: Algebra, n: int) -> HomMatrix:
    f = A.field
    src = cochain_space(A.T, f, n - 1)
    tgt = cochain_space(A.T, f, n)
    d = differential(A.T, n, f)
    preimage: dict[Gen, list] = {}
    for g, img in d.images.items():
        for (p, h, q), c in img.items():
            preimage.setdefault(h, []).append((g, p, q, c))
    rows = []
    for b in src.basis:
        v = src.value_of(b)
        row: dict = {}
        for g, p, q, c in preimage.get(Gen(n - 1, b.i, b.j), ()):
            r = A.mul3(p, v, q)
            if r is None:
                continue
            k = tgt.slot.get((g.i, g.j, r[1]))
            if k is None:
                raise StructuralError(f"{b}∘∂^{n} hits {r[1]} at {g}, outside the Hom basis")
            w = f.normalize(row.get(k, 0) + r[0] * c)
            if w:
                row[k] = w
            else:
                row.pop(k, None)
        rows.append(row)
    return HomMatrix(n, rows, src.basis, tgt.basis)


@lru_cache(maxsize=None)
def _cached_hom_matrix(T: int, field: Field, n: int) -> HomMatrix:
    return _hom_matrix(algebra_make(T, field), n)


def hom_matrix(T: int, n: int, field: Field | int = QQ) -> HomMatrix:
    if n < 1:
        raise ValueError("Hom(∂^n, A) is defined for n >= 1")
    return _cached_hom_matrix(T, as_field(field), n)


def coboundary(c: Cochain) -> Cochain:
    """c ∘ ∂^(n+1)."""
    M = hom_matrix(c.algebra.T, c.n + 1, c.algebra.field)
    return Cochain(c.algebra, c.n + 1, linalg.vec_mat(c.algebra.field, c.coordinates, M.rows))


@lru_cache(maxsize=None)
def _rank(T: int, field: Field, n: int) -> int:
    if n < 1:
        return 0
    return linalg.rank(field, hom_matrix(T, n, field).rows)


def hom_rank(T: int, n: int, field: Field | int = QQ) -> int:
    """dim Im Hom(∂^n, A_T) (zero for n = 0)."""
    return _rank(T, as_field(field), n)


class Dims(NamedTuple):
    ker: int  # dim Ker Hom(∂^(n+1))
    im: int   # dim Im Hom(∂^n)
    hh: int


def cochain_dim(T: int, n: int) -> int:
    return sum(len(r) for r in level_ranges(T, n).values()) * NV * (n + 1)


def cohomology_dimensions(T: int, n: int, field: Field | int = QQ) -> Dims:
    f = as_field(field)
    ker = cochain_dim(T, n) - hom_rank(T, n + 1, f)
    im = hom_rank(T, n, f)
    return Dims(ker, im, ker - im)


# --- closed formulas ---------------------------------------------------------------------

def dim_image_formula(T: int, m: int, r: int, divides: bool) -> int:
    """dim Im Hom(∂^(4m+r), A_T) in closed form (requires 4m+r >= 1)."""
    if r not in (0, 1, 2, 3):
        raise ValueError("r must be 0..3")
    if r == 0:
        if m == 0:
            raise ValueError("Im Hom(∂^0) is not part of the complex")
        return 16 * T * m
    if r == 1:
        return 2 * T * (8 * m + 3) + 3 * (4 * m + 1)
    if r == 2:
        return 8 * T * (2 * m + 1) + (4 * (3 * m + 2) if divides else 3 * (4 * m + 3))
    return 2 * T * (8 * m + 7)


def dim_kernel_formula(T: int, m: int, r: int, divides: bool) -> int:
    """dim Ker Hom(∂^(4m+r), A_T) in closed form (requires 4m+r >= 1)."""
    if r not in (0, 1, 2, 3):
        raise ValueError("r must be 0..3")
    if r == 0:
        if m == 0:
            raise ValueError("Ker Hom(∂^0) is not part of the complex")
        return 16 * T * m
    if r == 1:
        return 2 * T * (8 * m + 1) + 4 * m + 1
    if r == 2:
        return 8 * T * (2 * m + 1) + (4 * (5 * m + 2) if divides else 20 * m + 7)
    return 2 * T * (8 * m + 5) + 4 * (4 * m + 3)


def dim_hh_formula(T: int, m: int, r: int, divides: bool) -> int:
    if r not in (0, 1, 2, 3):
        raise ValueError("r must be 0..3")
    if r == 0:
        return 2 * T + 4 * m + 1
    if r == 1:
        return 2 * T + 8 * m + 5 if divides else 2 * T + 4 * (2 * m + 1)
    if r == 2:
        return 2 * T + 4 * (m + 1) if divides else 2 * T + 4 * m + 3
    return 2 * T


def closed_formula_dims(T: int, m: int, r: int, divides: bool) -> Dims:
    """Closed-form (ker, im, hh) for degree n = 4m+r, aligned with :func:`cohomology_dimensions`.

    ``im`` is dim Im Hom(∂^n) (0 for n = 0), ``ker`` is dim Ker Hom(∂^(n+1)).
    """
    if r not in (0, 1, 2, 3):
        raise ValueError("r must be 0..3")
    n = 4 * m + r
    im = 0 if n == 0 else dim_image_formula(T, m, r, divides)
    m1, r1 = divmod(n + 1, 4)
    ker = dim_kernel_formula(T, m1, r1, divides)
    return Dims(ker, im, dim_hh_formula(T, m, r, divides))


def formula_for_degree(T: int, n: int, field: Field | int = QQ) -> Dims:
    m, r = divmod(n, 4)
    return closed_formula_dims(T, m, r, divides_two_t_plus_one(as_field(field), T))


# --- HH^0 and the centre --------------------------------------------------------------------

def hh0_basis(T: int, field: Field | int = QQ) -> list[Cochain]:
    """A basis of Ker Hom(∂^1, A_T) = HH^0(A_T)."""
    f = as_field(field)
    A = algebra_make(T, f)
    return [Cochain(A, 0, v) for v in linalg.left_nullspace(f, hom_matrix(T, 1, f).rows)]


def center_element(c: Cochain) -> AlgebraElement:
    """φ -> φ(Σ_i e_i ⊗ e_i)."""
    if c.n != 0:
        raise ValueError("only degree-0 cochains correspond to central elements")
    out = AlgebraElement(c.algebra, {})
    for i in range(NV):
        out = out + c.value(i, 0)
    return out


def verify_center(T: int, field: Field | int = QQ) -> Report:
    """Centre dimension/presentation and the isomorphism HH^0(A_T) -> Z(A_T)."""
    f = as_field(field)
    A = algebra_make(T, f)
    Z = compute_center(A)
    rep = Report("center", data={"T": T, "char": f.characteristic, "dim_center": Z.dimension})
    rep.check(Z.dimension == 2 * T + 1, f"dim Z = {Z.dimension}, expected {2 * T + 1}")
    rep.check(Z.matches_presentation, "centre does not match K[X,Y]/(X^(T+1), XY, Y^(T+1))")
    images = [center_element(c) for c in hh0_basis(T, f)]
    rep.data["dim_hh0"] = len(images)
    span = linalg.span(f, [z.vector() for z in Z.basis])
    for z in images:
        rep.check(span.contains(z.vector()), f"{z} is not central")
    rk = linalg.rank(f, [z.vector() for z in images])
    rep.check(rk == len(images) == Z.dimension, f"HH^0 image has rank {rk}, centre has dim {Z.dimension}")
    return rep
