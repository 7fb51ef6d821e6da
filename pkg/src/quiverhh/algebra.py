"""The algebras A_T = KΓ/<xy, x^(4T+2)+y^(4T+2), yx> on the cyclic quiver with four vertices.

Γ has vertices 0..3 and two arrows a_i, b_i from i to i+1 (mod 4).  With
x = sum a_i and y = sum b_i every path is e_i x^j, e_i y^j or a mixed word,
so A_T has the monomial basis

    e_i,  e_i x^j (1 <= j <= 4T+2),  e_i y^l (1 <= l <= 4T+1)

and y^(4T+2) is rewritten to -x^(4T+2).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import NamedTuple

from . import linalg
from .scalars import Field, QQ, Scalar, as_field

NV = 4
LETTERS = ("E", "X", "Y")


class ContextMismatchError(ValueError):
    """Elements of different algebras (T or field) were combined."""


class Monomial(NamedTuple):
    vertex: int
    letter: str  # "E", "X" or "Y"
    exp: int

    @property
    def length(self) -> int:
        return self.exp

    @property
    def target(self) -> int:
        return (self.vertex + self.exp) % NV

    def __str__(self):
        if self.letter == "E":
            return f"e{self.vertex}"
        p = "" if self.exp == 1 else f"^{self.exp}"
        return f"e{self.vertex}{self.letter.lower()}{p}"


def vertex_monomial(i: int) -> Monomial:
    return Monomial(i % NV, "E", 0)


# --- free path algebra -------------------------------------------------------

class FreePath(NamedTuple):
    """A path in Γ: start vertex and a word over {A, B} (A = a-arrow, B = b-arrow)."""

    start: int
    letters: str

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def end(self) -> int:
        return (self.start + len(self.letters)) % NV


class FreeElement:
    """Integer combination of paths in KΓ (the relations never need other scalars)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[FreePath, int] = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def vertex(cls, i: int) -> "FreeElement":
        return cls({FreePath(i % NV, ""): 1})

    @classmethod
    def path(cls, start: int, letters: str) -> "FreeElement":
        return cls({FreePath(start % NV, letters): 1})

    def times_power(self, letter: str, k: int) -> "FreeElement":
        """Right multiplication by x^k (letter "X") or y^k (letter "Y")."""
        w = ("A" if letter == "X" else "B") * k
        return FreeElement({FreePath(p.start, p.letters + w): c for p, c in self.terms.items()})

    def __add__(self, other: "FreeElement") -> "FreeElement":
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, 0) + c
        return FreeElement(t)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "FreeElement":
        return FreeElement({p: c * v for p, v in self.terms.items()})

    def __mul__(self, other: "FreeElement") -> "FreeElement":
        t: dict[FreePath, int] = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                if p.end == q.start:
                    r = FreePath(p.start, p.letters + q.letters)
                    t[r] = t.get(r, 0) + c * d
        return FreeElement(t)

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def lengths(self) -> set[int]:
        return {p.length for p in self.terms}

    def starts(self) -> set[int]:
        return {p.start for p in self.terms}

    def ends(self) -> set[int]:
        return {p.end for p in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for p, c in sorted(self.terms.items()):
            w = p.letters or "e"
            parts.append(f"{c:+d}*{p.start}:{w}")
        return " ".join(parts)


# --- the quotient algebra ------------------------------------------------------

class Algebra:
    """A_T over a field, with its ordered monomial basis."""

    def __init__(self, T: int, field: Field | int = QQ):
        if T < 0:
            raise ValueError("T must be non-negative")
        self.T = T
        self.field = as_field(field)
        self.top = 4 * T + 2
        basis = []
        for i in range(NV):
            basis.append(Monomial(i, "E", 0))
            basis.extend(Monomial(i, "X", j) for j in range(1, self.top + 1))
            basis.extend(Monomial(i, "Y", l) for l in range(1, self.top))
        self.basis: list[Monomial] = basis
        self.index: dict[Monomial, int] = {m: k for k, m in enumerate(basis)}
        self._between: dict[tuple[int, int], list[Monomial]] = {}
        for m in basis:
            self._between.setdefault((m.vertex, m.target), []).append(m)

    def __repr__(self):
        return f"Algebra(T={self.T}, field={self.field!r})"

    def __eq__(self, other):
        return isinstance(other, Algebra) and (self.T, self.field) == (other.T, other.field)

    def __hash__(self):
        return hash((self.T, self.field))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def between(self, i: int, j: int) -> list[Monomial]:
        """Basis monomials of e_i A e_j."""
        return self._between.get((i % NV, j % NV), [])

    def from_vertex(self, i: int) -> list[Monomial]:
        return [m for m in self.basis if m.vertex == i % NV]

    # monomial arithmetic (signs are +-1 integers) ---------------------------
    def monomial(self, vertex: int, letter: str, exp: int):
        """Normal form of e_vertex x^exp / y^exp as ``(sign, Monomial)`` or None for zero."""
        vertex %= NV
        if exp == 0 or letter == "E":
            return 1, Monomial(vertex, "E", 0)
        if exp > self.top:
            return None
        if letter == "Y" and exp == self.top:
            return -1, Monomial(vertex, "X", exp)
        return 1, Monomial(vertex, letter, exp)

    def mul_monomials(self, a: Monomial, b: Monomial):
        if a.target != b.vertex:
            return None
        if a.letter == "E":
            return 1, b
        if b.letter == "E":
            return 1, a
        if a.letter != b.letter:
            # xy = yx = 0; x^top = -y^top so the top X monomial also dies against y
            return None
        return self.monomial(a.vertex, a.letter, a.exp + b.exp)

    def mul3(self, p: Monomial, m: Monomial, q: Monomial):
        r = self.mul_monomials(p, m)
        if r is None:
            return None
        s1, pm = r
        r = self.mul_monomials(pm, q)
        if r is None:
            return None
        return s1 * r[0], r[1]

    # elements -------------------------------------------------------------------
    def element(self, terms) -> "AlgebraElement":
        return AlgebraElement(self, terms)

    def e(self, i: int) -> "AlgebraElement":
        return self.element({vertex_monomial(i): 1})

    def one(self) -> "AlgebraElement":
        return self.element({vertex_monomial(i): 1 for i in range(NV)})

    def power(self, letter: str, k: int, vertex: int | None = None) -> "AlgebraElement":
        """e_vertex x^k (or y^k); with ``vertex=None`` the sum over all vertices."""
        verts = range(NV) if vertex is None else [vertex]
        out: dict = {}
        for i in verts:
            r = self.monomial(i, letter, k)
            if r is not None:
                out[r[1]] = out.get(r[1], 0) + r[0]
        return self.element(out)

    def x(self, k: int = 1, vertex: int | None = None):
        return self.power("X", k, vertex)

    def y(self, k: int = 1, vertex: int | None = None):
        return self.power("Y", k, vertex)

    def normal_form(self, e: FreeElement) -> "AlgebraElement":
        if not isinstance(e, FreeElement):
            raise ContextMismatchError(f"expected a FreeElement, got {type(e).__name__}")
        out: dict = {}
        for p, c in e.terms.items():
            w = p.letters
            if not w:
                r = (1, vertex_monomial(p.start))
            elif w.count(w[0]) != len(w):
                continue  # contains ab or ba
            else:
                r = self.monomial(p.start, "X" if w[0] == "A" else "Y", len(w))
            if r is None:
                continue
            out[r[1]] = out.get(r[1], 0) + r[0] * c
        return self.element(out)

    def embed(self, a: "AlgebraElement") -> FreeElement:
        """A lift of ``a`` to KΓ (integer coefficients required)."""
        t = {}
        for m, c in a.terms.items():
            w = "" if m.letter == "E" else ("A" if m.letter == "X" else "B") * m.exp
            t[FreePath(m.vertex, w)] = int(c)
        return FreeElement(t)


class AlgebraElement:
    """A finite combination of basis monomials with raw field coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms=None):
        self.algebra = algebra
        f = algebra.field
        t = {}
        for m, c in (terms or {}).items():
            if m not in algebra.index:
                raise ValueError(f"{m} is not a basis monomial of {algebra}")
            v = f.coerce(c)
            if v:
                t[m] = v
        self.terms: dict[Monomial, object] = t

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"cannot combine AlgebraElement with {type(other).__name__}")
        if other.algebra != self.algebra:
            raise ContextMismatchError(f"{self.algebra} vs {other.algebra}")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        f = self.algebra.field
        for m, c in other.terms.items():
            t[m] = f.add(t.get(m, 0), c)
        return AlgebraElement(self.algebra, t)

    def __neg__(self):
        f = self.algebra.field
        return AlgebraElement(self.algebra, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        A = self.algebra
        f = A.field
        if isinstance(other, (int, Scalar)) or not hasattr(other, "terms"):
            a = f.coerce(other)
            return AlgebraElement(A, {m: f.mul(a, c) for m, c in self.terms.items()})
        self._check(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                r = A.mul_monomials(m1, m2)
                if r is not None:
                    s, m = r
                    t[m] = f.add(t.get(m, 0), s * c1 * c2)
        return AlgebraElement(A, t)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, AlgebraElement) and other.algebra == self.algebra and other.terms == self.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def in_radical(self) -> bool:
        return all(m.length > 0 for m in self.terms)

    def coefficient(self, m: Monomial) -> Scalar:
        return Scalar(self.algebra.field, self.terms.get(m, self.algebra.field.zero))

    def vector(self) -> dict[int, object]:
        idx = self.algebra.index
        return {idx[m]: c for m, c in self.terms.items()}

    @classmethod
    def from_vector(cls, algebra: Algebra, v: dict) -> "AlgebraElement":
        return cls(algebra, {algebra.basis[k]: c for k, c in v.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in sorted(self.terms.items(), key=lambda t: self.algebra.index[t[0]]))


@lru_cache(maxsize=None)
def algebra_make(T: int, field: Field | int = QQ) -> Algebra:
    """Cached constructor; algebras are immutable and shared."""
    return Algebra(T, as_field(field))


# --- centre ---------------------------------------------------------------------

@dataclass
class Center:
    algebra: Algebra
    basis: list[AlgebraElement]
    structure_constants: list[list[dict[int, object]]]
    presentation_basis: list[AlgebraElement] = dc_field(default_factory=list)
    matches_presentation: bool = False

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _generators(A: Algebra) -> list[AlgebraElement]:
    gens = [A.e(i) for i in range(NV)]
    gens += [A.x(1, i) for i in range(NV)] + [A.y(1, i) for i in range(NV)]
    return gens


def compute_center(A: Algebra) -> Center:
    """Solve za = az against vertices and arrows; check Z(A_T) = K[X,Y]/(X^(T+1), XY, Y^(T+1)).

    X = sum_i e_i x^4 and Y = sum_i e_i y^4.
    """
    f = A.field
    gens = _generators(A)
    n = A.dim
    rows = []
    for m in A.basis:
        b = A.element({m: 1})
        vec: dict = {}
        for g_idx, g in enumerate(gens):
            comm = b * g - g * b
            for k, c in comm.vector().items():
                vec[g_idx * n + k] = c
        rows.append(vec)
    null = linalg.left_nullspace(f, rows)
    # canonical (reduced) basis of the centre, ordered by leading monomial
    ech = linalg.Echelon(f)
    for v in null:
        ech.add(v)
    basis_vecs = _reduced_basis(f, ech)
    basis = [AlgebraElement.from_vector(A, v) for v in basis_vecs]

    # structure constants: basis[a] * basis[b] = sum_c table[a][b][c] basis[c]
    coord = linalg.Echelon(f, track=True)
    for v in basis_vecs:
        coord.add(v)
    table = []
    for a in basis:
        row = []
        for b in basis:
            sol = coord.solve((a * b).vector())
            if sol is None:
                raise ArithmeticError("centre is not closed under multiplication")
            row.append(sol)
        table.append(row)

    X = A.x(4)
    Y = A.y(4)
    pres = [A.one()] + [_pow(X, k, A) for k in range(1, A.T + 1)] + [_pow(Y, k, A) for k in range(1, A.T + 1)]
    ok = len(basis) == 2 * A.T + 1
    ok = ok and all(coord.solve(z.vector()) is not None for z in pres)
    ok = ok and linalg.rank(f, [z.vector() for z in pres]) == len(pres)
    ok = ok and _pow(X, A.T + 1, A).is_zero() and (X * Y).is_zero() and (Y * X).is_zero()
    ok = ok and _pow(Y, A.T + 1, A).is_zero()
    return Center(A, basis, table, pres, ok)


def _pow(z: AlgebraElement, k: int, A: Algebra) -> AlgebraElement:
    out = A.one()
    for _ in range(k):
        out = out * z
    return out


def _reduced_basis(f: Field, ech: linalg.Echelon) -> list[dict]:
    """Fully reduced row echelon form of an :class:`Echelon`, ordered by pivot."""
    cols = sorted(ech.pivots)
    rows = {c: dict(ech.pivots[c][0]) for c in cols}
    for c in reversed(cols):
        for c2 in cols:
            if c2 < c and c in rows[c2]:
                linalg.axpy(f, rows[c2], f.neg(rows[c2][c]), rows[c])
    return [rows[c] for c in cols]
