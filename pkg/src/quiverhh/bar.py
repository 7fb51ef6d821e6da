"""Hochschild cohomology from the bar complex reduced relative to the vertex subalgebra.

With E = span{e_0, ..., e_3} and r = rad A_T, the n-cochains are the
E-E-bimodule maps r^{⊗_E n} -> A_T: one value in e_o A e_t for every chain
(m_1, ..., m_n) of radical monomials with matching vertices.  The
differential is the usual Hochschild one,

    (δφ)(a_1..a_{n+1}) = a_1 φ(a_2..) + Σ (-1)^k φ(..a_k a_{k+1}..) + (-1)^{n+1} φ(..a_n) a_{n+1}.

Nothing here uses the projective resolution, so it is an independent check.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from . import linalg
from .algebra import NV, Algebra, Monomial, algebra_make
from .scalars import QQ, Field, as_field

# (T, max degree) pairs the oracle accepts
SUPPORTED = {0: 4, 1: 2}
DEFAULT_BUDGET = 12_000


class BudgetExceeded(RuntimeError):
    """The requested bar computation is outside the supported range."""


Chain = tuple[int, tuple[Monomial, ...]]  # (start vertex, monomials)


def _end(chain: Chain) -> int:
    start, ms = chain
    return ms[-1].target if ms else start


class ReducedBarComplex:
    def __init__(self, T: int, field: Field | int = QQ):
        self.algebra = algebra_make(T, field)
        A = self.algebra
        self.radical = [m for m in A.basis if m.length > 0]
        self.starting: dict[int, list[Monomial]] = {i: [] for i in range(NV)}
        self.ending: dict[int, list[Monomial]] = {i: [] for i in range(NV)}
        for m in self.radical:
            self.starting[m.vertex].append(m)
            self.ending[m.target].append(m)
        # every way of writing a radical monomial as ± p·q with p, q in the radical
        self.splittings: dict[Monomial, list[tuple[Monomial, Monomial, int]]] = {m: [] for m in self.radical}
        for p in self.radical:
            for q in self.starting[p.target]:
                r = A.mul_monomials(p, q)
                if r is not None:
                    self.splittings[r[1]].append((p, q, r[0]))
        self._chains: dict[int, list[Chain]] = {0: [(i, ()) for i in range(NV)]}
        self._index: dict[int, dict] = {}

    def chains(self, n: int) -> list[Chain]:
        if n not in self._chains:
            out = []
            for start, ms in self.chains(n - 1):
                for m in self.starting[_end((start, ms))]:
                    out.append((start, ms + (m,)))
            self._chains[n] = out
        return self._chains[n]

    def index(self, n: int) -> dict[tuple[Chain, Monomial], int]:
        """Coordinates of C^n: a basis monomial value for each chain."""
        if n not in self._index:
            A = self.algebra
            idx: dict = {}
            for ch in self.chains(n):
                for v in A.between(ch[0], _end(ch)):
                    idx[(ch, v)] = len(idx)
            self._index[n] = idx
        return self._index[n]

    def cochain_dim(self, n: int) -> int:
        return len(self.index(n))

    def differential_rows(self, n: int) -> list[dict[int, object]]:
        """Rows of δ^n : C^n -> C^(n+1), one per basis cochain of C^n."""
        A = self.algebra
        f = A.field
        target = self.index(n + 1)
        rows = []
        for (ch, v) in self.index(n):
            start, ms = ch
            end = _end(ch)
            row: dict = {}

            def put(new_chain, sign, mono):
                key = target[(new_chain, mono)]
                val = f.normalize(row.get(key, 0) + sign)
                if val:
                    row[key] = val
                else:
                    row.pop(key, None)

            for a in self.ending[start]:
                r = A.mul_monomials(a, v)
                if r is not None:
                    put((a.vertex, (a,) + ms), r[0], r[1])
            for k, m in enumerate(ms, start=1):
                s = -1 if k % 2 else 1
                for p, q, sg in self.splittings[m]:
                    put((start, ms[:k - 1] + (p, q) + ms[k:]), s * sg, v)
            s = -1 if (n + 1) % 2 else 1
            for a in self.starting[end]:
                r = A.mul_monomials(v, a)
                if r is not None:
                    put((start, ms + (a,)), s * r[0], r[1])
            rows.append(row)
        return rows

    def weight_blocks(self, n: int) -> Counter:
        """Sizes of C^n split by weight len(value) - Σ len(m_k); δ preserves the weight."""
        return Counter(v.length - sum(m.length for m in ch[1]) for ch, v in self.index(n))

    @lru_cache(maxsize=None)
    def rank(self, n: int) -> int:
        if n < 0:
            return 0
        return linalg.rank(self.algebra.field, self.differential_rows(n))

    def hh_dimension(self, n: int) -> int:
        return self.cochain_dim(n) - self.rank(n) - self.rank(n - 1)


@lru_cache(maxsize=None)
def _complex(T: int, field: Field) -> ReducedBarComplex:
    return ReducedBarComplex(T, field)


def _check_budget(bc: ReducedBarComplex, n: int, budget: int) -> None:
    biggest = max(bc.weight_blocks(n + 1).values())
    if biggest > budget:
        raise BudgetExceeded(f"degree-{n + 1} weight block of size {biggest} exceeds budget {budget}")


def bar_hh_dimension(T: int, n: int, field: Field | int = QQ, *, budget: int = DEFAULT_BUDGET) -> int:
    """dim HH^n(A_T) from the reduced bar complex."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if T not in SUPPORTED or n > SUPPORTED[T]:
        raise BudgetExceeded(f"bar oracle supports (T=0, n<=4) and (T=1, n<=2); got T={T}, n={n}")
    bc = _complex(T, as_field(field))
    _check_budget(bc, n, budget)
    return bc.hh_dimension(n)


# --- counting cochains without enumerating them --------------------------------------------

def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(NV)) for j in range(NV)] for i in range(NV)]


def radical_count_matrix(T: int) -> list[list[int]]:
    """R[i][j] = number of radical basis monomials from e_i to e_j."""
    top = 4 * T + 2
    R = [[0] * NV for _ in range(NV)]
    for i in range(NV):
        for k in range(1, top + 1):
            R[i][(i + k) % NV] += 1
        for k in range(1, top):
            R[i][(i + k) % NV] += 1
    return R


def corner_dim_matrix(T: int) -> list[list[int]]:
    """D[i][j] = dim e_i A_T e_j."""
    D = [[0] * NV for _ in range(NV)]
    for i in range(NV):
        D[i][i] += 1
        for k in range(1, 4 * T + 3):
            D[i][(i + k) % NV] += 1
        for k in range(1, 4 * T + 2):
            D[i][(i + k) % NV] += 1
    return D


def bar_cochain_count(T: int, n: int) -> int:
    """dim C^n = Σ_{o,t} (R^n)[o][t] · dim e_o A e_t."""
    P = [[int(i == j) for j in range(NV)] for i in range(NV)]
    R = radical_count_matrix(T)
    for _ in range(n):
        P = _matmul(P, R)
    D = corner_dim_matrix(T)
    return sum(P[o][t] * D[o][t] for o in range(NV) for t in range(NV))
