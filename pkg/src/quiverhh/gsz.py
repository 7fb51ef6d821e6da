"""Generator sets G^n for A_T/rad and the minimal right resolution they induce.

The elements g^n_{i,j} (0 <= i <= 3, 0 <= j <= n) live in the free path
algebra and are built by a two-step recursion alternating between odd and
even n.  P^n = sum over g in G^n of t(g)A_T, and d^n is left multiplication
by the coefficients r_y of the (unique) factorization g = sum_y y r_y over
G^(n-1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algebra import NV, AlgebraElement, FreeElement, FreePath, algebra_make
from .report import Report
from .scalars import QQ, Field, as_field


class FactorizationError(ArithmeticError):
    """A generator does not factor uniquely over the previous generator set."""


@dataclass(frozen=True)
class GszElement:
    n: int
    i: int
    j: int
    value: FreeElement

    @property
    def origin(self) -> int:
        return self.i

    @property
    def terminus(self) -> int:
        return (self.i + self.n) % NV


def _letters(i: int) -> tuple[str, str]:
    """(P, Q): the letter leading the j = 0 row of odd degree, and the other one."""
    return ("X", "Y") if i % 2 == 0 else ("Y", "X")


@lru_cache(maxsize=None)
def _gsz_rows(T: int, n: int) -> tuple[tuple[FreeElement, ...], ...]:
    if n == 0:
        return tuple((FreeElement.vertex(i),) for i in range(NV))
    prev = _gsz_rows(T, n - 1)
    h = 4 * T + 1
    rows = []
    for i in range(NV):
        g = prev[i]
        P, Q = _letters(i)
        row = []
        if n % 2 == 1:
            m = (n - 1) // 2
            for j in range(n + 1):
                if j == 0:
                    v = g[0].times_power(P, 1)
                elif j <= m:
                    v = g[j - 1].times_power(Q, h) + g[j].times_power(P, 1)
                elif j <= 2 * m:
                    v = g[j - 1].times_power(Q, 1) + g[j].times_power(P, h)
                else:
                    v = g[2 * m].times_power(Q, 1)
                row.append(v)
        else:
            m = n // 2
            for j in range(n + 1):
                if j == 0:
                    v = g[0].times_power(Q, 1)
                elif j <= m - 1:
                    v = g[j - 1].times_power(P, h) + g[j].times_power(Q, 1)
                elif j == m:
                    v = g[m - 1].times_power(P, h) + g[m].times_power(Q, h)
                elif j <= 2 * m - 1:
                    v = g[j - 1].times_power(P, 1) + g[j].times_power(Q, h)
                else:
                    v = g[2 * m - 1].times_power(P, 1)
                row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


def gsz_generate(T: int, n: int) -> list[GszElement]:
    """All g^n_{i,j}, ordered by (i, j)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    rows = _gsz_rows(T, n)
    return [GszElement(n, i, j, rows[i][j]) for i in range(NV) for j in range(n + 1)]


def gsz_element(T: int, n: int, i: int, j: int) -> FreeElement:
    return _gsz_rows(T, n)[i % NV][j]


# --- condition (b): factor over G^(n-1) -------------------------------------------

@dataclass
class RightDifferential:
    """d^n : P^n -> P^(n-1); ``free[(i, j)][(r, s)]`` is r_y in KΓ, ``matrix`` its image in A_T."""

    T: int
    n: int
    free: dict[tuple[int, int], dict[tuple[int, int], FreeElement]]
    matrix: dict[tuple[int, int], dict[tuple[int, int], AlgebraElement]]


def factor_over_previous(T: int, n: int, i: int, j: int) -> dict[tuple[int, int], FreeElement]:
    """Unique r_y with g^n_{i,j} = sum_y y r_y, found by stripping prefixes of paths."""
    x = gsz_element(T, n, i, j)
    prev = _gsz_rows(T, n - 1)[i]
    unknowns: list[tuple[int, str]] = []
    seen = set()
    for s, y in enumerate(prev):
        by_len: dict[int, set[str]] = {}
        for q in y.terms:
            by_len.setdefault(q.length, set()).add(q.letters)
        for p in x.terms:
            for L, words in by_len.items():
                if L <= p.length and p.letters[:L] in words:
                    key = (s, p.letters[L:])
                    if key not in seen:
                        seen.add(key)
                        unknowns.append(key)
    paths: dict[FreePath, int] = {}

    def vec(e: FreeElement) -> dict:
        out = {}
        for pth, c in e.terms.items():
            k = paths.setdefault(pth, len(paths))
            out[k] = Fraction(c)
        return out

    ech = linalg.Echelon(QQ, track=True)
    for s, suffix in unknowns:
        y = prev[s]
        ech.add(vec(y * FreeElement.path((i + n - 1) % NV, suffix)))
    if ech.null_combinations:
        raise FactorizationError(f"T={T} n={n} g_{i},{j}: factorization is not unique")
    sol = ech.solve(vec(x))
    if sol is None:
        raise FactorizationError(f"T={T} n={n} g_{i},{j}: no factorization over G^{n - 1}")
    out: dict[tuple[int, int], dict[FreePath, int]] = {}
    for k, c in sol.items():
        if c.denominator != 1:
            raise FactorizationError(f"T={T} n={n} g_{i},{j}: non-integral coefficient {c}")
        s, suffix = unknowns[k]
        out.setdefault((i, s), {})[FreePath((i + n - 1) % NV, suffix)] = int(c)
    return {key: FreeElement(t) for key, t in sorted(out.items())}


@lru_cache(maxsize=None)
def _free_differential(T: int, n: int):
    return {(i, j): factor_over_previous(T, n, i, j) for i in range(NV) for j in range(n + 1)}


def extract_right_differential(T: int, n: int, field: Field | int = QQ) -> RightDifferential:
    if n < 1:
        raise ValueError("d^n is defined for n >= 1")
    A = algebra_make(T, as_field(field))
    free = _free_differential(T, n)
    matrix = {}
    for key, row in free.items():
        entries = {}
        for col, r in row.items():
            a = A.normal_form(r)
            if a:
                entries[col] = a
        matrix[key] = entries
    return RightDifferential(T, n, free, matrix)


# --- the right resolution as scalar matrices --------------------------------------

class _Coords:
    """Coordinates of P^n = sum_{g in G^n} t(g) A."""

    def __init__(self, A, n: int):
        self.n = n
        self.index: dict[tuple[tuple[int, int], object], int] = {}
        self.keys = []
        for i in range(NV):
            for j in range(n + 1):
                for m in A.from_vertex(i + n):
                    self.index[((i, j), m)] = len(self.keys)
                    self.keys.append(((i, j), m))

    def __len__(self):
        return len(self.keys)


def right_matrix(T: int, n: int, field: Field | int = QQ) -> tuple[list[dict], _Coords, _Coords]:
    """Rows: images of the basis of P^n under d^n, in coordinates of P^(n-1)."""
    A = algebra_make(T, as_field(field))
    f = A.field
    d = extract_right_differential(T, n, f)
    src, tgt = _Coords(A, n), _Coords(A, n - 1)
    rows = []
    for (gen, m) in src.keys:
        vec: dict = {}
        for col, r in d.matrix[gen].items():
            for rm, c in r.terms.items():
                prod = A.mul_monomials(rm, m)
                if prod is None:
                    continue
                sgn, pm = prod
                k = tgt.index[(col, pm)]
                v = f.normalize(vec.get(k, 0) + sgn * c)
                if v:
                    vec[k] = v
                else:
                    vec.pop(k, None)
        rows.append(vec)
    return rows, src, tgt


def verify_right_resolution(T: int, N: int, field: Field | int = QQ) -> Report:
    """Complex property, exactness for 1 <= n <= N-1, coker d^1 = A/rad and minimality."""
    if N < 1:
        raise ValueError("N must be >= 1")
    f = as_field(field)
    A = algebra_make(T, f)
    rep = Report("right_resolution", data={"T": T, "N": N, "char": f.characteristic})
    mats, ranks, dims = {}, {}, {}
    for n in range(1, N + 1):
        rows, src, tgt = right_matrix(T, n, f)
        mats[n] = rows
        ranks[n] = linalg.rank(f, rows)
        dims[n] = len(src)
        dims[n - 1] = len(tgt)
        d = extract_right_differential(T, n, f)
        for gen, row in d.matrix.items():
            for col, r in row.items():
                rep.check(r.in_radical(), f"T={T} n={n} generator {gen}: entry at {col} not in rad")
    for n in range(1, N):
        comp = [linalg.vec_mat(f, r, mats[n]) for r in mats[n + 1]]
        bad = [k for k, v in enumerate(comp) if v]
        rep.check(not bad, f"T={T} n={n}: d^{n} d^{n + 1} != 0 on {len(bad)} basis vectors")
        rep.check(dims[n] - ranks[n] == ranks[n + 1],
                  f"T={T} n={n}: not exact (dim ker {dims[n] - ranks[n]} vs rank {ranks[n + 1]})")
    # coker d^1 is A/rad, one copy of K per vertex
    rows1, _, tgt0 = right_matrix(T, 1, f)
    im = linalg.span(f, rows1)
    for (gen, m), k in tgt0.index.items():
        inside = im.contains({k: f.one})
        if m.length > 0:
            rep.check(inside, f"T={T}: radical element {m} of P^0 not in im d^1")
        else:
            rep.check(not inside, f"T={T}: vertex e_{gen[0]} lies in im d^1")
    rep.data.update(ranks={n: ranks[n] for n in sorted(ranks)}, dims={n: dims[n] for n in sorted(dims)})
    return rep


def check_koszul_linearity(n_max: int, T: int = 0) -> bool:
    """Every path of every g^n_{i,j} has length exactly n (n <= n_max)."""
    for n in range(n_max + 1):
        for g in gsz_generate(T, n):
            if g.value.lengths() != {n}:
                return False
    return True
