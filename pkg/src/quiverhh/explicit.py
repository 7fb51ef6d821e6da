"""Hand-derived descriptions of Hom(∂, A_T): images of basis cochains and
explicit bases of images, kernels and cohomology.

These tables are independent of :mod:`quiverhh.hochschild` (which derives
everything from the differentials) and serve as its cross-check.  A term is
``(coef, kind, level, i, j)``; vertex subscripts are taken mod 4.
"""
from __future__ import annotations

from . import linalg
from .algebra import NV, algebra_make
from .hochschild import Cochain, cochain_dim, hom_matrix, hom_rank
from .report import Report
from .scalars import QQ, Field, as_field, divides_two_t_plus_one

EVEN = (0, 2)


def b(l, i, j, c=1):
    return (c, "beta", l, i % NV, j)


def g(l, i, j, c=1):
    return (c, "gamma", l, i % NV, j)


def vsum(maker, l, j):
    return [maker(l, i, j) for i in range(NV)]


# --- images of single basis cochains under ψ -> ψ∘∂^(n+1) -----------------------------------

def image_map_formula(T: int, n: int, kind: str, l: int, i: int, j: int):
    """Terms of kind^{n,l}_{i,j} ∘ ∂^(n+1) in degree n+1, or None outside the tabulated cases."""
    m, r = divmod(n, 4)
    ev = i % 2 == 0
    if r == 1:
        if l == 0 and kind == "beta":
            if ev and j <= 2 * m - 1:
                return [b(T, i, j + 1), b(T, i - 1, j + 1)]
            if not ev and j <= 2 * m:
                return [b(0, i, j), b(0, i - 1, j)]
            if (ev and j == 2 * m) or (not ev and j == 2 * m + 1):
                k = 2 * m + 1
                return [b(T, i, k, T + 1), b(T, i + 1, k, T), b(T, i + 2, k, T), b(T, i + 3, k, T + 1)]
            if ev:
                return [b(0, i, j + 1), b(0, i - 1, j + 1)]
            return [b(T, i, j), b(T, i - 1, j)]
        if l == 0 and kind == "gamma":
            if ev and j <= 2 * m:
                return [g(0, i, j), g(0, i - 1, j)]
            if not ev and j <= 2 * m - 1:
                return [g(T, i, j + 1), g(T, i - 1, j + 1)]
            if (ev and j == 2 * m + 1) or (not ev and j == 2 * m):
                k = 2 * m + 1
                return [g(T, i, k, T + 1), g(T, i + 1, k, T), g(T, i + 2, k, T), g(T, i + 3, k, T + 1)]
            if ev:
                return [g(T, i, j), g(T, i - 1, j)]
            return [g(0, i, j + 1), g(0, i - 1, j + 1)]
        mk = b if kind == "beta" else g
        low = j <= 2 * m
        if kind == "beta":
            if ev == low:
                return []
            return [mk(l, i, j), mk(l, i - 1, j)] if low else [mk(l, i, j + 1), mk(l, i - 1, j + 1)]
        if ev != low:
            return []
        return [mk(l, i, j), mk(l, i - 1, j)] if low else [mk(l, i, j + 1), mk(l, i - 1, j + 1)]
    if r == 2:
        if l == T:
            return []
        if kind == "beta":
            if j <= 2 * m:
                return [b(l, i, j)] if ev else [b(l, i - 1, j, -1)]
            if j == 2 * m + 1:
                return [b(l, i, 2 * m + 1), b(l, i - 1, 2 * m + 2, -1)] if ev else \
                    [b(l, i, 2 * m + 2), b(l, i - 1, 2 * m + 1, -1)]
            return [b(l, i - 1, j + 1, -1)] if ev else [b(l, i, j + 1)]
        if j <= 2 * m:
            return [g(l, i - 1, j, -1)] if ev else [g(l, i, j)]
        if j == 2 * m + 1:
            return [g(l, i, 2 * m + 2), g(l, i - 1, 2 * m + 1, -1)] if ev else \
                [g(l, i, 2 * m + 1), g(l, i - 1, 2 * m + 2, -1)]
        return [g(l, i, j + 1)] if ev else [g(l, i - 1, j + 1, -1)]
    if r == 3:
        # γ has the opposite vertex parity to β here
        mk = b if kind == "beta" else g
        hit = ev if kind == "gamma" else not ev
        if j <= 2 * m + 1:
            return [mk(l + 1, i, j), mk(l + 1, i - 1, j)] if hit else []
        return [] if hit else [mk(l + 1, i, j + 1), mk(l + 1, i - 1, j + 1)]
    # r == 0
    if l == 0:
        P, Q = (b, g) if ev else (g, b)
        if j <= 2 * m - 1:
            return [P(0, i, j), Q(0, i - 1, j, -1), Q(T, i, j + 1), P(T, i - 1, j + 1, -1)]
        if j == 2 * m:
            return [P(0, i, 2 * m), Q(0, i - 1, 2 * m, -1), Q(0, i, 2 * m + 1), P(0, i - 1, 2 * m + 1, -1)]
        return [P(T, i, j), Q(T, i - 1, j, -1), Q(0, i, j + 1), P(0, i - 1, j + 1, -1)]
    if kind == "beta":
        if j <= 2 * m - 1:
            return [b(l, i, j)] if ev else [b(l, i - 1, j, -1)]
        if j == 2 * m:
            return [b(l, i, 2 * m), b(l, i - 1, 2 * m + 1, -1)] if ev else \
                [b(l, i, 2 * m + 1), b(l, i - 1, 2 * m, -1)]
        return [b(l, i - 1, j + 1, -1)] if ev else [b(l, i, j + 1)]
    if j <= 2 * m - 1:
        return [g(l, i - 1, j, -1)] if ev else [g(l, i, j)]
    if j == 2 * m:
        return [g(l, i, 2 * m + 1), g(l, i - 1, 2 * m, -1)] if ev else \
            [g(l, i, 2 * m), g(l, i - 1, 2 * m + 1, -1)]
    return [g(l, i, j + 1)] if ev else [g(l, i - 1, j + 1, -1)]


# --- explicit bases ---------------------------------------------------------------------

def image_basis_list(T: int, n: int, divides: bool) -> list[list]:
    """Basis of Im Hom(∂^n, A_T) inside degree-n cochains (n >= 1)."""
    m, r = divmod(n, 4)
    out: list[list] = []
    if r == 0:
        m -= 1  # n = 4m+4
        if T == 0:
            return []
        for l in range(1, T + 1):
            for i in EVEN:
                for j in range(0, 2 * m + 2):
                    out += [[g(l, i, j), g(l, i - 1, j)], [b(l, i + 1, j), b(l, i, j)]]
                for k in range(2 * m + 3, 4 * m + 5):
                    out += [[b(l, i, k), b(l, i - 1, k)], [g(l, i + 1, k), g(l, i, k)]]
        return out
    if r == 1:
        if T == 0:
            for j in range(0, 4 * m + 1):
                out += [[g(0, 1, j), b(0, 0, j, -1), b(0, 1, j + 1), g(0, 0, j + 1, -1)],
                        [b(0, 2, j), g(0, 1, j, -1), g(0, 2, j + 1), b(0, 1, j + 1, -1)],
                        [g(0, 3, j), b(0, 2, j, -1), b(0, 3, j + 1), g(0, 2, j + 1, -1)]]
            return out
        for j in range(0, 2 * m):
            for i in EVEN:
                out.append([g(0, i + 1, j), b(0, i, j, -1), b(T, i + 1, j + 1), g(T, i, j + 1, -1)])
            out.append([b(0, 2, j), g(0, 1, j, -1), g(T, 2, j + 1), b(T, 1, j + 1, -1)])
        for k in range(2 * m + 1, 4 * m + 1):
            for i in EVEN:
                out.append([g(T, i + 1, k), b(T, i, k, -1), b(0, i + 1, k + 1), g(0, i, k + 1, -1)])
            out.append([b(T, 2, k), g(T, 1, k, -1), g(0, 2, k + 1), b(0, 1, k + 1, -1)])
        for i in EVEN:
            out.append([g(0, i + 1, 2 * m), b(0, i, 2 * m, -1), b(0, i + 1, 2 * m + 1), g(0, i, 2 * m + 1, -1)])
        out.append([b(0, 2, 2 * m), g(0, 1, 2 * m, -1), g(0, 2, 2 * m + 1), b(0, 1, 2 * m + 1, -1)])
        for l in range(1, T + 1):
            for i in EVEN:
                for j in range(0, 2 * m):
                    out += [[b(l, i, j)], [g(l, i + 1, j)]]
                for k in range(2 * m + 2, 4 * m + 2):
                    out += [[g(l, i, k)], [b(l, i + 1, k)]]
        for l in range(1, T + 1):
            for i in EVEN:
                out += [[b(l, i + 1, 2 * m + 1), b(l, i, 2 * m, -1)], [g(l, i + 1, 2 * m), g(l, i, 2 * m + 1, -1)]]
            out += [[b(l, 2, 2 * m), b(l, 1, 2 * m + 1, -1)], [g(l, 2, 2 * m + 1), g(l, 1, 2 * m, -1)]]
        return out
    if r == 2:
        if T == 0:
            for i in range(3):
                for j in range(0, 4 * m + 3):
                    out.append([b(0, i + 1, j), b(0, i, j)])
            return out
        for l in range(0, T):
            for i in EVEN:
                for j in range(0, 2 * m + 1):
                    out += [[b(l, i + 1, j), b(l, i, j)], [g(l, i, j), g(l, i - 1, j)]]
                for k in range(2 * m + 2, 4 * m + 3):
                    out += [[b(l, i, k), b(l, i - 1, k)], [g(l, i + 1, k), g(l, i, k)]]
        for j in list(range(0, 2 * m + 1)) + list(range(2 * m + 2, 4 * m + 3)):
            out += [[b(T, 1, j), b(T, 0, j)], [b(T, 2, j), b(T, 1, j)], [b(T, 3, j), b(T, 2, j)]]
        k = 2 * m + 1
        if divides:
            out += [[b(T, 0, k), b(T, 2, k, -1)], [b(T, 1, k), b(T, 3, k, -1)]]
        else:
            out += [[b(T, 1, k), b(T, 0, k)], [b(T, 2, k), b(T, 1, k)], [b(T, 3, k), b(T, 2, k)]]
        return out
    # r == 3
    if T == 0:
        return []
    for l in range(0, T):
        for i in EVEN:
            for j in range(0, 2 * m + 1):
                out += [[b(l, i, j)], [g(l, i + 1, j)]]
            for k in range(2 * m + 3, 4 * m + 4):
                out += [[b(l, i + 1, k)], [g(l, i, k)]]
    for l in range(0, T):
        p, q = 2 * m + 1, 2 * m + 2
        out += [[b(l, 1, q), b(l, 0, p, -1)], [b(l, 2, p), b(l, 1, q, -1)], [b(l, 3, q), b(l, 2, p, -1)],
                [g(l, 1, p), g(l, 0, q, -1)], [g(l, 2, q), g(l, 1, p, -1)], [g(l, 3, p), g(l, 2, q, -1)]]
    return out


def kernel_basis_list(T: int, n: int, divides: bool) -> list[list]:
    """Basis of Ker Hom(∂^n, A_T) inside degree-(n-1) cochains (n >= 1)."""
    m, r = divmod(n, 4)
    out: list[list] = []
    if r == 0:
        m -= 1  # n = 4m+4, cochains of degree 4m+3
        if T == 0:
            return []
        for i in EVEN:
            for l in range(0, T):
                for j in range(0, 2 * m + 2):
                    out += [[b(l, i, j)], [g(l, i + 1, j)]]
                for k in range(2 * m + 2, 4 * m + 4):
                    out += [[g(l, i, k)], [b(l, i + 1, k)]]
        return out
    if r == 1:
        out += [vsum(b, 0, j) for j in range(0, 4 * m + 1)]
        if T == 0:
            return out
        for i in EVEN:
            for l in range(1, T + 1):
                for j in range(0, 2 * m):
                    out += [[b(l, i + 1, j), b(l, i, j)], [g(l, i, j), g(l, i - 1, j)]]
                for k in range(2 * m + 1, 4 * m + 1):
                    out += [[g(l, i + 1, k), g(l, i, k)], [b(l, i, k), b(l, i - 1, k)]]
        for l in range(1, T + 1):
            out += [vsum(b, l, 2 * m), vsum(g, l, 2 * m)]
        return out
    if r == 2:
        if T == 0:
            for j in range(0, 4 * m + 1):
                out.append([b(0, 0, j), g(0, 0, j + 1)])
                for i in EVEN:
                    out.append([b(0, i + 1, j + 1), g(0, i, j + 1, -1), g(0, i + 1, j), b(0, i, j, -1)])
                out.append([g(0, 2, j + 1), b(0, 1, j + 1, -1), b(0, 2, j), g(0, 1, j, -1)])
            out += [[g(0, 0, j), b(0, 1, j), g(0, 2, j), b(0, 3, j)] for j in range(0, 2 * m + 2)]
            out += [[b(0, 0, j), g(0, 1, j), b(0, 2, j), g(0, 3, j)] for j in range(2 * m + 1, 4 * m + 2)]
            return out
        for j in range(0, 2 * m):
            out.append([b(0, 0, j), g(T, 0, j + 1)])
            for i in EVEN:
                out.append([g(0, i + 1, j), b(0, i, j, -1), b(T, i + 1, j + 1), g(T, i, j + 1, -1)])
            out.append([b(0, 2, j), g(0, 1, j, -1), g(T, 2, j + 1), b(T, 1, j + 1, -1)])
        for j in range(2 * m + 1, 4 * m + 1):
            out.append([b(T, 0, j), g(0, 0, j + 1)])
            for i in EVEN:
                out.append([g(T, i + 1, j), b(T, i, j, -1), b(0, i + 1, j + 1), g(0, i, j + 1, -1)])
            out.append([b(T, 2, j), g(T, 1, j, -1), g(0, 2, j + 1), b(0, 1, j + 1, -1)])
        out.append([b(0, 0, 2 * m), g(0, 0, 2 * m + 1)])
        for i in EVEN:
            out.append([g(0, i + 1, 2 * m), b(0, i, 2 * m, -1), b(0, i + 1, 2 * m + 1), g(0, i, 2 * m + 1, -1)])
        out.append([b(0, 2, 2 * m), g(0, 1, 2 * m, -1), g(0, 2, 2 * m + 1), b(0, 1, 2 * m + 1, -1)])
        out += [[g(T, 0, j), b(T, 1, j), g(T, 2, j), b(T, 3, j)] for j in range(0, 2 * m + 1)]
        out += [[b(T, 0, k), g(T, 1, k), b(T, 2, k), g(T, 3, k)] for k in range(2 * m + 1, 4 * m + 2)]
        for l in range(1, T + 1):
            for i in EVEN:
                for j in range(0, 2 * m + 1):
                    out += [[b(l, i, j)], [g(l, i + 1, j)]]
                for k in range(2 * m + 1, 4 * m + 2):
                    out += [[g(l, i, k)], [b(l, i + 1, k)]]
        k = 2 * m + 1
        if divides:
            out += [[g(0, 0, k), g(0, 2, k)], [b(0, 1, k), b(0, 3, k)]]
        else:
            out += [[g(0, 0, k), b(0, 1, k), g(0, 2, k), b(0, 3, k)]]
        return out
    # r == 3: cochains of degree 4m+2
    if T == 0:
        return [[b(0, i, j)] for i in range(NV) for j in range(0, 4 * m + 3)]
    for i in EVEN:
        for l in range(0, T):
            for j in range(0, 2 * m + 1):
                out += [[b(l, i + 1, j), b(l, i, j)], [g(l, i, j), g(l, i - 1, j)]]
            for k in range(2 * m + 2, 4 * m + 3):
                out += [[g(l, i + 1, k), g(l, i, k)], [b(l, i, k), b(l, i - 1, k)]]
    for l in range(0, T):
        out += [vsum(b, l, 2 * m + 1), vsum(g, l, 2 * m + 1)]
    out += [[b(T, i, j)] for i in range(NV) for j in range(0, 4 * m + 3)]
    return out


def hh_basis_list(T: int, n: int, divides: bool) -> list[list]:
    """Cocycles whose classes form a basis of HH^n(A_T)."""
    m, r = divmod(n, 4)
    out: list[list] = []
    if T == 0:
        if r == 0:
            return [vsum(b, 0, j) for j in range(0, 4 * m + 1)]
        if r == 1:
            out += [[b(0, 0, j), g(0, 0, j + 1)] for j in range(0, 4 * m + 1)]
            out += [[g(0, 0, j), b(0, 1, j), g(0, 2, j), b(0, 3, j)] for j in range(0, 2 * m + 2)]
            out += [[b(0, 0, j), g(0, 1, j), b(0, 2, j), g(0, 3, j)] for j in range(2 * m + 1, 4 * m + 2)]
            return out
        if r == 2:
            return [[b(0, 0, j)] for j in range(0, 4 * m + 3)]
        return []
    if r == 0:
        out += [vsum(b, 0, j) for j in range(0, 4 * m + 1)]
        for l in range(1, T + 1):
            out += [vsum(b, l, 2 * m), vsum(g, l, 2 * m)]
        return out
    if r == 1:
        out += [[b(0, 0, j), g(T, 0, j + 1)] for j in range(0, 2 * m)]
        out += [[b(T, 0, j), g(0, 0, j + 1)] for j in range(2 * m + 1, 4 * m + 1)]
        out.append([b(0, 0, 2 * m), g(0, 0, 2 * m + 1)])
        out += [[g(T, 0, j), b(T, 1, j), g(T, 2, j), b(T, 3, j)] for j in range(0, 2 * m + 1)]
        out += [[b(T, 0, j), g(T, 1, j), b(T, 2, j), g(T, 3, j)] for j in range(2 * m + 1, 4 * m + 2)]
        for l in range(1, T + 1):
            out += [[b(l, 0, 2 * m)], [g(l, 0, 2 * m + 1)]]
        k = 2 * m + 1
        if divides:
            out += [[g(0, 0, k), g(0, 2, k)], [b(0, 1, k), b(0, 3, k)]]
        else:
            out += [[g(0, 0, k), b(0, 1, k), g(0, 2, k), b(0, 3, k)]]
        return out
    if r == 2:
        for l in range(0, T):
            out += [vsum(b, l, 2 * m + 1), vsum(g, l, 2 * m + 1)]
        out += [[b(T, 0, j)] for j in list(range(0, 2 * m + 1)) + list(range(2 * m + 2, 4 * m + 3))]
        out += [[b(T, 0, 2 * m + 1)], [b(T, 1, 2 * m + 1)]] if divides else [[b(T, 0, 2 * m + 1)]]
        return out
    for l in range(0, T):
        out += [[b(l, 0, 2 * m + 1)], [g(l, 0, 2 * m + 2)]]
    return out


def describe(terms) -> str:
    parts = []
    for c, kind, l, i, j in terms:
        sym = "β" if kind == "beta" else "γ"
        parts.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{sym}[{l};{i},{j}]")
    return "".join(parts).lstrip("+")


# --- verification -----------------------------------------------------------------------

def verify_image_maps(T: int, n: int, field: Field | int = QQ) -> Report:
    """Compare every row of Hom(∂^(n+1)) with the tabulated image of its basis cochain."""
    f = as_field(field)
    A = algebra_make(T, f)
    M = hom_matrix(T, n + 1, f)
    rep = Report("image_maps", data={"T": T, "n": n, "char": f.characteristic})
    for k, bel in enumerate(M.source):
        terms = image_map_formula(T, n, bel.kind, bel.l, bel.i, bel.j)
        if terms is None:
            continue
        expected = Cochain.from_terms(A, n + 1, terms)
        if expected.coordinates != M.rows[k]:
            got = Cochain(A, n + 1, M.rows[k])
            rep.fail(f"{bel}∘∂^{n + 1}: table {expected} vs computed {got}")
    return rep


def _in_kernel(f, vec, rows_next) -> bool:
    return not linalg.vec_mat(f, vec, rows_next)


def verify_explicit_bases(T: int, n: int, field: Field | int = QQ) -> Report:
    """Check the explicit bases of Im Hom(∂^n), Ker Hom(∂^n) and HH^n against the computation."""
    f = as_field(field)
    A = algebra_make(T, f)
    div = divides_two_t_plus_one(f, T)
    rep = Report("explicit_bases", data={"T": T, "n": n, "char": f.characteristic, "divides": div})

    def cochains(lst, deg):
        return [(describe(t), Cochain.from_terms(A, deg, t).coordinates) for t in lst]

    if n >= 1:
        M = hom_matrix(T, n, f)
        im_span = linalg.span(f, M.rows)
        lst = cochains(image_basis_list(T, n, div), n)
        for name, v in lst:
            rep.check(bool(v) and im_span.contains(v), f"image n={n}: {name} not in Im Hom(∂^{n})")
        r = linalg.rank(f, [v for _, v in lst])
        rep.check(r == len(lst), f"image n={n}: list dependent (rank {r} of {len(lst)})")
        rep.check(len(lst) == im_span.rank, f"image n={n}: {len(lst)} elements vs dim {im_span.rank}")
        rep.data["image"] = (len(lst), im_span.rank)

        lst = cochains(kernel_basis_list(T, n, div), n - 1)
        for name, v in lst:
            rep.check(bool(v) and _in_kernel(f, v, M.rows), f"kernel n={n}: {name} not in Ker Hom(∂^{n})")
        r = linalg.rank(f, [v for _, v in lst])
        kdim = cochain_dim(T, n - 1) - im_span.rank
        rep.check(r == len(lst), f"kernel n={n}: list dependent (rank {r} of {len(lst)})")
        rep.check(len(lst) == kdim, f"kernel n={n}: {len(lst)} elements vs dim {kdim}")
        rep.data["kernel"] = (len(lst), kdim)

    nxt = hom_matrix(T, n + 1, f).rows
    lst = cochains(hh_basis_list(T, n, div), n)
    for name, v in lst:
        rep.check(bool(v) and _in_kernel(f, v, nxt), f"HH^{n}: {name} is not a cocycle")
    ech = linalg.span(f, hom_matrix(T, n, f).rows) if n >= 1 else linalg.Echelon(f)
    im = ech.rank
    for _, v in lst:
        ech.add(v)
    hh = cochain_dim(T, n) - hom_rank(T, n + 1, f) - hom_rank(T, n, f)
    rep.check(ech.rank - im == len(lst), f"HH^{n}: list dependent modulo coboundaries")
    rep.check(len(lst) == hh, f"HH^{n}: {len(lst)} elements vs dim {hh}")
    rep.data["hh"] = (len(lst), hh)
    return rep
