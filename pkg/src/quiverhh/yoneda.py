"""Yoneda products in HH^*(A_T) via liftings along the bimodule resolution.

A degree-d cocycle c : Q^d -> A is lifted to maps f_k : Q^(d+k) -> Q^k with
∂^0 f_0 = c and ∂^(k+1) f_(k+1) = f_k ∂^(d+k+1); the product of a degree-m
class c' with c is c' ∘ f_m.  For T = 0 the liftings of z_j = Σ_i β^{4,0}_{i,j}
are the shift maps σ^k_j, and HH^{4*}(A_0) is a quotient of K[z_0, ..., z_4].
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb

from . import linalg
from .algebra import Algebra, AlgebraElement, algebra_make, vertex_monomial
from .explicit import hh_basis_list
from .hochschild import (Cochain, StructuralError, cohomology_dimensions, coboundary, hom_matrix)
from .report import Report
from .resolution import BimoduleMap, Gen, differential, generators
from .scalars import QQ, Field, as_field

NGEN = 5  # z_0, ..., z_4


# --- liftings -------------------------------------------------------------------------------

@dataclass
class LiftingChain:
    cocycle: Cochain
    maps: list[BimoduleMap] = dc_field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.cocycle.n

    @property
    def steps(self) -> int:
        return len(self.maps) - 1

    def __getitem__(self, k: int) -> BimoduleMap:
        return self.maps[k]

    def verify(self) -> Report:
        """Check ∂^0 f_0 = c and the commuting squares."""
        c = self.cocycle
        A = c.algebra
        rep = Report("lifting_chain", data={"degree": c.n, "steps": self.steps})
        for g, val in self.maps[0].multiplied().items():
            rep.check(val == c.value(g.i, g.j), f"∂^0 f_0 differs from the cocycle at {g}")
        for g in generators(c.n):
            if g not in self.maps[0].images:
                rep.check(c.value(g.i, g.j).is_zero(), f"∂^0 f_0 differs from the cocycle at {g}")
        T, f = A.T, A.field
        for k in range(self.steps):
            lhs = differential(T, k + 1, f).compose(self.maps[k + 1])
            rhs = self.maps[k].compose(differential(T, c.n + k + 1, f))
            rep.check(lhs == rhs, f"square {k} does not commute")
        return rep


def sigma_lifting(j: int, k: int, field: Field | int = QQ) -> BimoduleMap:
    """σ^k_j : Q^(k+4) -> Q^k for A_0, a^{k+4}_{r,s} -> a^k_{r,s-j} when 0 <= s-j <= k."""
    if not 0 <= j < NGEN:
        raise ValueError("j must be in 0..4")
    A = algebra_make(0, field)
    images = {}
    for g in generators(k + 4):
        t = g.j - j
        if 0 <= t <= k:
            h = Gen(k, g.i, t)
            images[g] = {(vertex_monomial(g.i), h, vertex_monomial(h.terminus)): 1}
    return BimoduleMap(A, k + 4, k, images)


def z_cocycle(j: int, field: Field | int = QQ) -> Cochain:
    A = algebra_make(0, field)
    return Cochain.from_terms(A, 4, [(1, "beta", 0, i, j) for i in range(4)])


def sigma_chain(j: int, steps: int, field: Field | int = QQ) -> LiftingChain:
    return LiftingChain(z_cocycle(j, field), [sigma_lifting(j, k, field) for k in range(steps + 1)])


def verify_sigma_liftings(cap: int = 7, field: Field | int = QQ) -> Report:
    """∂^0 σ^0_j = z_j and σ^l_j ∂^(l+5) = ∂^(l+1) σ^(l+1)_j for l <= cap."""
    f = as_field(field)
    rep = Report("sigma_liftings", data={"cap": cap, "char": f.characteristic})
    for j in range(NGEN):
        z = z_cocycle(j, f)
        s0 = sigma_lifting(j, 0, f)
        got = Cochain.from_values(z.algebra, 4, {(g.i, g.j): v for g, v in s0.multiplied().items()})
        rep.check(got == z, f"∂^0 σ^0_{j} is not z_{j}")
        for l in range(cap + 1):
            lhs = sigma_lifting(j, l, f).compose(differential(0, l + 5, f))
            rhs = differential(0, l + 1, f).compose(sigma_lifting(j, l + 1, f))
            rep.check(lhs == rhs, f"lifting identity fails for j={j}, l={l}")
    return rep


def _initial_lift(c: Cochain) -> BimoduleMap:
    A = c.algebra
    images = {}
    for (i, j), val in c.values().items():
        g = Gen(c.n, i, j)
        h = Gen(0, i, 0)
        images[g] = {(vertex_monomial(i), h, mono): coef for mono, coef in val.terms.items()}
    return BimoduleMap(A, c.n, 0, images)


def _lift_step(A: Algebra, d: int, k: int, prev: BimoduleMap) -> BimoduleMap:
    """Solve ∂^(k+1) f = prev ∘ ∂^(d+k+1) for f : Q^(d+k+1) -> Q^(k+1)."""
    f = A.field
    rhs_map = prev.compose(differential(A.T, d + k + 1, f))
    dk = differential(A.T, k + 1, f)
    out = {}
    for g in generators(d + k + 1):
        rhs = rhs_map.image(g)
        if not rhs:
            continue
        index: dict = {}
        unknowns = []
        ech = linalg.Echelon(f, track=True)
        for h in generators(k + 1):
            for p in A.between(g.i, h.i):
                for q in A.between(h.terminus, g.terminus):
                    col: dict = {}
                    for (p2, h2, q2), c2 in dk.image(h).items():
                        left = A.mul_monomials(p, p2)
                        right = A.mul_monomials(q2, q) if left is not None else None
                        if right is None:
                            continue
                        key = index.setdefault((left[1], h2, right[1]), len(index))
                        col[key] = f.normalize(col.get(key, 0) + left[0] * right[0] * c2)
                    unknowns.append((p, h, q))
                    ech.add({k2: v for k2, v in col.items() if v})
        target = {}
        for key, c in rhs.items():
            target[index.setdefault(key, len(index))] = c
        sol = ech.solve(target)
        if sol is None:
            raise StructuralError(f"no lifting at step {k + 1} for generator {g}")
        out[g] = {unknowns[u]: v for u, v in sol.items() if v}
    return BimoduleMap(A, d + k + 1, k + 1, out)


def lift_cocycle(c: Cochain, steps: int) -> LiftingChain:
    """Comparison maps f_0, ..., f_steps for the cocycle ``c``."""
    if not coboundary(c).is_zero():
        raise ValueError("only cocycles can be lifted")
    maps = [_initial_lift(c)]
    for k in range(steps):
        maps.append(_lift_step(c.algebra, c.n, k, maps[-1]))
    return LiftingChain(c, maps)


def yoneda_product(c1: Cochain, chain2: LiftingChain) -> Cochain:
    """c1 × c2 = c1 ∘ f_m with m = deg c1."""
    if c1.algebra != chain2.cocycle.algebra:
        raise ValueError("cochains over different algebras")
    m = c1.n
    if chain2.steps < m:
        raise ValueError(f"lifting chain too short: need {m} steps, have {chain2.steps}")
    return c1.compose(chain2[m])


def unit_cocycle(T: int, field: Field | int = QQ) -> Cochain:
    A = algebra_make(T, field)
    return Cochain.from_terms(A, 0, [(1, "beta", 0, i, 0) for i in range(4)])


def same_class(a: Cochain, b: Cochain) -> bool:
    """a - b is a coboundary."""
    diff = a - b
    if diff.is_zero():
        return True
    if a.n == 0:
        return False
    A = a.algebra
    return linalg.span(A.field, hom_matrix(A.T, a.n, A.field).rows).contains(diff.coordinates)


# --- the ring HH^{4*}(A_0) --------------------------------------------------------------

@dataclass(frozen=True)
class RingPresentation:
    generators: tuple[str, ...] = tuple(f"z{j}" for j in range(NGEN))
    relations: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
        ((0, 2), (1, 1)), ((0, 3), (1, 2)), ((0, 4), (2, 2)),
        ((0, 4), (1, 3)), ((1, 4), (2, 3)), ((2, 4), (3, 3)),
    )

    def relation_strings(self) -> list[str]:
        def mono(p):
            a, b = p
            return f"z{a}^2" if a == b else f"z{a}z{b}"
        return [f"{mono(p)} - {mono(q)}" for p, q in self.relations]

    def hilbert(self, w: int, field: Field | int = QQ) -> int:
        """dim of the degree-w part of K[z_0..z_4]/(relations), by exact rank."""
        f = as_field(field)
        monos = list(itertools.combinations_with_replacement(range(NGEN), w))
        if w < 2:
            return len(monos)
        idx = {m: k for k, m in enumerate(monos)}
        rows = []
        for rest in itertools.combinations_with_replacement(range(NGEN), w - 2):
            for p, q in self.relations:
                a = idx[tuple(sorted(rest + p))]
                b = idx[tuple(sorted(rest + q))]
                if a != b:
                    rows.append({a: 1, b: f.neg(1)})
        return len(monos) - linalg.rank(f, rows)


PRESENTATION = RingPresentation()


def expected_monomial_count(w: int) -> int:
    return comb(w + NGEN - 1, NGEN - 1)


class _Products:
    """Products z_{i_1} × ... × z_{i_w} computed along the σ-liftings, memoized by prefix."""

    def __init__(self, field: Field):
        self.field = field
        self.cache: dict[tuple[int, ...], Cochain] = {}

    def __call__(self, seq: tuple[int, ...]) -> Cochain:
        hit = self.cache.get(seq)
        if hit is not None:
            return hit
        if len(seq) == 1:
            out = z_cocycle(seq[0], self.field)
        else:
            head = self(seq[:-1])
            out = head.compose(sigma_lifting(seq[-1], head.n, self.field))
        self.cache[seq] = out
        return out


def product_formula(w: int, total: int, field: Field | int = QQ) -> Cochain:
    """The map a^{4w}_{r,s} -> e_r if s = total, 0 otherwise."""
    A = algebra_make(0, field)
    return Cochain.from_values(A, 4 * w, {(r, total): {vertex_monomial(r): 1} for r in range(4)}) \
        if 0 <= total <= 4 * w else Cochain(A, 4 * w, {})


def verify_ring_presentation(w_max: int = 4, field: Field | int = QQ, *, solver_pairs: bool = True,
                             associativity_samples: int = 10) -> Report:
    f = as_field(field)
    rep = Report("ring_presentation", data={"w_max": w_max, "char": f.characteristic})
    prod = _Products(f)
    counts, hilbert, dims = {}, {}, {}
    for w in range(1, w_max + 1):
        by_sum: dict[int, Cochain] = {}
        for seq in itertools.product(range(NGEN), repeat=w):
            p = prod(seq)
            s = sum(seq)
            rep.check(p == product_formula(w, s, f), f"product {seq} does not follow the formula")
            rep.check(not p.is_zero(), f"product {seq} is zero")
            if s in by_sum:
                rep.check(by_sum[s] == p, f"products with sum {s} differ at {seq}")
            else:
                by_sum[s] = p
        distinct = set(by_sum.values())
        rep.check(len(distinct) == len(by_sum), f"w={w}: products with different sums coincide")
        counts[w] = len(distinct)
        dims[w] = cohomology_dimensions(0, 4 * w, f).hh
        hilbert[w] = PRESENTATION.hilbert(w, f)
        rep.check(counts[w] == 4 * w + 1 == dims[w], f"w={w}: {counts[w]} products, dim HH^{4 * w} = {dims[w]}")
        rep.check(hilbert[w] == 4 * w + 1, f"w={w}: Hilbert function {hilbert[w]}")
        # the products span HH^{4w}: independent modulo Im Hom(∂^{4w}) (which is zero for T = 0)
        ech = linalg.span(f, hom_matrix(0, 4 * w, f).rows)
        base = ech.rank
        for p in distinct:
            ech.add(p.coordinates)
        rep.check(ech.rank - base == dims[w], f"w={w}: products do not span HH^{4 * w}")
        rep.check(prod((0,) * w) == product_formula(w, 0, f), f"z0^{w} is wrong")
    if w_max >= 2:
        for (a, b), (c, d) in PRESENTATION.relations:
            rep.check(prod((a, b)) == prod((c, d)), f"relation z{a}z{b} - z{c}z{d} does not vanish")
        for a, b in itertools.combinations(range(NGEN), 2):
            rep.check(prod((a, b)) == prod((b, a)), f"z{a} and z{b} do not commute")
    if solver_pairs and w_max >= 2:
        chains = {j: lift_cocycle(z_cocycle(j, f), 8 if w_max >= 3 else 4) for j in range(NGEN)}
        for a, b in itertools.product(range(NGEN), repeat=2):
            got = yoneda_product(z_cocycle(a, f), chains[b])
            rep.check(same_class(got, prod((a, b))), f"solver and σ routes disagree on z{a}×z{b}")
        if w_max >= 3:
            triples = list(itertools.product(range(NGEN), repeat=3))
            step = max(1, len(triples) // max(1, associativity_samples))
            for a, b, c in triples[::step]:
                right = yoneda_product(z_cocycle(b, f), chains[c])
                left = yoneda_product(prod((a, b)), chains[c])
                other = yoneda_product(z_cocycle(a, f), lift_cocycle(right, 4))
                rep.check(same_class(left, other), f"associativity fails on ({a},{b},{c})")
                rep.check(same_class(left, prod((a, b, c))), f"triple product ({a},{b},{c}) differs")
    rep.data.update(counts=counts, hilbert=hilbert, dims=dims, relations=PRESENTATION.relation_strings())
    return rep


def verify_nilpotent_part(cap: int = 2, field: Field | int = QQ) -> Report:
    """Squares of the listed basis classes of HH^n(A_0), n <= cap, n not divisible by 4, are coboundaries."""
    f = as_field(field)
    if f.characteristic == 2:
        raise ValueError("the odd-degree square argument needs char K != 2")
    A = algebra_make(0, f)
    rep = Report("nilpotent_part", data={"cap": cap, "char": f.characteristic, "squares": {}})
    for n in range(1, cap + 1):
        if n % 4 == 0:
            continue
        for terms in hh_basis_list(0, n, False):
            c = Cochain.from_terms(A, n, terms)
            sq = yoneda_product(c, lift_cocycle(c, n))
            zero = sq.is_zero()
            rep.data["squares"][f"{n}:{c}"] = "zero" if zero else "coboundary"
            rep.check(same_class(sq, Cochain(A, 2 * n, {})), f"square of {c} is not a coboundary")
    rep.merge(verify_graded_commutativity(min(cap, 2), f))
    u = unit_cocycle(0, f)
    chain = lift_cocycle(u, 4)
    rep.check(yoneda_product(u, chain) == u, "unit × unit is not the unit")
    z = z_cocycle(2, f)
    rep.check(yoneda_product(z, chain) == z, "z2 × unit is not z2")
    return rep


def verify_graded_commutativity(cap: int = 2, field: Field | int = QQ) -> Report:
    """a × b = (-1)^(|a||b|) b × a modulo coboundaries, over listed basis classes of HH^n(A_0), 1 <= n <= cap."""
    f = as_field(field)
    A = algebra_make(0, f)
    classes = [Cochain.from_terms(A, n, t) for n in range(1, cap + 1) for t in hh_basis_list(0, n, False)]
    classes.append(z_cocycle(1, f))
    chains = {id(c): lift_cocycle(c, max(x.n for x in classes)) for c in classes}
    rep = Report("graded_commutativity", data={"classes": len(classes), "char": f.characteristic})
    for a, b in itertools.combinations_with_replacement(classes, 2):
        ab = yoneda_product(a, chains[id(b)])
        ba = yoneda_product(b, chains[id(a)])
        sign = -1 if (a.n * b.n) % 2 else 1
        rep.check(same_class(ab, ba.scaled(sign)), f"{a} and {b} do not graded-commute")
    return rep
