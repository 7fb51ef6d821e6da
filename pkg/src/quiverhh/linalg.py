"""Sparse exact linear algebra over a :class:`~quiverhh.scalars.Field`.

Vectors are ``dict[int, raw value]`` with no stored zeros.  Matrices are
lists of such row vectors; all subspaces are row spaces.  Pivoting is on
the smallest column index of a row, so results depend only on the order
in which rows are fed.
"""
from __future__ import annotations

from .scalars import Field


def axpy(field: Field, y: dict, a, x: dict) -> None:
    """In place ``y += a * x``."""
    norm = field.normalize
    for k, v in x.items():
        w = norm(y.get(k, 0) + a * v)
        if w:
            y[k] = w
        else:
            y.pop(k, None)


def scale(field: Field, a, x: dict) -> dict:
    if not a:
        return {}
    norm = field.normalize
    return {k: norm(a * v) for k, v in x.items()}


def vec_add(field: Field, x: dict, y: dict) -> dict:
    out = dict(x)
    axpy(field, out, 1, y)
    return out


def vec_mat(field: Field, v: dict, rows: list) -> dict:
    """Row vector ``v`` times the matrix with the given rows."""
    out: dict = {}
    for i, c in v.items():
        axpy(field, out, c, rows[i])
    return out


class Echelon:
    """Incrementally built row-echelon basis of a subspace.

    With ``track=True`` every stored row remembers which combination of the
    inserted rows produced it, which gives solutions and left null spaces.
    """

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.pivots: dict[int, tuple[dict, dict | None]] = {}
        self.null_combinations: list[dict] = []
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict, combo: dict | None = None):
        """Reduce ``vec`` until its leading column has no pivot.

        Returns ``(remainder, combination)``; the remainder is empty iff
        ``vec`` lies in the span.
        """
        f = self.field
        v = dict(vec)
        c = dict(combo) if combo is not None else None
        pivots = self.pivots
        while v:
            col = min(v)
            hit = pivots.get(col)
            if hit is None:
                break
            row, rc = hit
            a = f.neg(v[col])
            axpy(f, v, a, row)
            if c is not None:
                axpy(f, c, a, rc)
        return v, c

    def add(self, vec: dict) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        idx = self._count
        self._count += 1
        combo = {idx: self.field.one} if self.track else None
        v, c = self.reduce(vec, combo)
        if not v:
            if self.track:
                self.null_combinations.append(c)
            return False
        col = min(v)
        inv = self.field.inv(v[col])
        v = scale(self.field, inv, v)
        if c is not None:
            c = scale(self.field, inv, c)
        self.pivots[col] = (v, c)
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def solve(self, rhs: dict):
        """Coefficients ``x`` over inserted rows with ``sum x_k row_k = rhs``, or None."""
        if not self.track:
            raise ValueError("solve needs track=True")
        v, c = self.reduce(rhs, {})
        if v:
            return None
        return {k: self.field.neg(a) for k, a in c.items()}


def rank(field: Field, rows) -> int:
    e = Echelon(field)
    for r in rows:
        if r:
            e.add(r)
    return e.rank


def left_nullspace(field: Field, rows: list) -> list[dict]:
    """Basis of ``{c : sum_k c_k rows[k] = 0}``."""
    e = Echelon(field, track=True)
    for r in rows:
        e.add(r)
    return e.null_combinations


def span(field: Field, rows) -> Echelon:
    e = Echelon(field)
    for r in rows:
        if r:
            e.add(r)
    return e
