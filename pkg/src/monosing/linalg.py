"""Exact sparse linear algebra over Q.

Vectors are ``dict[int, Fraction]`` with no zero values stored.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

SparseVector = dict[int, Fraction]


def _axpy(target: SparseVector, coeff: Fraction, v: SparseVector) -> None:
    """target -= coeff * v, in place."""
    for k, val in v.items():
        new = target.get(k, 0) - coeff * val
        if new:
            target[k] = new
        else:
            target.pop(k, None)


class Echelon:
    """Incrementally maintained reduced basis of a subspace."""

    def __init__(self) -> None:
        self.pivots: dict[int, SparseVector] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Iterable | SparseVector) -> SparseVector:
        w = {k: Fraction(x) for k, x in dict(v).items() if x}
        # pivot rows are fully reduced, so one pass clears every pivot column
        for k in [k for k in w if k in self.pivots]:
            c = w.get(k)
            if c:
                _axpy(w, c, self.pivots[k])
        return w

    def add(self, v) -> bool:
        """Insert v; returns False when it was already in the span."""
        w = self.reduce(v)
        if not w:
            return False
        k = min(w)
        c = w[k]
        w = {j: x / c for j, x in w.items()}
        for p in self.pivots.values():
            if k in p:
                _axpy(p, p[k], w)
        self.pivots[k] = w
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)


def rank(vectors: Iterable[SparseVector]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def nullspace(rows: Iterable[SparseVector], ncols: int) -> list[SparseVector]:
    """Basis of {x : row . x = 0 for every row}, as sparse vectors."""
    e = Echelon()
    for r in rows:
        e.add(r)
    pivots = e.pivots
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec: SparseVector = {f: Fraction(1)}
        for k, p in pivots.items():
            if f in p:
                vec[k] = -p[f]
        basis.append(vec)
    return basis


def apply(columns: list[SparseVector], v: SparseVector) -> SparseVector:
    """Matrix (given by its sparse columns) times a sparse vector."""
    out: SparseVector = {}
    for j, x in v.items():
        for i, y in columns[j].items():
            new = out.get(i, 0) + x * y
            if new:
                out[i] = new
            else:
                out.pop(i, None)
    return out


def compose_columns(second: list[SparseVector], first: list[SparseVector]) -> list[SparseVector]:
    return [apply(second, col) for col in first]
