"""Sparse exact linear algebra over the rationals.

Rows are dicts ``{column: int}``.  Elimination is fraction-free: a row is
reduced by ``row <- p * row - row[c] * pivot_row`` and then divided by the
gcd of its entries, so integers stay small and no ``Fraction`` arithmetic is
needed until back substitution.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping


def integer_row(row: Mapping) -> dict:
    """Scale a rational row to coprime integers (zero entries dropped)."""
    entries = {c: Fraction(v) for c, v in row.items() if v != 0}
    if not entries:
        return {}
    den = lcm(*(v.denominator for v in entries.values()))
    out = {c: int(v * den) for c, v in entries.items()}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (1, 0):
        row = {c: v // g for c, v in row.items()}
    return row


class Echelon:
    """Incrementally built row-echelon basis; ``rows[pivot]`` has ``row[pivot] > 0``."""

    def __init__(self):
        self.rows: dict = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Mapping) -> dict:
        row = integer_row(row)
        rows = self.rows
        while row:
            c = min(row)
            piv = rows.get(c)
            if piv is None:
                break
            a, b = piv[c], row[c]
            out = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                nv = out.get(k, 0) - b * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            row = _primitive(out) if out else {}
        return row

    def add(self, row: Mapping) -> bool:
        """Insert ``row``; returns whether it was independent of the basis."""
        row = self.reduce(row)
        if not row:
            return False
        self.rows[min(row)] = row
        return True

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)

    def nullspace(self, ncols: int) -> list:
        """Basis of ``{x : R x = 0}`` as primitive integer dicts.

        One vector per free column ``f`` (``x_f = 1``, other free entries 0),
        solved by back substitution; ordered by ``f``.
        """
        pivots = sorted(self.rows, reverse=True)
        free = [c for c in range(ncols) if c not in self.rows]
        basis = []
        for f in free:
            x = {f: Fraction(1)}
            for p in pivots:
                if p > f:
                    continue
                row = self.rows[p]
                acc = Fraction(0)
                for c, v in row.items():
                    if c != p:
                        xc = x.get(c)
                        if xc:
                            acc += v * xc
                if acc:
                    x[p] = -acc / row[p]
            basis.append(integer_row(x))
        return basis


def rank(rows: Iterable[Mapping]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: Iterable[Mapping], ncols: int) -> list:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.nullspace(ncols)


def dot(row: Mapping, vec: Mapping):
    if len(row) > len(vec):
        row, vec = vec, row
    return sum(v * vec.get(c, 0) for c, v in row.items())
