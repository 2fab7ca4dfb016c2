"""Exact sparse row echelon form over the rationals.

Vectors are dicts mapping sortable keys to numbers; zero entries are never
stored.  The pivot of a row is its smallest key.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vec = dict


def clean(v: Mapping) -> Vec:
    return {k: c for k, c in v.items() if c}


def axpy(y: Vec, a, x: Mapping) -> None:
    """y += a*x in place, dropping zeros."""
    for k, c in x.items():
        s = y.get(k, 0) + a * c
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally maintained echelon basis (rows normalised to pivot 1)."""

    def __init__(self) -> None:
        self.rows: dict[Hashable, Vec] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping) -> Vec:
        r: Vec = {k: Fraction(c) for k, c in v.items() if c}
        # eliminate pivots in increasing order; each step only adds larger keys
        while r:
            hits = [k for k in r if k in self.rows]
            if not hits:
                break
            p = min(hits)
            axpy(r, -r[p], self.rows[p])
        return r

    def add(self, v: Mapping) -> bool:
        """Insert v; True when it was independent of the current rows."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        lead = r[p]
        self.rows[p] = {k: c / lead for k, c in r.items()}
        return True

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)


def rank(vectors: Iterable[Mapping]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)
