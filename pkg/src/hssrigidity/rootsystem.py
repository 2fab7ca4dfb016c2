"""Finite root systems of types A-E with Bourbaki node numbering.

Roots are plain integer tuples of coefficients over the simple roots; node
labels are 1-based everywhere in the public API (``coeffs[j - 1]`` is the
coefficient of the j-th simple root).

Numbering table (Bourbaki):

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n        (alpha_n short)
    C_n   1 - 2 - ... - (n-1) <= n        (alpha_n long)
    D_n   1 - 2 - ... - (n-2) - (n-1),  (n-2) - n
    E_6   1 - 3 - 4 - 5 - 6,  2 - 4
    E_7   1 - 3 - 4 - 5 - 6 - 7,  2 - 4

The Cartan matrix is stored as ``cartan[i][j] = <alpha_j, alpha_i^vee>`` and
every pairing goes through :meth:`RootSystem.pairing`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Root = tuple[int, ...]


class InvalidType(ValueError):
    """Unsupported (type, rank) pair."""


def make_root(coeffs: Iterable[int]) -> Root:
    """Validate a coefficient vector; mixed signs are rejected."""
    r = tuple(int(c) for c in coeffs)
    if any(c > 0 for c in r) and any(c < 0 for c in r):
        raise ValueError(f"mixed-sign coefficient vector {r}")
    return r


def height(r: Sequence[int]) -> int:
    return sum(r)


def is_positive(r: Sequence[int]) -> bool:
    return all(c >= 0 for c in r) and any(r)


def neg(r: Root) -> Root:
    return tuple(-c for c in r)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def simple(rank: int, j: int) -> Root:
    return tuple(1 if i == j - 1 else 0 for i in range(rank))


def _edges(type_label: str, rank: int) -> list[tuple[int, int]]:
    if type_label in "ABC":
        return [(i, i + 1) for i in range(1, rank)]
    if type_label == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if type_label == "E":
        chain = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: rank - 2]
        return chain + [(2, 4)]
    raise InvalidType(type_label)


def cartan_matrix(type_label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    _check_type(type_label, rank)
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in _edges(type_label, rank):
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1
    if type_label == "B":
        # <alpha_{n-1}, alpha_n^vee> = -2, alpha_n short
        c[rank - 1][rank - 2] = -2
    elif type_label == "C":
        c[rank - 2][rank - 1] = -2
    return tuple(tuple(row) for row in c)


def _check_type(type_label: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7),
    }.get(type_label, False)
    if not ok:
        raise InvalidType(f"unsupported root system {type_label}{rank}")


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def simple(self, j: int) -> Root:
        return simple(self.rank, j)

    @cached_property
    def positive_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return self.positive_set | {neg(r) for r in self.positive_roots}

    @cached_property
    def index(self) -> dict[Root, int]:
        """Position of each positive root in the canonical order."""
        return {r: i for i, r in enumerate(self.positive_roots)}

    @cached_property
    def half_lengths(self) -> tuple[Fraction, ...]:
        """d_i = (alpha_i, alpha_i)/2, normalised so that the shortest is 1."""
        return _symmetrizer(self.cartan)

    def is_root(self, coeffs: Sequence[int]) -> bool:
        return tuple(coeffs) in self.root_set

    def pairing(self, a: Sequence[int], j: int) -> int:
        """<a, alpha_j^vee>."""
        row = self.cartan[j - 1]
        return sum(c * row[i] for i, c in enumerate(a))

    def reflect(self, a: Sequence[int], j: int) -> Root:
        p = self.pairing(a, j)
        out = list(a)
        out[j - 1] -= p
        return tuple(out)

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        """Invariant form with (alpha_i, alpha_j) = d_i * cartan[i][j]."""
        d = self.half_lengths
        total = Fraction(0)
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.cartan[i]
            s = sum(row[j] * y for j, y in enumerate(b) if y)
            total += x * d[i] * s
        return total

    def coroot_pairing(self, mu: Sequence, alpha: Root) -> Fraction:
        """<mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha)."""
        return 2 * self.inner(mu, alpha) / self.inner(alpha, alpha)

    @cached_property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {j: set() for j in range(1, self.rank + 1)}
        for i in range(self.rank):
            for j in range(self.rank):
                if i != j and self.cartan[i][j]:
                    nbrs[i + 1].add(j + 1)
        return {j: frozenset(s) for j, s in nbrs.items()}

    def edge_multiplicity(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]

    def string_down(self, beta: Root, alpha: Root) -> int:
        """max{p : beta - p*alpha is a root}."""
        p = 0
        cur = sub(beta, alpha)
        while cur in self.root_set:
            p += 1
            cur = sub(cur, alpha)
        return p

    def supported_on(self, nodes: Iterable[int]) -> tuple[Root, ...]:
        """Positive roots whose support lies in ``nodes``."""
        allowed = {j - 1 for j in nodes}
        return tuple(
            r for r in self.positive_roots
            if all(i in allowed for i, c in enumerate(r) if c)
        )


def _symmetrizer(cartan) -> tuple[Fraction, ...]:
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] and d[j] is None:
                    # d_i c_ij = d_j c_ji
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
    low = min(d)
    return tuple(x / low for x in d)


def _enumerate_positive(cartan) -> tuple[Root, ...]:
    n = len(cartan)
    simples = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    found = set(simples)
    layer = list(simples)
    out = list(simples)
    while layer:
        nxt = set()
        for a in layer:
            for j in range(n):
                if a == simples[j]:
                    continue
                p = 0
                cur = list(a)
                while True:
                    cur[j] -= 1
                    if tuple(cur) in found:
                        p += 1
                    else:
                        break
                pair = sum(c * cartan[j][i] for i, c in enumerate(a))
                if p - pair > 0:
                    b = list(a)
                    b[j] += 1
                    nxt.add(tuple(b))
        nxt -= found
        found |= nxt
        layer = sorted(nxt)
        out.extend(layer)
    return tuple(sorted(out, key=lambda r: (sum(r), tuple(-c for c in r))))


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Cartan data and positive roots, ordered by height then by descending
    coefficient vector (so the simple roots come out as alpha_1, alpha_2, ...).

    E_8, F_4 and G_2 are rejected: none has a Hermitian symmetric quotient.
    """
    type_label = type_label.upper()
    _check_type(type_label, rank)
    cartan = cartan_matrix(type_label, rank)
    return RootSystem(type_label, rank, cartan, _enumerate_positive(cartan))
