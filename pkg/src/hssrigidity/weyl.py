"""Weyl group elements as reduced words, inversion sets, and the minimal
coset representatives W^P of a cominuscule parabolic."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonDominantWeight, NonReducedWord, NotCominuscule
from .rootsystem import Root, RootSystem, is_positive


@dataclass(frozen=True)
class WeylElt:
    word: tuple[int, ...]
    inversions: frozenset[Root]

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class CosetRep:
    elt: WeylElt
    gamma: int
    # inversion set viewed as a subset of Delta(m), canonical order
    ideal: tuple[Root, ...] = field(compare=False)

    @property
    def word(self) -> tuple[int, ...]:
        return self.elt.word

    @property
    def length(self) -> int:
        return self.elt.length


def apply(rs: RootSystem, w: WeylElt | Sequence[int], alpha: Root) -> Root:
    """w(alpha), applying the word right to left."""
    word = w.word if isinstance(w, WeylElt) else tuple(w)
    for j in reversed(word):
        alpha = rs.reflect(alpha, j)
    return alpha


def apply_inverse(rs: RootSystem, w: WeylElt | Sequence[int], alpha: Root) -> Root:
    word = w.word if isinstance(w, WeylElt) else tuple(w)
    for j in word:
        alpha = rs.reflect(alpha, j)
    return alpha


def inversion_set(rs: RootSystem, word: Sequence[int]) -> frozenset[Root]:
    """{s_{i1}...s_{i(t-1)}(alpha_{it})}; raises NonReducedWord unless every
    prefix root is positive and new."""
    seen: set[Root] = set()
    prefix: list[int] = []
    for j in word:
        r = apply(rs, prefix, rs.simple(j))
        if not is_positive(r) or r in seen:
            raise NonReducedWord(f"word {tuple(word)} is not reduced at letter {j}")
        seen.add(r)
        prefix.append(j)
    return frozenset(seen)


def make_elt(rs: RootSystem, word: Sequence[int]) -> WeylElt:
    return WeylElt(tuple(word), inversion_set(rs, word))


def m_roots(rs: RootSystem, gamma: int) -> tuple[Root, ...]:
    """Delta(m): positive roots with coefficient 1 at gamma."""
    return tuple(r for r in rs.positive_roots if r[gamma - 1] == 1)


def is_abelian(rs: RootSystem, roots: Iterable[Root]) -> bool:
    roots = list(roots)
    for i, a in enumerate(roots):
        for b in roots[i:]:
            if rs.is_root(tuple(x + y for x, y in zip(a, b))):
                return False
    return True


def _check_cominuscule(rs: RootSystem, gamma: int) -> tuple[Root, ...]:
    if rs.highest_root[gamma - 1] != 1:
        raise NotCominuscule(f"{rs.name} node {gamma} is not cominuscule")
    return m_roots(rs, gamma)


def word_for_ideal(rs: RootSystem, ideal: Iterable[Root]) -> tuple[int, ...]:
    """A reduced word of the element whose inversion set is ``ideal``
    (a lower order ideal of a minuscule poset); smallest index first."""
    target = set(ideal)
    word: list[int] = []
    got: set[Root] = set()
    while got != target:
        for j in range(1, rs.rank + 1):
            r = apply(rs, word, rs.simple(j))
            if r in target and r not in got:
                word.append(j)
                got.add(r)
                break
        else:
            raise ValueError("not an inversion set reachable by simple steps")
    return tuple(word)


def _order_key(rs: RootSystem, roots: Iterable[Root]) -> tuple[Root, ...]:
    idx = rs.index
    return tuple(sorted(roots, key=idx.__getitem__))


def enumerate_wp_bfs(rs: RootSystem, gamma: int) -> list[CosetRep]:
    """W^P by breadth-first search over reduced words; a child appends s_j
    when the new inversion w(alpha_j) is positive and lies in Delta(m)."""
    mset = set(_check_cominuscule(rs, gamma))
    start = WeylElt((), frozenset())
    out = [start]
    seen = {start.inversions}
    layer = [start]
    while layer:
        nxt = []
        for w in layer:
            for j in range(1, rs.rank + 1):
                r = apply(rs, w, rs.simple(j))
                if r not in mset or r in w.inversions:
                    continue
                inv = w.inversions | {r}
                if inv in seen:
                    continue
                seen.add(inv)
                nxt.append(WeylElt(w.word + (j,), inv))
        out.extend(nxt)
        layer = nxt
    return [CosetRep(w, gamma, _order_key(rs, w.inversions)) for w in out]


def poset_leq(a: Root, b: Root) -> bool:
    return all(x <= y for x, y in zip(a, b))


def enumerate_ideals(rs: RootSystem, gamma: int) -> list[frozenset[Root]]:
    """All lower order ideals of (Delta(m), coefficientwise <=), by size."""
    mroots = _check_cominuscule(rs, gamma)
    below = {b: [a for a in mroots if a != b and poset_leq(a, b)] for b in mroots}
    layer = {frozenset()}
    out: list[frozenset[Root]] = [frozenset()]
    while layer:
        nxt = set()
        for ideal in layer:
            for b in mroots:
                if b not in ideal and all(a in ideal for a in below[b]):
                    nxt.add(ideal | {b})
        nxt_sorted = sorted(nxt, key=lambda s: _order_key(rs, s))
        out.extend(nxt_sorted)
        layer = set(nxt_sorted)
    return out


def enumerate_WP(rs: RootSystem, gamma: int) -> list[CosetRep]:
    """Minimal coset representatives grouped by length, cross-checked against
    the order-ideal model; any disagreement raises AssertionError."""
    reps = enumerate_wp_bfs(rs, gamma)
    by_inv = {r.elt.inversions for r in reps}
    ideals = set(enumerate_ideals(rs, gamma))
    if by_inv != ideals or len(reps) != len(ideals):
        raise AssertionError(f"W^P enumerations disagree for {rs.name}, node {gamma}")
    for r in reps:
        if inversion_set(rs, r.word) != r.elt.inversions:
            raise AssertionError(f"word {r.word} does not realise its ideal")
    return reps


def length_profile(reps: Iterable[CosetRep]) -> list[int]:
    counts: dict[int, int] = defaultdict(int)
    for r in reps:
        counts[r.length] += 1
    top = max(counts)
    return [counts[i] for i in range(top + 1)]


def longest_in_parabolic(rs: RootSystem, nodes: Iterable[int]) -> WeylElt:
    nodes = sorted(set(nodes))
    if not nodes:
        raise ValueError("empty node subset")
    word: list[int] = []
    while True:
        for j in nodes:
            if is_positive(apply(rs, word, rs.simple(j))):
                word.append(j)
                break
        else:
            break
    return make_elt(rs, word)


def weyl_dim(rs: RootSystem, levi_roots: Iterable[Root], levi_simples: Iterable[int],
             weight: Sequence) -> int:
    """Weyl dimension formula for a Levi subalgebra.  ``weight`` is a rational
    vector in simple-root coordinates of the ambient root system."""
    levi_roots = list(levi_roots)
    lam = [Fraction(x) for x in weight]
    for j in levi_simples:
        v = rs.coroot_pairing(lam, rs.simple(j))
        if v < 0 or v.denominator != 1:
            raise NonDominantWeight(f"weight {tuple(weight)} fails at node {j}")
    if not levi_roots:
        return 1
    rho = [Fraction(0)] * rs.rank
    for r in levi_roots:
        for i, c in enumerate(r):
            rho[i] += Fraction(c, 2)
    num = Fraction(1)
    den = Fraction(1)
    lam_rho = [a + b for a, b in zip(lam, rho)]
    for r in levi_roots:
        num *= rs.coroot_pairing(lam_rho, r)
        den *= rs.coroot_pairing(rho, r)
    out = num / den
    if out.denominator != 1 or out <= 0:
        raise AssertionError(f"non-integral Weyl dimension {out}")
    return int(out)

