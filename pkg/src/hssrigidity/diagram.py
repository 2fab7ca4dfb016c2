"""Marked Dynkin diagrams of Hermitian symmetric spaces and their connected
marked subdiagrams (the smooth Schubert varieties)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import ConsistencyFailure, InvalidSubdiagram, WrongType
from .rootsystem import Root, RootSystem, build_root_system, is_positive
from .weyl import (
    CosetRep, apply, enumerate_WP, is_abelian, length_profile, m_roots,
    word_for_ideal,
)

LINEAR_A = "LinearA"
MIDDLE_A = "MiddleA"
D_TYPE = "DType"
C_TYPE = "CType"
# outside the four classical tags: (B_l, alpha_1) inside an odd quadric and
# the full E_6 / E_7 diagrams
B_TYPE = "BType"
E_TYPE = "EType"


@dataclass(frozen=True)
class MarkedDiagram:
    rs: RootSystem
    gamma: int

    @property
    def hermitian(self) -> bool:
        return self.rs.highest_root[self.gamma - 1] == 1

    @property
    def odd_quadric(self) -> bool:
        # Q^{2n-1} = B_n/P_1; C_2/P_2 is the same space (Q^3)
        t, n = self.rs.type_label, self.rs.rank
        return (t == "B" and self.gamma == 1) or (t == "C" and n == 2 and self.gamma == 2)

    @property
    def adjacency(self):
        return self.rs.adjacency

    @property
    def space_id(self) -> str:
        return f"{self.rs.name}:{self.gamma}"

    @cached_property
    def m_roots(self) -> tuple[Root, ...]:
        return m_roots(self.rs, self.gamma)

    @property
    def dim(self) -> int:
        return len(self.m_roots)

    @cached_property
    def coset_reps(self) -> tuple[CosetRep, ...]:
        return tuple(enumerate_WP(self.rs, self.gamma))

    @cached_property
    def betti(self) -> tuple[int, ...]:
        return tuple(length_profile(self.coset_reps))


@lru_cache(maxsize=None)
def marked(type_label: str, rank: int, gamma: int) -> MarkedDiagram:
    rs = build_root_system(type_label, rank)
    if not 1 <= gamma <= rank:
        raise InvalidSubdiagram(f"node {gamma} outside {rs.name}")
    return MarkedDiagram(rs, gamma)


def catalog(max_rank: int) -> list[MarkedDiagram]:
    """Every cominuscule (type, rank, node) with rank <= max_rank."""
    out = []
    for t in "ABCDE":
        for n in range(1, max_rank + 1):
            try:
                rs = build_root_system(t, n)
            except ValueError:
                continue
            for g in range(1, n + 1):
                if rs.highest_root[g - 1] == 1:
                    out.append(marked(t, n, g))
    return out


def _connected(rs: RootSystem, nodes: frozenset[int]) -> bool:
    if not nodes:
        return False
    start = min(nodes)
    seen = {start}
    stack = [start]
    while stack:
        i = stack.pop()
        for j in rs.adjacency[i]:
            if j in nodes and j not in seen:
                seen.add(j)
                stack.append(j)
    return seen == nodes


def neighborhood(rs: RootSystem, nodes: Iterable[int]) -> frozenset[int]:
    nodes = frozenset(nodes)
    return frozenset(j for i in nodes for j in rs.adjacency[i] if j not in nodes)


def classify(rs: RootSystem, nodes: frozenset[int], gamma: int) -> str:
    deg = {i: len(rs.adjacency[i] & nodes) for i in nodes}
    doubles = [(i, j) for i in nodes for j in rs.adjacency[i] & nodes
               if i < j and rs.edge_multiplicity(i, j) > 1]
    if doubles:
        i, j = doubles[0]
        d = rs.half_lengths
        if gamma in (i, j) and d[gamma - 1] == max(d[i - 1], d[j - 1]):
            return C_TYPE
        return B_TYPE
    if any(v >= 3 for v in deg.values()):
        # branch node: D_l unless the arms are (1, 2, >=2), i.e. E_6/E_7
        branch = next(i for i, v in deg.items() if v >= 3)
        arms = sorted(_arm_length(rs, nodes, branch, j) for j in rs.adjacency[branch] & nodes)
        if arms[0] == 1 and arms[1] == 1:
            return D_TYPE
        return E_TYPE
    if len(nodes) == 1 or deg[gamma] <= 1:
        return LINEAR_A
    return MIDDLE_A


def _arm_length(rs, nodes, branch, first) -> int:
    length, prev, cur = 1, branch, first
    while True:
        nxt = [j for j in rs.adjacency[cur] & nodes if j != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


@dataclass(frozen=True)
class Subdiagram:
    nodes: frozenset[int]
    gamma: int
    neighborhood: frozenset[int]
    marked_type: str

    @property
    def sorted_nodes(self) -> list[int]:
        return sorted(self.nodes)


def subdiagram(rs_or_md, nodes: Iterable[int], gamma: int | None = None) -> Subdiagram:
    if isinstance(rs_or_md, MarkedDiagram):
        rs, gamma = rs_or_md.rs, rs_or_md.gamma
    else:
        rs = rs_or_md
    nodes = frozenset(int(j) for j in nodes)
    if any(not 1 <= j <= rs.rank for j in nodes):
        raise InvalidSubdiagram(f"nodes {sorted(nodes)} outside {rs.name}")
    if gamma not in nodes:
        raise InvalidSubdiagram(f"marked node {gamma} not in {sorted(nodes)}")
    if not _connected(rs, nodes):
        raise InvalidSubdiagram(f"nodes {sorted(nodes)} are not connected")
    return Subdiagram(nodes, gamma, neighborhood(rs, nodes), classify(rs, nodes, gamma))


def smooth_schubert_varieties(md: MarkedDiagram, include_full: bool = True) -> list[Subdiagram]:
    """Connected node sets containing gamma, grown outward from {gamma}."""
    rs = md.rs
    found = {frozenset([md.gamma])}
    layer = list(found)
    while layer:
        nxt = set()
        for s in layer:
            for j in neighborhood(rs, s):
                t = s | {j}
                if t not in found:
                    nxt.add(t)
        found |= nxt
        layer = list(nxt)
    full = frozenset(range(1, rs.rank + 1))
    subsets = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [subdiagram(md, s) for s in subsets if include_full or s != full]


def is_full(md: MarkedDiagram, delta: Subdiagram) -> bool:
    return len(delta.nodes) == md.rs.rank


@dataclass(frozen=True)
class SchubertClass:
    delta: Subdiagram
    k: int
    delta_n: tuple[Root, ...]
    delta_m: tuple[Root, ...]
    delta_mw: tuple[Root, ...]
    delta_nw: tuple[Root, ...]


def schubert_class(md_or_rs, delta: Subdiagram) -> SchubertClass:
    """The four root sets attached to delta; roots in canonical order."""
    rs = md_or_rs.rs if isinstance(md_or_rs, MarkedDiagram) else md_or_rs
    g = delta.gamma - 1
    nb = [b - 1 for b in delta.neighborhood]

    def touches(r):
        return any(r[b] > 0 for b in nb)

    pos = rs.positive_roots
    dn = tuple(r for r in pos if touches(r))
    dm = tuple(r for r in pos if r[g] == 1)
    dmw = tuple(r for r in pos if r[g] == 0 and touches(r))
    dnw = tuple(r for r in pos if r[g] == 1 and not touches(r))
    return SchubertClass(delta, len(dnw), dn, dm, dmw, dnw)


def k_invariant(md: MarkedDiagram) -> int:
    """Largest j with rank-one homology in every degree up to 2j."""
    k = 0
    for j, b in enumerate(md.betti):
        if b != 1:
            break
        k = j
    return k


def is_maximal_linear(md: MarkedDiagram, delta: Subdiagram) -> bool:
    if delta.marked_type != LINEAR_A:
        raise WrongType(f"{sorted(delta.nodes)} is {delta.marked_type}, not LinearA")
    for j in delta.neighborhood:
        if classify(md.rs, delta.nodes | {j}, md.gamma) == LINEAR_A:
            return False
    return True


def containing_chain(md: MarkedDiagram, delta: Subdiagram) -> Subdiagram | None:
    """A strictly larger LinearA subdiagram containing delta, if any."""
    for j in sorted(delta.neighborhood):
        nodes = delta.nodes | {j}
        if classify(md.rs, nodes, md.gamma) == LINEAR_A:
            return subdiagram(md, nodes)
    return None


def stabilizer_nodes(md: MarkedDiagram, delta: Subdiagram) -> frozenset[int]:
    """S intersected with w^{-1}(Delta_P u Delta^-): the simple roots alpha_j
    with w(alpha_j) negative or a Levi root, where w is the coset
    representative whose inversion set is delta_nw.

    The descent set alone does not reproduce delta under this inversion-set
    convention, so delta is recovered as the connected component of the
    stabilizer containing gamma and checked against the input.
    """
    rs = md.rs
    sc = schubert_class(md, delta)
    word = word_for_ideal(rs, sc.delta_nw)
    stab = set()
    for j in range(1, rs.rank + 1):
        r = apply(rs, word, rs.simple(j))
        if not is_positive(r) or r[md.gamma - 1] == 0:
            stab.add(j)
    comp = {md.gamma}
    stack = [md.gamma]
    while stack:
        i = stack.pop()
        for j in rs.adjacency[i]:
            if j in stab and j not in comp:
                comp.add(j)
                stack.append(j)
    if comp != set(delta.nodes):
        raise ConsistencyFailure(
            f"stabilizer component {sorted(comp)} differs from delta {sorted(delta.nodes)}")
    return frozenset(stab)


def check_abelian(md: MarkedDiagram) -> bool:
    return is_abelian(md.rs, md.m_roots)
