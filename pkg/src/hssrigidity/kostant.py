"""Chevalley structure constants, the Levi action on the exterior algebra of
the abelian nilradical m, Kostant components I_w, and exact cohomology
oracles for the tangent data of a smooth Schubert variety."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .diagram import MarkedDiagram, SchubertClass
from .errors import DegenerateWedge, JacobiFailure, NotInM, OracleTooLarge
from .linalg import Echelon, axpy
from .rootsystem import Root, RootSystem, add, is_positive, neg, sub
from .weyl import CosetRep

DEFAULT_BOUND = 200_000

WedgeVector = dict  # sorted index tuple -> int or Fraction


class StructureConstants:
    """N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b} for a Chevalley basis.

    Signs are fixed on extraspecial pairs (rho, sigma): rho is the first
    positive root in canonical order with xi - rho positive, and
    N_{rho,sigma} = +(p+1) unless xi is in ``flips``.  Everything else
    follows from the standard identities for Chevalley bases.
    """

    def __init__(self, rs: RootSystem, flips: Iterable[Root] = ()) -> None:
        self.rs = rs
        self.flips = frozenset(flips)
        self._cache: dict[tuple[Root, Root], int] = {}
        self._sq = {}
        self.extraspecial: dict[Root, tuple[Root, Root]] = {}
        pos = rs.positive_roots
        pset = rs.positive_set
        for xi in pos:
            for rho in pos:
                if rs.index[rho] >= rs.index[xi]:
                    break
                if sub(xi, rho) in pset:
                    self.extraspecial[xi] = (rho, sub(xi, rho))
                    break

    def sq(self, r: Root) -> Fraction:
        v = self._sq.get(r)
        if v is None:
            v = self._sq[r] = self.rs.inner(r, r)
        return v

    def N(self, a: Root, b: Root) -> int:
        key = (a, b)
        v = self._cache.get(key)
        if v is None:
            v = self._cache[key] = self._compute(a, b)
        return v

    def _compute(self, a: Root, b: Root) -> int:
        rs = self.rs
        c = add(a, b)
        if c not in rs.root_set:
            return 0
        pa, pb = is_positive(a), is_positive(b)
        if not pa and not pb:
            return -self.N(neg(a), neg(b))
        if not pa:
            return -self.N(b, a)
        if pb:
            if rs.index[a] > rs.index[b]:
                return -self.N(b, a)
            return self._special(a, b, c)
        # a > 0 > b
        d = neg(c)
        if is_positive(c):
            val = self.sq(d) / self.sq(a) * self.N(b, d)
        else:
            val = self.sq(d) / self.sq(b) * self.N(d, a)
        return _as_int(val)

    def _special(self, a: Root, b: Root, xi: Root) -> int:
        rs = self.rs
        rho, sigma = self.extraspecial[xi]
        p = rs.string_down(sigma, rho)
        n_rs = (p + 1) * (-1 if xi in self.flips else 1)
        if a == rho:
            return n_rs
        total = Fraction(0)
        t = sub(b, rho)
        if t in rs.root_set:
            total += self.N(b, neg(rho)) * self.N(a, neg(sigma)) / self.sq(t)
        t = sub(a, rho)
        if t in rs.root_set:
            total += self.N(neg(rho), a) * self.N(b, neg(sigma)) / self.sq(t)
        val = _as_int(self.sq(xi) / n_rs * total)
        expected = rs.string_down(b, a) + 1
        if abs(val) != expected:
            raise JacobiFailure(f"|N({a},{b})| = {abs(val)}, expected {expected}")
        return val

    def coroot_pairing(self, a: Root, b: Root) -> int:
        """<a, b^vee>, the eigenvalue of h_b on e_a."""
        return _as_int(self.rs.coroot_pairing(a, b))


def _as_int(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise JacobiFailure(f"non-integral structure constant {x}")
    return int(x)


@dataclass
class ChevalleyBasis:
    md: MarkedDiagram
    const: StructureConstants
    m: tuple[Root, ...]
    m_index: dict[Root, int]
    levi_positive: tuple[Root, ...]
    levi_simples: tuple[int, ...]

    @property
    def rs(self) -> RootSystem:
        return self.md.rs

    @property
    def levi_roots(self) -> tuple[Root, ...]:
        return self.levi_positive + tuple(neg(r) for r in self.levi_positive)

    def bracket_m(self, beta: Root, alpha: Root) -> tuple[int, Root] | None:
        """[x_beta, x_alpha] for a Levi root beta and alpha in Delta(m)."""
        t = add(beta, alpha)
        if t not in self.m_index:
            return None
        return self.const.N(beta, alpha), t


def build_chevalley(md: MarkedDiagram, flips: Iterable[Root] = (), check: bool = True) -> ChevalleyBasis:
    rs = md.rs
    g = md.gamma - 1
    const = StructureConstants(rs, flips)
    m = md.m_roots
    cb = ChevalleyBasis(
        md, const, m, {r: i for i, r in enumerate(m)},
        tuple(r for r in rs.positive_roots if r[g] == 0),
        tuple(j for j in range(1, rs.rank + 1) if j != md.gamma),
    )
    if check:
        check_jacobi_levi(cb)
    return cb


def random_flips(rs: RootSystem, seed: int) -> frozenset[Root]:
    """A random set of non-simple positive roots whose extraspecial sign is
    reversed; any such choice yields another Chevalley basis."""
    rng = random.Random(seed)
    return frozenset(r for r in rs.positive_roots if sum(r) > 1 and rng.random() < 0.5)


def check_jacobi_levi(cb: ChevalleyBasis) -> None:
    """[x_b1,[x_b2,x_a]] - [x_b2,[x_b1,x_a]] = [[x_b1,x_b2],x_a] for Levi roots
    b1, b2 and every alpha in Delta(m)."""
    N = cb.const.N
    levi = cb.levi_roots
    roots = cb.rs.root_set
    for a in cb.m:
        for b1 in levi:
            for b2 in levi:
                tgt = add(add(a, b1), b2)
                if tgt not in cb.m_index:
                    continue
                lhs = 0
                s = add(a, b2)
                if s in cb.m_index:
                    lhs += N(b2, a) * N(b1, s)
                s = add(a, b1)
                if s in cb.m_index:
                    lhs -= N(b1, a) * N(b2, s)
                s = add(b1, b2)
                if not any(s):
                    rhs = cb.const.coroot_pairing(a, b1)
                elif s in roots:
                    rhs = N(b1, b2) * N(s, a)
                else:
                    rhs = 0
                if lhs != rhs:
                    raise JacobiFailure(f"Jacobi fails on ({b1}, {b2}, {a}): {lhs} != {rhs}")


# -- exterior algebra ------------------------------------------------------

def monomial(cb: ChevalleyBasis, roots: Iterable[Root]) -> WedgeVector:
    """The wedge of the given root vectors, written in sorted index order."""
    idx = [cb.m_index[r] for r in roots]
    if len(set(idx)) != len(idx):
        return {}
    sign = _perm_sign(idx)
    return {tuple(sorted(idx)): sign}


def _perm_sign(seq: list[int]) -> int:
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


def weight_of(cb: ChevalleyBasis, key: tuple[int, ...]) -> Root:
    w = [0] * cb.rs.rank
    for i in key:
        for t, c in enumerate(cb.m[i]):
            w[t] += c
    return tuple(w)


def act(cb: ChevalleyBasis, beta: Root, v: Mapping) -> WedgeVector:
    """Derivation action of x_beta (beta a Levi root) on a wedge vector."""
    out: WedgeVector = {}
    m, idx, N = cb.m, cb.m_index, cb.const.N
    for key, c in v.items():
        present = set(key)
        for pos, i in enumerate(key):
            t = add(beta, m[i])
            j = idx.get(t)
            if j is None or j in present:
                continue
            coef = c * N(beta, m[i])
            rest = key[:pos] + key[pos + 1:]
            # move the new factor from slot pos to its sorted place
            between = sum(1 for x in rest if min(i, j) < x < max(i, j))
            if between % 2:
                coef = -coef
            nk = tuple(sorted(rest + (j,)))
            s = out.get(nk, 0) + coef
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
    return out


@dataclass(frozen=True)
class KostantComponent:
    ideal: tuple[Root, ...]
    extreme: dict
    basis: tuple[dict, ...]
    dim: int
    weights: dict  # weight -> multiplicity


def _raise_closure(cb: ChevalleyBasis, start: WedgeVector, start_wt: Root,
                   limit: Root | None, bound: int):
    """Span of U(n_L^+) applied to a lowest weight vector, weight by weight.
    When ``limit`` is set only weights nu <= limit are kept."""
    spaces: dict[Root, Echelon] = defaultdict(Echelon)
    spaces[start_wt].add(start)
    basis = [start]
    frontier = [(start_wt, start)]
    touched = len(start)
    simples = [cb.rs.simple(j) for j in cb.levi_simples]
    while frontier:
        nxt = []
        for wt, v in frontier:
            for a in simples:
                nu = add(wt, a)
                if limit is not None and any(x > y for x, y in zip(nu, limit)):
                    continue
                u = act(cb, a, v)
                if not u:
                    continue
                touched += len(u)
                if bound and touched > bound:
                    raise OracleTooLarge(f"generation touched more than {bound} monomials")
                if spaces[nu].add(u):
                    basis.append(u)
                    nxt.append((nu, u))
        frontier = nxt
    return spaces, basis


def generate_component(cb: ChevalleyBasis, ideal: CosetRep | Iterable[Root],
                       bound: int = DEFAULT_BOUND) -> KostantComponent:
    """I_w as the submodule generated by the extreme monomial e over Delta(w).
    Delta(w) is a lower ideal, so e is a lowest weight vector and raising
    operators suffice."""
    roots = ideal.ideal if isinstance(ideal, CosetRep) else tuple(ideal)
    k = len(roots)
    size = comb(len(cb.m), k)
    if bound and size > bound:
        raise OracleTooLarge(f"C({len(cb.m)}, {k}) = {size} exceeds bound {bound}")
    e = monomial(cb, sorted(roots, key=cb.m_index.__getitem__))
    wt = _sum_roots(cb.rs.rank, roots)
    spaces, basis = _raise_closure(cb, e, wt, None, 0)
    weights = {w: len(s) for w, s in spaces.items() if len(s)}
    return KostantComponent(tuple(roots), e, tuple(basis), len(basis), weights)


def _sum_roots(rank: int, roots: Iterable[Root]) -> Root:
    w = [0] * rank
    for r in roots:
        for i, c in enumerate(r):
            w[i] += c
    return tuple(w)


def in_component(cb: ChevalleyBasis, ideal: Iterable[Root], phi: Mapping,
                 bound: int = DEFAULT_BOUND) -> bool:
    """Exact test of phi in I_w, generating only the weights below wt(phi)."""
    if not phi:
        return True
    roots = tuple(ideal)
    keys = list(phi)
    mu = weight_of(cb, keys[0])
    if any(weight_of(cb, key) != mu for key in keys[1:]):
        raise ValueError("phi is not a weight vector")
    start_wt = _sum_roots(cb.rs.rank, roots)
    diff = sub(mu, start_wt)
    if any(x < 0 for x in diff) or diff[cb.md.gamma - 1] != 0:
        return False
    e = monomial(cb, sorted(roots, key=cb.m_index.__getitem__))
    spaces, _ = _raise_closure(cb, e, start_wt, mu, bound)
    sp = spaces.get(mu)
    return bool(sp) and sp.contains(phi)


def phi_vector(cb: ChevalleyBasis, sc: SchubertClass, lam: Root, reflected: Root) -> WedgeVector:
    """x_{sigma_gamma(lam)} wedge the root vectors of Delta(n_w) other than x_gamma."""
    rs = cb.rs
    if reflected not in cb.m_index:
        raise NotInM(f"sigma_gamma({lam}) = {reflected} is not in Delta(m)")
    gamma_root = rs.simple(sc.delta.gamma)
    rest = [r for r in sc.delta_nw if r != gamma_root]
    if reflected in rest:
        raise DegenerateWedge(f"sigma_gamma({lam}) repeats a factor of the extreme vector")
    return monomial(cb, [reflected] + rest)


def membership_test(cb: ChevalleyBasis, sc: SchubertClass, lam: Root,
                    bound: int = DEFAULT_BOUND) -> bool:
    """Whether phi_lambda lies in I_w (w the element with ideal delta_nw)."""
    phi = phi_vector(cb, sc, lam, cb.rs.reflect(lam, sc.delta.gamma))
    return in_component(cb, sc.delta_nw, phi, bound)


# -- cohomology oracles ----------------------------------------------------

def _m_mod_n(sc: SchubertClass) -> tuple[Root, ...]:
    nw = set(sc.delta_nw)
    return tuple(r for r in sc.delta_m if r not in nw)


def _block_rank(columns: dict[Root, list[dict]]) -> int:
    total = 0
    for cols in columns.values():
        e = Echelon()
        for c in cols:
            e.add(c)
        total += len(e)
    return total


def _check_size(n: int, bound: int, what: str) -> None:
    if bound and n > bound:
        raise OracleTooLarge(f"{what}: {n} cochains exceeds bound {bound}")


def h11_oracle(cb: ChevalleyBasis, sc: SchubertClass, bound: int = DEFAULT_BOUND) -> int:
    """dim ker(d: n_w^* (x) m_w -> wedge^2 n_w^* (x) m/n_w) where
    dp(V1, V2) = p(V1)(V2) - p(V2)(V1)."""
    nw = list(sc.delta_nw)
    mw = list(sc.delta_mw)
    quot = set(_m_mod_n(sc))
    k = len(nw)
    _check_size(k * len(mw) + comb(k, 2) * len(quot), bound, "h11")
    pos = {r: i for i, r in enumerate(nw)}
    N = cb.const.N
    blocks: dict[Root, list[dict]] = defaultdict(list)
    ncols = 0
    for A in nw:
        for X in mw:
            ncols += 1
            col = {}
            for B in nw:
                if B == A:
                    continue
                Y = add(X, B)
                if Y not in quot:
                    continue
                c = N(X, B)
                i, j = pos[A], pos[B]
                row = (min(i, j), max(i, j), cb.m_index[Y])
                col[row] = col.get(row, 0) + (c if i < j else -c)
            blocks[sub(X, A)].append({r: v for r, v in col.items() if v})
    return ncols - _block_rank(blocks)


@dataclass(frozen=True)
class H1Result:
    total: int
    h11: int
    quotient_part: int


def h1_oracle(cb: ChevalleyBasis, sc: SchubertClass, bound: int = DEFAULT_BOUND) -> H1Result:
    """dim H^1(n_w, m_w + m/n_w) split as the kernel above plus the cokernel of
    m_w -> n_w^* (x) m/n_w, X -> (A -> [X, A] mod n_w)."""
    h11 = h11_oracle(cb, sc, bound)
    nw = list(sc.delta_nw)
    quot = set(_m_mod_n(sc))
    N = cb.const.N
    blocks: dict[Root, list[dict]] = defaultdict(list)
    for X in sc.delta_mw:
        col = {}
        for A in nw:
            Y = add(X, A)
            if Y in quot:
                col[(cb.m_index[A], cb.m_index[Y])] = N(X, A)
        blocks[X].append(col)
    q = len(nw) * len(quot) - _block_rank(blocks)
    return H1Result(h11 + q, h11, q)


def levi_w(cb: ChevalleyBasis, sc: SchubertClass) -> tuple[tuple[int, ...], tuple[Root, ...]]:
    """Simple nodes and positive roots of l_w: nodes off N(delta) and gamma."""
    rs = cb.rs
    drop = set(sc.delta.neighborhood) | {sc.delta.gamma}
    nodes = tuple(j for j in range(1, rs.rank + 1) if j not in drop)
    return nodes, rs.supported_on(nodes)
