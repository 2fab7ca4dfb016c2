"""Fiber decomposition over the neighbourhood multi-index and the sets
D, D' and D'' that drive the Schubert-rigidity certificate."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .diagram import (
    LINEAR_A, MarkedDiagram, SchubertClass, classify, schubert_class, subdiagram,
)
from .errors import InternalContradiction, NonUniqueMaximum, PreconditionFailed
from .rootsystem import Root, RootSystem, height
from .weyl import is_abelian

CERTIFIED_RIGID = "CertifiedRigid"
NO_CERTIFICATE = "NoCertificate"
NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class DSets:
    D: tuple[Root, ...]
    Dprime: tuple[Root, ...]
    Ddoubleprime: tuple[Root, ...]
    # per-lambda data, keyed by lambda
    reflected: dict = field(compare=False)   # sigma_gamma(lambda)
    defect: dict = field(compare=False)      # arithmetic defect
    fiber_index: dict = field(compare=False)


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: tuple[Root, ...] = ()


def fiber_index(r: Root, nbhd: list[int]) -> tuple[int, ...]:
    return tuple(r[b - 1] for b in nbhd)


def compute_D(md_or_rs, sc: SchubertClass) -> DSets:
    rs: RootSystem = md_or_rs.rs if isinstance(md_or_rs, MarkedDiagram) else md_or_rs
    delta = sc.delta
    gamma = delta.gamma
    nbhd = sorted(delta.neighborhood)
    fibers: dict[tuple[int, ...], list[Root]] = defaultdict(list)
    for r in rs.positive_roots:
        idx = fiber_index(r, nbhd)
        if any(idx):
            fibers[idx].append(r)
    D = []
    for idx in sorted(fibers):
        members = fibers[idx]
        top = max(height(r) for r in members)
        tops = [r for r in members if height(r) == top]
        if len(tops) != 1:
            raise NonUniqueMaximum(f"fiber {idx} has maxima {tops}")
        D.append(tops[0])
    D.sort(key=rs.index.__getitem__)
    g_nbrs = sorted(rs.adjacency[gamma])
    reflected, defect, where = {}, {}, {}
    for lam in D:
        reflected[lam] = rs.reflect(lam, gamma)
        defect[lam] = sum(lam[b - 1] for b in g_nbrs) - lam[gamma - 1]
        where[lam] = fiber_index(lam, nbhd)
    Dp = tuple(l for l in D if defect[l] == 0)
    Dpp = tuple(l for l in D if defect[l] == 1)
    return DSets(tuple(D), Dp, Dpp, reflected, defect, where)


def schubert_rigidity_certificate(ds: DSets, delta) -> Verdict:
    """CertifiedRigid when D' is empty.  For delta not LinearA an empty D'
    and n_gamma(sigma_gamma(lambda)) > 0 on all of D are required; a violation
    means a bug somewhere upstream."""
    if delta.marked_type != LINEAR_A:
        g = delta.gamma - 1
        bad = [l for l in ds.D if ds.reflected[l][g] <= 0]
        if ds.Dprime or bad:
            raise InternalContradiction(
                f"non-linear delta {sorted(delta.nodes)} has D'={ds.Dprime}, offenders {bad}")
    if not ds.Dprime:
        return Verdict(CERTIFIED_RIGID)
    return Verdict(NO_CERTIFICATE, ds.Dprime)


def general_rigidity(rs: RootSystem, gamma: int, nodes) -> Verdict:
    """Schubert-rigidity certificate in an arbitrary G/P_gamma for a delta that
    is itself a cominuscule marked diagram other than (A_k, alpha_1)."""
    delta = subdiagram(rs, nodes, gamma)
    local = rs.supported_on(delta.nodes)
    top = max(local, key=height)
    if top[gamma - 1] != 1:
        raise PreconditionFailed(
            f"({sorted(delta.nodes)}, {gamma}) is not a cominuscule marked diagram")
    if classify(rs, delta.nodes, gamma) == LINEAR_A:
        return Verdict(NOT_APPLICABLE)
    sc = schubert_class(rs, delta)
    if not is_abelian(rs, sc.delta_nw):
        raise PreconditionFailed("tangent space of X_w is not abelian")
    ds = compute_D(rs, sc)
    if not ds.Dprime:
        return Verdict(CERTIFIED_RIGID)
    return Verdict(NO_CERTIFICATE, ds.Dprime)
