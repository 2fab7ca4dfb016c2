"""Partitions, semistandard tableaux counts and the Grassmannian fast path
for the equality certificate, where the Kostant components of
wedge^k(E^* (x) Q) are S_a(E^*) (x) S_a'(Q)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import ContentMismatch, ExcludedCase, OutOfBox

Partition = tuple[int, ...]


def normalize(a: Sequence[int]) -> Partition:
    parts = tuple(int(x) for x in a)
    if any(x < 0 for x in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not a partition: {parts}")
    return tuple(x for x in parts if x)


def conjugate(a: Sequence[int]) -> Partition:
    a = normalize(a)
    if not a:
        return ()
    return tuple(sum(1 for x in a if x >= i) for i in range(1, a[0] + 1))


def dual(a: Sequence[int], m: int, n: int) -> Partition:
    """Complement of a in the m x (n-m) box, read backwards."""
    a = normalize(a)
    if len(a) > m or (a and a[0] > n - m):
        raise OutOfBox(f"{a} does not fit in {m} x {n - m}")
    padded = a + (0,) * (m - len(a))
    return normalize([n - m - x for x in reversed(padded)])


def _horizontal_strips(inner: Partition, outer: Partition, size: int):
    """Partitions mu with inner <= mu <= outer and mu/inner a horizontal strip
    of the given size."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield normalize(acc)
            return
        # row i may grow up to the old length of row i-1 (strip condition)
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for x in range(min(cap, inner[i] + left), inner[i] - 1, -1):
            if i > 0 and x > acc[-1]:
                continue
            yield from rec(i + 1, left - (x - inner[i]), acc + [x])

    yield from rec(0, size, [])


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    a = normalize(shape)
    b = tuple(int(x) for x in content)
    if any(x < 0 for x in b):
        raise ContentMismatch(f"negative content {b}")
    if sum(b) != sum(a):
        raise ContentMismatch(f"|content| = {sum(b)} but |shape| = {sum(a)}")
    return _kostka(a, b)


@lru_cache(maxsize=None)
def _kostka(a: Partition, b: tuple[int, ...]) -> int:
    @lru_cache(maxsize=None)
    def count(cur: Partition, i: int) -> int:
        if i == len(b):
            return 1 if cur == a else 0
        return sum(count(mu, i + 1) for mu in _horizontal_strips(cur, a, b[i]))
    return count((), 0)


def kostka_positive(shape: Sequence[int], content: Sequence[int], max_entry: int | None = None):
    """(count > 0, count).  ``max_entry`` bounds the alphabet; entries beyond
    the content length are simply unused."""
    b = tuple(content)
    if max_entry is not None and len(b) > max_entry and any(b[max_entry:]):
        return False, 0
    n = kostka(shape, b)
    return n > 0, n


def schur_dim(a: Sequence[int], n: int) -> int:
    """dim S_a(C^n) as the number of semistandard tableaux with entries <= n."""
    a = normalize(a)
    if len(a) > n:
        return 0

    @lru_cache(maxsize=None)
    def count(cur: Partition, i: int) -> int:
        if i == n:
            return 1 if cur == a else 0
        left = sum(a) - sum(cur)
        return sum(count(mu, i + 1) for s in range(left + 1)
                   for mu in _horizontal_strips(cur, a, s))
    return count((), 0)


def boxed_partitions(k: int, rows: int, cols: int):
    """Partitions of k with at most ``rows`` parts, each at most ``cols``."""
    def rec(left, maxpart, nrows):
        if left == 0:
            yield ()
            return
        if nrows == 0:
            return
        for x in range(min(left, maxpart), 0, -1):
            for rest in rec(left - x, x, nrows - 1):
                yield (x,) + rest
    yield from rec(k, cols, rows)


# -- Grassmannian dictionary -----------------------------------------------
# Gr(m, n) = A_{n-1}/P_m.  The root vector e_i^* (x) q_j (1 <= i <= m,
# 1 <= j <= n-m) has root alpha_{m-i+1} + ... + alpha_{m+j-1}.

def grass_root(m: int, n: int, i: int, j: int) -> tuple[int, ...]:
    lo, hi = m - i + 1, m + j - 1
    return tuple(1 if lo <= t <= hi else 0 for t in range(1, n))


def grass_coords(m: int, root: Sequence[int]) -> tuple[int, int]:
    support = [t + 1 for t, c in enumerate(root) if c]
    lo, hi = support[0], support[-1]
    return m - lo + 1, hi - m + 1


def contents(m: int, n: int, roots) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(E-content, Q-content) of a wedge of root vectors of Gr(m, n)."""
    e = [0] * m
    q = [0] * (n - m)
    for r in roots:
        i, j = grass_coords(m, r)
        e[i - 1] += 1
        q[j - 1] += 1
    return tuple(e), tuple(q)


def weight_feasible(m: int, n: int, p: int, q: int, roots) -> bool:
    """Whether the weight of a wedge occurs in S_(p^q)(E^*) (x) S_(q^p)(Q)."""
    ec, qc = contents(m, n, roots)
    return kostka((p,) * q, ec) > 0 and kostka((q,) * p, qc) > 0


def grass_delta(m: int, n: int, p: int, q: int) -> list[int]:
    return list(range(m - q + 1, m + p))


@dataclass(frozen=True)
class GrassmannCertificate:
    verdict: str                 # EqualityCertified or NotCertified
    per_lambda: tuple            # (lambda, method) pairs
    rectangle: Partition


def grassmann_equality_certificate(m: int, n: int, p: int, q: int, cb=None) -> GrassmannCertificate:
    """For each lambda in D'' show the wedge phi_lambda has a weight that does
    not occur in I_w, either directly or after applying x_{-beta} for one
    positive Levi root beta (the lowered vector is computed exactly; I_w is
    a submodule, so a nonzero image outside it rules phi out)."""
    from .diagram import marked, schubert_class, subdiagram
    from .kostant import act, build_chevalley, phi_vector
    from .rigidity import compute_D

    if (p, q) == (1, 1):
        raise ExcludedCase("the rectangle (1) is excluded")
    if not (1 <= q <= m and 1 <= p <= n - m):
        raise OutOfBox(f"({p}^{q}) does not fit in Gr({m},{n})")
    md = marked("A", n - 1, m)
    if cb is None:
        cb = build_chevalley(md, check=False)
    sc = schubert_class(md, subdiagram(md, grass_delta(m, n, p, q)))
    ds = compute_D(md, sc)
    rows = []
    ok = True
    for lam in ds.Ddoubleprime:
        phi = phi_vector(cb, sc, lam, ds.reflected[lam])
        roots = [cb.m[i] for i in next(iter(phi))]
        if not weight_feasible(m, n, p, q, roots):
            rows.append((lam, "kostka"))
            continue
        method = None
        for beta in cb.levi_positive:
            low = act(cb, tuple(-x for x in beta), phi)
            if not low:
                continue
            key = next(iter(low))
            if not weight_feasible(m, n, p, q, [cb.m[i] for i in key]):
                method = f"kostka after lowering by {list(beta)}"
                break
        if method is None:
            ok = False
            rows.append((lam, "none"))
        else:
            rows.append((lam, method))
    return GrassmannCertificate("EqualityCertified" if ok else "NotCertified",
                                tuple(rows), (p,) * q)
