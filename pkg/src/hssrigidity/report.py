"""Assemble certificates into Schur-rigidity verdicts, compare them with the
expected classification, and serialise reports."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .diagram import (
    LINEAR_A, MIDDLE_A, MarkedDiagram, Subdiagram, catalog,
    containing_chain, is_full, is_maximal_linear, k_invariant, marked,
    schubert_class, smooth_schubert_varieties, subdiagram,
)
from .errors import DegenerateWedge, ExcludedCase, OracleTooLarge, UnknownFormat
from .kostant import DEFAULT_BOUND, build_chevalley, h11_oracle, membership_test, random_flips
from .rigidity import compute_D, schubert_rigidity_certificate
from .schur import grassmann_equality_certificate

SCHUR_RIGID = "SchurRigid"
NOT_SCHUR_RIGID = "NotSchurRigid"
NOT_CERTIFIED = "NotCertified"

FORMATS = ("json", "table", "csv", "dot")


@dataclass
class RigidityReport:
    space: dict
    delta: list
    delta_type: str
    k: int
    k_gp: int
    D: list
    Dprime: list
    Ddoubleprime: list
    schubert_cert: str | None
    equality_cert: str | None
    verdict: str
    expected: str
    match: bool
    homology_rank_one: bool = False
    trivial: bool = False
    equality_reason: str | None = None
    h11: int | None = None
    notes: list = field(default_factory=list)

    @property
    def space_id(self) -> str:
        s = self.space
        return f"{s['type']}{s['rank']}:{s['gamma']}"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RigidityReport":
        return cls(**d)


def expected_verdict(md: MarkedDiagram, delta: Subdiagram) -> str:
    if md.odd_quadric:
        return NOT_SCHUR_RIGID
    if delta.marked_type == LINEAR_A and not is_maximal_linear(md, delta):
        return NOT_SCHUR_RIGID
    return SCHUR_RIGID


def _asserted_reason(delta: Subdiagram) -> str:
    if delta.marked_type == LINEAR_A:
        return "SchurHSS"
    if delta.marked_type == MIDDLE_A:
        return "smoothSchur"
    return "SchurHSSD"


def _equality(md, delta, sc, ds, cb, bound):
    """(equality_cert, reason)."""
    if not ds.Ddoubleprime:
        return "CertifiedByMembership", "D'' is empty"
    rs = md.rs
    if rs.type_label == "A":
        m, n = md.gamma, rs.rank + 1
        q = m - min(delta.nodes) + 1
        p = max(delta.nodes) - m + 1
        try:
            cert = grassmann_equality_certificate(m, n, p, q, cb)
        except ExcludedCase:
            cert = None
        if cert is not None and cert.verdict == "EqualityCertified":
            return "CertifiedByKostka", f"rectangle ({p}^{q})"
    if bound == 0:
        return f"AssertedByPaper({_asserted_reason(delta)})", "oracles disabled"
    try:
        hits = [membership_test(cb, sc, lam, bound) for lam in ds.Ddoubleprime]
    except OracleTooLarge:
        return f"AssertedByPaper({_asserted_reason(delta)})", "oracle bound exceeded"
    except DegenerateWedge:
        return None, "degenerate wedge"
    if any(hits):
        return None, "phi lies in I_w for some lambda in D''"
    return "CertifiedByMembership", f"{len(hits)} membership tests negative"


def assemble(md: MarkedDiagram, delta: Subdiagram, cb=None,
             bound: int = DEFAULT_BOUND, with_h11: bool = False) -> RigidityReport:
    rs = md.rs
    sc = schubert_class(md, delta)
    ds = compute_D(md, sc)
    kgp = k_invariant(md)
    space = {"type": rs.type_label, "rank": rs.rank, "gamma": md.gamma}
    as_lists = lambda roots: [list(r) for r in roots]
    base = dict(
        space=space, delta=delta.sorted_nodes, delta_type=delta.marked_type,
        k=sc.k, k_gp=kgp, D=as_lists(ds.D), Dprime=as_lists(ds.Dprime),
        Ddoubleprime=as_lists(ds.Ddoubleprime),
    )
    if is_full(md, delta):
        return RigidityReport(**base, schubert_cert=None, equality_cert=None,
                              verdict=SCHUR_RIGID, expected=SCHUR_RIGID, match=True,
                              trivial=True, notes=["X_w = G/P"])
    if cb is None:
        cb = build_chevalley(md)
    notes = []
    rank_one = md.betti[sc.k] == 1
    cert = schubert_rigidity_certificate(ds, delta)
    linear = delta.marked_type == LINEAR_A
    maximal = linear and is_maximal_linear(md, delta)
    if not ds.Dprime:
        schubert = "CertifiedByDprime"
    elif maximal:
        schubert = "AssertedMaximalLinear"
    else:
        schubert = None
    equality, reason = _equality(md, delta, sc, ds, cb, bound)
    h11 = None
    if with_h11 and bound:
        try:
            h11 = h11_oracle(cb, sc, bound)
        except OracleTooLarge:
            notes.append("h11 oracle over bound")

    if rank_one and sc.k < md.dim:
        verdict = NOT_SCHUR_RIGID
        notes.append(f"H_{2 * sc.k} has rank one")
    elif linear and not maximal:
        verdict = NOT_SCHUR_RIGID
        chain = containing_chain(md, delta)
        notes.append(f"contained in the linear space {chain.sorted_nodes}")
    elif schubert and equality:
        verdict = SCHUR_RIGID
    else:
        verdict = NOT_CERTIFIED
    if cert.status != "CertifiedRigid" and schubert == "AssertedMaximalLinear":
        notes.append(f"D' nonempty: {as_lists(cert.witness)}")
    if linear and not maximal and kgp < sc.k:
        notes.append("k > k_GP: Z_k(G/P,[X_w]) consists of Schubert varieties")
    expected = expected_verdict(md, delta)
    return RigidityReport(
        **base, schubert_cert=schubert, equality_cert=equality, verdict=verdict,
        expected=expected, match=verdict == expected, homology_rank_one=rank_one,
        equality_reason=reason, h11=h11, notes=notes,
    )


@dataclass
class Summary:
    reports: list
    match: int = 0
    mismatch: int = 0
    asserted: int = 0
    trivial: int = 0

    @property
    def ok(self) -> bool:
        return self.mismatch == 0

    def mismatches(self) -> list:
        return [r for r in self.reports if not r.trivial and not r.match]

    def counts(self) -> dict:
        return {"match": self.match, "mismatch": self.mismatch,
                "asserted": self.asserted, "trivial": self.trivial}


def _space_reports(args) -> list:
    (t, n, g), bound, seed, with_h11 = args
    md = marked(t, n, g)
    flips = random_flips(md.rs, seed) if seed is not None else ()
    cb = build_chevalley(md, flips)
    return [assemble(md, d, cb, bound, with_h11) for d in smooth_schubert_varieties(md)]


def verify_main_theorem(max_rank: int, oracle_bound: int = DEFAULT_BOUND,
                        sign_seed: int | None = None, jobs: int = 1,
                        with_h11: bool = False) -> Summary:
    """Run every (space, delta) with rank <= max_rank.  ``sign_seed`` selects a
    random alternative sign convention for the structure constants.

    ``asserted`` counts SchurRigid verdicts resting on a claim that was not
    machine-checked."""
    tasks = [((md.rs.type_label, md.rs.rank, md.gamma), oracle_bound, sign_seed, with_h11)
             for md in catalog(max_rank)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_space_reports, tasks))
    else:
        chunks = [_space_reports(t) for t in tasks]
    reports = [r for c in chunks for r in c]
    s = Summary(reports)
    for r in reports:
        if r.trivial:
            s.trivial += 1
        elif r.match:
            s.match += 1
        else:
            s.mismatch += 1
        if not r.trivial and r.verdict == SCHUR_RIGID and any(
                (c or "").startswith("Asserted") for c in (r.schubert_cert, r.equality_cert)):
            s.asserted += 1
    return s


# -- serialisation ---------------------------------------------------------

_COLUMNS = ["space", "delta", "delta_type", "k", "k_gp", "D", "Dprime", "Ddoubleprime",
            "schubert_cert", "equality_cert", "verdict", "expected", "match"]


def _cell(r: RigidityReport, col: str) -> str:
    if col == "space":
        return r.space_id
    v = getattr(r, col)
    if isinstance(v, list):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return "-"
    return str(v)


def _compact(v) -> str:
    return json.dumps(v, separators=(", ", ": "), ensure_ascii=False)


def _json_fields(d: dict, indent: str) -> str:
    """One key per line, values on a single line."""
    inner = ",\n".join(f"{indent}  {json.dumps(k)}: {_compact(v)}" for k, v in d.items())
    return f"{indent}{{\n{inner}\n{indent}}}"


def emit(reports, fmt: str = "json", summary: Summary | None = None) -> bytes:
    single = isinstance(reports, RigidityReport)
    items: list[RigidityReport] = [reports] if single else list(reports)
    if fmt == "json":
        if single:
            return (_json_fields(items[0].to_dict(), "") + "\n").encode()
        lines = ["{"]
        if summary is not None:
            lines.append(f'  "summary": {_compact(summary.counts())},')
        body = ",\n".join(_json_fields(r.to_dict(), "    ") for r in items)
        lines.append('  "reports": [')
        if body:
            lines.append(body)
        lines.append("  ]")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_COLUMNS)
        for r in items:
            w.writerow([_cell(r, c) for c in _COLUMNS])
        return buf.getvalue().encode()
    if fmt == "table":
        cols = ["space", "delta", "delta_type", "k", "k_gp", "schubert_cert",
                "equality_cert", "verdict", "expected", "match"]
        rows = [cols] + [[_cell(r, c) for c in cols] for r in items]
        widths = [max(len(row[i]) for row in rows) for i in range(len(cols))]
        lines = ["  ".join(x.ljust(wd) for x, wd in zip(row, widths)).rstrip() for row in rows]
        if summary is not None:
            lines.append("")
            lines.append(" ".join(f"{k}={v}" for k, v in summary.counts().items()))
        return ("\n".join(lines) + "\n").encode()
    if fmt == "dot":
        return "".join(_dot(r) for r in items).encode()
    raise UnknownFormat(fmt)


def parse(data: bytes | str) -> RigidityReport | list:
    obj = json.loads(data)
    if "reports" in obj:
        return [RigidityReport.from_dict(d) for d in obj["reports"]]
    return RigidityReport.from_dict(obj)


def dot_diagram(md: MarkedDiagram, delta_nodes: Iterable[int] = ()) -> str:
    """Graphviz source: gamma drawn as a cross, delta boxed in a cluster."""
    rs = md.rs
    delta_nodes = set(delta_nodes)
    name = f"{rs.name}_{md.gamma}"
    lines = [f'graph "{name}" {{', "  node [shape=circle, label=\"\"];"]

    def node(j):
        if j == md.gamma:
            return f'    n{j} [label="×", shape=plaintext, xlabel="{j}"];'
        return f'    n{j} [xlabel="{j}"];'

    if delta_nodes:
        lines.append("  subgraph cluster_delta {")
        lines.append("    style=solid; shape=box; label=\"delta\";")
        lines.extend(node(j) for j in sorted(delta_nodes))
        lines.append("  }")
    lines.extend(node(j).replace("    ", "  ", 1) for j in range(1, rs.rank + 1)
                 if j not in delta_nodes)
    for i in range(1, rs.rank + 1):
        for j in sorted(rs.adjacency[i]):
            if i < j:
                attr = ""
                if rs.edge_multiplicity(i, j) == 2:
                    short = i if rs.half_lengths[i - 1] < rs.half_lengths[j - 1] else j
                    attr = f' [penwidth=2, label="> {short}"]'
                lines.append(f"  n{i} -- n{j}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot(r: RigidityReport) -> str:
    s = r.space
    return dot_diagram(marked(s["type"], s["rank"], s["gamma"]), r.delta)


def report_for(space: tuple[str, int, int], nodes: Sequence[int],
               bound: int = DEFAULT_BOUND, with_h11: bool = True) -> RigidityReport:
    md = marked(*space)
    return assemble(md, subdiagram(md, nodes), None, bound, with_h11)


__all__ = [
    "RigidityReport", "Summary", "assemble", "verify_main_theorem", "emit", "parse",
    "dot_diagram", "report_for", "expected_verdict", "SCHUR_RIGID", "NOT_SCHUR_RIGID",
    "NOT_CERTIFIED", "FORMATS",
]
