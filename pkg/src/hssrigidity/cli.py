"""Command-line front end.

Space specs are ``TYPErank:gamma`` (``A5:3``) or one of the names
``gr(m,n)``, ``qN``, ``lgN``, ``sN``, ``e6``, ``e7``.
Exit status: 0 success, 1 mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from math import comb

from . import __version__
from .diagram import (
    LINEAR_A, catalog, is_maximal_linear, k_invariant, marked,
    schubert_class, smooth_schubert_varieties, subdiagram,
)
from .errors import (
    ContentMismatch, DegenerateWedge, InvalidSubdiagram, InvalidType, NotInM,
    OracleTooLarge,
)
from .kostant import (
    DEFAULT_BOUND, build_chevalley, generate_component, h11_oracle, h1_oracle,
    membership_test,
)
from .report import FORMATS, emit, report_for, verify_main_theorem
from .rigidity import compute_D
from .schur import kostka

_NAMES = [
    (re.compile(r"gr\((\d+),(\d+)\)$"), lambda m, n: ("A", int(n) - 1, int(m))),
    (re.compile(r"q(\d+)$"), lambda N: _quadric(int(N))),
    (re.compile(r"lg(\d+)$"), lambda n: ("C", int(n), int(n))),
    (re.compile(r"s(\d+)$"), lambda n: ("D", int(n), int(n))),
    (re.compile(r"e6$"), lambda: ("E", 6, 1)),
    (re.compile(r"e7$"), lambda: ("E", 7, 7)),
]


class UsageError(ValueError):
    pass


def _quadric(N: int):
    if N < 3:
        raise UsageError(f"quadric q{N} not supported; use q3 or higher")
    return ("B", (N + 1) // 2, 1) if N % 2 else ("D", N // 2 + 1, 1)


def parse_space(spec: str):
    s = spec.strip().replace(" ", "")
    m = re.fullmatch(r"([A-Ea-e])(\d+):(\d+)", s)
    if m:
        key = (m.group(1).upper(), int(m.group(2)), int(m.group(3)))
    else:
        for pat, fn in _NAMES:
            mm = pat.match(s.lower())
            if mm:
                key = fn(*mm.groups())
                break
        else:
            raise UsageError(f"cannot parse space spec {spec!r}")
    try:
        md = marked(*key)
    except (InvalidType, InvalidSubdiagram) as e:
        raise UsageError(f"{spec!r}: {e}") from None
    if not md.hermitian:
        raise UsageError(f"{spec!r}: node {key[2]} of {md.rs.name} is not cominuscule")
    return md


def parse_ints(spec: str, what: str) -> list[int]:
    try:
        return [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse {what} {spec!r}") from None


def _delta(md, spec):
    try:
        return subdiagram(md, parse_ints(spec, "delta"))
    except InvalidSubdiagram as e:
        raise UsageError(f"--delta {spec}: {e}") from None


def _bound_default() -> int:
    env = os.environ.get("SCHUBERT_ORACLE_BOUND")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_BOUND


def _fmt_root(r) -> str:
    return "(" + ",".join(str(x) for x in r) + ")"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hssrigidity",
                                description="Rigidity certificates for smooth Schubert varieties "
                                            "in Hermitian symmetric spaces.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)
    bound = _bound_default()

    s = sub.add_parser("list-spaces", help="list the Hermitian symmetric spaces")
    s.add_argument("--max-rank", type=int, default=7)

    s = sub.add_parser("schubert", help="list smooth Schubert subdiagrams")
    s.add_argument("space")

    s = sub.add_parser("rigidity", help="rigidity report for one subdiagram")
    s.add_argument("space")
    s.add_argument("--delta", required=True)
    s.add_argument("--format", choices=FORMATS, default="json")
    s.add_argument("--oracle-bound", type=int, default=bound)

    s = sub.add_parser("decompose", help="Kostant components of wedge^k m")
    s.add_argument("space")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--oracle-bound", type=int, default=bound)

    s = sub.add_parser("oracle", help="cohomology and membership oracles")
    s.add_argument("which", choices=["h11", "h1", "membership"])
    s.add_argument("space")
    s.add_argument("--delta", required=True)
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--oracle-bound", type=int, default=bound)

    s = sub.add_parser("verify-main-theorem", help="check the classification over a catalog")
    s.add_argument("--max-rank", type=int, default=7)
    s.add_argument("--oracle-bound", type=int, default=bound)
    s.add_argument("--format", choices=FORMATS, default="table")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--sign-seed", type=int, default=None,
                   help="use a random alternative sign convention")

    s = sub.add_parser("tableau", help="tableau counts")
    s.add_argument("what", choices=["kostka"])
    s.add_argument("shape")
    s.add_argument("content")
    return p


def _cmd_list(args, out):
    if args.max_rank < 1:
        raise UsageError("--max-rank must be positive")
    for md in catalog(args.max_rank):
        flag = "  odd-quadric" if md.odd_quadric else ""
        out.write(f"{md.space_id:7} dim={md.dim:<3} |W^P|={len(md.coset_reps):<4} "
                  f"k_GP={k_invariant(md)}{flag}\n")
    return 0


def _cmd_schubert(args, out):
    md = parse_space(args.space)
    for d in smooth_schubert_varieties(md):
        sc = schubert_class(md, d)
        extra = ""
        if d.marked_type == LINEAR_A:
            extra = " maximal" if is_maximal_linear(md, d) else " non-maximal"
        if len(d.nodes) == md.rs.rank:
            extra += " (full)"
        out.write(f"{','.join(map(str, d.sorted_nodes)):16} {d.marked_type:8} k={sc.k}{extra}\n")
    return 0


def _cmd_rigidity(args, out):
    md = parse_space(args.space)
    d = _delta(md, args.delta)
    r = report_for((md.rs.type_label, md.rs.rank, md.gamma), d.sorted_nodes, args.oracle_bound)
    out.write(emit(r, args.format).decode())
    return 0 if r.match else 1


def _cmd_decompose(args, out):
    md = parse_space(args.space)
    if not 0 <= args.k <= md.dim:
        raise UsageError(f"-k must lie in [0, {md.dim}]")
    cb = build_chevalley(md)
    total = 0
    for rep in md.coset_reps:
        if rep.length != args.k:
            continue
        comp = generate_component(cb, rep, args.oracle_bound)
        total += comp.dim
        out.write(f"w={''.join(map(str, rep.word)) or 'e':12} dim={comp.dim:<6} "
                  f"ideal={' '.join(_fmt_root(r) for r in rep.ideal)}\n")
    out.write(f"total={total} binomial={comb(md.dim, args.k)}\n")
    return 0 if total == comb(md.dim, args.k) else 1


def _cmd_oracle(args, out):
    md = parse_space(args.space)
    d = _delta(md, args.delta)
    cb = build_chevalley(md)
    sc = schubert_class(md, d)
    if args.which == "h11":
        out.write(f"{h11_oracle(cb, sc, args.oracle_bound)}\n")
    elif args.which == "h1":
        r = h1_oracle(cb, sc, args.oracle_bound)
        out.write(f"total={r.total} h11={r.h11} quotient={r.quotient_part}\n")
    else:
        if args.lam:
            lams = [tuple(parse_ints(args.lam, "lambda"))]
            if len(lams[0]) != md.rs.rank or not md.rs.is_root(lams[0]):
                raise UsageError(f"--lambda {args.lam} is not a root of {md.rs.name}")
        else:
            lams = list(compute_D(md, sc).Ddoubleprime)
        for lam in lams:
            try:
                res = "in I_w" if membership_test(cb, sc, lam, args.oracle_bound) else "not in I_w"
            except (NotInM, DegenerateWedge) as e:
                res = f"{type(e).__name__}: {e}"
            out.write(f"{_fmt_root(lam)} {res}\n")
    return 0


def _cmd_verify(args, out):
    if args.max_rank < 1 or args.jobs < 1:
        raise UsageError("--max-rank and --jobs must be positive")
    s = verify_main_theorem(args.max_rank, args.oracle_bound, args.sign_seed, args.jobs)
    out.write(emit(s.reports, args.format, s).decode())
    return 0 if s.ok else 1


def _cmd_tableau(args, out):
    shape = parse_ints(args.shape, "shape")
    content = parse_ints(args.content, "content")
    try:
        out.write(f"{kostka(shape, content)}\n")
    except (ContentMismatch, ValueError) as e:
        raise UsageError(str(e)) from None
    return 0


_COMMANDS = {
    "list-spaces": _cmd_list,
    "schubert": _cmd_schubert,
    "rigidity": _cmd_rigidity,
    "decompose": _cmd_decompose,
    "oracle": _cmd_oracle,
    "verify-main-theorem": _cmd_verify,
    "tableau": _cmd_tableau,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _COMMANDS[args.cmd](args, out)
    except (UsageError, OracleTooLarge) as e:
        err.write(f"error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())
