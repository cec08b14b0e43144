"""Command-line front end: ``injspec <group> <command> [options]``.

Exit codes: 0 on success, 1 on domain errors, 2 on parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import descriptors as desc
from .commspec import CommBackend, critical_dimension, maximal_cd_points
from .commspec import specializes as comm_specializes
from .deviation import deviation
from .errors import DomainError, ParseError
from .fdalg import hom_space_dim, indecomposable_injective, injective_spectrum
from .ncspec import heis
from .ncspec.qplane import QuantumPlane
from .polycomm import ideal_dim, minimal_primes_monomial
from .topology import (
    check_cd_monotone,
    check_chain_bound,
    check_t0,
    closed_points_in,
    dot_export,
    generic_in,
    longest_chain,
    specialization_dag,
)

SEED_ENV = "INJSPEC_SEED"


def seed(default: int = 0) -> int:
    """Seed for randomised runs, from ``INJSPEC_SEED`` when set."""
    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw not in (None, "") else default


def table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(map(str, headers))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _yes(b: bool) -> str:
    return "true" if b else "false"


def _split(text: str) -> List[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def _json_arg(text: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {text[1:]}: {exc.strerror}") from exc
    return desc.load_json(text)


# -- handlers --------------------------------------------------------------


def cmd_deviation(args) -> str:
    return str(deviation(desc.poset(_json_arg(args.poset))))


def _ring(args):
    return desc.comm_ring({"vars": _split(args.vars), "mod": _split(args.mod or "")})


def cmd_comm(args) -> str:
    ring = _ring(args)
    if args.cmd == "dim":
        d = ideal_dim(ring.ideal(*_split(args.ideal)))
        return "-inf" if d == float("-inf") else str(d)
    if args.cmd == "minprimes":
        return "\n".join(str(p) for p in minimal_primes_monomial(ring.ideal(*_split(args.ideal))))
    if args.cmd == "maxcd":
        pts = maximal_cd_points(ring, ring.ideal(*_split(args.ideal)))
        return table(["point", "cd"], [(p, critical_dimension(p)) for p in pts])
    if args.cmd == "specializes":
        a = desc.comm_point(ring, _json_arg(args.a))
        b = desc.comm_point(ring, _json_arg(args.b))
        return _yes(comm_specializes(a, b))
    # closure
    p = desc.comm_point(ring, _json_arg(args.point))
    ws = [desc.comm_point(ring, q) for q in _json_arg(args.points)]
    backend = CommBackend(ring)
    return "\n".join(backend.label(q) for q in ws if comm_specializes(p, q))


def cmd_fdalg(args) -> str:
    alg = desc.algebra(_json_arg(args.algebra))
    if args.cmd == "spectrum":
        spec = injective_spectrum(alg)
        rows = [(pt, spec.injectives[pt.vertex].dim_vector(), "closed") for pt in spec.points]
        return table(["point", "dims", "status"], rows) + f"\ntopology: {spec.topology}"
    if args.cmd == "hom":
        m = desc.representation(alg, _json_arg(args.m))
        n = desc.representation(alg, _json_arg(args.n))
        return str(hom_space_dim(m, n))
    inj = indecomposable_injective(alg, args.vertex)
    lines = [f"dims: {inj.dim_vector()}"]
    for a in alg.arrows:
        lines.append(f"{a.name}: {[list(map(str, row)) for row in inj.maps[a.name]]}")
    return "\n".join(lines)


def cmd_qplane(args) -> str:
    qp = QuantumPlane(desc.fraction(args.q))
    if args.cmd == "chain":
        rows = [(n, level, w, w.mu) for n, (level, w) in enumerate(qp.descending_chain_witness(desc.fraction(args.lam), args.n))]
        return table(["n", "level", "witness", "mu"], rows)
    if args.cmd == "hom":
        return _yes(qp.hom_to_simple_hull(desc.fraction(args.lam), args.n, desc.fraction(args.mu)))
    a = desc.qplane_point(qp, _json_arg(args.a))
    b = desc.qplane_point(qp, _json_arg(args.b))
    return _yes(qp.specializes(a, b))


def cmd_heis(args) -> str:
    if args.cmd == "specializes":
        a = desc.heis_point(_json_arg(args.a))
        b = desc.heis_point(_json_arg(args.b))
        return _yes(heis.specializes(a, b))
    f, g = heis.zpoly(args.f), heis.zpoly(args.g)
    pt = heis.GLRationalP(f, g)
    f, g = pt.f, pt.g
    sample = []
    for alpha in map(desc.fraction, _split(args.alphas)):
        if alpha != 0 and g(alpha) != 0:
            sample.append(heis.FiberClosed(alpha, heis.PFamily(f(alpha) / g(alpha))))
    if g(0) != 0:
        c = f(0) / g(0)
        line = heis.FIBER0_RING.poly_ring.var("p") - c
        sample.append(heis.Fiber0Point(heis.FIBER0_RING.point(line)))
    rows = []
    for b in heis.closure_gl(f, g, sample):
        if isinstance(b, heis.FiberClosed):
            rows.append((b.alpha, "p", b.family.c, b))
        else:
            rows.append((0, "line", "-", b))
    return table(["alpha", "family", "param", "point"], rows)


def cmd_dag(args) -> str:
    backend, points = desc.working_set(_json_arg(args.ws))
    dag = specialization_dag(backend, points, workers=args.workers)
    if args.cmd == "dot" or args.format == "dot":
        return dot_export(dag).rstrip("\n")
    if args.cmd == "build":
        rows = [(dag.label(a), dag.label(b)) for a, b in dag.edges]
        out = table(["from", "to"], sorted(rows))
        generic = generic_in(dag)
        closed = sorted(dag.label(p) for p in closed_points_in(dag))
        return out + f"\ngeneric: {dag.label(generic) if generic is not None else 'none'}\nclosed: {', '.join(closed)}"
    if args.cmd == "t0":
        ok, bad = check_t0(dag)
        return _yes(ok) + "".join(f"\n{dag.label(a)} <-> {dag.label(b)}" for a, b in bad)
    lines = [f"longest chain: {longest_chain(dag)}"]
    if args.d is not None:
        lines.append(f"bound d+1 = {args.d + 1}: {_yes(check_chain_bound(dag, args.d))}")
    if args.cd:
        ok, bad = check_cd_monotone(backend, dag)
        lines.append(f"cd monotone: {_yes(ok)}" + "".join(f"\n  {dag.label(a)} -> {dag.label(b)}" for a, b in bad))
    return "\n".join(lines)


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="injspec", description="Injective spectra of rings and algebras.")
    p.add_argument("--format", choices=["table", "dot"], default="table")
    groups = p.add_subparsers(dest="group", required=True)

    g = groups.add_parser("deviation", help="deviation of a poset descriptor")
    g.add_argument("--poset", required=True, help="JSON descriptor or @file")
    g.set_defaults(func=cmd_deviation)

    g = groups.add_parser("comm", help="commutative noetherian rings")
    sub = g.add_subparsers(dest="cmd", required=True)
    for name in ("dim", "closure", "specializes", "minprimes", "maxcd"):
        s = sub.add_parser(name)
        s.add_argument("--vars", required=True, help="comma-separated variables")
        s.add_argument("--mod", help="comma-separated relations of the base ring")
        if name in ("dim", "minprimes", "maxcd"):
            s.add_argument("--ideal", required=True, help="comma-separated generators")
        elif name == "specializes":
            s.add_argument("--a", required=True, help='prime generators as JSON, e.g. ["x"]')
            s.add_argument("--b", required=True)
        else:
            s.add_argument("--point", required=True)
            s.add_argument("--points", required=True, help="JSON list of primes")
    g.set_defaults(func=cmd_comm)

    g = groups.add_parser("fdalg", help="finite-dimensional quiver algebras")
    sub = g.add_subparsers(dest="cmd", required=True)
    for name in ("spectrum", "hom", "injective"):
        s = sub.add_parser(name)
        s.add_argument("--algebra", required=True, help="JSON descriptor or @file")
        if name == "hom":
            s.add_argument("--m", required=True)
            s.add_argument("--n", required=True)
        if name == "injective":
            s.add_argument("--vertex", required=True)
    g.set_defaults(func=cmd_fdalg)

    g = groups.add_parser("qplane", help="quantum plane")
    sub = g.add_subparsers(dest="cmd", required=True)
    for name in ("chain", "specializes", "hom"):
        s = sub.add_parser(name)
        s.add_argument("--q", required=True)
        if name in ("chain", "hom"):
            s.add_argument("--lambda", dest="lam", required=True)
            s.add_argument("--n", type=int, required=True)
        if name == "hom":
            s.add_argument("--mu", required=True)
        if name == "specializes":
            s.add_argument("--a", required=True)
            s.add_argument("--b", required=True)
    g.set_defaults(func=cmd_qplane)

    g = groups.add_parser("heis", help="Heisenberg enveloping algebra")
    sub = g.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("closure")
    s.add_argument("--f", required=True)
    s.add_argument("--g", default="1")
    s.add_argument("--alphas", required=True, help="comma-separated fibre parameters")
    s = sub.add_parser("specializes")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    g.set_defaults(func=cmd_heis)

    g = groups.add_parser("dag", help="specialisation DAG of a working set")
    sub = g.add_subparsers(dest="cmd", required=True)
    for name in ("build", "t0", "chain", "dot"):
        s = sub.add_parser(name)
        s.add_argument("--ws", required=True, help="working-set JSON or @file")
        s.add_argument("--workers", type=int, default=1)
        s.add_argument("--output", help="write to this file instead of standard output")
        s.add_argument("--format", choices=["table", "dot"], default=argparse.SUPPRESS)
        if name == "chain":
            s.add_argument("--d", type=int, help="check the chain bound d+1")
            s.add_argument("--cd", action="store_true", help="also audit cd monotonicity")
    g.set_defaults(func=cmd_dag)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    target = getattr(args, "output", None)
    if target:
        Path(target).write_text(out + "\n")
    else:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
