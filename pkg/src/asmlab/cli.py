"""Command-line interface: ``asmlab <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Callable, Sequence

from . import asm as asm_mod
from . import codec
from . import fpl as fpl_mod
from . import gyration as gy
from . import height as ht
from . import render as rd
from . import sixvertex as sv
from . import tl_algebra as tl
from .lattice import interior_plaquettes
from .verify import SUITES, run_suite

DEFAULT_MAX_N = 7
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class LimitExceeded(UsageError):
    pass


def max_n() -> int:
    raw = os.environ.get("ASMLAB_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ASMLAB_MAX_N must be an integer, got {raw!r}") from None


def check_size(args: argparse.Namespace, n: int | None = None) -> int:
    n = args.n if n is None else n
    if n is None:
        raise UsageError("-n is required")
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    cap = max_n()
    if n > cap and not getattr(args, "allow_large", False):
        raise LimitExceeded(f"n={n} exceeds the size cap {cap}; pass --allow-large or set ASMLAB_MAX_N")
    return n


def read_input(args: argparse.Namespace) -> str:
    if getattr(args, "input", None):
        try:
            with open(args.input, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
    return sys.stdin.read()


def read_object(args: argparse.Namespace, kind: str | None = None) -> Any:
    try:
        return codec.loads(read_input(args), kind)
    except codec.PayloadError as exc:
        raise UsageError(str(exc)) from exc


def emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# commands ---------------------------------------------------------------------

ENUMERATORS: dict[str, Callable[[int], Any]] = {
    "asm": asm_mod.enumerate_asms,
    "sixvertex": sv.enumerate_sixvertex,
    "fpl": lambda n: fpl_mod.enumerate_fpls(n, fpl_mod.MINUS),
    "height": ht.enumerate_heights,
    "linkpattern": fpl_mod.enumerate_link_patterns,
}


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = check_size(args)
    items = list(ENUMERATORS[args.kind](n))
    if args.format == "count":
        emit(args, f"{len(items)}\n")
    else:
        body = {"n": n, "count": len(items), "items": [codec.payload(x) for x in items]}
        emit(args, codec.to_text(codec.envelope(args.kind, body)))
    return EXIT_OK


def _to_state(obj: Any) -> sv.IceState:
    if isinstance(obj, sv.IceState):
        return obj
    if isinstance(obj, asm_mod.Asm):
        return sv.asm_to_sixvertex(obj)
    if isinstance(obj, ht.HeightFn):
        return ht.height_to_state(obj)
    if isinstance(obj, fpl_mod.EdgeColoring):
        return fpl_mod.fpl_to_sixvertex(obj)
    raise UsageError(f"cannot convert a {codec.kind_of(obj)} payload")


def convert(obj: Any, target: str) -> Any:
    if isinstance(obj, asm_mod.Asm) and target == "height":
        return ht.asm_to_height(obj)
    if isinstance(obj, ht.HeightFn) and target == "asm":
        return ht.height_to_asm(obj)
    state = _to_state(obj)
    if target == "sixvertex":
        return state
    if target == "asm":
        return sv.sixvertex_to_asm(state)
    if target == "height":
        return ht.state_to_height(state)
    if target == "fpl":
        return fpl_mod.sixvertex_to_fpl(state)
    raise UsageError(f"unknown target {target!r}")


def cmd_convert(args: argparse.Namespace) -> int:
    obj = read_object(args, args.source)
    try:
        out = convert(obj, args.target)
    except (ValueError, sv.NotOpenBoundary) as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc
    emit(args, codec.to_text(codec.dump(out)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    n = check_size(args)
    results = run_suite(args.suite, n)
    passed = all(r.passed for r in results)
    if args.format == "text":
        lines = []
        for r in results:
            for c in r.checks:
                mark = "PASS" if c.passed else "FAIL"
                detail = f" ({c.detail})" if c.detail else ""
                lines.append(f"{mark} {r.suite}: {c.name}{detail}")
        lines.append(f"{'PASS' if passed else 'FAIL'} {args.suite} n={n}")
        emit(args, "\n".join(lines) + "\n")
    else:
        body = {"suite": args.suite, "n": n, "passed": passed, "results": [r.to_json() for r in results]}
        emit(args, codec.to_text(codec.envelope("verify", body)))
    return EXIT_OK if passed else EXIT_FAIL


def _orbit_json(o: gy.Orbit) -> dict:
    sums = {
        f"{a.i},{a.j}": sum(gy.n_alpha(g, a) for g in o.members)
        for a in interior_plaquettes(o.base.n)
    }
    return {"period": o.period, "members": [codec.payload(g) for g in o.members], "nalpha_sums": sums}


def cmd_orbit(args: argparse.Namespace) -> int:
    if args.n is None:
        f = read_object(args, "fpl")
        if not fpl_mod.has_boundary(f, fpl_mod.MINUS):
            raise UsageError("orbits are defined for FPLs with boundary tau_minus")
        orbs = [gy.orbit(f)]
        n = f.n
        summary = None
    else:
        n = check_size(args)
        orbs = gy.orbits(fpl_mod.enumerate_fpls(n, fpl_mod.MINUS))
        summary = gy.period_report(n)
    body: dict = {"n": n, "orbits": [_orbit_json(o) for o in orbs]}
    if summary is not None:
        body["summary"] = summary
    emit(args, codec.to_text(codec.envelope("orbits", body)))
    return EXIT_OK


def cmd_psi(args: argparse.Namespace) -> int:
    n = check_size(args)
    try:
        bd = fpl_mod.parse_boundary(args.boundary)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.refined:
        table = fpl_mod.psi_refined(n, bd, args.cycles)
        records = [
            {"black": [list(p) for p in b.pairs], "white": [list(p) for p in w.pairs],
             "cycles": l, "count": c}
            for (b, w, l), c in table.items()
        ]
    else:
        records = [
            {"pattern": [list(p) for p in mu.pairs], "count": c}
            for mu, c in fpl_mod.psi_table(n, bd).items()
        ]
    body = {"n": n, "boundary": bd, "refined": args.refined, "records": records}
    if args.refined:
        body["cycles"] = args.cycles
    emit(args, codec.to_text(codec.envelope("psi", body)))
    return EXIT_OK


def cmd_poset(args: argparse.Namespace) -> int:
    n = args.n
    if n is None or n < 1:
        raise UsageError("-n must be a positive integer")
    if args.format == "dot":
        emit(args, ht.hasse_dot(n))
        return EXIT_OK
    body: dict = {
        "n": n,
        "elements": [list(x) for x in ht.poset_elements(n)],
        "covers": [[list(lo), list(hi)] for lo, hi in ht.cover_pairs(n)],
        "rank_polynomial": ht.rank_polynomial(n),
        "rank_census": ht.rank_census(n),
    }
    if args.ideals:
        check_size(args, n)
        ideals = ht.enumerate_order_ideals(n)
        image = {ht.iota(h) for h in ht.enumerate_heights(n)}
        body["ideal_count"] = len(ideals)
        body["iota_image_size"] = len(image)
    emit(args, codec.to_text(codec.envelope("poset", body)))
    return EXIT_OK


TL_OPS: dict[str, Callable[[argparse.Namespace], Callable[[tl.LinkVector], tl.LinkVector]]] = {
    "hamiltonian": lambda a: tl.hamiltonian,
    "sym": lambda a: tl.sym,
    "rotate": lambda a: lambda v: tl.lift_linear(tl.rotate, v),
    "rotate-inv": lambda a: lambda v: tl.lift_linear(tl.rotate_inv, v),
    "matchmaker": lambda a: lambda v: tl.lift_linear(lambda mu: tl.matchmaker(a.j, mu), v),
}


def _tl_operator(args: argparse.Namespace) -> Callable[[tl.LinkVector], tl.LinkVector]:
    if args.op == "matchmaker" and args.j is None:
        raise UsageError("--op matchmaker needs -j")
    return TL_OPS[args.op](args)


def cmd_tl(args: argparse.Namespace) -> int:
    action = args.action
    if action == "apply":
        mu = read_object(args, "linkpattern")
        if args.op == "matchmaker" and args.j is not None and not 1 <= args.j <= 2 * mu.n:
            raise UsageError(f"-j must lie in 1..{2 * mu.n}")
        vec = _tl_operator(args)(tl.LinkVector.basis(mu))
        body: dict = {"n": mu.n, "op": args.op, "vector": vec.to_json()}
        emit(args, codec.to_text(codec.envelope("linkvector", body)))
        return EXIT_OK
    n = check_size(args)
    basis = fpl_mod.enumerate_link_patterns(n)
    if action == "basis":
        body = {"n": n, "basis": [[list(p) for p in mu.pairs] for mu in basis]}
    elif action == "matrix":
        if args.op == "matchmaker" and args.j is not None and not 1 <= args.j <= 2 * n:
            raise UsageError(f"-j must lie in 1..{2 * n}")
        body = {
            "n": n,
            "op": args.op,
            "basis": [[list(p) for p in mu.pairs] for mu in basis],
            "matrix": tl.operator_matrix(_tl_operator(args), n),
        }
    elif action == "s-vector":
        _, s_link = tl.build_s_vectors(n)
        body = {"n": n, "vector": s_link.to_json()}
    elif action == "classes":
        body = {"n": n, "classes": [[[list(p) for p in mu.pairs] for mu in c] for c in tl.rotation_classes(n)]}
    else:
        body = {"n": n, "relations": tl.tl_relation_report(n)}
    emit(args, codec.to_text(codec.envelope("tl", body)))
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    if args.kind == "poset":
        if args.n is None:
            raise UsageError("render --kind poset needs -n")
        if args.format != "dot":
            raise UsageError("posets render only as dot")
        emit(args, ht.hasse_dot(args.n))
        return EXIT_OK
    obj = read_object(args, args.kind)
    try:
        emit(args, rd.render(obj, args.format))
    except rd.BadPayload as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


# parser --------------------------------------------------------------------------


def _io(p: argparse.ArgumentParser, needs_input: bool = False) -> None:
    if needs_input:
        p.add_argument("--in", dest="input", metavar="FILE", help="read the payload from FILE (default: stdin)")
    p.add_argument("--out", dest="output", metavar="FILE", help="write to FILE instead of stdout")


def _size(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("-n", type=int, required=required, help="size")
    p.add_argument("--allow-large", action="store_true", help="ignore the size cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmlab",
        description="ASMs, ice states, height functions, fully packed loops and link patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list or count all objects of one kind")
    p.add_argument("kind", choices=sorted(ENUMERATORS))
    _size(p)
    p.add_argument("--format", choices=["json", "count"], default="json")
    _io(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("convert", help="map an object through the bijections")
    p.add_argument("--from", dest="source", choices=["asm", "sixvertex", "height", "fpl"])
    p.add_argument("--to", dest="target", required=True, choices=["asm", "sixvertex", "height", "fpl"])
    _io(p, needs_input=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    _size(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    _io(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="gyration orbits of all FPLs of size n, or of one FPL")
    _size(p, required=False)
    _io(p, needs_input=True)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("psi", help="FPL counts by link pattern")
    _size(p)
    p.add_argument("--boundary", default="-", help="'-' (default) or '+'")
    p.add_argument("--refined", action="store_true", help="split by white pattern and cycle count")
    p.add_argument("--cycles", choices=["both", "black", "white"], default="both",
                   help="which cycles the refined table counts")
    _io(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("poset", help="the poset of triples: elements, covers, ranks")
    _size(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--ideals", action="store_true", help="also count order ideals and the image of iota")
    _io(p)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("tl", help="operators on the link-pattern vector space")
    p.add_argument("action", choices=["basis", "matrix", "apply", "s-vector", "classes", "relations"])
    _size(p, required=False)
    p.add_argument("--op", choices=sorted(TL_OPS), default="hamiltonian")
    p.add_argument("-j", type=int, help="matchmaker index")
    _io(p, needs_input=True)
    p.set_defaults(func=cmd_tl)

    p = sub.add_parser("render", help="draw an object as ascii, svg or dot")
    p.add_argument("--kind", choices=list(codec.KINDS) + ["poset"])
    p.add_argument("--format", choices=["ascii", "svg", "dot"], default="ascii")
    p.add_argument("-n", type=int, help="size (posets only)")
    _io(p, needs_input=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"asmlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
