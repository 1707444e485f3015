"""Command line front end.

    curvesing polygon --char 2 --poly "x^2+y^3"
    curvesing semigroup --gens 4,6,13
    curvesing verify --spec curves.json --json

Exit status: 0 on success, 1 when a verification check fails (or the i0
routes disagree), 2 on bad input.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import __version__
from .branch import ParamBranch, char_exponents_from_param, implicitize
from .corpus import generate_corpus
from .curve import spec_from_json
from .edges import degeneracy_report
from .errors import CommonComponentError, ConsistencyError, CurveSingError, ShearError
from .field import Field
from .intersection import i0_dim_oracle, i0_local, i0_param, i0_resultant, milnor_number
from .invariants import invariants_bundle
from .newton import newton_polygon, polygon_to_json
from .poly import parse_poly, parse_series
from .semigroup import (
    conductor_by_gaps,
    cota_check,
    puiseux_sequence,
    semigroup_from_generators,
)
from .verify import verify_corpus, verify_theorem


class InputError(Exception):
    pass


def _field(args) -> Field:
    try:
        return Field(args.char)
    except CurveSingError as exc:
        raise InputError(str(exc)) from exc


def _poly(args, text: str):
    f = parse_poly(text, _field(args))
    if args.trunc is not None:
        f = f.truncate(args.trunc)
    return f


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        json.dump(data, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


# -- subcommands ---------------------------------------------------------------


def cmd_polygon(args) -> int:
    f = _poly(args, args.poly)
    N = newton_polygon(f)
    data = polygon_to_json(N)
    data["polynomial"] = f.render()
    lines = [f"f = {f.render()}", f"vertices: {' '.join(str(v) for v in N.vertices)}"]
    if N.axis_offsets != (0, 0):
        lines.append(f"monomial factor x^{N.axis_offsets[0]} y^{N.axis_offsets[1]}")
    for S in N.edges:
        lines.append(f"edge {S.start} -> {S.end}: (h, v, r) = ({S.h}, {S.v}, {S.r})")
    t = data["totals"]
    lines.append(f"totals: h = {t['h']}, v = {t['v']}, bracket = {t['bracket']}, r(N) = {t['r']}")
    lines += [f"warning: {w}" for w in N.warnings]
    _emit(args, data, lines)
    return 0


def cmd_invariants(args) -> int:
    f = _poly(args, args.poly)
    inv = invariants_bundle(f)
    data = inv.to_json()
    lines = [
        f"mu(N) = {inv.mu_N}",
        f"r(N) = {inv.r_N}",
        f"delta(N) = {inv.delta_N}",
        "routes: " + ", ".join(f"{k} {v}" for k, v in inv.routes.items()),
    ]
    lines += [f"note: {n}" for n in inv.notes]
    _emit(args, data, lines)
    return 0


def cmd_nondeg(args) -> int:
    f = _poly(args, args.poly)
    rep = degeneracy_report(f)
    lines = [
        f"non-degenerate: {rep.nondegenerate}",
        f"strongly non-degenerate: {rep.strongly_nondegenerate}",
        f"  (edges only: {rep.edges_only_strong})",
    ]
    for e in rep.per_edge:
        lines.append(
            f"edge {e.edge.start} -> {e.edge.end}: squarefree {e.squarefree}, "
            f"multiplicities {list(e.multiplicities)}, torus-critical {e.torus_critical}"
        )
    for v, crit in rep.per_vertex:
        if crit:
            lines.append(f"vertex {v}: torus-critical")
    lines += [f"note: {n}" for n in rep.notes]
    _emit(args, rep.to_json(), lines)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_semigroup(args) -> int:
    S = semigroup_from_generators(_int_list(args.gens))
    data = S.to_json()
    data["gaps"] = S.gaps()
    data["conductor_by_gaps"] = conductor_by_gaps(S)
    lines = [
        f"minimal generators: {list(S.generators)}",
        f"conductor: {S.conductor}",
        f"gaps: {len(S.gaps())}",
        f"plane branch semigroup: {S.plane}",
    ]
    if len(S.generators) >= 2:
        v0, v1 = S.generators[:2]
        bound = (v0 - 1) * (v1 - 1) + gcd(v0, v1) - 1
        holds, iff = cota_check(S)
        data["cota"] = {"bound": bound, "holds": holds, "equality_iff_coprime": iff}
        lines.append(f"cota bound: {S.conductor} >= {bound} ({'holds' if holds else 'FAILS'})")
    if S.plane:
        b = puiseux_sequence(S)
        data["puiseux"] = list(b)
        lines.append(f"Puiseux characteristic: {list(b)}")
    _emit(args, data, lines)
    return 0


def _param(args, F) -> ParamBranch:
    return ParamBranch(parse_series(args.x, F), parse_series(args.y, F))


def cmd_branch(args) -> int:
    F = _field(args)
    b = _param(args, F)
    beta, S = char_exponents_from_param(b)
    data = {"param": b.to_json(), "characteristic_exponents": list(beta), "semigroup": S.to_json()}
    lines = [
        f"characteristic exponents: {list(beta)}",
        f"semigroup: <{', '.join(map(str, S.generators))}>, conductor {S.conductor}",
    ]
    if args.equation:
        eq = implicitize(b)
        data["equation"] = eq.render()
        lines.append(f"equation: {eq.render()}")
    _emit(args, data, lines)
    return 0


def _route(fn, *a):
    try:
        return fn(*a)
    except CommonComponentError:
        return "infinite"
    except ShearError as exc:
        return f"unavailable: {exc}"


def cmd_i0(args) -> int:
    F = _field(args)
    g = _poly(args, args.g)
    results = {}
    if args.x is not None or args.y is not None:
        if args.x is None or args.y is None or args.f is not None:
            raise InputError("give either --f or both --x and --y")
        b = _param(args, F)
        results["param"] = _route(i0_param, b, g)
        f = implicitize(b)
    elif args.f is not None:
        f = _poly(args, args.f)
    else:
        raise InputError("give --f or a parametrization --x/--y")
    exact = f.truncation is None and g.truncation is None
    if exact:
        results["resultant"] = _route(i0_resultant, f, g)
        results["dim_oracle"] = _route(i0_dim_oracle, f, g)
    results["local"] = _route(i0_local, f, g)
    values = {v for v in results.values() if isinstance(v, int) or v == "infinite"}
    agree = len(values) == 1
    data = {"f": f.render(), "g": g.render(), "routes": results, "agree": agree}
    lines = [f"{k}: {v}" for k, v in results.items()]
    lines.append("routes agree" if agree else "ROUTES DISAGREE")
    _emit(args, data, lines)
    return 0 if agree else 1


def cmd_milnor(args) -> int:
    f = _poly(args, args.poly)
    m = milnor_number(f)
    data = {"polynomial": f.render(), "milnor": m.to_json(), "reason": m.reason}
    _emit(args, data, [f"milnor number: {m.to_json() if m.finite else m.reason}"])
    return 0


def _load_specs(args):
    try:
        with open(args.spec) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.spec}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.spec}: invalid JSON ({exc})") from exc
    single = isinstance(data, dict)
    items = [data] if single else data
    if not isinstance(items, list):
        raise InputError("spec file must hold a curve object or an array of them")
    return single, [spec_from_json(d, default_char=args.char) for d in items]


def _report_lines(rep) -> list[str]:
    status = "ok" if rep.ok else "FAIL"
    line = (
        f"{rep.id or '-'} char {rep.characteristic}: mu-bar {rep.mu_bar}, mu(N) {rep.mu_N}, "
        f"r {rep.r_f}, r(N) {rep.r_N}, nondeg {rep.nondegenerate}, "
        f"strong {rep.strongly_nondegenerate}, milnor {rep.milnor}  [{status}]"
    )
    out = [line]
    for c in rep.failed:
        out.append(f"    failed {c.name}: {c.lhs} {c.relation} {c.rhs}")
    return out


def cmd_verify(args) -> int:
    single, specs = _load_specs(args)
    if single:
        reports = [verify_theorem(specs[0], milnor=not args.no_milnor)]
    else:
        reports = verify_corpus(specs, milnor=not args.no_milnor, workers=args.workers)
    payload = [r.to_json() for r in reports]
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    nfail = sum(1 for r in reports if not r.ok)
    if args.json:
        json.dump(payload[0] if single else payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        lines = []
        for r in reports:
            lines += _report_lines(r)
        lines.append(f"{len(reports)} curve(s), {nfail} with failed checks")
        sys.stdout.write("\n".join(lines) + "\n")
    return 1 if nfail else 0


def cmd_corpus(args) -> int:
    chars = _int_list(args.chars) if args.chars else [args.char] if args.char_given else [0, 2, 3, 5, 7]
    for p in chars:
        Field(p)
    specs = generate_corpus(args.seed, args.count, chars)
    payload = [s.to_json() for s in specs]
    text = json.dumps(payload, indent=1) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        if not args.json:
            print(f"wrote {len(specs)} curves to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


# -- parser --------------------------------------------------------------------


def _global_flags(parser, defaults=True):
    # Subcommands repeat the global flags with suppressed defaults, so a flag
    # given before the subcommand is not overwritten by the subparser.
    def d(value):
        return value if defaults else argparse.SUPPRESS

    parser.add_argument("--char", type=int, default=d(None), metavar="P", help="field characteristic (0 or a prime; default 0)")
    parser.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    parser.add_argument("--seed", type=int, default=d(1), metavar="N", help="corpus seed")
    parser.add_argument("--trunc", type=int, default=d(None), metavar="D", help="treat input series as known up to total degree D")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, defaults=False)

    ap = argparse.ArgumentParser(prog="curvesing", description=__doc__.split("\n")[0])
    _global_flags(ap)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("polygon", cmd_polygon, "Newton polygon and its measures")
    p.add_argument("--poly", required=True)
    p = add("invariants", cmd_invariants, "mu, delta and r of the Newton polygon")
    p.add_argument("--poly", required=True)
    p = add("nondeg", cmd_nondeg, "non-degeneracy and strong non-degeneracy")
    p.add_argument("--poly", required=True)
    p = add("milnor", cmd_milnor, "Milnor number (local intersection of the partials)")
    p.add_argument("--poly", required=True)
    p = add("semigroup", cmd_semigroup, "semigroup from generators, conductor, cota bound")
    p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 4,6,13")
    p = add("branch", cmd_branch, "characteristic exponents and semigroup of a parametrization")
    p.add_argument("--x", required=True, help="x(t), e.g. t^4")
    p.add_argument("--y", required=True, help="y(t), e.g. t^6+t^7")
    p.add_argument("--equation", action="store_true", help="also print the implicit equation")
    p = add("i0", cmd_i0, "intersection multiplicity by every available route")
    p.add_argument("--f")
    p.add_argument("--x", help="parametrization of the first branch instead of --f")
    p.add_argument("--y")
    p.add_argument("--g", required=True)
    p = add("verify", cmd_verify, "check the Newton-polygon inequalities on a curve or corpus")
    p.add_argument("--spec", required=True, help="JSON file: one curve object or an array")
    p.add_argument("--no-milnor", action="store_true", help="skip the Milnor number checks")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", help="also write the JSON report array here")
    p = add("corpus", cmd_corpus, "generate a deterministic curve corpus")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--chars", help="comma-separated characteristics (default 0,2,3,5,7)")
    p.add_argument("--out")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.char_given = args.char is not None
    if args.char is None:
        args.char = 0
    try:
        return args.func(args)
    except (InputError, ValueError, OverflowError) as exc:
        print(f"curvesing {args.command}: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"curvesing {args.command}: internal cross-check failed: {exc}", file=sys.stderr)
        return 1
    except CurveSingError as exc:
        print(f"curvesing {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
