"""Command-line front end: ``modinv <command> <spec.json> [options]``.

Exit status: 0 on success, 1 on bad input, 2 when an internal check fails.
"""
from __future__ import annotations

import argparse
import json
import sys

from .chars import character_group, class_group
from .engine import GroupSpec, identity_suite, quasi_gorenstein_verdict
from .errors import ComputationError, InputError
from .invariants import ActionCache, invariants_of_degree, semi_invariants_of_degree
from .matgroup import LiftContext, enumerate_group
from .reflect import reflection_report
from .series import brauer_series_sym, trace_series_truncated


def _group(spec):
    return enumerate_group(spec.generators, spec.cap, field=spec.field, n=spec.n)


def _emit(args, data, text):
    if args.json:
        out = json.dumps(data, indent=2) + "\n"
    else:
        out = text.rstrip("\n") + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_analyze(args):
    spec = GroupSpec.load(args.spec)
    rep = quasi_gorenstein_verdict(spec, assert_polynomial=args.assert_polynomial or None,
                                   max_degree=args.max_degree)
    d = rep.data
    v = d["verdict"]
    lines = [
        f"group {d['name']}: order {d['order']}, dim {d['dim']}, field {d['field']}",
        f"reflection subgroup W: order {d['W']['order']} (index {d['W']['index']}); "
        f"W~: order {d['Wtilde']['order']} (index {d['Wtilde']['index']}); NR = {d['NR']}",
        f"class group: {d['class_group']['description']}",
        f"det character trivial: {d['det_character']['trivial']}",
        f"probe of A^{d['probe']['subgroup']}: {d['probe']['status']}, degrees {d['probe']['degrees']} "
        f"(checked to degree {d['probe']['matched_to']})",
    ]
    if d["chi_S"]["available"]:
        lines.append(f"chi_S exponents {d['chi_S']['exponents']} (trivial: {d['chi_S']['trivial']})")
    lines.append(f"verdict: quasi-Gorenstein {v['status'].upper()} by {v['rule']}")
    for c in v["conditions"]:
        lines.append(f"  condition: {c}")
    for c in v["citations"]:
        lines.append(f"  cites: {c}")
    if v["gorenstein"] is not None:
        lines.append(f"  Gorenstein: {v['gorenstein']} (Cohen-Macaulay: {v['cohen_macaulay']})")
    for r in v["remarks"]:
        lines.append(f"  remark: {r}")
    if args.json:
        out = rep.to_json()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    else:
        _emit(args, d, "\n".join(lines))
    return 0


def cmd_series(args):
    spec = GroupSpec.load(args.spec)
    G = _group(spec)
    ctx = LiftContext.for_group(G)
    idx = range(G.order) if args.element is None else [args.element]
    rows, lines = [], []
    for i in idx:
        if not 0 <= i < G.order:
            raise InputError(f"element index {i} out of range 0..{G.order - 1}")
        g = G.elements[i]
        if G.is_p_regular(i):
            r = brauer_series_sym(g, ctx).to_json()
            rows.append({"element": i, **r})
            lines.append(f"{i:4d}  ({r['numerator']})/({r['denominator']})  degree {r['degree']}")
        else:
            tr = [G.field.format(x) for x in trace_series_truncated(g, args.max_degree)]
            rows.append({"element": i, "p_singular": True, "traces": tr})
            lines.append(f"{i:4d}  p-singular; traces on A_0..A_{args.max_degree}: {tr}")
    _emit(args, {"embedding": ctx.describe(), "rows": rows}, "\n".join(lines))
    return 0


def cmd_classgroup(args):
    spec = GroupSpec.load(args.spec)
    G = _group(spec)
    rr = reflection_report(G)
    cg = class_group(G, rr.W)
    data = {"order": cg.order, "invariant_factors": list(cg.invariant_factors),
            "description": cg.describe(), "characters": [c.to_json() for c in cg.characters],
            "W_order": rr.W.order}
    _emit(args, data, f"class group of A^G: {cg.describe()} (order {cg.order})")
    return 0


def cmd_invariants(args):
    spec = GroupSpec.load(args.spec)
    G = _group(spec)
    cache = ActionCache(G)
    data, lines = [], []
    for d in range(args.max_degree + 1):
        b = invariants_of_degree(G, d, cache)
        polys = [p.format() for p in b.polys]
        data.append({"degree": d, "dim": b.dim, "basis": polys})
        lines.append(f"degree {d}: dim {b.dim}" + ("".join(f"\n  {p}" for p in polys)))
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_semiinv(args):
    spec = GroupSpec.load(args.spec)
    G = _group(spec)
    chars = character_group(G)
    if not 0 <= args.character < len(chars):
        raise InputError(f"character index must be in 0..{len(chars) - 1}")
    chi = chars[args.character]
    cache = ActionCache(G)
    data = {"character": chi.to_json(), "degrees": []}
    lines = [f"character {args.character}: exponents {list(chi.exponents)} (m = {chi.m})"]
    for d in range(args.max_degree + 1):
        b = semi_invariants_of_degree(G, chi, d, cache)
        polys = [p.format() for p in b.polys]
        data["degrees"].append({"degree": d, "dim": b.dim, "basis": polys})
        lines.append(f"degree {d}: dim {b.dim}" + ("".join(f"\n  {p}" for p in polys)))
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_check(args):
    spec = GroupSpec.load(args.spec)
    G = _group(spec)
    res = identity_suite(G, args.max_degree)
    lines = []
    for key in ("duality", "lambda_det", "trace_brauer", "isotypic"):
        rows = res[key]
        bad = [r for r in rows if not r["pass"]]
        lines.append(f"{key}: {len(rows) - len(bad)}/{len(rows)} pass")
    if res["molien"] is not None:
        lines.append(f"molien: {'pass' if res['molien']['pass'] else 'FAIL'} "
                     f"({res['molien']['series']})")
    else:
        lines.append("molien: skipped (modular case)")
    _emit(args, res, "\n".join(lines))
    return 0 if res["passed"] else 2


class _Parser(argparse.ArgumentParser):
    # bad flags are input errors (status 1), not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    ap = _Parser(prog="modinv", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("spec", help="group spec JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write output to this file")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full quasi-Gorenstein analysis")
    p.add_argument("--assert-polynomial", action="store_true",
                   help="treat a successful polynomiality probe as proof")
    p.add_argument("--max-degree", type=int, default=None, help="probe degree bound")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("series", parents=[common], help="Brauer character series per element")
    p.add_argument("--element", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=8,
                   help="trace series length for p-singular elements")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("classgroup", parents=[common], help="divisor class group of A^G")
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("invariants", parents=[common], help="bases of (A^G)_d")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("semiinv", parents=[common], help="bases of (A_chi)_d")
    p.add_argument("--character", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_semiinv)

    p = sub.add_parser("check-identities", parents=[common], help="run the identity suite")
    p.add_argument("--max-degree", type=int, default=8)
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "max_degree", None) is not None and args.max_degree < 0:
        print("error: --max-degree must be nonnegative", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
