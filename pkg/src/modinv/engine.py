"""Analysis pipeline: group spec in, quasi-Gorenstein verdict out.

Rules are tried in a fixed order:
  NR-rule                  no pseudo-reflections: decided by det alone;
  reflection-quotient rule Hom(G/W, k*) trivial: the canonical class is trivial;
  w-tilde rule             A^H polynomial (H = W~ in char p, W in char 0):
                           chi_S = prod_i det_i over generator spaces U_i.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import linalg
from .chars import LinearCharacter, character_group, class_group, det_character, graded_det_characters
from .errors import ComputationError, InputError
from .exactnum import make_field
from .invariants import ActionCache, invariants_of_degree, monomials
from .matgroup import (
    DEFAULT_CAP, FiniteMatrixGroup, LiftContext, Mat, abelianization, enumerate_group,
)
from .polyalg import MultiPoly
from .reflect import reflection_report
from .series import graded_poly_series, lambda_via_duality

DEFAULT_DEGREE_CAP = 12


# -------------------------------------------------------------- group specs

@dataclass
class GroupSpec:
    field: object
    n: int
    generators: list
    cap: int = DEFAULT_CAP
    max_degree: int | None = None
    degree_cap: int = DEFAULT_DEGREE_CAP
    subgroup: str = "auto"
    assert_polynomial: bool = False
    name: str | None = None
    raw: dict = dc_field(default_factory=dict)

    @classmethod
    def from_json(cls, data: dict, name: str | None = None) -> "GroupSpec":
        if not isinstance(data, dict):
            raise InputError("group spec must be a JSON object")
        for key in ("field", "dim", "generators"):
            if key not in data:
                raise InputError(f"group spec is missing {key!r}")
        f = make_field(data["field"])
        n = data["dim"]
        if not isinstance(n, int) or n < 1:
            raise InputError(f"dim must be a positive integer, got {n!r}")
        gens = []
        for k, g in enumerate(data["generators"]):
            rows = _matrix_rows(g, n, k)
            gens.append(Mat(f, [[_scalar(f, x) for x in r] for r in rows]))
        opts = data.get("options", {})
        cap = data.get("cap", opts.get("cap", DEFAULT_CAP))
        if not isinstance(cap, int) or cap < 1:
            raise InputError("cap must be a positive integer")
        sub = opts.get("subgroup", "auto")
        if sub not in ("auto", "W", "Wtilde"):
            raise InputError("options.subgroup must be 'auto', 'W' or 'Wtilde'")
        return cls(f, n, gens, cap, opts.get("max_degree"),
                   opts.get("degree_cap", DEFAULT_DEGREE_CAP), sub,
                   bool(opts.get("assert_polynomial", False)),
                   data.get("name", name), data)

    @classmethod
    def load(cls, path) -> "GroupSpec":
        p = Path(path)
        try:
            text = p.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc})") from exc
        return cls.from_json(data, name=p.stem)


def _matrix_rows(g, n, k):
    if isinstance(g, list) and len(g) == n and all(isinstance(r, list) and len(r) == n for r in g):
        return g
    if isinstance(g, list) and len(g) == n * n and not any(isinstance(x, list) for x in g):
        return [g[i * n:(i + 1) * n] for i in range(n)]
    raise InputError(f"generator {k} is not an {n}x{n} matrix")


def _scalar(f, x):
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"unsupported scalar {x!r} (use integers or strings)")
    if isinstance(x, int):
        return f(x)
    if isinstance(x, str):
        return f.parse(x)
    raise InputError(f"unsupported scalar {x!r}")


# ------------------------------------------------------------------- probe

@dataclass
class ProbeResult:
    subgroup_name: str
    subgroup: FiniteMatrixGroup
    max_degree: int
    status: str                    # polynomial | not-polynomial | inconclusive
    dims: list
    generators: list               # (degree, MultiPoly)
    reason: str = ""

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.generators]

    @property
    def succeeded(self) -> bool:
        return self.status == "polynomial"

    def degree_product(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def to_json(self) -> dict:
        out = {
            "subgroup": self.subgroup_name,
            "subgroup_order": self.subgroup.order,
            "status": self.status,
            "degrees": self.degrees,
            "matched_to": self.max_degree,
            "dims": self.dims,
            "generators": [f.format() for _, f in self.generators],
        }
        if self.succeeded:
            out["degree_product"] = self.degree_product()
            out["degree_product_equals_order"] = self.degree_product() == self.subgroup.order
        if self.reason:
            out["reason"] = self.reason
        return out


def _weighted_products(gens, d, n, f):
    """All products of generators (with repetition) of total degree d."""
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(acc)
            return
        for i in range(start, len(gens)):
            gd, gp = gens[i]
            if gd <= remaining:
                rec(i, remaining - gd, acc * gp)

    rec(0, d, MultiPoly.const(f, n, 1))
    return out


def _poly_series_coeffs(degrees, D):
    c = [1] + [0] * D
    for d in degrees:
        for k in range(d, D + 1):
            c[k] += c[k - d]
    return c


def probe_polynomial_structure(H: FiniteMatrixGroup, D: int, name: str = "H",
                               cache: ActionCache | None = None) -> ProbeResult:
    n, f = H.n, H.field
    cache = cache or ActionCache(H)
    gens, dims = [], []
    for d in range(D + 1):
        basis = invariants_of_degree(H, d, cache).polys
        dims.append(len(basis))
        if d == 0:
            continue
        mons = monomials(n, d)
        span = [p.vector(mons) for p in _weighted_products(gens, d, n, f)]
        rank = linalg.rank(span, len(mons))
        for p in basis:
            trial = span + [p.vector(mons)]
            r2 = linalg.rank(trial, len(mons))
            if r2 > rank:
                span, rank = trial, r2
                gens.append((d, p))
        if len(gens) > n:
            return ProbeResult(name, H, d, "not-polynomial", dims, gens,
                               f"{len(gens)} minimal generators for a ring of dimension {n}")
    if len(gens) < n:
        return ProbeResult(name, H, D, "inconclusive", dims, gens,
                           f"only {len(gens)} generators up to degree {D}")
    expect = _poly_series_coeffs([d for d, _ in gens], D)
    if expect != dims:
        return ProbeResult(name, H, D, "not-polynomial", dims, gens,
                           "Hilbert series differs from the product formula")
    return ProbeResult(name, H, D, "polynomial", dims, gens)


# ------------------------------------------------- induced graded actions

def induced_generator_action(G: FiniteMatrixGroup, probe: ProbeResult, elements=None,
                             cache: ActionCache | None = None):
    """Matrices of g on U_i = S_{d_i} / (S+ S+)_{d_i} for each generator degree.

    Returns a list of (degree, {g: Mat}).  Columns hold the coordinates of g
    applied to the generators of that degree, modulo decomposables.
    """
    if not probe.succeeded:
        raise InputError("induced action needs a successful polynomiality probe")
    H = probe.subgroup
    if not H.is_normal_in(G):
        raise ComputationError("probe subgroup is not normal")
    cache = cache or ActionCache(G)
    elements = G.elements if elements is None else elements
    n, f = G.n, G.field
    by_deg = {}
    for d, p in probe.generators:
        by_deg.setdefault(d, []).append(p)
    out = []
    for d in sorted(by_deg):
        lower = [(e, p) for e, p in probe.generators if e < d]
        mons = monomials(n, d)
        dec = [p.vector(mons) for p in _weighted_products(lower, d, n, f)]
        dec, _ = linalg.rref(dec, len(mons))
        gen_vecs = [p.vector(mons) for p in by_deg[d]]
        k = len(gen_vecs)
        act = {}
        for g in elements:
            images = [cache[g].apply(p).vector(mons) for p in by_deg[d]]
            try:
                coords = linalg.solve_columns(gen_vecs + dec, images, f)
            except InputError as exc:
                raise ComputationError(
                    f"group does not preserve the invariant ring of the probe subgroup: {exc}") from exc
            cols = [c[:k] for c in coords]
            act[g] = Mat(f, [[cols[j][i] for j in range(k)] for i in range(k)])
        out.append((d, act))
    return out


# ------------------------------------------------------------------ report

CITE_NR = ("Watanabe (non-modular), Braun: without pseudo-reflections, A^G is "
           "quasi-Gorenstein iff det is trivial")
CITE_QUOTIENT = ("Class group of A^G is Hom(G/W, k*); quasi-Gorenstein iff the canonical "
                 "class [chi_S] vanishes there")
CITE_WTILDE = ("A^H polynomial with generator spaces U_i: chi_S = prod det_i; "
               "quasi-Gorenstein iff prod det_i^-1 = 1 on G")
CITE_GOR = "Cohen-Macaulay + quasi-Gorenstein = Gorenstein"


@dataclass
class AnalysisReport:
    data: dict

    @property
    def verdict(self) -> dict:
        return self.data["verdict"]

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, ensure_ascii=True) + "\n"


def default_degree(G: FiniteMatrixGroup, spec: GroupSpec) -> int:
    if spec.max_degree is not None:
        return int(spec.max_degree)
    return min(max(8, G.order), spec.degree_cap)


def p_regular_representatives(G: FiniteMatrixGroup, H: FiniteMatrixGroup) -> list:
    """One p-regular element per coset gH (first in BFS order)."""
    seen = set()
    reps = []
    for i, g in enumerate(G.elements):
        if not G.is_p_regular(i):
            continue
        key = frozenset(g * h for h in H.elements)
        if key in seen:
            continue
        seen.add(key)
        reps.append(g)
    return reps


def cross_route_check(G, probe, actions, lam_S: LinearCharacter, ctx: LiftContext):
    """lambda_S from determinants vs. the duality limit of the graded series."""
    H = probe.subgroup
    a = -sum(d for d, _ in probe.generators)
    rows = []
    for g in p_regular_representatives(G, H):
        gi = g.inv()
        Hg = graded_poly_series([(d, act[g]) for d, act in actions], ctx)
        Hgi = graded_poly_series([(d, act[gi]) for d, act in actions], ctx)
        val, deg = lambda_via_duality(Hg, Hgi, len(probe.generators), a)
        expected = ctx.lift(lam_S.value(g))
        rows.append({"element": G.index[g], "agree": val == expected and deg == a})
    return rows


def quasi_gorenstein_verdict(spec: GroupSpec, *, assert_polynomial: bool | None = None,
                             max_degree: int | None = None) -> AnalysisReport:
    if assert_polynomial is None:
        assert_polynomial = spec.assert_polynomial
    G = enumerate_group(spec.generators, spec.cap, field=spec.field, n=spec.n)
    p = G.characteristic
    rr = reflection_report(G)
    ab = abelianization(G)
    chars = character_group(G, ab=ab)
    cg = class_group(G, rr.W, chars=chars)
    det = det_character(G, ab)
    ctx = LiftContext.for_group(G)
    nonmodular = not p or G.order % p
    D = max_degree if max_degree is not None else default_degree(G, spec)

    use = spec.subgroup
    if use == "auto":
        use = "Wtilde" if p else "W"
    H = rr.Wtilde if use == "Wtilde" else rr.W
    cache = ActionCache(G)
    probe = probe_polynomial_structure(H, D, use, cache)

    chi_S = None
    chi_json = {"available": False}
    if probe.succeeded:
        actions = induced_generator_action(G, probe, cache=cache)
        dets = graded_det_characters(G, [act for _, act in actions], ab)
        chi_S = dets[0] if dets else chars.trivial()
        for c in dets[1:]:
            chi_S = chi_S * c
        lam_S = chi_S.inverse()
        cross = cross_route_check(G, probe, actions, lam_S, ctx)
        if not all(r["agree"] for r in cross):
            raise ComputationError("lambda_S from determinants disagrees with the duality limit")
        chi_json = {
            "available": True,
            "exponents": list(chi_S.exponents),
            "m": chi_S.m,
            "trivial": chi_S.is_trivial(),
            "det_i": [{"degree": d, "dim": next(iter(act.values())).n, **c.to_json()}
                      for (d, act), c in zip(actions, dets)],
            "cross_check": {"representatives": len(cross),
                            "agree": all(r["agree"] for r in cross)},
        }

    # verdict rules, in order
    conditions, citations = [], []
    answer = None
    if rr.NR:
        answer = det.is_trivial()
        rule, status = "NR-rule", ("yes" if answer else "no")
        citations.append(CITE_NR)
    elif cg.is_trivial():
        answer = True
        rule, status = "reflection-quotient rule", "yes"
        citations.append(CITE_QUOTIENT)
    elif chi_S is not None:
        answer = chi_S.is_trivial()
        rule = "w-tilde rule"
        citations.append(CITE_WTILDE)
        if assert_polynomial:
            status = "yes" if answer else "no"
            conditions.append(f"A^{use} polynomial: asserted by the user "
                              f"(verified up to degree {D})")
        else:
            status = "conditional"
            conditions.append(f"A^{use} is polynomial (verified up to degree {D} only)")
    else:
        rule, status = "none", "inconclusive"
        conditions.append(f"no rule applies: probe of A^{use} is {probe.status} up to degree {D}")

    # agreement between rules whenever more than one applies
    consistency = []
    if chi_S is not None and rule != "w-tilde rule":
        consistency.append({"rule": "w-tilde rule",
                            "agrees": chi_S.is_trivial() == answer})
        if chi_S.is_trivial() != answer:
            raise ComputationError(f"{rule} and the polynomial-probe rule disagree")

    if nonmodular:
        cm = "yes (non-modular)"
    elif probe.succeeded and use == "Wtilde":
        cm = ("yes (A^W~ polynomial and [G:W~] prime to p)" if assert_polynomial
              else "conditional (on A^W~ being polynomial)")
    else:
        cm = "unknown"
    gorenstein = answer if cm.startswith("yes") and status in ("yes", "no") else None
    remarks = []
    if answer and status in ("yes", "no"):
        remarks.append("[chi_S] = 1: the Cohen-Macaulay and Gorenstein loci of A^G coincide")
    if gorenstein is not None:
        citations.append(CITE_GOR)

    verdict = {
        "status": status,
        "quasi_gorenstein": answer,
        "rule": rule,
        "conditions": conditions,
        "citations": citations,
        "cohen_macaulay": cm,
        "gorenstein": gorenstein,
        "assert_polynomial": bool(assert_polynomial),
        "consistency": consistency,
        "remarks": remarks,
    }
    data = {
        "name": spec.name,
        "field": spec.field.descriptor(),
        "dim": G.n,
        "order": G.order,
        "characteristic": p,
        "generators": [g.to_json() for g in G.generators],
        "reflections": rr.table(),
        "NR": rr.NR,
        "W": {"order": rr.W.order, "index": rr.index_W},
        "Wtilde": {"order": rr.Wtilde.order, "index": rr.index_Wtilde},
        "abelianization": {"invariant_factors": list(ab.invariant_factors)},
        "class_group": {
            "invariant_factors": list(cg.invariant_factors),
            "order": cg.order,
            "description": cg.describe(),
            "characters": [list(c.exponents) for c in cg.characters],
        },
        "det_character": {**det.to_json(), "trivial": det.is_trivial()},
        "probe": probe.to_json(),
        "chi_S": chi_json,
        "lift": ctx.describe(),
        "action_convention": "g.x_j = sum_i M[i][j] x_i (matrices act on the variables)",
        "verdict": verdict,
    }
    return AnalysisReport(data)


# --------------------------------------------------------- identity suite

def identity_suite(G: FiniteMatrixGroup, D: int = 8) -> dict:
    """Duality, lambda = det^-1, trace/Brauer and Molien-oracle checks on G."""
    from .invariants import semi_invariants_of_degree
    from .series import (
        brauer_series_sym, duality_check, hilbert_coefficients, isotypic_average,
        lifted_det_inverse, molien_average, trace_series_truncated,
    )

    ctx = LiftContext.for_group(G)
    out = {"duality": [], "lambda_det": [], "trace_brauer": [], "molien": None, "isotypic": []}
    cache = ActionCache(G)
    for i, g in enumerate(G.elements):
        if not G.is_p_regular(i):
            continue
        out["duality"].append({"element": i, "pass": duality_check(g, ctx).passed})
        Hg = brauer_series_sym(g, ctx).H
        Hi = brauer_series_sym(g.inv(), ctx).H
        lam, _ = lambda_via_duality(Hg, Hi, G.n, -G.n)
        out["lambda_det"].append({"element": i, "pass": lam == lifted_det_inverse(g, ctx)})
        traces = trace_series_truncated(g, D)
        coeffs = Hg.series(D)
        ok = all(ctx.reduce(c) == ctx.embed(t) for c, t in zip(coeffs, traces))
        out["trace_brauer"].append({"element": i, "pass": ok})
    p = G.characteristic
    if not p or G.order % p:
        M = molien_average(G, ctx)
        dims = [invariants_of_degree(G, d, cache).dim for d in range(D + 1)]
        out["molien"] = {"series": M.format(), "coefficients": hilbert_coefficients(M, D),
                         "dims": dims, "pass": hilbert_coefficients(M, D) == dims}
        for k, chi in enumerate(character_group(G)):
            F = isotypic_average(G, chi, ctx)
            dims = [semi_invariants_of_degree(G, chi, d, cache).dim for d in range(D + 1)]
            out["isotypic"].append({"character": k, "pass": hilbert_coefficients(F, D) == dims})
    checks = out["duality"] + out["lambda_det"] + out["trace_brauer"] + out["isotypic"]
    out["passed"] = all(c["pass"] for c in checks) and (out["molien"] is None or out["molien"]["pass"])
    return out
