"""Degree-by-degree invariants and semi-invariants by exact linear algebra.

The action on A = k[x1..xn] is g.x_j = sum_i M[i][j] x_i, extended
multiplicatively.  Bases are returned in reduced echelon form over the
monomials of the degree listed in descending grlex order, so the output is
canonical.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import linalg
from .chars import LinearCharacter, character_from_values
from .errors import ComputationError, InconclusiveError, InputError
from .matgroup import FiniteMatrixGroup, Mat
from .polyalg import MultiPoly, multipoly_gcd


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple:
    """Exponent vectors of total degree d, descending grlex (= lex here)."""
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for a in range(d, -1, -1):
        for rest in monomials(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


class LinearAction:
    """Substitution x_j -> column j of g, with cached monomial images."""

    def __init__(self, g: Mat):
        self.g = g
        self.n = g.n
        f = g.field
        self.field = f
        self.forms = [MultiPoly(self.n, f, {_unit(self.n, i): g.rows[i][j] for i in range(self.n)})
                      for j in range(self.n)]
        self._img = {(0,) * self.n: MultiPoly.const(f, self.n, 1)}

    def image(self, e: tuple) -> MultiPoly:
        out = self._img.get(e)
        if out is None:
            j = next(i for i, a in enumerate(e) if a)
            prev = e[:j] + (e[j] - 1,) + e[j + 1:]
            out = self.image(prev) * self.forms[j]
            self._img[e] = out
        return out

    def apply(self, f: MultiPoly) -> MultiPoly:
        if f.n != self.n:
            raise InputError("dimension mismatch between polynomial and matrix")
        acc: dict = {}
        for e, c in f.terms.items():
            for e2, c2 in self.image(e).terms.items():
                v = acc.get(e2)
                acc[e2] = c * c2 if v is None else v + c * c2
        return MultiPoly(self.n, self.field, acc)

    def matrix(self, d: int):
        """Matrix of g on A_d: column c = image of monomial c."""
        mons = monomials(self.n, d)
        cols = [self.image(e).vector(mons) for e in mons]
        return [list(r) for r in zip(*cols)] if cols else []

    def trace(self, d: int):
        acc = self.field.zero
        for e in monomials(self.n, d):
            c = self.image(e).terms.get(e)
            if c:
                acc = acc + c
        return acc


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


class ActionCache:
    """One LinearAction per group element, built on demand."""

    def __init__(self, G: FiniteMatrixGroup):
        self.group = G
        self._acts = {}

    def __getitem__(self, g: Mat) -> LinearAction:
        act = self._acts.get(g)
        if act is None:
            act = self._acts[g] = LinearAction(g)
        return act


def group_action(g: Mat, f: MultiPoly) -> MultiPoly:
    return LinearAction(g).apply(f)


@dataclass
class GradedBasis:
    degree: int
    polys: list
    character: LinearCharacter | None = None

    @property
    def dim(self) -> int:
        return len(self.polys)


def _solve_eigen(G: FiniteMatrixGroup, d: int, scalar_of, cache: ActionCache | None):
    cache = cache or ActionCache(G)
    n, f = G.n, G.field
    mons = monomials(n, d)
    rows = []
    for g in G.generators:
        mat = cache[g].matrix(d)
        s = scalar_of(g)
        for r, row in enumerate(mat):
            row = list(row)
            row[r] = row[r] - s
            if any(row):
                rows.append(row)
    null = linalg.nullspace(rows, len(mons), f)
    red, _ = linalg.rref(null, len(mons))
    return [MultiPoly(n, f, dict(zip(mons, v))) for v in red]


def invariants_of_degree(G: FiniteMatrixGroup, d: int, cache: ActionCache | None = None) -> GradedBasis:
    if d < 0:
        raise InputError("degree must be nonnegative")
    one = G.field.one
    return GradedBasis(d, _solve_eigen(G, d, lambda g: one, cache))


def semi_invariants_of_degree(G: FiniteMatrixGroup, chi: LinearCharacter, d: int,
                              cache: ActionCache | None = None) -> GradedBasis:
    if d < 0:
        raise InputError("degree must be nonnegative")
    if chi.group is not G and chi.group.elements != G.elements:
        raise InputError("character of a different group")
    return GradedBasis(d, _solve_eigen(G, d, chi.value, cache), chi)


def _require_nonmodular(G):
    p = G.characteristic
    if p and G.order % p == 0:
        raise InputError(f"|G| = {G.order} is divisible by the characteristic {p}")


def reynolds(f: MultiPoly, G: FiniteMatrixGroup, cache: ActionCache | None = None) -> MultiPoly:
    _require_nonmodular(G)
    cache = cache or ActionCache(G)
    acc = MultiPoly.zero(G.field, G.n)
    for g in G.elements:
        acc = acc + cache[g].apply(f)
    return acc * G.field(G.order).inv()


def twisted_projection(f: MultiPoly, G: FiniteMatrixGroup, chi: LinearCharacter,
                       cache: ActionCache | None = None) -> MultiPoly:
    """(1/|G|) sum chi(g) g^{-1}.f, the projection onto A_chi."""
    _require_nonmodular(G)
    cache = cache or ActionCache(G)
    acc = MultiPoly.zero(G.field, G.n)
    for g in G.elements:
        acc = acc + cache[g.inv()].apply(f) * chi.value(g)
    return acc * G.field(G.order).inv()


def eigen_ratio(act: LinearAction, f: MultiPoly):
    """c with g.f = c f; raises ComputationError if f is not an eigenvector."""
    gf = act.apply(f)
    e, c = f.leading_term()
    ratio = gf.terms.get(e, act.field.zero) * c.inv()
    if gf != f * ratio or not ratio:
        raise ComputationError("polynomial is not a semi-invariant")
    return ratio


@dataclass
class SemiInvariantSummary:
    character: LinearCharacter
    max_degree: int
    status: str                       # "ok" or "inconclusive"
    spanning: list = dc_field(default_factory=list)
    d_chi: MultiPoly | None = None
    mu: LinearCharacter | None = None
    cls: LinearCharacter | None = None
    free: bool | None = None

    def to_json(self) -> dict:
        out = {"character": self.character.to_json(), "max_degree": self.max_degree,
               "status": self.status, "up_to_degree": self.max_degree}
        if self.status == "ok":
            out.update({
                "d_chi": self.d_chi.format(),
                "mu_chi": self.mu.to_json(),
                "class": list(self.cls.exponents),
                "free": self.free,
            })
        return out


def dchi_estimate(G: FiniteMatrixGroup, chi: LinearCharacter, D: int,
                  cache: ActionCache | None = None) -> SemiInvariantSummary:
    cache = cache or ActionCache(G)
    span = []
    for d in range(D + 1):
        span.extend(semi_invariants_of_degree(G, chi, d, cache).polys)
    if not span:
        return SemiInvariantSummary(chi, D, "inconclusive")
    dchi = multipoly_gcd(span).monic()
    mu = character_from_values(chi.ab, chi.m, lambda g: eigen_ratio(cache[g], dchi))
    cls = chi.inverse() * mu
    return SemiInvariantSummary(chi, D, "ok", span, dchi, mu, cls, mu == chi)


@dataclass
class TransversalReport:
    entries: list
    injective: bool
    collisions: list
    inconclusive: list
    outside_kernel: list

    @property
    def passed(self) -> bool:
        return self.injective and not self.inconclusive and not self.outside_kernel

    def to_json(self) -> dict:
        return {
            "characters": [e.to_json() for e in self.entries],
            "injective": self.injective,
            "collisions": self.collisions,
            "inconclusive": self.inconclusive,
            "outside_kernel": self.outside_kernel,
            "passed": self.passed,
        }


def transversal_check(G: FiniteMatrixGroup, W: FiniteMatrixGroup, D: int, classgroup,
                      cache: ActionCache | None = None) -> TransversalReport:
    """chi -> cl(A_chi) = [chi^-1 mu_chi] must be injective on ker(res_W)."""
    cache = cache or ActionCache(G)
    entries, seen = [], {}
    collisions, inconclusive, outside = [], [], []
    for i, chi in enumerate(classgroup.characters):
        s = dchi_estimate(G, chi, D, cache)
        entries.append(s)
        if s.status != "ok":
            inconclusive.append(i)
            continue
        if not s.cls.is_trivial_on(W):
            outside.append(i)
        key = s.cls.exponents
        if key in seen:
            collisions.append([seen[key], i])
        else:
            seen[key] = i
    return TransversalReport(entries, not collisions, collisions, inconclusive, outside)


def check_membership(f: MultiPoly, basis: GradedBasis) -> bool:
    """Whether f lies in the span of a graded basis."""
    if f.is_zero():
        return True
    mons = monomials(f.n, basis.degree)
    try:
        linalg.solve_columns([p.vector(mons) for p in basis.polys], [f.vector(mons)], f.field)
    except InputError:
        return False
    return True


def require_nonempty(summary: SemiInvariantSummary):
    if summary.status != "ok":
        raise InconclusiveError(f"A_chi vanishes up to degree {summary.max_degree}")
    return summary
