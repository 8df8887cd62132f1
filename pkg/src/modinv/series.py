"""Brauer character series, the duality identity and Molien-type averages.

For p-regular g with lifted eigenvalues zeta_L^{j_i}, the Brauer series of
A = Sym(V*) is 1 / prod(1 - zeta_L^{j_i} t).  All series of one group live
over the single field Q(zeta_L) of its LiftContext.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import ComputationError, InputError, PSingularError
from .exactnum import rational_field
from .invariants import LinearAction
from .matgroup import FiniteMatrixGroup, LiftContext, Mat, element_order
from .polyalg import RationalFunction, UPoly


@dataclass
class BrauerSeriesResult:
    element: Mat
    H: RationalFunction
    context: LiftContext
    exponents: list

    @property
    def degree(self) -> int:
        return self.H.degree()

    def to_json(self) -> dict:
        return {
            "numerator": self.H.num.format(),
            "denominator": self.H.den.format(),
            "degree": self.degree,
            "eigen_exponents": self.exponents,
            "embedding": self.context.describe(),
        }


def _linear_product(cyclo, factors) -> UPoly:
    """prod (1 - zeta^j t^d) for (j, d) in factors, over Q(zeta_L)."""
    out = UPoly(cyclo, [cyclo.one])
    for j, d in factors:
        out = out * UPoly(cyclo, [cyclo.one] + [cyclo.zero] * (d - 1) + [-cyclo.zeta(j)])
    return out


def _require_p_regular(g: Mat, order: int | None = None):
    p = g.field.characteristic
    if p:
        r = order or element_order(g)
        if r % p == 0:
            raise PSingularError(
                f"element of order {r} is p-singular; use the truncated trace series")


def brauer_series_sym(g: Mat, ctx: LiftContext | None = None) -> BrauerSeriesResult:
    _require_p_regular(g)
    ctx = ctx or LiftContext.for_matrix(g)
    ex = ctx.eigen_exponents(g)
    den = _linear_product(ctx.cyclo, [(j, 1) for j in ex])
    H = RationalFunction(UPoly(ctx.cyclo, [ctx.cyclo.one]), den)
    return BrauerSeriesResult(g, H, ctx, ex)


def trace_series_truncated(g: Mat, D: int) -> list:
    """k-valued traces of g on A_0..A_D; defined for every g."""
    act = LinearAction(g)
    return [act.trace(d) for d in range(D + 1)]


def graded_poly_series(actions, ctx: LiftContext) -> RationalFunction:
    """prod_i 1/det(1 - t^{d_i} g|U_i) with Brauer-lifted eigenvalues.

    ``actions`` is a list of (degree, matrix of g on U_i).
    """
    factors = []
    for d, M in actions:
        if M.n == 0:
            continue
        _require_p_regular(M)
        factors.extend((j, d) for j in ctx.eigen_exponents(M))
    den = _linear_product(ctx.cyclo, factors)
    return RationalFunction(UPoly(ctx.cyclo, [ctx.cyclo.one]), den)


def duality_ratio(Hg: RationalFunction, Hg_inv: RationalFunction) -> RationalFunction:
    return Hg / Hg_inv.substitute_inverse()


def lambda_via_duality(Hg: RationalFunction, Hg_inv: RationalFunction, d: int,
                       a: int | None = None):
    """(-1)^d times the value at t = 1 of H_g(t) / H_{g^-1}(1/t).

    The ratio must be a monomial c t^a; returns (lambda-hat, a).
    """
    if Hg.is_zero() or Hg_inv.is_zero():
        raise InputError("series must be nonzero")
    ratio = duality_ratio(Hg, Hg_inv)
    mono = ratio.as_monomial()
    if mono is None:
        raise ComputationError(f"duality ratio {ratio.format()} is not a monomial in t")
    c, k = mono
    if a is not None and k != a:
        raise ComputationError(f"duality ratio has t-degree {k}, expected {a}")
    value = ratio.evaluate(ratio.field.one)
    return (-value if d % 2 else value), k


@dataclass
class DualityCheckResult:
    element: Mat
    lhs: RationalFunction
    expected: RationalFunction
    passed: bool

    def to_json(self) -> dict:
        return {"lhs": self.lhs.format(), "expected": self.expected.format(),
                "pass": self.passed}


def lifted_det_inverse(g: Mat, ctx: LiftContext):
    return ctx.lift(g.det()) ** -1


def duality_check(g: Mat, ctx: LiftContext | None = None) -> DualityCheckResult:
    _require_p_regular(g)
    ctx = ctx or LiftContext.for_matrix(g)
    Hg = brauer_series_sym(g, ctx).H
    Hi = brauer_series_sym(g.inv(), ctx).H
    lhs = duality_ratio(Hg, Hi)
    n = g.n
    c = lifted_det_inverse(g, ctx)
    if n % 2:
        c = -c
    expected = RationalFunction.t_power(ctx.cyclo, -n) * c
    return DualityCheckResult(g, lhs, expected, lhs == expected)


# ----------------------------------------------------------- group averages

def _sum_of_reciprocals(cyclo, terms) -> RationalFunction:
    """sum c / prod(1 - zeta^j t) over (c, Counter{j: mult}) terms.

    All denominators split into the linear factors (1 - zeta^j t), so the sum
    is put over their lcm and cancelled by testing the roots t = zeta^-j.
    """
    big = Counter()
    for _, fac in terms:
        for j, k in fac.items():
            big[j] = max(big[j], k)
    num = UPoly(cyclo, [])
    for c, fac in terms:
        rest = [(j, 1) for j in sorted(big) for _ in range(big[j] - fac.get(j, 0))]
        num = num + _linear_product(cyclo, rest) * c
    den_factors = dict(big)
    if num.is_zero():
        return RationalFunction(num)
    for j in sorted(den_factors):
        root = cyclo.zeta(-j)
        lin = UPoly(cyclo, [cyclo.one, -cyclo.zeta(j)])
        while den_factors[j] and not num(root):
            num = num // lin
            den_factors[j] -= 1
    den = _linear_product(cyclo, [(j, 1) for j in sorted(den_factors) for _ in range(den_factors[j])])
    return RationalFunction(num * den.lc.inv(), den.monic(), reduced=True)


def _to_rational(F: RationalFunction) -> RationalFunction:
    Q = rational_field()

    def conv(p):
        cs = []
        for a in p.c:
            if not a.is_rational():
                raise ComputationError("group average has irrational coefficients")
            cs.append(Q(a.to_fraction()))
        return UPoly(Q, cs)

    return RationalFunction(conv(F.num), conv(F.den), reduced=True)


def _require_nonmodular(G: FiniteMatrixGroup):
    p = G.characteristic
    if p and G.order % p == 0:
        raise InputError(f"modular case: p = {p} divides |G| = {G.order}")


def _average(G: FiniteMatrixGroup, weight, ctx: LiftContext) -> RationalFunction:
    grouped = {}
    for g in G.elements:
        key = (tuple(ctx.eigen_exponents(g)), weight(g))
        grouped[key] = grouped.get(key, 0) + 1
    terms = []
    for (ex, w), count in grouped.items():
        c = ctx.cyclo.zeta(w) * Fraction(count, G.order)
        terms.append((c, Counter(ex)))
    terms.sort(key=lambda t: sorted(t[1].items()))
    return _to_rational(_sum_of_reciprocals(ctx.cyclo, terms))


def molien_average(G: FiniteMatrixGroup, ctx: LiftContext | None = None) -> RationalFunction:
    """(1/|G|) sum_g H_g(t): the Hilbert series of A^G (non-modular case)."""
    _require_nonmodular(G)
    ctx = ctx or LiftContext.for_group(G)
    return _average(G, lambda g: 0, ctx)


def isotypic_average(G: FiniteMatrixGroup, chi, ctx: LiftContext | None = None) -> RationalFunction:
    """(1/|G|) sum_g chi-hat(g)^-1 H_g(t): the Hilbert series of A_chi."""
    _require_nonmodular(G)
    ctx = ctx or LiftContext.for_group(G)
    return _average(G, lambda g: -ctx.root_exponent(chi.root_exponent(g)), ctx)


def hilbert_coefficients(F: RationalFunction, D: int) -> list[int]:
    out = []
    for c in F.series(D):
        fr = c.to_fraction()
        if fr.denominator != 1:
            raise ComputationError(f"non-integral Hilbert coefficient {fr}")
        out.append(int(fr))
    return out
