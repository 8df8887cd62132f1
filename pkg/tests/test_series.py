from fractions import Fraction

import pytest

from conftest import QQ, load_group, make_group
from modinv.chars import character_group
from modinv.errors import ComputationError, InputError, PSingularError
from modinv.exactnum import cyclotomic_field, finite_field, rational_field
from modinv.invariants import invariants_of_degree, semi_invariants_of_degree
from modinv.matgroup import LiftContext, Mat
from modinv.polyalg import RationalFunction, UPoly
from modinv.series import (
    brauer_series_sym, duality_check, graded_poly_series, hilbert_coefficients,
    isotypic_average, lambda_via_duality, molien_average, trace_series_truncated,
)

Q = rational_field()


def rat(num, den):
    return RationalFunction(UPoly(Q, [Q(c) for c in num]), UPoly(Q, [Q(c) for c in den]))


def coeffs(F, D):
    return [c.to_fraction() for c in F.series(D)]


def test_brauer_series_examples():
    assert coeffs(brauer_series_sym(Mat.identity(Q, 2)).H, 5) == [1, 2, 3, 4, 5, 6]
    assert coeffs(brauer_series_sym(Mat.diag(Q, [Q(-1), Q(-1)])).H, 4) == [1, -2, 3, -4, 5]
    rot = brauer_series_sym(Mat.from_entries(Q, [[0, -1], [1, 0]]))
    assert coeffs(rot.H, 6) == [1, 0, -1, 0, 1, 0, -1]
    assert rot.degree == -2


def test_brauer_series_p_singular():
    with pytest.raises(PSingularError):
        brauer_series_sym(Mat.from_entries(finite_field(2), [[1, 1], [0, 1]]))


def test_trace_series_examples():
    assert [x.to_fraction() for x in trace_series_truncated(Mat.identity(Q, 1), 3)] == [1, 1, 1, 1]
    g = Mat.diag(Q, [Q(-1), Q(1)])
    assert [x.to_fraction() for x in trace_series_truncated(g, 2)] == [1, 0, 1]
    F2 = finite_field(2)
    t = trace_series_truncated(Mat.from_entries(F2, [[1, 1], [0, 1]]), 2)
    assert [x.v for x in t] == [1, 0, 1]


def test_graded_poly_series_examples():
    g = Mat.from_entries(Q, [[0, -1], [1, 0]])
    ctx = LiftContext.for_matrix(g)
    assert graded_poly_series([(1, g)], ctx) == brauer_series_sym(g, ctx).H
    minus = Mat.from_entries(Q, [[-1]])
    F = graded_poly_series([(2, minus)], LiftContext.for_matrix(minus))
    assert coeffs(F, 6) == [1, 0, -1, 0, 1, 0, -1]
    one = Mat.identity(Q, 1)
    F = graded_poly_series([(1, one), (2, one)], LiftContext.for_matrix(one))
    assert coeffs(F, 6) == [1, 1, 2, 2, 3, 3, 4]


def test_lambda_via_duality_examples():
    def lam(g):
        ctx = LiftContext.for_matrix(g)
        Hg, Hi = brauer_series_sym(g, ctx).H, brauer_series_sym(g.inv(), ctx).H
        return lambda_via_duality(Hg, Hi, g.n, -g.n), ctx

    (v, k), ctx = lam(Mat.identity(Q, 1))
    assert v == ctx.cyclo.one and k == -1
    (v, _), ctx = lam(Mat.diag(Q, [Q(-1), Q(1)]))
    assert v == -ctx.cyclo.one
    K = cyclotomic_field(3)
    z = K.gen
    (v, _), ctx = lam(Mat.diag(K, [z, z]))
    assert v == ctx.lift(z)


def test_lambda_via_duality_errors():
    with pytest.raises(ComputationError):
        lambda_via_duality(rat([1], [1, -1]), rat([1, 1], [1]), 1)
    with pytest.raises(ComputationError):
        lambda_via_duality(rat([1], [1, -1]), rat([1], [1, -1]), 1, a=3)
    with pytest.raises(InputError):
        lambda_via_duality(RationalFunction(UPoly(Q, [])), rat([1], [1]), 1)


def test_duality_check_examples():
    r = duality_check(Mat.identity(Q, 3))
    assert r.passed and r.lhs == r.expected
    assert duality_check(Mat.diag(Q, [Q(-1), Q(-1)])).passed


def test_molien_examples():
    triv = make_group(QQ, [[[1]]])
    assert molien_average(triv) == rat([1], [1, -1])
    pm = load_group("pm_identity")
    M = molien_average(pm)
    assert M == rat([1, 0, 1], [1, 0, -2, 0, 1])
    assert hilbert_coefficients(M, 4) == [1, 0, 3, 0, 5]
    K3 = {"kind": "cyclotomic", "n": 3}
    G = make_group(K3, [[["z", 0], [0, "z^2"]]])
    assert hilbert_coefficients(molien_average(G), 6) == [1, 0, 1, 2, 1, 2, 3]


def test_molien_rejects_modular():
    with pytest.raises(InputError):
        molien_average(load_group("transvection_f3"))


def test_isotypic_examples():
    pm = load_group("pm_identity")
    chars = character_group(pm)
    assert isotypic_average(pm, chars[0]) == molien_average(pm)
    sign = chars[1]
    F = isotypic_average(pm, sign)
    assert hilbert_coefficients(F, 5) == [0, 2, 0, 4, 0, 6]
    assert F == rat([0, 2], [1, 0, -2, 0, 1])
    refl = load_group("reflection_sign")
    s = character_group(refl)[1]
    dims = [semi_invariants_of_degree(refl, s, d).dim for d in range(7)]
    assert hilbert_coefficients(isotypic_average(refl, s), 6) == dims == [0, 1, 1, 2, 2, 3, 3]


@pytest.mark.parametrize("name", ["quaternion", "binary_tetrahedral", "diag_f7"])
def test_characters_sum_to_full_ring(name):
    G = load_group(name)
    total = None
    for chi in character_group(G):
        F = isotypic_average(G, chi)
        total = F if total is None else total + F
    # every semi-invariant sum is bounded by dim A_d = d + 1 in two variables
    cs = hilbert_coefficients(total, 6)
    assert all(c <= d + 1 for d, c in enumerate(cs))
    assert hilbert_coefficients(molien_average(G), 6) == [
        invariants_of_degree(G, d).dim for d in range(7)]


def test_hilbert_coefficients_rejects_fractions():
    with pytest.raises(ComputationError):
        hilbert_coefficients(rat([1], [2, -1]), 2)
