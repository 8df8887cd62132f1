import pytest

from conftest import QQ, load_group, make_group
from modinv.chars import character_group
from modinv.errors import ComputationError, InconclusiveError, InputError
from modinv.exactnum import cyclotomic_field, finite_field, rational_field
from modinv.invariants import (
    LinearAction, check_membership, dchi_estimate, eigen_ratio, group_action,
    invariants_of_degree, monomials, require_nonempty, reynolds, semi_invariants_of_degree,
    transversal_check, twisted_projection,
)
from modinv.matgroup import Mat
from modinv.polyalg import MultiPoly
from modinv.reflect import reflection_report

Q = rational_field()
F2 = finite_field(2)


def P(text, f=Q, n=2):
    return MultiPoly.parse(text, f, n)


def test_monomials_order():
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomials(3, 4)) == 15


def test_group_action_examples():
    f = P("x1^3 + 2*x1*x2")
    assert group_action(Mat.identity(Q, 2), f) == f
    assert group_action(Mat.diag(Q, [Q(-1), Q(1)]), P("x1^2*x2")) == P("x1^2*x2")
    t = Mat.from_entries(F2, [[1, 1], [0, 1]])
    assert group_action(t, P("x1*x2", F2)) == P("x1^2 + x1*x2", F2)
    with pytest.raises(InputError):
        group_action(t, P("x1", F2, 3))


def test_action_is_left_action():
    G = load_group("s3_permutation")
    f = P("x1^2*x2 + 3*x2*x3 - x3^3", n=3)
    for g in G.elements:
        for h in G.elements:
            assert group_action(g * h, f) == group_action(g, group_action(h, f))


def test_invariants_examples():
    pm = load_group("pm_identity")
    assert invariants_of_degree(pm, 1).dim == 0
    b = invariants_of_degree(pm, 2)
    assert b.polys == [P("x1^2"), P("x1*x2"), P("x2^2")]
    tv = load_group("transvection_f2")
    b = invariants_of_degree(tv, 2)
    assert b.polys == [P("x1^2", F2), P("x1*x2 + x2^2", F2)]
    with pytest.raises(InputError):
        invariants_of_degree(pm, -1)


def test_semi_invariants_examples():
    pm = load_group("pm_identity")
    chars = character_group(pm)
    assert semi_invariants_of_degree(pm, chars[0], 2).polys == invariants_of_degree(pm, 2).polys
    assert semi_invariants_of_degree(pm, chars[1], 1).polys == [P("x1"), P("x2")]
    refl = load_group("reflection_sign")
    assert semi_invariants_of_degree(refl, character_group(refl)[1], 1).polys == [P("x1")]


@pytest.mark.parametrize("name", ["quaternion", "transvection_f3", "gl2_f2", "z3_special"])
def test_semi_invariants_are_eigenvectors(name):
    G = load_group(name)
    for chi in character_group(G):
        for d in range(4):
            for f in semi_invariants_of_degree(G, chi, d).polys:
                for g in G.generators:
                    assert group_action(g, f) == f * chi(g)


def test_reynolds_examples():
    pm = load_group("pm_identity")
    assert reynolds(P("x1^2 + x2^2"), pm) == P("x1^2 + x2^2")
    assert reynolds(P("x1"), pm).is_zero()
    K = cyclotomic_field(3)
    G = make_group({"kind": "cyclotomic", "n": 3}, [[["z", 0], [0, "z^2"]]])
    assert reynolds(P("x1^2", K), G).is_zero()
    with pytest.raises(InputError):
        reynolds(P("x1", F2), load_group("transvection_f2"))


def test_twisted_projection_examples():
    refl = load_group("reflection_sign")
    sign = character_group(refl)[1]
    assert twisted_projection(P("x2"), refl, sign).is_zero()
    assert twisted_projection(P("x1 + x2"), refl, sign) == P("x1")
    assert twisted_projection(P("x1*x2^2"), refl, sign) == P("x1*x2^2")


def test_reynolds_lands_in_invariants():
    G = load_group("binary_tetrahedral")
    f = P("x1^4 + 3*x1^3*x2 - x2^4", G.field)
    r = reynolds(f, G)
    assert check_membership(r, invariants_of_degree(G, 4))


def test_dchi_examples():
    refl = load_group("reflection_sign")
    chars = character_group(refl)
    s = dchi_estimate(refl, chars[0], 4)
    assert s.d_chi == P("1") and s.mu.is_trivial() and s.free
    s = dchi_estimate(refl, chars[1], 4)
    assert s.d_chi == P("x1") and s.mu == chars[1] and s.free and s.cls.is_trivial()
    pm = load_group("pm_identity")
    sign = character_group(pm)[1]
    s = dchi_estimate(pm, sign, 4)
    assert s.d_chi == P("1") and s.mu.is_trivial() and not s.free
    assert s.cls == sign.inverse() and not s.cls.is_trivial()


def test_dchi_inconclusive():
    pm = load_group("pm_identity")
    s = dchi_estimate(pm, character_group(pm)[1], 0)
    assert s.status == "inconclusive"
    with pytest.raises(InconclusiveError):
        require_nonempty(s)


def test_eigen_ratio_rejects():
    act = LinearAction(Mat.from_entries(Q, [[0, 1], [1, 0]]))
    with pytest.raises(ComputationError):
        eigen_ratio(act, P("x1"))


@pytest.mark.parametrize("name,count", [("reflection_sign", 1), ("pm_identity", 2),
                                        ("c4_rotation", 4), ("quaternion", 4)])
def test_transversal_examples(name, count):
    from modinv.chars import class_group
    G = load_group(name)
    W = reflection_report(G).W
    cg = class_group(G, W)
    rep = transversal_check(G, W, 8, cg)
    assert len(rep.entries) == count and rep.passed
