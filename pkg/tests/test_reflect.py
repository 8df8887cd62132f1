import pytest

from conftest import ALL_SPECS, load_group
from modinv.exactnum import finite_field, rational_field
from modinv.matgroup import Mat
from modinv.reflect import (
    DIAGONALIZABLE, IDENTITY, NON_REFLECTION, TRANSVECTION, classify_element, reflection_report,
)


def test_classify_examples():
    Q = rational_field()
    assert classify_element(Mat.from_entries(Q, [[-1, 0], [0, 1]])).tag == DIAGONALIZABLE
    assert classify_element(Mat.from_entries(Q, [[-1, 0], [0, -1]])).tag == NON_REFLECTION
    assert classify_element(Mat.identity(Q, 3)).tag == IDENTITY
    t = classify_element(Mat.from_entries(finite_field(3), [[1, 1], [0, 1]]))
    assert t.tag == TRANSVECTION and t.fixed_dim == 1 and t.order == 3


@pytest.mark.parametrize("name,nr,w,wt", [
    ("pm_identity", True, 1, 1),
    ("reflection_sign", False, 2, 2),
    ("transvection_f3", False, 3, 3),
    ("diag_f7", True, 1, 1),
    ("s3_permutation", False, 6, 6),
    ("quaternion", True, 1, 1),
    ("reflections_with_scalar_i", False, 4, 4),
    ("gl2_f3", False, 48, 48),
])
def test_report_examples(name, nr, w, wt):
    rr = reflection_report(load_group(name))
    assert rr.NR == nr and rr.W.order == w and rr.Wtilde.order == wt


@pytest.mark.parametrize("name", ALL_SPECS)
def test_w_subgroups_normal(name):
    G = load_group(name)
    rr = reflection_report(G)
    assert rr.W.is_subgroup_of(rr.Wtilde) and rr.Wtilde.is_subgroup_of(G)
    assert rr.W.is_normal_in(G) and rr.Wtilde.is_normal_in(G)
    if G.characteristic == 0:
        assert rr.W.elements == rr.Wtilde.elements
    # conjugates of reflections are reflections
    refl = set(rr.reflections())
    for g in G.generators:
        gi = g.inv()
        assert {g * r * gi for r in refl} == refl
    assert rr.NR == (not refl)
