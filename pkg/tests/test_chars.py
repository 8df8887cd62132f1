import pytest

from conftest import ALL_SPECS, load_group
from modinv.chars import (
    LinearCharacter, character_from_values, character_group, class_group, det_character,
    restrict_character,
)
from modinv.errors import ComputationError, InputError
from modinv.matgroup import abelianization
from modinv.reflect import reflection_report


@pytest.mark.parametrize("name", ALL_SPECS)
def test_character_group_is_dual(name):
    G = load_group(name)
    chars = character_group(G)
    assert len(chars) == chars.expected_order()
    assert len(set(chars)) == len(chars)
    for chi in chars:
        for g in G.elements[:12]:
            for h in G.elements[:6]:
                assert chi(g * h) == chi(g) * chi(h)


def test_det_character_values():
    G = load_group("c4_rotation")
    det = det_character(G)
    assert all(det(g) == g.det() for g in G.elements)
    assert det.is_trivial()
    z3 = load_group("z3_scalar")
    d = det_character(z3)
    assert not d.is_trivial() and d.order() == 3


def test_character_from_values_rejects():
    G = load_group("dihedral8")
    ab = abelianization(G)
    # trace is not multiplicative, and is zero on some elements
    with pytest.raises(Exception):
        character_from_values(ab, 2, lambda g: g.trace())
    # -1 away from the identity is not a character of S3 (fails on the 3-cycle)
    S = load_group("s3_permutation")
    one, neg = S.field.one, -S.field.one
    with pytest.raises(ComputationError):
        character_from_values(abelianization(S), 2, lambda g: one if g.is_identity() else neg)
    with pytest.raises(InputError):
        LinearCharacter(ab, 3, [1, 0])        # 3 does not divide the root capacity 2


def test_restriction():
    G = load_group("signed_permutations_b3")
    rr = reflection_report(G)
    for chi in character_group(G):
        r = restrict_character(chi, rr.W)
        assert all(r(h) == chi(h) for h in rr.W.elements[:10])


@pytest.mark.parametrize("name,expected", [
    ("pm_identity", "Z/2"),
    ("c4_rotation", "Z/4"),
    ("quaternion", "Z/2 x Z/2"),
    ("reflection_sign", "trivial"),
    ("s3_permutation", "trivial"),
    ("transvection_f2", "trivial"),
    ("transvection_f3", "trivial"),
    ("z3_scalar", "Z/3"),
])
def test_class_group_examples(name, expected):
    G = load_group(name)
    cg = class_group(G, reflection_report(G).W)
    assert cg.describe() == expected


@pytest.mark.parametrize("name", ALL_SPECS)
def test_class_group_is_kernel(name):
    G = load_group(name)
    W = reflection_report(G).W
    chars = character_group(G)
    cg = class_group(G, W, chars=chars)
    brute = [chi for chi in chars if all(chi(w) == G.field.one for w in W.elements)]
    assert cg.characters == brute
    prod = 1
    for m in cg.invariant_factors:
        prod *= m
    assert prod == cg.order
