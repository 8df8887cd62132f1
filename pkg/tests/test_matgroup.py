import pytest

from conftest import ALL_SPECS, QQ, load_group, make_group
from modinv.errors import CapExceededError, FieldError, InputError
from modinv.exactnum import finite_field, rational_field
from modinv.matgroup import (
    LiftContext, Mat, abelianization, commutator_subgroup, decompose_abelian, eigenvalues,
    element_order, enumerate_group, generated_subgroup, normal_closure,
)

F3 = {"kind": "finite", "p": 3, "modulus": [0, 1]}


def test_enumerate_examples():
    assert make_group(QQ, [[[-1, 0], [0, -1]]]).order == 2
    assert make_group(F3, [[[1, 1], [0, 1]]]).order == 3
    assert make_group(QQ, [[[0, -1], [1, 1]]]).order == 6


def test_enumerate_cap_and_errors():
    with pytest.raises(CapExceededError):
        make_group(QQ, [[[1, 1], [0, 1]]])
    Q = rational_field()
    with pytest.raises(InputError):
        enumerate_group([Mat(Q, [[Q(1), Q(0)], [Q(0), Q(0)]])])
    F = finite_field(3)
    with pytest.raises(InputError):
        enumerate_group([Mat.identity(Q, 2), Mat.identity(F, 2)])


def test_enumerate_deterministic_order():
    a = load_group("gl2_f3").elements
    b = load_group("gl2_f3").elements
    assert a == b and a[0].is_identity()


@pytest.mark.parametrize("name", ALL_SPECS)
def test_group_closure(name):
    G = load_group(name)
    elems = set(G.elements)
    assert len(elems) == G.order
    for g in G.elements:
        assert g.inv() in elems
        for s in G.generators:
            assert g * s in elems
    assert G.order % G.exponent() == 0 or all(G.order % o == 0 for o in G.element_orders)
    assert all(G.order % o == 0 for o in G.element_orders)


def test_element_order():
    Q = rational_field()
    assert element_order(Mat.from_entries(Q, [[0, -1], [1, 1]])) == 6
    F7 = finite_field(7)
    assert element_order(Mat.from_entries(F7, [[3, 0], [0, 1]])) == 6
    with pytest.raises(CapExceededError):
        element_order(Mat.from_entries(Q, [[2, 0], [0, 1]]), cap=50)


def test_subgroup_helpers():
    G = load_group("s3_permutation")
    C = commutator_subgroup(G)
    assert C.order == 3 and C.is_normal_in(G)
    t = next(g for g in G.elements if element_order(g) == 2)
    N = normal_closure(G, [t])
    assert N.order == 6
    H = generated_subgroup(G, [t])
    assert H.order == 2 and not H.is_normal_in(G)


def test_abelianization_examples():
    assert abelianization(load_group("quaternion")).invariant_factors == (2, 2)
    assert abelianization(load_group("c4_rotation")).invariant_factors == (4,)
    assert abelianization(load_group("s3_permutation")).invariant_factors == (2,)
    ab = abelianization(load_group("gl2_f3"))
    assert ab.invariant_factors == (2,)


def test_abelianization_is_homomorphism():
    G = load_group("signed_permutations_b3")
    ab = abelianization(G)
    mods = ab.invariant_factors
    for g in G.elements[::5]:
        for h in G.elements[::7]:
            lhs = ab.vector(g * h)
            rhs = tuple((a + b) % m for a, b, m in zip(ab.vector(g), ab.vector(h), mods))
            assert lhs == rhs


def test_decompose_abelian_integers():
    elems = [(a, b) for a in range(4) for b in range(6)]
    factors, basis, coords = decompose_abelian(
        elems, lambda x, y: ((x[0] + y[0]) % 4, (x[1] + y[1]) % 6), (0, 0))
    assert tuple(factors) == (2, 12)


def test_lift_context_char0():
    G = load_group("binary_tetrahedral")
    ctx = LiftContext.for_group(G)
    assert ctx.L % 12 == 0
    for g in G.elements:
        ex = ctx.eigen_exponents(g)
        tr = sum((ctx.cyclo.zeta(j) for j in ex), ctx.cyclo.zero)
        assert tr == ctx.embed(g.trace())


@pytest.mark.parametrize("name", ["gl2_f3", "diag_f4", "diag_f7", "gl2_f2"])
def test_lift_context_char_p(name):
    G = load_group(name)
    ctx = LiftContext.for_group(G)
    for i, g in enumerate(G.elements):
        if not G.is_p_regular(i):
            continue
        ex = ctx.eigen_exponents(g)
        tr = sum((ctx.omega ** j for j in ex), ctx.big.zero)
        assert tr == ctx.embed(g.trace())
        # the lift reduces back to the original root
        assert ctx.reduce(ctx.lift(g.det())) == ctx.embed(g.det())


def test_lift_context_rejects_bad_order():
    F5 = finite_field(5)
    with pytest.raises(FieldError):
        LiftContext(F5, 10)
    with pytest.raises(FieldError):
        LiftContext(F5, 6)


def test_eigenvalues_examples():
    F7 = finite_field(7)
    ev = eigenvalues(Mat.from_entries(F7, [[2, 0], [0, 4]]))
    assert not ev.p_singular and len(ev.exponents) == 2
    ev = eigenvalues(Mat.from_entries(finite_field(3), [[1, 1], [0, 1]]))
    assert ev.p_singular
    with pytest.raises(InputError):
        eigenvalues(Mat.from_entries(F7, [[1, 0], [0, 0]]))
