import random

import pytest
import sympy

from modinv import linalg
from modinv.errors import InputError
from modinv.exactnum import finite_field, rational_field

Q = rational_field()


def test_rref_and_nullspace():
    rows = [[Q(x) for x in r] for r in [[1, 2, 3], [2, 4, 6], [1, 0, 1]]]
    red, piv = linalg.rref(rows, 3)
    assert piv == [0, 1]
    null = linalg.nullspace(rows, 3, Q)
    assert len(null) == 1
    for r in rows:
        assert sum((a * b for a, b in zip(r, null[0])), Q.zero) == Q.zero


def test_solve_columns_errors():
    b = [[Q(1), Q(0)], [Q(2), Q(0)]]
    with pytest.raises(InputError):
        linalg.solve_columns(b, [[Q(1), Q(1)]], Q)
    with pytest.raises(InputError):
        linalg.solve_columns([[Q(1), Q(0)]], [[Q(0), Q(1)]], Q)


@pytest.mark.parametrize("f", [Q, finite_field(7)], ids=repr)
def test_charpoly_det_inverse_vs_sympy(f):
    rng = random.Random(2)
    for _ in range(25):
        n = rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        M = sympy.Matrix(m)
        rows = [[f(x) for x in r] for r in m]
        x = sympy.Symbol("x")
        ref = sympy.Poly(M.charpoly(x).as_expr(), x).all_coeffs()[::-1]
        assert linalg.charpoly(rows, f) == [f(int(c)) for c in ref]
        assert linalg.det(rows, f) == f(int(M.det()))
        if linalg.det(rows, f):
            inv = linalg.inverse(rows, f)
            prod = [[sum((rows[i][k] * inv[k][j] for k in range(n)), f.zero) for j in range(n)]
                    for i in range(n)]
            assert all(prod[i][j] == (f.one if i == j else f.zero) for i in range(n) for j in range(n))
