from fractions import Fraction

import pytest

from p1p3bundle.errors import EmptyBoxError, NonInvertibleError
from p1p3bundle.poly import (
    ParamPoly,
    RatFunc,
    from_coeffs,
    gcd_univariate,
    matrix_rank_kernel,
    rref,
    solve_zero_identity,
    squarefree_univariate,
    univariate_coeffs,
)


def test_basic_arithmetic():
    a = ParamPoly.var("a")
    b = ParamPoly.var("b")
    left = (a + b) ** 2
    right = a * a + 2 * a * b + b * b
    assert left == right
    assert (a - a).is_zero()
    assert (a * 0).is_zero()


def test_constants_and_fractions():
    p = ParamPoly.const(Fraction(1, 2)) + ParamPoly.const(Fraction(1, 3))
    assert p.constant() == Fraction(5, 6)
    q = Fraction(2, 3) * ParamPoly.var("x")
    assert q.evaluate({"x": 3}) == 2


def test_subs_and_evaluate():
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    p = a * a * b + 2 * a - 5
    assert p.evaluate({"a": 3, "b": 4}) == 36 + 6 - 5
    partial = p.subs({"a": 2})
    assert partial == 4 * b - 1
    # polynomial-valued substitution
    nested = p.subs({"a": b + 1})
    assert nested.evaluate({"b": 1}) == p.evaluate({"a": 2, "b": 1})


def test_string_form_is_canonical():
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    p = b + a
    q = a + b
    assert str(p) == str(q)
    assert str(ParamPoly.const(0)) == "0"


def test_collect_groups_free_variables():
    a, x = ParamPoly.var("a"), ParamPoly.var("x")
    p = (x - 3) * a + ParamPoly.const(7)
    groups = p.collect(("a",))
    # two groups: the coefficient of a and the constant part
    assert len(groups) == 2


def test_solve_zero_identity_unique():
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    x, y, d = ParamPoly.var("x"), ParamPoly.var("y"), ParamPoly.var("d")
    identity = (x - 3) * a + (y + 1) * b + (d - 2)
    sols = solve_zero_identity(identity, ("x", "y", "d"))
    assert sols == [{"x": 3, "y": -1, "d": 2}]


def test_solve_zero_identity_empty_box():
    a = ParamPoly.var("a")
    x = ParamPoly.var("x")
    identity = (x - 20) * a  # root outside |x| <= 16
    with pytest.raises(EmptyBoxError):
        solve_zero_identity(identity, ("x",), bound=16)


def test_univariate_roundtrip():
    t = ParamPoly.var("t")
    p = 2 * t ** 3 - t + 5
    coeffs = univariate_coeffs(p, "t")
    assert from_coeffs(coeffs, "t") == p


def test_gcd_univariate_is_monic():
    t = ParamPoly.var("t")
    p = (t - 1) * (t - 2)
    q = (t - 1) * (t + 5)
    g = gcd_univariate(p, q, "t")
    assert g == t - 1


def test_squarefree_strips_multiplicity():
    t = ParamPoly.var("t")
    p = (t - 1) ** 3 * (t + 2)
    r = squarefree_univariate(p, "t")
    assert r == (t - 1) * (t + 2)


def test_ratfunc_field_arithmetic():
    x = RatFunc.x("t")
    one = RatFunc.const(1, "t")
    f = (x * x - one) / (x - one)
    assert f == x + one
    g = one / x
    assert g * x == one
    with pytest.raises(NonInvertibleError):
        one / (x - x)


def test_ratfunc_is_constant():
    x = RatFunc.x("t")
    assert not x.is_constant()
    assert (x / x).is_constant()
    assert RatFunc.const(Fraction(3, 4), "t").constant() == Fraction(3, 4)


def test_rref_and_kernel_over_fractions():
    rows = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    rank, pivots, _ = rref([list(r) for r in rows])
    assert rank == 2
    rank2, kernel = matrix_rank_kernel(rows)
    assert rank2 == 2
    assert len(kernel) == 1
    v = kernel[0]
    for row in rows:
        assert sum(row[j] * v[j] for j in range(3)) == 0


def test_kernel_over_function_field():
    t = RatFunc.x("t")
    zero = RatFunc.const(0, "t")
    rows = [[t, t * t], [t * t, t * t * t]]
    rank, kernel = matrix_rank_kernel(rows)
    assert rank == 1
    v = kernel[0]
    for row in rows:
        s = zero
        for j in range(2):
            s = s + row[j] * v[j]
        assert not s
