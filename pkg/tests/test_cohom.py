import pytest

from p1p3bundle import cohom
from p1p3bundle.errors import InconsistentError, InvalidParameterError
from p1p3bundle.poly import ParamPoly


def test_cohom_pn_examples():
    assert tuple(cohom.cohom_pn(3, 2)) == (10, 0, 0, 0)
    assert tuple(cohom.cohom_pn(3, -4)) == (0, 0, 0, 1)
    assert tuple(cohom.cohom_pn(1, -2)) == (0, 1)
    assert tuple(cohom.cohom_pn(1, -1)) == (0, 0)
    with pytest.raises(InvalidParameterError):
        cohom.cohom_pn(0, 1)


def test_kunneth_examples():
    assert cohom.cohom_p1xp3(-2, 0)[1] == 1
    assert cohom.cohom_p1xp3(-3, 1)[1] == 8
    assert tuple(cohom.cohom_p1xp3(0, 0)) == (1, 0, 0, 0, 0)


def test_kunneth_chi_multiplicative():
    for a in range(-4, 4):
        for b in range(-4, 4):
            ta, tb = cohom.cohom_pn(1, a), cohom.cohom_pn(3, b)
            assert cohom.kunneth(ta, tb).chi == ta.chi * tb.chi


def test_serre_duality_grid():
    for a in range(-8, 9):
        for b in range(-8, 9):
            assert cohom.serre_dual_check(a, b), (a, b)


def test_intro_formula_on_grid():
    from math import comb
    for a in range(-6, -1):
        for b in range(0, 6):
            t = cohom.cohom_p1xp3(a, b)
            assert t[1] == -(a + 1) * comb(b + 3, 3)
            assert t[1] > 0


def test_chi_sigma_closed_forms():
    alpha, beta = ParamPoly.var("u"), ParamPoly.var("v")
    assert cohom.chi_sigma(0, alpha, beta) == (alpha + 1) * (beta + 1)
    assert cohom.chi_sigma(2, alpha, beta) == (alpha + 1) * (beta - alpha + 1)
    assert cohom.chi_sigma(0, 0, 0).constant() == 1


def test_cohom_sigma0():
    assert cohom.cohom_sigma0(-4, 1)[1] == 6
    assert cohom.cohom_sigma0(-1, 5)[1] == 0
    assert tuple(cohom.cohom_sigma0(0, 0)) == (1, 0, 0)


def test_cohom_table_validation():
    with pytest.raises(InvalidParameterError):
        cohom.CohomTable((1, -1))
    t = cohom.CohomTable((1, 2, 1))
    assert t.chi == 0
    assert tuple(t.reversed()) == (1, 2, 1)


def test_les_ideal_sheaf_of_abelian_surface():
    problem = cohom.LesProblem(
        a=None,
        b=cohom.CohomTable((1, 0, 0, 0, 0)),
        c=cohom.ABELIAN_SURFACE_TABLE,
        hints=(cohom.MapRankHint("B->C", 0, 1),),
    )
    assert cohom.les_solve(problem) == (0, 0, 2, 1, 0)


def test_les_without_hint_is_underdetermined():
    problem = cohom.LesProblem(
        a=None,
        b=cohom.CohomTable((1, 0, 0, 0, 0)),
        c=cohom.ABELIAN_SURFACE_TABLE,
    )
    result = cohom.les_solve(problem)
    assert isinstance(result, cohom.Underdetermined)
    assert (0, 0, 2, 1, 0) in result.tables


def test_les_partial_table():
    problem = cohom.LesProblem(
        a=cohom.CohomTable((0, 0, 0, 0)),
        b=None,
        c=(1, None, None, None),
    )
    solved = cohom.les_solve(problem)
    assert solved[0] == 1


def test_les_trivial_zero_sequence():
    zero = cohom.CohomTable((0, 0, 0))
    problem = cohom.LesProblem(a=zero, b=None, c=zero)
    assert cohom.les_solve(problem) == (0, 0, 0)


def test_les_inconsistent():
    # h^0(A) = 2 cannot inject into h^0(B) = 0 with nowhere to escape
    bad = cohom.LesProblem(
        a=cohom.CohomTable((2, 0)),
        b=cohom.CohomTable((0, 0)),
        c=None,
    )
    with pytest.raises(InconsistentError):
        cohom.les_solve(bad)


def test_les_solution_properties():
    # chi additivity and subadditivity on the solved ideal-sheaf table
    a = cohom.les_solve(cohom.LesProblem(
        a=None,
        b=cohom.CohomTable((1, 0, 0, 0, 0)),
        c=cohom.ABELIAN_SURFACE_TABLE,
        hints=(cohom.MapRankHint("B->C", 0, 1),),
    ))
    chi_a = sum((-1) ** i * x for i, x in enumerate(a))
    assert chi_a + cohom.ABELIAN_SURFACE_TABLE.chi == 1
    for i in range(5):
        assert cohom.CohomTable((1, 0, 0, 0, 0))[i] <= a[i] + cohom.ABELIAN_SURFACE_TABLE[i]


def test_les_requires_exactly_one_unknown():
    t = cohom.CohomTable((1, 0))
    with pytest.raises(InvalidParameterError):
        cohom.LesProblem(a=t, b=t, c=t)
    with pytest.raises(InvalidParameterError):
        cohom.LesProblem(a=None, b=None, c=t)
