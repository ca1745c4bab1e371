import pytest

from p1p3bundle import geometry
from p1p3bundle.errors import InconsistentError, InvalidParameterError
from p1p3bundle.poly import ParamPoly


def test_rr_polynomial_matches_hrr():
    assert geometry.chi_twisted_bundle() == geometry.rr_polynomial()


def test_rr_polynomial_spot_values():
    p = geometry.rr_polynomial()
    assert p.evaluate({"a": 0, "b": 0}) == -6
    assert p.evaluate({"a": -2, "b": -4}) == 2


def test_classify_embeddings():
    expected = [(0, 1, 1), (2, 1, 2)]
    for cap in (2, 5, 10):
        got = [(s.e, s.alpha, s.beta) for s in geometry.classify_embeddings(cap)]
        assert got == expected
    with pytest.raises(InvalidParameterError):
        geometry.classify_embeddings(1)


def test_double_structure_solutions():
    s0 = geometry.double_structure_solve(0)
    assert (s0.x, s0.y, s0.d) == (2, -2, 4)
    s2 = geometry.double_structure_solve(2)
    assert (s2.x, s2.y, s2.d) == (2, 0, 4)
    with pytest.raises(InvalidParameterError):
        geometry.double_structure_solve(1)


def test_double_structure_resubstitution():
    for e, sol in ((0, (2, -2, 4)), (2, (2, 0, 4))):
        identity = geometry.double_structure_identity(e)
        x, y, d = sol
        assert identity.subs({"x": x, "y": y, "d": d}).is_zero()


def test_prop54_obstruction():
    assert geometry.prop54_obstruction() is True


def test_subbundle_degree_criterion():
    assert geometry.subbundle_embeds(2, (0, 2))
    assert geometry.subbundle_embeds(0, (0, 2))
    assert not geometry.subbundle_embeds(4, (0, 2))
    assert not geometry.subbundle_embeds(4, (1, 1))


def test_normality_for_large_b():
    for a in range(0, 6):
        for b in range(3, 8):
            s = geometry.normality_status(a, b)
            assert s.normal and s.codim_bound == 0, (a, b)
    assert geometry.normality_status(0, 1).normal


def test_normality_bounds():
    assert geometry.normality_status(5, 2) == geometry.NormalityStatus(False, 6)
    assert geometry.normality_status(3, 0) == geometry.NormalityStatus(False, 6)
    # b = 2 bound is a + 1; b = 1 bound is 2a
    for a in range(1, 6):
        assert geometry.normality_status(a, 2).codim_bound == a + 1
        assert geometry.normality_status(a, 1).codim_bound == 2 * a
        if a >= 1:
            assert geometry.normality_status(a, 0).codim_bound == 3 * (a - 1)
    with pytest.raises(InvalidParameterError):
        geometry.normality_status(-1, 3)


def test_multiplication_surjectivity():
    for a in range(0, 7):
        for b in range(0, 7):
            assert geometry.multiplication_surjective(a, b)
    with pytest.raises(InvalidParameterError):
        geometry.multiplication_surjective(-1, 2)


def test_splitting_from_sections():
    assert geometry.splitting_from_sections(4, {2: 1, 3: 0}).as_pair() == (2, 2)
    assert geometry.splitting_from_sections(2, {1: 1, 2: 0}).as_pair() == (1, 1)
    assert geometry.splitting_from_sections(4, {4: 1, 5: 0}).as_pair() == (4, 0)


def test_splitting_invariants():
    for c1, data in [(4, {2: 1}), (2, {1: 2}), (4, {4: 1}), (0, {3: 1})]:
        s = geometry.splitting_from_sections(c1, data)
        a, b = s.as_pair()
        assert a + b == c1
        assert a >= b


def test_splitting_errors():
    with pytest.raises(InconsistentError):
        geometry.splitting_from_sections(4, {0: 0, 1: 0})
    with pytest.raises(InconsistentError):
        geometry.splitting_from_sections(4, {1: 1, 2: 0})


def test_jumping_divisor_degree_is_constant_four():
    for r in (1, 2, 3):
        deg = geometry.jumping_divisor_degree(r)
        assert deg.is_constant(), r
        assert deg == ParamPoly.const(4), r
    with pytest.raises(InvalidParameterError):
        geometry.jumping_divisor_degree(0)


def test_degree_four_consistency_with_positive_instance():
    # the pencil degree found by the solver matches the bidegree (4, 2)
    # hypersurface instance used by the stability oracle
    from p1p3bundle import stability
    d = geometry.double_structure_solve(0).d
    assert (d, 2) in stability.POSITIVE_INSTANCES
    assert stability.subsheaf_status(d, 2) == "yes"
