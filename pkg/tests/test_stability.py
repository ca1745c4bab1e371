import pytest

from p1p3bundle import stability
from p1p3bundle.errors import InvalidParameterError


def test_polarization_requires_positive_entries():
    with pytest.raises(InvalidParameterError):
        stability.Polarization(0, 1)
    with pytest.raises(InvalidParameterError):
        stability.Polarization(1, -2)


def test_slope_examples():
    h = stability.Polarization(1, 1)
    assert stability.slope_dot((1, 2), h).constant() == 7
    assert stability.slope_dot((1, 0), h).constant() == 1
    assert stability.slope_dot((0, 1), h).constant() == 3
    mn = stability.Polarization(3, 2)
    # a*n^3 + 3*b*m*n^2 at (a,b) = (2,-4), (m,n) = (3,2)
    assert stability.slope_dot((2, -4), mn).constant() == 2 * 8 - 12 * 3 * 4


def test_slope_additivity_in_line_argument():
    pol = stability.Polarization(2, 5)
    for a1, b1, a2, b2 in [(1, 2, -3, 4), (0, 0, 7, -1), (5, -5, -5, 5)]:
        lhs = stability.slope_dot((a1 + a2, b1 + b2), pol).constant()
        rhs = (stability.slope_dot((a1, b1), pol) + stability.slope_dot((a2, b2), pol)).constant()
        assert lhs == rhs


def test_subsheaf_status_cases():
    assert stability.subsheaf_status(0, 7) == "no"
    assert stability.subsheaf_status(2, 2) == "no"
    assert stability.subsheaf_status(-1, 5) == "no"
    assert stability.subsheaf_status(1, 1) == "no"
    assert stability.subsheaf_status(4, 2) == "yes"
    assert stability.subsheaf_status(0, 8) == "yes"
    assert stability.subsheaf_status(2, 4) == "yes"
    assert stability.subsheaf_status(3, 2) == "unknown"


def test_positive_instances_never_contradict_vanishing():
    for p, q in stability.POSITIVE_INSTANCES:
        assert stability.subsheaf_status(p, q) == "yes"


def test_destabilizer_corners():
    corners = stability.destabilizer_corners()
    assert len(corners) == 3
    assert (2, -4) in corners
    assert (-1, 2) in corners
    assert (1, 1) in corners
    # a nonzero map O(a,b) -> E forces a hypersurface through the surface
    for a, b in corners:
        assert stability.subsheaf_status(2 - a, 4 - b) != "no"


def test_stability_decisions():
    assert stability.stability_decide(stability.Polarization(1, 1)) == "stable"
    assert stability.stability_decide(stability.Polarization(1, 18)) == "semistable_not_stable"
    assert stability.stability_decide(stability.Polarization(1, 19)) == "unstable"
    assert stability.stability_decide(stability.Polarization(2, 36)) == "semistable_not_stable"


def test_stability_region_grid():
    for m in range(1, 41):
        for n in range(1, 41):
            got = stability.stability_decide(stability.Polarization(m, n))
            if n < 18 * m:
                assert got == "stable", (m, n)
            elif n == 18 * m:
                assert got == "semistable_not_stable", (m, n)
            else:
                assert got == "unstable", (m, n)


def test_corner_argmax_identity():
    corners = stability.destabilizer_corners()

    def argmax(pol):
        best = max(corners, key=lambda c: stability.slope_dot(c, pol).constant())
        return best

    for m in range(1, 11):
        for n in (18 * m, 18 * m + 1, 20 * m, 40 * m):
            assert argmax(stability.Polarization(m, n)) == (2, -4), (m, n)
        for n in range(1, 18 * m, 3):
            # every corner stays strictly below the half-determinant slope
            pol = stability.Polarization(m, n)
            threshold = stability.slope_dot((1, 2), pol).constant()
            assert all(
                stability.slope_dot(c, pol).constant() < threshold for c in corners
            ), (m, n)
