from fractions import Fraction
from math import comb

import pytest

from p1p3bundle import chern, chow
from p1p3bundle.errors import (
    DegreeMismatchError,
    RingMismatchError,
    UnsupportedRankError,
)
from p1p3bundle.poly import ParamPoly


def test_abelian_surface_bundle_chern_classes():
    ring = chow.p1xp3()
    b = chern.abelian_surface_bundle()
    assert b.rank_int() == 2
    assert b.c1 == 2 * ring.gen("h1") + 4 * ring.gen("h3")
    assert b.c2 == 8 * ring.gen("h1") * ring.gen("h3") + 6 * ring.gen("h3") ** 2


def test_serre_bundle_matches_abelian_surface_bundle():
    ring = chow.p1xp3()
    det = 2 * ring.gen("h1") + 4 * ring.gen("h3")
    locus = 8 * ring.gen("h1") * ring.gen("h3") + 6 * ring.gen("h3") ** 2
    assert chern.serre_bundle(det, locus) == chern.abelian_surface_bundle()


def test_serre_bundle_rejects_wrong_degrees():
    ring = chow.p1xp3()
    with pytest.raises(DegreeMismatchError):
        chern.serre_bundle(ring.gen("h3") ** 2, ring.gen("h3") ** 2)


def test_twist_roundtrip():
    ring = chow.p1xp3()
    line = 3 * ring.gen("h1") - ring.gen("h3")
    b = chern.abelian_surface_bundle()
    assert chern.twist(chern.twist(b, line), -line) == b


def test_twist_line_bundle():
    ring = chow.p3()
    lb = chern.line_bundle(2 * ring.gen("h"))
    assert chern.twist(lb, ring.gen("h")).c1 == 3 * ring.gen("h")


def test_twist_rank2_formulas():
    ring = chow.p3()
    h = ring.gen("h")
    b = chern.BundleSymbol(ring, 2, (4 * h, 6 * h * h))
    t = chern.twist(b, -2 * h)
    assert t.c1.is_zero()
    assert t.c2 == 2 * h * h


def test_twist_unsupported_rank():
    ring = chow.p3()
    b = chern.trivial(ring, 3)
    with pytest.raises(UnsupportedRankError):
        chern.twist(b, ring.gen("h"))


def test_whitney_complement_inverts_direct_sum():
    ring = chow.p1xp1()
    a = chern.line_bundle(2 * ring.gen("h1"))
    b = chern.line_bundle(ring.gen("h1") + 3 * ring.gen("h2"))
    total = chern.direct_sum(a, b)
    assert chern.whitney_complement(total, a) == b
    assert chern.whitney_complement(total, b) == a


def test_whitney_complement_ring_mismatch():
    a = chern.line_bundle(chow.p1xp1().gen("h1"))
    b = chern.trivial(chow.p3(), 1)
    with pytest.raises(RingMismatchError):
        chern.whitney_complement(a, b)


def test_chern_character_line_bundle():
    ring = chow.p3()
    h = ring.gen("h")
    ch = chern.chern_character(chern.line_bundle(2 * h))
    assert ch.graded_part(0) == ring.one()
    assert ch.graded_part(1) == 2 * h
    assert ch.graded_part(2) == 2 * h * h
    assert ch.graded_part(3) == Fraction(4, 3) * (h * h * h)


def test_chern_character_additive_on_sums():
    ring = chow.p1xp1()
    a = chern.line_bundle(ring.gen("h1"))
    b = chern.line_bundle(2 * ring.gen("h2"))
    lhs = chern.chern_character(chern.direct_sum(a, b))
    rhs = chern.chern_character(a) + chern.chern_character(b)
    assert lhs == rhs


def test_todd_p3():
    ring = chow.p3()
    h = ring.gen("h")
    td = chern.todd(ring)
    assert td.graded_part(0) == ring.one()
    assert td.graded_part(1) == 2 * h
    assert td.graded_part(2) == Fraction(11, 6) * (h * h)
    assert td.graded_part(3) == h * h * h


def test_euler_characteristic_on_p3():
    ring = chow.p3()
    for k in range(-6, 7):
        lb = chern.line_bundle(ParamPoly.const(k) * ring.gen("h"))
        chi = chern.euler_characteristic(lb).constant()
        expected = comb(k + 3, 3) if k >= -3 else -comb(-k - 1, 3)
        if k in (-1, -2, -3):
            expected = 0
        assert chi == expected, k


def test_euler_characteristic_structure_sheaves():
    assert chern.euler_characteristic(chern.trivial(chow.p3(), 1)).constant() == 1
    assert chern.euler_characteristic(chern.trivial(chow.p1xp3(), 1)).constant() == 1
    assert chern.euler_characteristic(chern.trivial(chow.sigma(2), 1)).constant() == 1


def test_restrict_bundle_horizontal_and_vertical():
    b = chern.abelian_surface_bundle()
    hor = chern.restrict_bundle(b, "horizontal")
    assert hor.ring.name == chow.p3().name
    assert hor.c1 == 4 * chow.p3().gen("h")
    ver = chern.restrict_bundle(b, "vertical")
    assert ver.ring.name == chow.p1().name
    assert ver.c1 == 2 * chow.p1().gen("h")


def test_restrict_bundle_to_p1xline():
    ring = chow.p1xp1()
    r = chern.restrict_bundle_to_p1xline(chern.abelian_surface_bundle())
    assert r.c1 == 2 * ring.gen("h1") + 4 * ring.gen("h2")
    assert r.c2 == 8 * ring.gen("h1") * ring.gen("h2")


def test_restricted_twist_used_by_jumping_divisor():
    # E on P1x(line), twisted by O(-2,-2): c1 = -2h1, c2 = 4 pt
    ring = chow.p1xp1()
    r = chern.restrict_bundle_to_p1xline(chern.abelian_surface_bundle())
    t = chern.twist(r, -2 * ring.gen("h1") - 2 * ring.gen("h2"))
    assert t.c1 == -2 * ring.gen("h1")
    assert t.c2 == 4 * ring.gen("h1") * ring.gen("h2")


def test_grr_pushforward_of_line_bundles():
    ring = chow.p1xp1()
    h1, h2 = ring.gen("h1"), ring.gen("h2")
    for a in range(0, 5):
        for b in range(0, 5):
            lb = chern.line_bundle(-ParamPoly.const(a) * h1 - ParamPoly.const(b) * h2)
            rank, c1 = chern.grr_pushforward(lb)
            assert rank.constant() == 1 - a
            assert c1.constant() == b * (a - 1)
