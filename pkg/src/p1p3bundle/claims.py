"""Registry of verifiable claims.

Each claim bundles a stable id, a one-line description, a source anchor,
and a deterministic check returning PASS/FAIL with computed-vs-expected
strings.  Claims are pure and idempotent; the registry is keyed and run
in sorted id order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import chern, chow, cohom, geometry, heisenberg, pencil, stability
from .errors import UnknownClaimError
from .poly import ParamPoly


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    anchor: str
    check: object  # () -> ClaimResult


@dataclass(frozen=True)
class ClaimResult:
    ok: bool
    computed: str
    expected: str


def _result(computed, expected):
    cs, es = str(computed), str(expected)
    return ClaimResult(cs == es, cs, es)


def _result_bool(ok, computed, expected):
    return ClaimResult(bool(ok), str(computed), str(expected))


# -- individual checks -------------------------------------------------------


def _check_eq5():
    poly = geometry.chi_twisted_bundle()
    golden = geometry.rr_polynomial()
    spot1 = poly.evaluate({"a": 0, "b": 0})
    spot2 = poly.evaluate({"a": -2, "b": -4})
    computed = "%s; chi(0,0)=%s; chi(-2,-4)=%s" % (poly, spot1, spot2)
    expected = "%s; chi(0,0)=-6; chi(-2,-4)=2" % golden
    return _result(computed, expected)


def _check_intro_h1():
    bad = []
    for a in range(-6, -1):
        for b in range(0, 6):
            table = cohom.cohom_p1xp3(a, b)
            want = cohom.intro_h1(a, b)
            if table[1] != want or want <= 0:
                bad.append((a, b, table[1], want))
            rest = [table[i] for i in (0, 2, 3, 4)]
            if any(rest):
                bad.append((a, b, tuple(table), "only h1 nonzero"))
    return _result_bool(not bad, "violations=%s" % bad, "violations=[]")


def _check_hrr_oracle():
    ring = chow.p1xp3()
    mismatches = 0
    for a in range(-8, 9):
        for b in range(-8, 9):
            line = chern.line_bundle(
                ParamPoly.const(a) * ring.gen("h1") + ParamPoly.const(b) * ring.gen("h3")
            )
            chi_hrr = chern.euler_characteristic(line).constant()
            if chi_hrr != cohom.cohom_p1xp3(a, b).chi:
                mismatches += 1
    return _result("mismatches=%d of 289" % mismatches, "mismatches=0 of 289")


def _check_prop31():
    pol = stability.Polarization(1, 1)
    threshold = stability.slope_dot((1, 2), pol).constant()
    verdict = stability.stability_decide(pol)
    return _result(
        "threshold=%s, verdict=%s" % (threshold, verdict),
        "threshold=7, verdict=stable",
    )


def _check_remark33():
    bad = []
    for m in range(1, 41):
        for n in range(1, 41):
            got = stability.stability_decide(stability.Polarization(m, n))
            want = (
                "stable" if n < 18 * m else
                "semistable_not_stable" if n == 18 * m else "unstable"
            )
            if got != want:
                bad.append((m, n, got, want))
    return _result_bool(not bad, "violations=%s" % bad[:3], "violations=[]")


def _check_prop22():
    g = heisenberg.group_closure((heisenberg.SIGMA, heisenberg.TAU))
    relations = heisenberg.relation_check(g)
    derived_order, ab = heisenberg.commutator_structure(g)
    computed = "order=%d, relations=%s, derived=%d, ab=%s" % (
        g.order, all(relations.values()), derived_order, ab.invariants
    )
    return _result(computed, "order=8, relations=True, derived=2, ab=(2, 2)")


def _check_prop21():
    sq = heisenberg.tensor_square(0, 8, 6)
    k = heisenberg.type_from_square(sq)
    no4 = heisenberg.has_element_of_order(k, 4)
    yes4 = heisenberg.has_element_of_order(heisenberg.FinAbGroup((4, 4)), 4)
    computed = "square=%d, type=%s, order4=%s, (4,4)-order4=%s" % (
        sq, k.invariants, no4, yes4
    )
    return _result(computed, "square=20, type=(10, 10), order4=False, (4,4)-order4=True")


def _check_prop53(e, expected):
    sol = geometry.double_structure_solve(e)
    residual = geometry.double_structure_identity(e).subs(
        {"x": sol.x, "y": sol.y, "d": sol.d}
    )
    computed = "(x,y,d)=%s, residual=%s" % ((sol.x, sol.y, sol.d), residual)
    return _result(computed, "(x,y,d)=%s, residual=0" % (expected,))


def _check_lemma52():
    small = [(s.e, s.alpha, s.beta) for s in geometry.classify_embeddings(2)]
    large = [(s.e, s.alpha, s.beta) for s in geometry.classify_embeddings(10)]
    computed = "e_max=2: %s, e_max=10: %s" % (small, large)
    want = [(0, 1, 1), (2, 1, 2)]
    expected = "e_max=2: %s, e_max=10: %s" % (want, want)
    return _result(computed, expected)


def _check_prop54():
    return _result("obstructed=%s" % geometry.prop54_obstruction(), "obstructed=True")


def _check_lemma55():
    bad = [
        (a, b)
        for a in range(0, 9)
        for b in range(0, 9)
        if not geometry.multiplication_surjective(a, b)
    ]
    return _result_bool(not bad, "non-surjective=%s" % bad, "non-surjective=[]")


def _check_prop56():
    cases = []
    for a in range(0, 6):
        for b in range(3, 7):
            s = geometry.normality_status(a, b)
            if not s.normal:
                cases.append((a, b, "not normal"))
    s01 = geometry.normality_status(0, 1)
    s52 = geometry.normality_status(5, 2)
    s30 = geometry.normality_status(3, 0)
    computed = "grid=%s, (0,1)=%s, (5,2)=bound %d, (3,0)=bound %d" % (
        cases, s01.normal, s52.codim_bound, s30.codim_bound
    )
    return _result(computed, "grid=[], (0,1)=True, (5,2)=bound 6, (3,0)=bound 6")


def _check_lemma34():
    problem = cohom.LesProblem(
        a=None,
        b=cohom.CohomTable((1, 0, 0, 0, 0)),
        c=cohom.ABELIAN_SURFACE_TABLE,
        hints=(cohom.MapRankHint("B->C", 0, 1),),
    )
    table = cohom.les_solve(problem)
    return _result("h(I_X)=%s" % (table,), "h(I_X)=(0, 0, 2, 1, 0)")


def _check_prop41():
    problem = cohom.LesProblem(
        a=cohom.CohomTable((0, 0, 0, 0)),
        b=None,
        c=(1, None, None, None),
    )
    table = cohom.les_solve(problem)
    return _result("h0=%s" % (table[0],), "h0=1")


def _check_lemma42():
    restricted = chern.restrict_bundle(chern.abelian_surface_bundle(), "horizontal")
    ring = restricted.ring
    twisted = chern.twist(restricted, ParamPoly.const(-2) * ring.gen("h"))
    c1 = twisted.c1.coeff("h")
    c2 = twisted.c2.coeff("h^2")
    two_pa_minus_2 = c2.constant() * (c1.constant() - 4)
    pa = (two_pa_minus_2 + 2) / 2
    computed = "c1=%s, c2=%s, 2pa-2=%s, pa=%s" % (c1, c2, two_pa_minus_2, pa)
    return _result(computed, "c1=0, c2=2, 2pa-2=-8, pa=-3")


def _check_lemma13_linear():
    p = pencil.QuadricPencil.rank2_normal_form(2, 1, 3)
    count = p.rank1_parameter_count()
    _, constant = p.singular_line_family()
    computed = "generic_rank=%d, rank1_count=%s, constant_line=%s" % (
        p.generic_rank(), count, constant
    )
    return _result(computed, "generic_rank=2, rank1_count=2, constant_line=True")


def _check_lemma14_family():
    p = pencil.QuadricPencil.degree4_witness()
    count = p.rank1_parameter_count()
    _, constant = p.singular_line_family()
    spots = [p.rank_at(1, 1), p.rank_at(1, -1), p.rank_at(1, 0), p.rank_at(0, 1)]
    computed = "rank1_count=%s, constant_line=%s, ranks_at_roots=%s" % (
        count, constant, spots
    )
    return _result(computed, "rank1_count=4, constant_line=False, ranks_at_roots=[1, 1, 1, 1]")


def _splitting_claim(c1, data, expected):
    got = geometry.splitting_from_sections(c1, data).as_pair()
    return _result("splitting=%s" % (got,), "splitting=%s" % (expected,))


def _check_prop61a():
    h0 = cohom.les_solve(
        cohom.LesProblem(a=cohom.CohomTable((0, 0, 0, 0)), b=None, c=(1, None, None, None))
    )[0]
    return _splitting_claim(4, {2: h0, 3: 0, 4: 0}, (2, 2))


def _check_prop61b():
    return _splitting_claim(2, {1: 1, 2: 0}, (1, 1))


def _check_prop62b():
    return _splitting_claim(4, {4: 1, 5: 0}, (4, 0))


def _check_lemma65(r):
    def run():
        deg = geometry.jumping_divisor_degree(r)
        return _result("deg D=%s" % (deg,), "deg D=4")

    return run


def _check_serre_duality():
    bad = [
        (a, b)
        for a in range(-8, 9)
        for b in range(-8, 9)
        if not cohom.serre_dual_check(a, b)
    ]
    return _result_bool(not bad, "violations=%s" % bad[:3], "violations=[]")


# -- the registry -------------------------------------------------------------


def _registry():
    claims = [
        Claim("eq5", "chi(E(a,b)) from Riemann-Roch equals the cubic closed form",
              "Eq. (5)", _check_eq5),
        Claim("hrr-oracle", "Riemann-Roch chi of O(a,b) matches Kunneth tables on [-8,8]^2",
              "Sec. 3 / Bott-Kunneth", _check_hrr_oracle),
        Claim("intro-h1", "h^1(O(a,b)) = -(a+1) C(b+3,3) for a in [-6,-2], b in [0,5]",
              "Introduction", _check_intro_h1),
        Claim("lemma1.3-linear", "linear rank-2 normal form admits exactly 2 rank-1 quadrics",
              "Lemma 1.3", _check_lemma13_linear),
        Claim("lemma1.4-family", "degree-4 witness: 4 rank-1 parameters, moving singular line",
              "Lemma 1.4 / Sec. 1 (7)", _check_lemma14_family),
        Claim("lemma3.4", "long exact sequence gives h^i(I_X) = (0,0,2,1,0)",
              "Lemma 3.4", _check_lemma34),
        Claim("lemma4.2", "c2(E_t(-2)) = 2 and arithmetic genus -3 of X_t",
              "Lemma 4.2", _check_lemma42),
        Claim("lemma5.2", "embedding classification yields (0,1,1) and (2,1,2) only",
              "Lemma 5.2", _check_lemma52),
        Claim("lemma5.5", "multiplication maps of sections on P1 are surjective",
              "Lemma 5.5", _check_lemma55),
        Claim("lemma6.5-r1", "jumping divisor degree 4 with one kernel summand",
              "Lemma 6.5", _check_lemma65(1)),
        Claim("lemma6.5-r2", "jumping divisor degree 4 with two kernel summands",
              "Lemma 6.5", _check_lemma65(2)),
        Claim("lemma6.5-r3", "jumping divisor degree 4 with three kernel summands",
              "Lemma 6.5", _check_lemma65(3)),
        Claim("prop2.1", "tensor square 20, type (10,10), no element of order 4",
              "Prop. 2.1", _check_prop21),
        Claim("prop2.2", "symmetry group has order 8, dihedral relations, abelianization (2,2)",
              "Prop. 2.2", _check_prop22),
        Claim("prop3.1", "stable for O(1,1) with threshold 7",
              "Prop. 3.1", _check_prop31),
        Claim("prop4.1", "h^0(E_t(-2)) = 1 from the restriction sequence",
              "Prop. 4.1", _check_prop41),
        Claim("prop5.3-e0", "double-structure solver: (x,y,d) = (2,-2,4) for e = 0",
              "Prop. 5.3", lambda: _check_prop53(0, (2, -2, 4))),
        Claim("prop5.3-e2", "double-structure solver: (x,y,d) = (2,0,4) for e = 2",
              "Prop. 5.3", lambda: _check_prop53(2, (2, 0, 4))),
        Claim("prop5.4", "degree-4 line bundle cannot embed into the normal bundle, e = 2 obstructed",
              "Prop. 5.4", _check_prop54),
        Claim("prop5.6", "(a,b)-normality for b >= 3 and (0,1); codimension bounds otherwise",
              "Prop. 5.6 / Remark 5.7", _check_prop56),
        Claim("prop6.1a", "horizontal generic splitting type (2,2)",
              "Prop. 6.1(a)", _check_prop61a),
        Claim("prop6.1b", "vertical generic splitting type (1,1)",
              "Prop. 6.1(b)", _check_prop61b),
        Claim("prop6.2b", "splitting type (4,0) on a transversal jumping line",
              "Prop. 6.2(b)", _check_prop62b),
        Claim("remark3.3", "stability region is exactly n < 18m on the [1,40]^2 grid",
              "Remark 3.3", _check_remark33),
        Claim("serre-duality", "Serre duality table symmetry on [-8,8]^2",
              "Lemma 3.4 proof", _check_serre_duality),
    ]
    out = {}
    for c in claims:
        if c.id in out:
            raise ValueError("duplicate claim id %r" % c.id)
        out[c.id] = c
    return out


REGISTRY = _registry()


def all_ids():
    return sorted(REGISTRY)


def get_claim(claim_id):
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaimError("unknown claim id %r" % claim_id) from None


def run_claim(claim_id):
    claim = get_claim(claim_id)
    return claim.check()
