"""Solvers and checks specific to the double structure and splitting types.

Covers the Hirzebruch embedding classification, the double-structure
solver for the ideal line bundle and the pencil degree, the normal-bundle
obstruction ruling out e = 2, the normality criteria on Sigma_0, splitting
types from section data, and the degree of the jumping divisor via the
Grothendieck-Riemann-Roch pushforward.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import chern, chow, cohom
from .errors import EmptyBoxError, InconsistentError, InvalidParameterError, SolverError
from .poly import ParamPoly, solve_zero_identity

# chi(E(a,b)), the Riemann-Roch polynomial the whole Section-5 argument
# pivots on; stored as a golden constant so an HRR drift becomes a test
# failure rather than a silent auto-correction
from fractions import Fraction


def rr_polynomial():
    """-6 + 12a + 34/3 b + 6b^2 + 41/3 ab + 2/3 b^3 + 4ab^2 + 1/3 ab^3."""
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    return (
        ParamPoly.const(-6)
        + 12 * a
        + Fraction(34, 3) * b
        + 6 * b ** 2
        + Fraction(41, 3) * a * b
        + Fraction(2, 3) * b ** 3
        + 4 * a * b ** 2
        + Fraction(1, 3) * a * b ** 3
    )


def chi_twisted_bundle():
    """chi(E(a,b)) computed by Hirzebruch-Riemann-Roch, symbolically."""
    ring = chow.p1xp3()
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    twisted = chern.twist(chern.abelian_surface_bundle(), a * ring.gen("h1") + b * ring.gen("h3"))
    return chern.euler_characteristic(twisted)


# -- Hirzebruch embedding classification ------------------------------------


@dataclass(frozen=True)
class EmbeddingSolution:
    e: int
    alpha: int
    beta: int


def classify_embeddings(e_max):
    """All (e, alpha, beta) with the embedding constraints of the surface Z.

    The constraints, evaluated in the Sigma_e ring: alpha = 1 (the section
    hits h1 once), degree((C0 + beta f)^2) = 2, and beta <= 2.
    """
    if e_max < 2:
        raise InvalidParameterError("e_max must be >= 2")
    out = []
    for e in range(e_max + 1):
        ring = chow.sigma(e)
        c0, f = ring.gen("C0"), ring.gen("f")
        for alpha in range(9):
            for beta in range(9):
                if alpha != 1 or beta > 2:
                    continue
                square = chow.degree((alpha * c0 + beta * f) ** 2).constant()
                if square == 2:
                    out.append(EmbeddingSolution(e, alpha, beta))
    return out


# -- the double-structure solver ----------------------------------------------


@dataclass(frozen=True)
class DoubleStructureSolution:
    e: int
    x: int
    y: int
    d: int


@lru_cache(maxsize=None)
def double_structure_identity(e):
    """The polynomial in (a, b, x, y, d) that must vanish identically.

    Assembles chi(E(a,b)) from the restriction sequences of the double
    structure Y on Z = Sigma_e, then subtracts the golden Riemann-Roch
    polynomial.
    """
    if e not in (0, 2):
        raise InvalidParameterError("e must be 0 or 2")
    ring = chow.p1xp3()
    h1, h3 = ring.gen("h1"), ring.gen("h3")
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    x, y, d = ParamPoly.var("x"), ParamPoly.var("y"), ParamPoly.var("d")

    def chi_line(p, q):
        return chern.euler_characteristic(chern.line_bundle(p * h1 + q * h3))

    assembled = chi_line(a - d + 2, b + 2) + chi_line(a + d, b + 2)
    if e == 0:
        assembled = assembled - cohom.chi_sigma(0, x + b + 2, y + a + b + d + 2)
        assembled = assembled - cohom.chi_sigma(0, b + 2, a + b + d + 2)
    else:
        assembled = assembled - cohom.chi_sigma(2, x + b + 2, y + a + 2 * b + d + 4)
        assembled = assembled - cohom.chi_sigma(2, b + 2, a + 2 * b + d + 4)
    return assembled - rr_polynomial()


@lru_cache(maxsize=None)
def double_structure_solve(e, bound=16):
    """The unique (x, y, d) making the decomposition match Riemann-Roch."""
    identity = double_structure_identity(e)
    try:
        solutions = solve_zero_identity(identity, ("x", "y", "d"), bound)
    except EmptyBoxError as exc:
        raise SolverError("no solution in the box: implementation bug") from exc
    if len(solutions) > 1:
        raise SolverError("non-unique solution in the box: implementation bug")
    s = solutions[0]
    return DoubleStructureSolution(e, s["x"], s["y"], s["d"])


# -- the normal-bundle obstruction --------------------------------------------


def subbundle_embeds(line_degree, summand_degrees):
    """Can O(line_degree) on P1 be a subbundle of (+)O(d_i)? Degree criterion."""
    return line_degree <= max(summand_degrees)


def prop54_obstruction():
    """True iff the e = 2 double structure is obstructed.

    The ideal line bundle's inverse restricted to the (-2)-section has
    degree -(x C0 + y f).C0 in Sigma_2; a degree-4 line bundle on P1 cannot
    embed into O + O(2) or O(1) + O(1).
    """
    sol = double_structure_solve(2)
    ring = chow.sigma(2)
    c0, f = ring.gen("C0"), ring.gen("f")
    ideal_class = sol.x * c0 + sol.y * f
    restricted_degree = int(chow.degree(-(ideal_class * c0)).constant())
    candidates = [(0, 2), (1, 1)]
    return restricted_degree == 4 and not any(
        subbundle_embeds(restricted_degree, c) for c in candidates
    )


# -- normality criteria ----------------------------------------------------------


@dataclass(frozen=True)
class NormalityStatus:
    normal: bool
    codim_bound: int  # 0 when normal


def normality_status(a, b):
    """(a,b)-normality of the double structure, or a codimension bound.

    Decided by the h^1 vanishing of O_Z((b-4)C0 + (a+b-2)f) on Sigma_0;
    when it does not settle normality the h^1 value itself bounds the
    codimension of the restriction map (b=2: a+1, b=1: 2a, b=0: 3(a-1)).
    """
    if a < 0 or b < 0:
        raise InvalidParameterError("normality is defined for a, b >= 0")
    h1 = cohom.cohom_sigma0(b - 4, a + b - 2)[1]
    if h1 == 0 and (b >= 3 or (a, b) == (0, 1)):
        return NormalityStatus(True, 0)
    return NormalityStatus(False, h1)


def multiplication_surjective(a, b):
    """H^0(O_P1(a)) (x) H^0(O_P1(b)) -> H^0(O_P1(a+b)) surjectivity by
    monomial span counting."""
    if a < 0 or b < 0:
        raise InvalidParameterError("needs a, b >= 0")
    products = {i + j for i in range(a + 1) for j in range(b + 1)}
    return products == set(range(a + b + 1))


# -- splitting types --------------------------------------------------------------


@dataclass(frozen=True)
class SplittingType:
    a: int
    b: int

    def __post_init__(self):
        if self.a < self.b:
            raise InvalidParameterError("splitting type requires a >= b")

    def as_pair(self):
        return (self.a, self.b)


def splitting_from_sections(c1, section_twists):
    """Splitting type O(a) + O(c1 - a) on a line from twisted section counts.

    The top degree a is the maximal k with h^0 of the k-twisted-down
    restriction nonzero.
    """
    positive = [k for k, h0 in section_twists.items() if h0 > 0]
    if not positive:
        raise InconsistentError("section data shows no sections at all")
    a = max(positive)
    if 2 * a < c1:
        raise InconsistentError(
            "top degree %d contradicts c1 = %d (needs 2a >= c1)" % (a, c1)
        )
    return SplittingType(a, c1 - a)


# -- the jumping divisor degree -----------------------------------------------------


def restricted_twisted_bundle():
    """E restricted to P1 x (general line), twisted by O(-2,-2)."""
    ring = chow.p1xp1()
    restricted = chern.restrict_bundle_to_p1xline(chern.abelian_surface_bundle())
    return chern.twist(restricted, -2 * ring.gen("h1") - 2 * ring.gen("h2"))


def resolution_summands(r):
    """The r+2 formal line summands O(-a_i, -b_i) of a resolution."""
    ring = chow.p1xp1()
    h1, h2 = ring.gen("h1"), ring.gen("h2")
    out = []
    for i in range(1, r + 3):
        ai = ParamPoly.var("a%d" % i)
        bi = ParamPoly.var("b%d" % i)
        out.append(chern.line_bundle(-(ai * h1) - bi * h2))
    return out


def jumping_divisor_degree(r):
    """Degree of the jumping divisor, via GRR along P1xP1 -> P1.

    Builds the kernel K of a resolution with r+2 formal line summands,
    pushes both sides forward, and forms c1(target) - c1(source) of the
    induced map R^1(K) -> (+) R^1(O(-a_i, -b_i)).  All formal exponents
    must cancel, leaving the constant 4.
    """
    if r < 1:
        raise InvalidParameterError("needs at least one kernel summand")
    summands = resolution_summands(r)
    total = chern.direct_sum(*summands)
    kernel = chern.whitney_complement(total, restricted_twisted_bundle())
    _, kernel_c1 = chern.grr_pushforward(kernel)
    summand_c1 = ParamPoly.const(0)
    for s in summands:
        _, vc1 = chern.grr_pushforward(s)
        summand_c1 = summand_c1 + vc1
    # c1(R^1 F) = -(virtual c1 of q_!F) since q_* vanishes for all pieces
    return kernel_c1 - summand_c1
