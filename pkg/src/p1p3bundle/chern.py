"""Bundle symbols and the Riemann-Roch toolkit.

A BundleSymbol is the (rank, Chern classes) shadow of a vector bundle.
Supported calculus: twisting, Whitney sums and complements, Chern character
(closed form, rank <= 2 on higher-dimensional rings, arbitrary rank on
surfaces), Todd classes of the shipped rings, Euler characteristics via
Hirzebruch-Riemann-Roch, and the Grothendieck-Riemann-Roch pushforward
along the projection P1xP1 -> P1.
"""

from __future__ import annotations

from fractions import Fraction

from . import chow
from .errors import (
    DegreeMismatchError,
    InvalidParameterError,
    NonInvertibleError,
    RingMismatchError,
    UnsupportedRankError,
)
from .poly import ParamPoly


class BundleSymbol:
    """(rank, c1, c2, ...) abstraction of a vector bundle on a shipped ring."""

    def __init__(self, ring, rank, chern_classes=()):
        self.ring = ring
        self.rank = rank if isinstance(rank, ParamPoly) else ParamPoly.const(rank)
        cs = list(chern_classes)
        while len(cs) < ring.dimension:
            cs.append(ring.zero())
        for k, c in enumerate(cs, start=1):
            if c.ring is not ring:
                raise RingMismatchError("Chern class on the wrong ring")
            if not c.is_homogeneous(k):
                raise DegreeMismatchError("c%d is not homogeneous of degree %d" % (k, k))
        self.cs = tuple(cs)

    @property
    def c1(self):
        return self.cs[0]

    @property
    def c2(self):
        return self.cs[1] if len(self.cs) >= 2 else self.ring.zero()

    def c(self, k):
        if k == 0:
            return self.ring.one()
        return self.cs[k - 1] if k <= len(self.cs) else self.ring.zero()

    def total_chern(self):
        total = self.ring.one()
        for c in self.cs:
            total = total + c
        return total

    def rank_int(self):
        return int(self.rank.constant())

    def __eq__(self, other):
        if not isinstance(other, BundleSymbol):
            return NotImplemented
        return self.ring is other.ring and self.rank == other.rank and self.cs == other.cs

    def __repr__(self):
        return "BundleSymbol(rank=%s, c=%s)" % (self.rank, self.total_chern())


def line_bundle(c1):
    """Rank-1 symbol with the given first Chern class."""
    if not c1.is_homogeneous(1):
        raise DegreeMismatchError("c1 must be homogeneous of degree 1")
    return BundleSymbol(c1.ring, 1, [c1])


def trivial(ring, rank):
    return BundleSymbol(ring, rank)


def serre_bundle(det, locus):
    """Rank-2 symbol of a Serre-construction bundle: c1 = det, c2 = locus."""
    if det.ring is not locus.ring:
        raise RingMismatchError("det and locus must live in the same ring")
    if not det.is_homogeneous(1):
        raise DegreeMismatchError("det must have degree 1")
    if not locus.is_homogeneous(2):
        raise DegreeMismatchError("locus must have degree 2")
    return BundleSymbol(det.ring, 2, [det, locus])


def abelian_surface_bundle():
    """The bundle E on P1xP3: c1 = 2h1 + 4h3, c2 = 8h1h3 + 6h3^2."""
    P = chow.p1xp3()
    h1, h3 = P.gen("h1"), P.gen("h3")
    return serre_bundle(2 * h1 + 4 * h3, 8 * h1 * h3 + 6 * h3 * h3)


def twist(bundle, line_class):
    """Tensor by a line bundle with first Chern class `line_class`."""
    if line_class.ring is not bundle.ring:
        raise RingMismatchError("twist class on the wrong ring")
    if not line_class.is_homogeneous(1):
        raise DegreeMismatchError("twist class must have degree 1")
    r = bundle.rank
    if r == ParamPoly.const(1):
        return BundleSymbol(bundle.ring, 1, [bundle.c1 + line_class])
    if r == ParamPoly.const(2):
        c1 = bundle.c1 + 2 * line_class
        c2 = bundle.c2 + bundle.c1 * line_class + line_class * line_class
        return BundleSymbol(bundle.ring, 2, [c1, c2])
    raise UnsupportedRankError("twist is implemented for rank <= 2 symbols")


def direct_sum(*bundles):
    """Whitney sum: ranks add, total Chern classes multiply."""
    ring = bundles[0].ring
    rank = ParamPoly.const(0)
    total = ring.one()
    for b in bundles:
        if b.ring is not ring:
            raise RingMismatchError("direct sum across different rings")
        rank = rank + b.rank
        total = total * b.total_chern()
    cs = [total.graded_part(k) for k in range(1, ring.dimension + 1)]
    return BundleSymbol(ring, rank, cs)


def whitney_complement(total, sub):
    """Solve c(sub) * c(Q) = c(total) for Q, degree by degree."""
    if total.ring is not sub.ring:
        raise RingMismatchError("whitney_complement across different rings")
    ring = total.ring
    if not (sub.total_chern().coeff("1") == ParamPoly.const(1)):
        raise NonInvertibleError("sub's degree-0 Chern part must be 1")
    q = [ring.one()]
    for k in range(1, ring.dimension + 1):
        qk = total.c(k)
        for i in range(1, k + 1):
            qk = qk - sub.c(i) * q[k - i]
        q.append(qk)
    return BundleSymbol(ring, total.rank - sub.rank, q[1:])


def restrict_bundle(bundle, which):
    """Restrict a P1xP3 symbol to a fiber (see chow.restrict_fiber)."""
    cs = [chow.restrict_fiber(c, which) for c in bundle.cs]
    target = cs[0].ring if cs else None
    dim = target.dimension
    return BundleSymbol(target, bundle.rank, cs[:dim])


def restrict_bundle_to_p1xline(bundle):
    """Restrict a P1xP3 symbol to P1 x (general line), landing on P1xP1."""
    cs = [chow.restrict_to_p1xline(c) for c in bundle.cs]
    return BundleSymbol(chow.p1xp1(), bundle.rank, cs[:2])


def chern_character(bundle):
    """rank + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3c1c2)/6 + (c1^4 - 4c1^2c2 + 2c2^2)/24.

    Valid verbatim for rank <= 2; on surfaces only the degree <= 2 part
    survives, which is the universal Newton expression for any rank, so
    arbitrary (even formal) ranks are accepted there.
    """
    ring = bundle.ring
    if ring.dimension > 2:
        if not (bundle.rank == ParamPoly.const(1) or bundle.rank == ParamPoly.const(2)):
            raise UnsupportedRankError(
                "chern_character needs rank <= 2 on a ring of dimension > 2"
            )
    c1, c2 = bundle.c1, bundle.c2
    ch = ring.one() * bundle.rank
    ch = ch + c1
    if ring.dimension >= 2:
        ch = ch + (c1 * c1 - 2 * c2) * Fraction(1, 2)
    if ring.dimension >= 3:
        ch = ch + (c1 ** 3 - 3 * c1 * c2) * Fraction(1, 6)
    if ring.dimension >= 4:
        ch = ch + (c1 ** 4 - 4 * c1 * c1 * c2 + 2 * c2 * c2) * Fraction(1, 24)
    return ch


def todd(ring):
    """Todd class of the tangent bundle of a shipped ring."""
    name = ring.name
    if name == "P1":
        return ring.one() + ring.gen("h")
    if name == "P3":
        h = ring.gen("h")
        return ring.one() + 2 * h + Fraction(11, 6) * h * h + h ** 3
    if name == "P1xP3":
        h1, h3 = ring.gen("h1"), ring.gen("h3")
        return (ring.one() + h1) * (
            ring.one() + 2 * h3 + Fraction(11, 6) * h3 * h3 + h3 ** 3
        )
    if name == "P1xP1":
        return (ring.one() + ring.gen("h1")) * (ring.one() + ring.gen("h2"))
    if name.startswith("Sigma("):
        e = int(name[6:-1])
        c0, f = ring.gen("C0"), ring.gen("f")
        # 1 + c1/2 + (c1^2 + c2)/12 with c1 = 2C0 + (e+2)f, c2 = 4pt
        return ring.one() + c0 + Fraction(e + 2, 2) * f + ring.gen("pt")
    raise InvalidParameterError("no Todd class for ring %s" % name)


def euler_characteristic(bundle):
    """chi via Hirzebruch-Riemann-Roch: degree(ch . td)."""
    return chow.degree(chern_character(bundle) * todd(bundle.ring))


def grr_pushforward(bundle):
    """Virtual pushforward along q: P1xP1 -> P1 killing h1.

    Computes ch(B).(1 + h1) and reads off the h1-linear part: the constant
    coefficient is the virtual rank of q_!B, the h2 coefficient its virtual
    first Chern degree.
    """
    if bundle.ring is not chow.p1xp1():
        raise InvalidParameterError("grr_pushforward expects a bundle on P1xP1")
    ring = bundle.ring
    relative_todd = ring.one() + ring.gen("h1")
    pushed = chern_character(bundle) * relative_todd
    return pushed.coeff("h1"), pushed.coeff("h1*h2")
