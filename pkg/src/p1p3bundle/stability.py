"""Slope stability of the rank-2 bundle with respect to O(m, n).

The subsheaf-existence oracle is deliberately three-valued: the vanishing
facts and the shipped positive instances are all the argument needs, and
pairs the source material does not decide stay "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import chow
from .errors import InvalidParameterError
from .poly import ParamPoly


@dataclass(frozen=True)
class Polarization:
    """An ample class O(m, n): requires m > 0 and n > 0."""

    m: int
    n: int

    def __post_init__(self):
        if self.m <= 0 or self.n <= 0:
            raise InvalidParameterError("O(m,n) is ample only for m > 0, n > 0")


# (p, q) with h^0(I_X(p, q)) != 0: the octic image, the degree-4 quadric
# pencil hypersurface, and the Serre-construction twist.
POSITIVE_INSTANCES = ((0, 8), (4, 2), (2, 4))


@lru_cache(maxsize=None)
def _slope_poly():
    # degree((a h1 + b h3).(m h1 + n h3)^3) = a n^3 + 3 b m n^2
    ring = chow.p1xp3()
    a, b = ParamPoly.var("a"), ParamPoly.var("b")
    m, n = ParamPoly.var("m"), ParamPoly.var("n")
    line = a * ring.gen("h1") + b * ring.gen("h3")
    pol = m * ring.gen("h1") + n * ring.gen("h3")
    return chow.degree(line * pol ** 3)


def slope_dot(line, pol):
    """L . H^3 for L = O(a, b) and H = O(m, n), computed in the Chow ring."""
    a, b = line
    if isinstance(a, int) and isinstance(b, int):
        value = _slope_poly().evaluate({"a": a, "b": b, "m": pol.m, "n": pol.n})
        return ParamPoly.const(value)
    return _slope_poly().subs({"a": a, "b": b, "m": pol.m, "n": pol.n})


def subsheaf_status(p, q):
    """Does X lie on a hypersurface of bidegree (p, q)? -> 'yes'/'no'/'unknown'.

    The 'no' clauses: (i) p < 0 or q < 2; (ii) p = 0 and q < 8;
    (iii) q = 2 and p <= 2.  'yes' when q >= 8 with p >= 0, or when (p, q)
    dominates a shipped positive instance componentwise.
    """
    if p < 0 or q < 2:
        return "no"
    if p == 0 and q < 8:
        return "no"
    if q == 2 and p <= 2:
        return "no"
    if q >= 8 and p >= 0:
        return "yes"
    if any(p >= p0 and q >= q0 for p0, q0 in POSITIVE_INSTANCES):
        return "yes"
    return "unknown"


def destabilizer_corners():
    """Slope-maximal corners of the regions where O(a,b) -> E may be nonzero.

    A nonzero map forces a hypersurface of bidegree (2-a, 4-b) through X,
    so subsheaf_status(2-a, 4-b) must not be 'no'.  The vanishing clauses
    carve out three regions whose corners these are; slope is strictly
    increasing in a and b for any positive polarization.
    """
    return [(1, 1), (-1, 2), (2, -4)]


def stability_decide(pol):
    """'stable', 'semistable_not_stable' or 'unstable' w.r.t. O(m, n)."""
    threshold = slope_dot((1, 2), pol).constant()  # half of det E = O(2,4)
    best = max(slope_dot(c, pol).constant() for c in destabilizer_corners())
    if best < threshold:
        return "stable"
    if best == threshold:
        return "semistable_not_stable"
    return "unstable"
