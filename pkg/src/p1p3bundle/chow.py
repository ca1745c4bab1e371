"""Finite-dimensional graded intersection rings.

The five families the computations need: P1, P3, P1xP3, P1xP1 and the
Hirzebruch surfaces Sigma_e.  Each ring ships a hard-coded multiplication
table on its monomial basis, the point class, the canonical class and the
total Chern class of the tangent bundle.  Cycle classes carry ParamPoly
coefficients so formal twist parameters flow through unchanged.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DegreeMismatchError, InvalidParameterError, RingMismatchError
from .poly import ParamPoly


class RingSpec:
    """A graded ring with finite monomial basis and structure constants."""

    def __init__(self, name, dimension, basis, degrees, table, point):
        self.name = name
        self.dimension = dimension
        self.basis = tuple(basis)  # ordered by degree
        self.degrees = dict(degrees)  # basis monomial -> graded degree
        self.table = table  # (m1, m2) -> {monomial: Fraction}
        self.point = point
        self.canonical = None  # set by the factory
        self.tangent_chern = None  # set by the factory

    def zero(self):
        return GradedClass(self, {})

    def one(self):
        return GradedClass(self, {"1": ParamPoly.const(1)})

    def gen(self, name):
        if name not in self.degrees:
            raise InvalidParameterError("%s is not a basis monomial of %s" % (name, self.name))
        return GradedClass(self, {name: ParamPoly.const(1)})

    def cls(self, coeffs):
        """Build a class from {basis monomial: coefficient} (ints allowed)."""
        out = {}
        for name, c in coeffs.items():
            if name not in self.degrees:
                raise InvalidParameterError("%s is not a basis monomial of %s" % (name, self.name))
            if not isinstance(c, ParamPoly):
                c = ParamPoly.const(c)
            out[name] = c
        return GradedClass(self, out)

    def __repr__(self):
        return "RingSpec(%s)" % self.name


class GradedClass:
    """Element of a RingSpec: basis monomials with ParamPoly coefficients."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = {m: c for m, c in coeffs.items() if not c.is_zero()}

    def coeff(self, name):
        return self.coeffs.get(name, ParamPoly.const(0))

    def is_zero(self):
        return not self.coeffs

    def graded_part(self, k):
        return GradedClass(
            self.ring, {m: c for m, c in self.coeffs.items() if self.ring.degrees[m] == k}
        )

    def is_homogeneous(self, k):
        return all(self.ring.degrees[m] == k for m in self.coeffs)

    def _check_ring(self, other):
        if self.ring is not other.ring:
            raise RingMismatchError(
                "classes live in different rings: %s vs %s" % (self.ring.name, other.ring.name)
            )

    @staticmethod
    def _as_scalar(x):
        if isinstance(x, (int, Fraction, ParamPoly)):
            return x if isinstance(x, ParamPoly) else ParamPoly.const(x)
        return None

    def __add__(self, other):
        scalar = GradedClass._as_scalar(other)
        if scalar is not None:
            other = GradedClass(self.ring, {"1": scalar})
        elif not isinstance(other, GradedClass):
            return NotImplemented
        self._check_ring(other)
        coeffs = dict(self.coeffs)
        for m, c in other.coeffs.items():
            coeffs[m] = coeffs.get(m, ParamPoly.const(0)) + c
        return GradedClass(self.ring, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, GradedClass):
            return self + (-other)
        scalar = GradedClass._as_scalar(other)
        if scalar is None:
            return NotImplemented
        return self + GradedClass(self.ring, {"1": -scalar})

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        scalar = GradedClass._as_scalar(other)
        if scalar is not None:
            return GradedClass(self.ring, {m: c * scalar for m, c in self.coeffs.items()})
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check_ring(other)
        coeffs = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                for m, f in self.ring.table[(m1, m2)].items():
                    coeffs[m] = coeffs.get(m, ParamPoly.const(0)) + c1 * c2 * f
        return GradedClass(self.ring, coeffs)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidParameterError("exponent must be a nonnegative int")
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            scalar = GradedClass._as_scalar(other)
            if scalar is None:
                return NotImplemented
            other = GradedClass(self.ring, {"1": scalar})
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), frozenset((m, c) for m, c in self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in self.ring.basis:
            if m in self.coeffs:
                c = self.coeffs[m]
                cs = str(c)
                if m == "1":
                    parts.append(cs)
                elif cs == "1":
                    parts.append(m)
                elif len(c.terms) > 1 or "-" in cs or "/" in cs or "*" in cs:
                    parts.append("(%s)*%s" % (cs, m))
                else:
                    parts.append("%s*%s" % (cs, m))
        return " + ".join(parts)

    __repr__ = __str__


def degree(x):
    """Coefficient of the point class (zero if absent)."""
    return x.coeff(x.ring.point)


# -- ring construction -------------------------------------------------------


def _pn_monomial(j):
    return "1" if j == 0 else ("h" if j == 1 else "h^%d" % j)


def _product_table(names, mul):
    """names: monomial -> key; mul(key1, key2) -> monomial name or None."""
    table = {}
    for m1, k1 in names.items():
        for m2, k2 in names.items():
            out = mul(k1, k2)
            table[(m1, m2)] = {} if out is None else {out: Fraction(1)}
    return table


@lru_cache(maxsize=None)
def p1():
    names = {"1": 0, "h": 1}
    table = _product_table(names, lambda a, b: _pn_monomial(a + b) if a + b <= 1 else None)
    ring = RingSpec("P1", 1, ["1", "h"], {"1": 0, "h": 1}, table, "h")
    h = ring.gen("h")
    ring.canonical = -2 * h
    ring.tangent_chern = ring.one() + 2 * h
    return ring


@lru_cache(maxsize=None)
def p3():
    names = {_pn_monomial(j): j for j in range(4)}
    table = _product_table(names, lambda a, b: _pn_monomial(a + b) if a + b <= 3 else None)
    ring = RingSpec("P3", 3, list(names), names, table, "h^3")
    h = ring.gen("h")
    ring.canonical = -4 * h
    ring.tangent_chern = (ring.one() + h) ** 4
    return ring


def _bidegree_name(i, j, g1, g2, jmax):
    parts = []
    if i:
        parts.append(g1)
    if j:
        parts.append(g2 if j == 1 else "%s^%d" % (g2, j))
    return "*".join(parts) or "1"


def _product_of_projectives(ring_name, g1, g2, imax, jmax):
    names = {}
    for total in range(imax + jmax + 1):
        for i in range(imax + 1):
            j = total - i
            if 0 <= j <= jmax:
                names[_bidegree_name(i, j, g1, g2, jmax)] = (i, j)
    # order by degree, then by name for determinism
    basis = sorted(names, key=lambda m: (sum(names[m]), m))
    degrees = {m: sum(k) for m, k in names.items()}

    def mul(k1, k2):
        i, j = k1[0] + k2[0], k1[1] + k2[1]
        if i > imax or j > jmax:
            return None
        return _bidegree_name(i, j, g1, g2, jmax)

    table = _product_table(names, mul)
    return RingSpec(ring_name, imax + jmax, basis, degrees, table,
                    _bidegree_name(imax, jmax, g1, g2, jmax))


@lru_cache(maxsize=None)
def p1xp3():
    ring = _product_of_projectives("P1xP3", "h1", "h3", 1, 3)
    h1, h3 = ring.gen("h1"), ring.gen("h3")
    ring.canonical = -2 * h1 - 4 * h3
    ring.tangent_chern = (ring.one() + 2 * h1) * (ring.one() + h3) ** 4
    return ring


@lru_cache(maxsize=None)
def p1xp1():
    ring = _product_of_projectives("P1xP1", "h1", "h2", 1, 1)
    h1, h2 = ring.gen("h1"), ring.gen("h2")
    ring.canonical = -2 * h1 - 2 * h2
    ring.tangent_chern = (ring.one() + 2 * h1) * (ring.one() + 2 * h2)
    return ring


@lru_cache(maxsize=None)
def sigma(e):
    """Hirzebruch surface Sigma_e: basis {1, C0, f, pt} with C0^2 = -e pt,
    C0.f = pt, f^2 = 0."""
    if not isinstance(e, int) or e < 0:
        raise InvalidParameterError("Hirzebruch invariant e must be a nonnegative integer")
    basis = ["1", "C0", "f", "pt"]
    degrees = {"1": 0, "C0": 1, "f": 1, "pt": 2}
    table = {}
    for m1 in basis:
        for m2 in basis:
            d = degrees[m1] + degrees[m2]
            if d > 2:
                out = {}
            elif m1 == "1":
                out = {m2: Fraction(1)}
            elif m2 == "1":
                out = {m1: Fraction(1)}
            elif (m1, m2) == ("C0", "C0"):
                out = {"pt": Fraction(-e)} if e else {}
            elif {m1, m2} == {"C0", "f"}:
                out = {"pt": Fraction(1)}
            else:  # f.f
                out = {}
            table[(m1, m2)] = out
    ring = RingSpec("Sigma(%d)" % e, 2, basis, degrees, table, "pt")
    c0, f = ring.gen("C0"), ring.gen("f")
    ring.canonical = -2 * c0 - (e + 2) * f
    # c1(T) = -K, c2(T) = topological Euler number 4
    ring.tangent_chern = ring.one() + 2 * c0 + (e + 2) * f + 4 * ring.gen("pt")
    return ring


def ring_make(ring_id, e=None):
    """Factory keyed by name: P1, P3, P1xP3, P1xP1 or Sigma (with e)."""
    key = ring_id.lower()
    if key == "p1":
        return p1()
    if key == "p3":
        return p3()
    if key == "p1xp3":
        return p1xp3()
    if key == "p1xp1":
        return p1xp1()
    if key == "sigma":
        return sigma(e)
    raise InvalidParameterError("unknown ring id %r" % (ring_id,))


# -- restriction maps ---------------------------------------------------------


def restrict_fiber(x, which):
    """Restrict a P1xP3 class to a fiber of one projection.

    horizontal: {t} x P3 (kills h1, renames h3 -> h); vertical: P1 x {x}
    (kills h3, renames h1 -> h).
    """
    if x.ring is not p1xp3():
        raise RingMismatchError("restrict_fiber expects a class on P1xP3")
    if which not in ("horizontal", "vertical"):
        raise InvalidParameterError("which must be 'horizontal' or 'vertical'")
    ring = p1xp3()
    index = {m: k for m in ring.basis for k in [_parse_p1xp3(m)]}
    out = {}
    for m, c in x.coeffs.items():
        i, j = index[m]
        if which == "horizontal":
            if i == 0:
                out[_pn_monomial(j)] = c
        else:
            if j == 0:
                out[_pn_monomial(i)] = c
    target = p3() if which == "horizontal" else p1()
    return GradedClass(target, out)


def restrict_to_p1xline(x):
    """Restrict a P1xP3 class to P1 x (general line in P3), landing in P1xP1.

    h1 -> h1, h3 -> h2, and h3^k -> 0 for k >= 2.
    """
    if x.ring is not p1xp3():
        raise RingMismatchError("restrict_to_p1xline expects a class on P1xP3")
    target = p1xp1()
    out = {}
    for m, c in x.coeffs.items():
        i, j = _parse_p1xp3(m)
        if j <= 1:
            out[_bidegree_name(i, j, "h1", "h2", 1)] = c
    return GradedClass(target, out)


def _parse_p1xp3(m):
    if m == "1":
        return (0, 0)
    i = 0
    j = 0
    for part in m.split("*"):
        if part == "h1":
            i = 1
        elif part == "h3":
            j = 1
        elif part.startswith("h3^"):
            j = int(part[3:])
    return (i, j)
