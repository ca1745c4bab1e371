"""Exact-arithmetic foundation.

Sparse multivariate polynomials in named formal parameters over the
rationals, a univariate Euclidean gcd, rational functions in one variable,
and rank/kernel computations over an exact field (Fraction or RatFunc
entries).  Everything here is immutable and pure.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import EmptyBoxError, InvalidParameterError, NonInvertibleError

# Rational coefficients are plain stdlib Fractions: always in lowest terms,
# positive denominator, structural equality.
Rat = Fraction

# A monomial is a tuple of (variable name, exponent) pairs, sorted by name,
# with all exponents > 0.  The empty tuple is the constant monomial.
_ONE = ()


def _mono_mul(m1, m2):
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_degree(mono):
    return sum(e for _, e in mono)


class ParamPoly:
    """Sparse polynomial with Fraction coefficients in named variables.

    Terms are stored as a dict monomial -> coefficient with no zero
    coefficients.  The canonical term order (used for serialization) is
    graded lexicographic over alphabetically sorted variable names.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {m: c for m, c in terms.items() if c}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(value):
        c = Fraction(value)
        return ParamPoly({_ONE: c} if c else {})

    @staticmethod
    def var(name, exponent=1):
        if exponent < 0:
            raise InvalidParameterError("negative exponent")
        if exponent == 0:
            return ParamPoly.const(1)
        return ParamPoly({((name, exponent),): Fraction(1)})

    @staticmethod
    def _coerce(x):
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return ParamPoly.const(x)
        return NotImplemented

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m == _ONE for m in self.terms)

    def constant(self):
        """The value of a constant polynomial, as a Fraction."""
        if not self.is_constant():
            raise InvalidParameterError("polynomial is not constant: %s" % self)
        return self.terms.get(_ONE, Fraction(0))

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    def total_degree(self):
        if not self.terms:
            return 0
        return max(_mono_degree(m) for m in self.terms)

    def degree_in(self, var):
        d = 0
        for m in self.terms:
            for v, e in m:
                if v == var:
                    d = max(d, e)
        return d

    def coefficient(self, mono):
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = ParamPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return ParamPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = ParamPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ParamPoly._coerce(other) - self

    def __mul__(self, other):
        other = ParamPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return ParamPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidParameterError("exponent must be a nonnegative int")
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = ParamPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution --------------------------------------------------------

    def subs(self, assignment):
        """Substitute variables by ints, Fractions or ParamPolys (exact)."""
        result = ParamPoly.const(0)
        for mono, coeff in self.terms.items():
            term = ParamPoly.const(coeff)
            for v, e in mono:
                if v in assignment:
                    val = assignment[v]
                    if not isinstance(val, ParamPoly):
                        val = ParamPoly.const(val)
                    term = term * val ** e
                else:
                    term = term * ParamPoly.var(v, e)
            result = result + term
        return result

    def evaluate(self, assignment):
        """Evaluate at a full numeric point; returns a Fraction (fast path)."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            v = coeff
            for name, e in mono:
                v = v * assignment[name] ** e
            total += v
        return total

    def collect(self, on_vars):
        """Group terms by their monomial in `on_vars`.

        Returns a dict mapping monomials (over `on_vars` only) to the
        coefficient polynomial in the remaining variables.
        """
        on_vars = set(on_vars)
        groups = {}
        for mono, coeff in self.terms.items():
            outer = tuple((v, e) for v, e in mono if v in on_vars)
            inner = tuple((v, e) for v, e in mono if v not in on_vars)
            groups.setdefault(outer, {})
            groups[outer][inner] = groups[outer].get(inner, Fraction(0)) + coeff
        return {m: ParamPoly(ts) for m, ts in groups.items()}

    # -- display ---------------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order over sorted variable names."""
        allvars = self.variables()

        def key(item):
            mono, _ = item
            exps = dict(mono)
            return (_mono_degree(mono), tuple(exps.get(v, 0) for v in allvars))

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for v, e in mono:
                factors.append(v if e == 1 else "%s^%d" % (v, e))
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = str(abs(coeff)) + "*" + "*".join(factors)
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "ParamPoly(%s)" % self


ZERO = ParamPoly.const(0)
ONE = ParamPoly.const(1)


def solve_zero_identity(identity, unknowns, bound=16):
    """All integer points of the box at which `identity` vanishes identically.

    The identity is viewed as a polynomial in its free variables (those not
    listed in `unknowns`); its coefficients are collected and must all vanish
    simultaneously.  The box is |u| <= bound for every unknown.  Each returned
    assignment is re-substituted and verified to give the literal zero
    polynomial.
    """
    unknowns = tuple(unknowns)
    if bound < 0 or not unknowns:
        raise EmptyBoxError("degenerate search box")
    free = [v for v in identity.variables() if v not in unknowns]
    coeffs = list(identity.collect(free).values())
    # cheap coefficients first so the scan aborts early on most points
    coeffs.sort(key=lambda p: len(p.terms))
    solutions = []
    for point in itertools.product(range(-bound, bound + 1), repeat=len(unknowns)):
        assignment = dict(zip(unknowns, point))
        if all(c.evaluate(assignment) == 0 for c in coeffs):
            if not identity.subs(assignment).is_zero():
                continue
            solutions.append(assignment)
    if not solutions:
        raise EmptyBoxError("no solution in the box |u| <= %d" % bound)
    return solutions


# -- univariate helpers (coefficient-list representation) ---------------------


def univariate_coeffs(p, var):
    """Coefficient list c0..cn of a polynomial univariate in `var`."""
    extra = [v for v in p.variables() if v != var]
    if extra:
        raise InvalidParameterError(
            "polynomial is not univariate in %s: extra variables %s" % (var, extra)
        )
    coeffs = [Fraction(0)] * (p.degree_in(var) + 1)
    for mono, c in p.terms.items():
        e = mono[0][1] if mono else 0
        coeffs[e] = c
    return _strip(coeffs)


def from_coeffs(coeffs, var):
    terms = {}
    for e, c in enumerate(coeffs):
        if c:
            terms[((var, e),) if e else _ONE] = Fraction(c)
    return ParamPoly(terms)


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _c_add(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _strip([x + y for x, y in zip(a, b)])


def _c_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _strip(out)


def _c_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        f = a[-1] / lead
        d = len(a) - len(b)
        q[d] = f
        for i, y in enumerate(b):
            a[d + i] -= f * y
        a = _strip(a)
        if not a:
            break
    return _strip(q), _strip(a)


def _c_monic(a):
    if not a:
        return []
    lead = a[-1]
    return [x / lead for x in a]


def _c_gcd(a, b):
    a, b = _strip(a), _strip(b)
    while b:
        _, r = _c_divmod(a, b)
        a, b = b, r
    return _c_monic(a)


def gcd_univariate(p, q, var):
    """Monic gcd of two polynomials univariate in `var`; gcd(p, 0) = monic p."""
    a = univariate_coeffs(p, var)
    b = univariate_coeffs(q, var)
    return from_coeffs(_c_gcd(a, b), var)


def squarefree_univariate(p, var):
    """The radical (product of distinct irreducible factors) of p, monic."""
    a = univariate_coeffs(p, var)
    if len(a) <= 1:
        return from_coeffs(_c_monic(a), var)
    da = _strip([i * c for i, c in enumerate(a)][1:])
    g = _c_gcd(a, da)
    rad, rem = _c_divmod(a, g)
    assert not rem
    return from_coeffs(_c_monic(rad), var)


# -- rational functions in one variable ---------------------------------------


class RatFunc:
    """Rational function in one named variable, stored as num/den coefficient
    lists in lowest terms with a monic denominator."""

    __slots__ = ("var", "num", "den")

    def __init__(self, var, num, den=(Fraction(1),)):
        num = _strip([Fraction(c) for c in num])
        den = _strip([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = _c_gcd(num, den)
            if len(g) > 1:
                num, _ = _c_divmod(num, g)
                den, _ = _c_divmod(den, g)
        else:
            den = [Fraction(1)]
        lead = den[-1]
        self.var = var
        self.num = tuple(x / lead for x in num)
        self.den = tuple(x / lead for x in den)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_poly(p, var):
        return RatFunc(var, univariate_coeffs(p, var))

    @staticmethod
    def const(value, var):
        return RatFunc(var, [Fraction(value)])

    @staticmethod
    def x(var):
        return RatFunc(var, [0, 1])

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, self.var)
        if isinstance(other, ParamPoly):
            return RatFunc.from_poly(other, self.var)
        return NotImplemented

    # -- queries -----------------------------------------------------------

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self):
        if not self.is_constant():
            raise InvalidParameterError("rational function is not constant")
        return self.num[0] if self.num else Fraction(0)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.var, self.num, self.den))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = _c_add(
            _c_mul(list(self.num), list(other.den)),
            _c_mul(list(other.num), list(self.den)),
        )
        return RatFunc(self.var, num, _c_mul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.var, [-c for c in self.num], list(self.den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            self.var,
            _c_mul(list(self.num), list(other.num)),
            _c_mul(list(self.den), list(other.den)),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise NonInvertibleError("division by zero rational function")
        return RatFunc(
            self.var,
            _c_mul(list(self.num), list(other.den)),
            _c_mul(list(self.den), list(other.num)),
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __str__(self):
        num = str(from_coeffs(self.num, self.var))
        if self.den == (Fraction(1),):
            return num
        return "(%s)/(%s)" % (num, from_coeffs(self.den, self.var))

    __repr__ = __str__


# -- exact linear algebra ------------------------------------------------------


def rref(rows):
    """Reduced row echelon form; returns (rank, pivot columns, rows).

    Entries may be Fractions, RatFuncs, or plain ints; the field operations
    +, -, *, / and truthiness are all that is required.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return r, pivots, m


def matrix_rank_kernel(rows):
    """Exact rank and kernel basis of a rectangular matrix.

    Kernel vectors v satisfy M.v = 0 exactly; rank + len(kernel) = ncols.
    """
    rank, pivots, m = rref(rows)
    ncols = len(rows[0]) if rows else 0
    kernel = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        kernel.append(v)
    return rank, kernel
