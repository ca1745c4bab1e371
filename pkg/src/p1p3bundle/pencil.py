"""Rational pencils of quadrics in P3.

A pencil is a 4x4 symmetric matrix of homogeneous binary forms in (l, m)
of a common degree d.  Supported analysis: generic rank over the function
field of the parameter line, pointwise rank, the rank-1 parameter locus
(distinct projective roots of the gcd of the 2x2 minors, including the
root at infinity), and the family of singular lines of a rank-2 pencil.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    InvalidParameterError,
    RankMismatchError,
    RankTooHighError,
)
from .poly import (
    ParamPoly,
    RatFunc,
    gcd_univariate,
    matrix_rank_kernel,
    rref,
    squarefree_univariate,
    univariate_coeffs,
)

LAMBDA = "l"
MU = "m"


class WholeLine:
    """Sentinel: the rank-1 locus is all of the parameter line."""

    def __repr__(self):
        return "WholeLine"


WHOLE_LINE = WholeLine()


def _coerce_poly(x):
    return x if isinstance(x, ParamPoly) else ParamPoly.const(x)


class QuadricPencil:
    """4x4 symmetric matrix of homogeneous forms of degree d in (l, m)."""

    def __init__(self, entries, degree=None):
        rows = [[_coerce_poly(x) for x in row] for row in entries]
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise InvalidParameterError("pencil matrix must be 4x4")
        for i in range(4):
            for j in range(4):
                if rows[i][j] != rows[j][i]:
                    raise InvalidParameterError("pencil matrix must be symmetric")
        degrees = set()
        for row in rows:
            for p in row:
                if p.is_zero():
                    continue
                if any(v not in (LAMBDA, MU) for v in p.variables()):
                    raise InvalidParameterError("pencil entries must be forms in (l, m)")
                ds = {sum(e for _, e in mono) for mono in p.terms}
                if len(ds) != 1:
                    raise InvalidParameterError("pencil entries must be homogeneous")
                degrees |= ds
        if len(degrees) > 1:
            raise InvalidParameterError("pencil entries must share one degree")
        nonzero = bool(degrees)
        inferred = degrees.pop() if degrees else 0
        if degree is None:
            degree = inferred
        elif nonzero and degree != inferred:
            raise InvalidParameterError("declared degree does not match the entries")
        self.entries = tuple(tuple(r) for r in rows)
        self.degree = degree

    # -- constructors -----------------------------------------------------

    @staticmethod
    def linear(q0, q1):
        """The linear pencil l*Q0 + m*Q1 from two rational symmetric matrices."""
        l, m = ParamPoly.var(LAMBDA), ParamPoly.var(MU)
        entries = [
            [l * Fraction(q0[i][j]) + m * Fraction(q1[i][j]) for j in range(4)]
            for i in range(4)
        ]
        return QuadricPencil(entries, degree=1)

    @staticmethod
    def rank2_normal_form(a0, a1, a2):
        """The linear normal form of a rank-<=2 pencil: l*diag-block + m*diag(1,1,0,0)."""
        q1 = [[a0, a1, 0, 0], [a1, a2, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
        q0 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
        # entries l*a + m on the 2x2 block, matching the determinant arithmetic
        l, m = ParamPoly.var(LAMBDA), ParamPoly.var(MU)
        entries = [
            [l * Fraction(q1[i][j]) + m * Fraction(q0[i][j]) for j in range(4)]
            for i in range(4)
        ]
        return QuadricPencil(entries, degree=1)

    @staticmethod
    def from_vectors(*vectors):
        """Sum of v.v^T over vectors of binary forms (a rank-<=len pencil)."""
        vs = [[_coerce_poly(x) for x in v] for v in vectors]
        entries = [[ParamPoly.const(0)] * 4 for _ in range(4)]
        for v in vs:
            for i in range(4):
                for j in range(4):
                    entries[i][j] = entries[i][j] + v[i] * v[j]
        return QuadricPencil(entries)

    def is_zero(self):
        return all(p.is_zero() for row in self.entries for p in row)

    @staticmethod
    def degree4_witness():
        """A degree-4 pencil of generic rank 2 with four rank-1 parameters.

        Built as s0(l,m) u u^T + s1(l,m) z z^T with u = (l,m,0,0),
        z = (0,0,l,m) and the coprime squarefree quadratic scales
        s0 = l*m, s1 = l^2 - m^2.  The rank drops to 1 exactly at the
        four roots of s0*s1 and the singular line moves with the
        parameter (kernel spanned by (m,-l,0,0) and (0,0,m,-l)).
        """
        l, m = ParamPoly.var(LAMBDA), ParamPoly.var(MU)
        u = [l, m, ParamPoly.const(0), ParamPoly.const(0)]
        z = [ParamPoly.const(0), ParamPoly.const(0), l, m]
        s0 = l * m
        s1 = l * l - m * m
        entries = [
            [s0 * u[i] * u[j] + s1 * z[i] * z[j] for j in range(4)]
            for i in range(4)
        ]
        return QuadricPencil(entries, degree=4)

    # -- rank analysis ------------------------------------------------------

    def _function_field_matrix(self):
        # the chart m = 1 is faithful: a nonzero homogeneous form stays
        # nonzero after dehomogenizing in m
        return [
            [RatFunc.from_poly(p.subs({MU: 1}), LAMBDA) for p in row]
            for row in self.entries
        ]

    def generic_rank(self):
        """Rank of the pencil matrix over the function field of the line."""
        if self.is_zero():
            return 0
        rank, _ = matrix_rank_kernel(self._function_field_matrix())
        return rank

    def rank_at(self, l0, m0):
        """Exact rank of the quadric at the parameter point (l0, m0)."""
        if l0 == 0 and m0 == 0:
            raise InvalidParameterError("(0, 0) is not a point of the parameter line")
        rows = [
            [Fraction(p.subs({LAMBDA: Fraction(l0), MU: Fraction(m0)}).constant()) for p in row]
            for row in self.entries
        ]
        rank, _ = matrix_rank_kernel(rows)
        return rank

    def _minors(self):
        out = []
        for (i, j) in combinations(range(4), 2):
            for (k, l) in combinations(range(4), 2):
                e = self.entries
                minor = e[i][k] * e[j][l] - e[i][l] * e[j][k]
                if not minor.is_zero():
                    out.append(minor)
        return out

    def rank1_parameter_count(self):
        """Number of parameter points where the rank drops to <= 1.

        Computed as the number of distinct projective roots of the gcd of
        the nonzero 2x2 minors, the root at infinity (m = 0) included.
        Returns WHOLE_LINE when every minor vanishes identically.
        """
        if self.generic_rank() > 2:
            raise RankTooHighError("rank1_parameter_count needs generic rank <= 2")
        minors = self._minors()
        if not minors:
            return WHOLE_LINE
        degree_2d = 2 * self.degree
        g = None
        inf_mult = None
        for minor in minors:
            f = minor.subs({MU: 1})
            mult = degree_2d - f.degree_in(LAMBDA)
            inf_mult = mult if inf_mult is None else min(inf_mult, mult)
            g = f if g is None else gcd_univariate(g, f, LAMBDA)
        radical = squarefree_univariate(g, LAMBDA)
        count = len(univariate_coeffs(radical, LAMBDA)) - 1
        if inf_mult >= 1:
            count += 1
        return count

    def singular_line_family(self):
        """(SingularLine, constant) for a pencil of generic rank 2.

        The kernel of the matrix over the function field is 2-dimensional;
        constant is True iff its reduced row-echelon basis does not involve
        the parameter, i.e. all quadrics share the same singular line.
        """
        if self.generic_rank() != 2:
            raise RankMismatchError("singular_line_family needs generic rank 2")
        matrix = self._function_field_matrix()
        _, kernel = matrix_rank_kernel(matrix)
        one = RatFunc.const(1, LAMBDA)
        kernel = [[one * x for x in v] for v in kernel]
        _, _, reduced = rref(kernel)
        constant = all(isinstance(x, int) or x.is_constant() for row in reduced for x in row)
        return SingularLine(tuple(tuple(r) for r in reduced)), constant


@dataclass(frozen=True)
class SingularLine:
    """Two independent vectors over the function field spanning the line."""

    basis: tuple
