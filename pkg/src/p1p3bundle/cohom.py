"""Exact cohomology dimensions of line bundles.

Bott's formula on P^n, Kunneth on products, surface Riemann-Roch on
Hirzebruch surfaces, Serre duality checks, and a long-exact-sequence
dimension solver for short exact sheaf sequences with one unknown slot.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import chow
from .errors import InconsistentError, InvalidParameterError
from .poly import ParamPoly


@dataclass(frozen=True)
class CohomTable:
    """h^0..h^n of a sheaf on an n-fold."""

    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if any(d < 0 for d in self.dims):
            raise InvalidParameterError("cohomology dimensions must be nonnegative")

    def __getitem__(self, i):
        return self.dims[i]

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    @property
    def chi(self):
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def reversed(self):
        return CohomTable(tuple(reversed(self.dims)))


def cohom_pn(n, k):
    """Bott's formula for O(k) on P^n: cohomology only in degrees 0 and n."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    dims = [0] * (n + 1)
    if k >= 0:
        dims[0] = comb(n + k, n)
    if -k - 1 >= n:
        dims[n] = comb(-k - 1, n)
    return CohomTable(tuple(dims))


def kunneth(ta, tb):
    """h^i of the external tensor product: convolution of the two tables."""
    n = len(ta) + len(tb) - 2
    dims = [0] * (n + 1)
    for p, a in enumerate(ta):
        for q, b in enumerate(tb):
            dims[p + q] += a * b
    return CohomTable(tuple(dims))


def cohom_p1xp3(a, b):
    """Cohomology table of O(a, b) on P1xP3."""
    return kunneth(cohom_pn(1, a), cohom_pn(3, b))


def serre_dual_check(a, b):
    """Table of O(a,b) reversed must equal the table of O(-2-a, -4-b)."""
    return cohom_p1xp3(a, b).reversed() == cohom_p1xp3(-2 - a, -4 - b)


def intro_h1(a, b):
    """-(a+1) * C(b+3, 3), the closed form for h^1(O(a,b)) when a <= -2, b >= 0."""
    return -(a + 1) * comb(b + 3, 3)


def chi_sigma(e, alpha, beta):
    """chi of O(alpha C0 + beta f) on Sigma_e via surface Riemann-Roch.

    alpha, beta may be integers or ParamPolys; the result is exact.
    """
    ring = chow.sigma(e)
    if not isinstance(alpha, ParamPoly):
        alpha = ParamPoly.const(alpha)
    if not isinstance(beta, ParamPoly):
        beta = ParamPoly.const(beta)
    d = alpha * ring.gen("C0") + beta * ring.gen("f")
    return ParamPoly.const(1) + chow.degree(d * (d - ring.canonical)) * Fraction(1, 2)


def cohom_sigma0(alpha, beta):
    """Cohomology of O(alpha C0 + beta f) on Sigma_0 = P1xP1 via Kunneth."""
    return kunneth(cohom_pn(1, alpha), cohom_pn(1, beta))


# -- long exact sequence solver -------------------------------------------------

# A known table entry may be None ("not pinned by the argument"); a whole
# unknown slot is None.  e_i denotes the rank of the connecting map
# H^i(C) -> H^{i+1}(A), with e_{-1} = e_top = 0.

_UNKNOWN = object()


@dataclass(frozen=True)
class MapRankHint:
    """Declared rank of one map in the long exact sequence.

    kind: "A->B" (induced, index i), "B->C" (induced, index i), or
    "connecting" (H^i(C) -> H^{i+1}(A)).
    """

    kind: str
    index: int
    rank: int


@dataclass(frozen=True)
class LesProblem:
    """0 -> A -> B -> C -> 0 with exactly one slot unknown (None)."""

    a: object
    b: object
    c: object
    hints: tuple = ()

    def __post_init__(self):
        if sum(x is None for x in (self.a, self.b, self.c)) != 1:
            raise InvalidParameterError("exactly one slot must be unknown")


@dataclass(frozen=True)
class Underdetermined:
    """All feasible tables when the sequence does not pin a unique answer."""

    tables: tuple


def _entries(t, n):
    if t is None:
        return [None] * n
    return [None if x is None else int(x) for x in t]


def les_solve(problem):
    """Solve for the unknown slot of a short exact sheaf sequence.

    Returns the unique feasible table (entries may be None where the data
    does not determine them), or an Underdetermined listing every feasible
    table.  Raises InconsistentError when no assignment of connecting-map
    ranks satisfies exactness.
    """
    known = [t for t in (problem.a, problem.b, problem.c) if t is not None]
    n = max(len(t) for t in known)
    A = _entries(problem.a, n)
    B = _entries(problem.b, n)
    C = _entries(problem.c, n)
    solving = "a" if problem.a is None else ("b" if problem.b is None else "c")

    # bounds for e_0..e_{n-2}; e at the top index is 0
    ranges = []
    for i in range(n - 1):
        bounds = []
        if C[i] is not None:
            bounds.append(C[i])
        if A[i + 1] is not None:
            bounds.append(A[i + 1])
        ranges.append(range(min(bounds) + 1) if bounds else (_UNKNOWN,))

    solutions = []
    for evec in itertools.product(*ranges):
        e = list(evec) + [0]  # e[n-1] = 0

        def e_at(i):
            return 0 if i < 0 else e[i]

        table = []
        ok = True
        for i in range(n):
            ai, bi, ci = A[i], B[i], C[i]
            if solving == "b":
                if ai is None or ci is None or e_at(i) is _UNKNOWN or e_at(i - 1) is _UNKNOWN:
                    bi = None
                else:
                    bi = (ai - e_at(i - 1)) + (ci - e_at(i))
            elif solving == "a":
                if bi is None or ci is None or e_at(i) is _UNKNOWN or e_at(i - 1) is _UNKNOWN:
                    ai = None
                else:
                    ai = bi - ci + e_at(i) + e_at(i - 1)
            else:
                if ai is None or bi is None or e_at(i) is _UNKNOWN or e_at(i - 1) is _UNKNOWN:
                    ci = None
                else:
                    ci = bi - ai + e_at(i - 1) + e_at(i)
            # exactness constraints, checked where all quantities are known
            if ai is not None and e_at(i - 1) is not _UNKNOWN and ai - e_at(i - 1) < 0:
                ok = False
                break
            if ci is not None and e_at(i) is not _UNKNOWN and ci - e_at(i) < 0:
                ok = False
                break
            if (
                ai is not None
                and bi is not None
                and ci is not None
                and e_at(i) is not _UNKNOWN
                and e_at(i - 1) is not _UNKNOWN
                and (ai - e_at(i - 1)) + (ci - e_at(i)) != bi
            ):
                ok = False
                break
            target = {"a": ai, "b": bi, "c": ci}[solving]
            if target is not None and target < 0:
                ok = False
                break
            table.append(target)
        if not ok:
            continue
        if not _hints_ok(problem.hints, A, B, C, table, solving, e):
            continue
        t = tuple(table)
        if t not in solutions:
            solutions.append(t)

    if not solutions:
        raise InconsistentError("no feasible long-exact-sequence assignment")
    if len(solutions) == 1:
        return solutions[0]
    return Underdetermined(tuple(sorted(solutions, key=lambda t: tuple(-1 if x is None else x for x in t))))


def _hints_ok(hints, A, B, C, table, solving, e):
    full = {"a": list(A), "b": list(B), "c": list(C)}
    full[solving] = table
    fa, fb, fc = full["a"], full["b"], full["c"]

    def e_at(i):
        return 0 if i < 0 else e[i]

    for h in hints:
        i = h.index
        if h.kind == "connecting":
            if e_at(i) is _UNKNOWN:
                continue
            if e_at(i) != h.rank:
                return False
        elif h.kind == "A->B":
            if fa[i] is None or e_at(i - 1) is _UNKNOWN:
                continue
            if fa[i] - e_at(i - 1) != h.rank:
                return False
        elif h.kind == "B->C":
            if fc[i] is None or e_at(i) is _UNKNOWN:
                continue
            if fc[i] - e_at(i) != h.rank:
                return False
        else:
            raise InvalidParameterError("unknown hint kind %r" % (h.kind,))
    return True


# h^i(O_X) for an abelian surface X, padded to the ambient 4-fold:
# Hodge theory gives (1, 2, 1) on the surface itself.
ABELIAN_SURFACE_TABLE = CohomTable((1, 2, 1, 0, 0))
