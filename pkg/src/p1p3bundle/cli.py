"""Command-line interface: claim verification, listing, and calculators.

Exit status contract: 0 all pass / success, 1 any claim failed, 2 usage
or parse errors (including unknown claim ids and malformed pencil files).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from . import chern, chow, claims, cohom, pencil, stability
from .errors import ArtifactError, PencilParseError, UnknownClaimError
from .poly import ParamPoly


def _run_verify(ids, as_json, out):
    records = []
    n_pass = n_fail = 0
    for claim_id in ids:
        claim = claims.get_claim(claim_id)
        start = time.perf_counter()
        result = claim.check()
        elapsed_ms = int((time.perf_counter() - start) * 1000)
        status = "PASS" if result.ok else "FAIL"
        if result.ok:
            n_pass += 1
        else:
            n_fail += 1
        records.append({
            "id": claim.id,
            "status": status,
            "computed": result.computed,
            "expected": result.expected,
            "anchor": claim.anchor,
            "elapsed_ms": elapsed_ms,
        })
    if as_json:
        report = {"claims": records, "summary": {"pass": n_pass, "fail": n_fail}}
        out.write(json.dumps(report, indent=2, sort_keys=True))
        out.write("\n")
    else:
        for r in records:
            out.write("%-16s %s  [%s]\n" % (r["id"], r["status"], r["anchor"]))
            if r["status"] == "FAIL":
                out.write("    computed: %s\n    expected: %s\n" % (r["computed"], r["expected"]))
        out.write("%d passed, %d failed\n" % (n_pass, n_fail))
    return 0 if n_fail == 0 else 1


def _run_list(out):
    for claim_id in claims.all_ids():
        c = claims.get_claim(claim_id)
        out.write("%-16s %s  [%s]\n" % (c.id, c.description, c.anchor))
    return 0


# -- calculators ---------------------------------------------------------------


def _calc_chi(a, b, out):
    ring = chow.p1xp3()
    twisted = chern.twist(
        chern.abelian_surface_bundle(),
        ParamPoly.const(a) * ring.gen("h1") + ParamPoly.const(b) * ring.gen("h3"),
    )
    out.write("%s\n" % chern.euler_characteristic(twisted).constant())
    return 0


def _calc_cohom(a, b, out):
    out.write("%s\n" % (tuple(cohom.cohom_p1xp3(a, b)),))
    return 0


def _calc_slope(m, n, a, b, out):
    value = stability.slope_dot((a, b), stability.Polarization(m, n)).constant()
    out.write("%s\n" % value)
    return 0


def _calc_pencil_rank(path, out):
    p = load_pencil(path)
    out.write("degree: %d\n" % p.degree)
    rank = p.generic_rank()
    out.write("generic rank: %d\n" % rank)
    if rank <= 2:
        count = p.rank1_parameter_count()
        if isinstance(count, pencil.WholeLine):
            out.write("rank-1 parameters: whole line\n")
        else:
            out.write("rank-1 parameters: %d\n" % count)
    return 0


# -- pencil file parsing --------------------------------------------------------

# upper-triangular entry order in the input file
ENTRY_ORDER = ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))

_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<var>[lm])(?:\^(?P<exp>\d+))?|(?P<star>\*))"
)


def parse_form(text):
    """Parse a polynomial in l, m like '3*l^2*m - 1/2*m^3' into a ParamPoly."""
    pos = 0
    total = ParamPoly.const(0)
    term = None  # (coefficient, ParamPoly of variables) while being read
    sign = 1
    pending_sign = False
    expect_factor = False

    def flush():
        nonlocal total, term
        if term is not None:
            coeff, mono = term
            total = total + ParamPoly.const(coeff) * mono
            term = None

    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise PencilParseError("cannot parse %r at position %d" % (text, pos))
        pos = match.end()
        if match.group("sign"):
            if expect_factor:
                raise PencilParseError("misplaced sign in %r" % text)
            flush()
            sign = 1 if match.group("sign") == "+" else -1
            pending_sign = True
        elif match.group("num"):
            pending_sign = False
            if term is not None and not expect_factor:
                raise PencilParseError("two numbers in one term in %r" % text)
            value = Fraction(match.group("num")) * sign
            if term is None:
                term = (value, ParamPoly.const(1))
            else:
                term = (term[0] * Fraction(match.group("num")), term[1])
            sign = 1
            expect_factor = False
        elif match.group("var"):
            pending_sign = False
            exp = int(match.group("exp") or 1)
            factor = ParamPoly.var(match.group("var"), exp)
            if term is None:
                term = (Fraction(sign), factor)
                sign = 1
            else:
                term = (term[0], term[1] * factor)
            expect_factor = False
        elif match.group("star"):
            if term is None or expect_factor:
                raise PencilParseError("misplaced '*' in %r" % text)
            expect_factor = True
    if expect_factor:
        raise PencilParseError("dangling '*' in %r" % text)
    if pending_sign:
        raise PencilParseError("dangling sign in %r" % text)
    flush()
    return total


def load_pencil(path):
    """Read a pencil file: 'degree d' then the 10 upper-triangular entries."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    except OSError as exc:
        raise PencilParseError("cannot read %s: %s" % (path, exc)) from exc
    if not lines or not lines[0].startswith("degree"):
        raise PencilParseError("first line must be 'degree d'")
    parts = lines[0].split()
    if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
        raise PencilParseError("malformed degree header %r" % lines[0])
    degree = int(parts[1])
    if degree < 0:
        raise PencilParseError("degree must be nonnegative")
    body = lines[1:]
    if len(body) != 10:
        raise PencilParseError("expected 10 entry lines, got %d" % len(body))
    entries = [[ParamPoly.const(0)] * 4 for _ in range(4)]
    for (i, j), text in zip(ENTRY_ORDER, body):
        p = parse_form(text)
        entries[i][j] = p
        entries[j][i] = p
    try:
        return pencil.QuadricPencil(entries, degree=degree)
    except ArtifactError as exc:
        raise PencilParseError(str(exc)) from exc


# -- argument parsing -------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="p1p3bundle",
        description="Exact verification of the rank-2 bundle computations on P1xP3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run claim checks")
    verify.add_argument("--claim", action="append", metavar="ID",
                        help="run only this claim id (repeatable)")
    verify.add_argument("--json", action="store_true", help="machine-readable report")

    sub.add_parser("list", help="list claim ids")

    calc = sub.add_parser("calc", help="exact calculators")
    calc_sub = calc.add_subparsers(dest="calc_command", required=True)

    chi = calc_sub.add_parser("chi", help="chi(E(a,b))")
    chi.add_argument("a", type=int)
    chi.add_argument("b", type=int)

    coh = calc_sub.add_parser("cohom", help="cohomology table of O(a,b)")
    coh.add_argument("a", type=int)
    coh.add_argument("b", type=int)

    slope = calc_sub.add_parser("slope", help="O(a,b).O(m,n)^3")
    slope.add_argument("m", type=int)
    slope.add_argument("n", type=int)
    slope.add_argument("a", type=int)
    slope.add_argument("b", type=int)

    pr = calc_sub.add_parser("pencil-rank", help="rank analysis of a pencil file")
    pr.add_argument("file")

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; normalize others
        return int(exc.code) if exc.code else 0

    out = sys.stdout
    try:
        if args.command == "verify":
            ids = sorted(set(args.claim)) if args.claim else claims.all_ids()
            for claim_id in ids:
                claims.get_claim(claim_id)  # fail fast on unknown ids
            return _run_verify(ids, args.json, out)
        if args.command == "list":
            return _run_list(out)
        if args.calc_command == "chi":
            return _calc_chi(args.a, args.b, out)
        if args.calc_command == "cohom":
            return _calc_cohom(args.a, args.b, out)
        if args.calc_command == "slope":
            return _calc_slope(args.m, args.n, args.a, args.b, out)
        if args.calc_command == "pencil-rank":
            return _calc_pencil_rank(args.file, out)
        parser.error("unknown command")
    except (UnknownClaimError, PencilParseError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except ArtifactError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
