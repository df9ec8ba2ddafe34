"""Command-line driver: ``mzeta <subcommand> ...``.

Exit codes: 0 success, 1 a requested check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hodge
from .dsl import (
    Leaf,
    Sym,
    id_variety_name,
    leaf_hodge,
    parse,
    serialize,
)
from .intpoly import factor_in_C, parse_poly
from .irrationality import CertificateError, certify_irrational
from .monoid_ring import embed_poly
from .zeta_series import (
    LEADING_TERM_MODEL,
    ZetaSeries,
    coefficients_csv,
    curve_rational_form,
    curve_zeta,
    id_measure_series,
    id_rational_form,
    rational_check_mul,
    rationality_scan,
    scan_report,
    series_tex,
    surface_leading_zeta,
)


class UsageError(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition("..")
        lo, hi = int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _surface_spec(text: str) -> tuple[int, int]:
    try:
        fields = dict(part.split("=", 1) for part in text.split(","))
        return int(fields["q"]), int(fields["pg"])
    except (ValueError, KeyError):
        raise argparse.ArgumentTypeError(f"expected q=Q,pg=R, got {text!r}")


def _leaf(text: str) -> Leaf:
    e = parse(text)
    if not isinstance(e, Leaf):
        raise UsageError(f"expected a single variety leaf, got {serialize(e)!r}")
    return e


def _series(leaf: Leaf, N: int, measure: str):
    if measure == "id-symbolic":
        return id_measure_series(id_variety_name(leaf), N)
    if leaf.kind in ("curve", "E"):
        return curve_zeta(1 if leaf.kind == "E" else leaf.args[0], N)
    if leaf.kind == "surface":
        return surface_leading_zeta(*leaf.args, N)
    if leaf.kind in ("P", "point"):
        # symmetric powers of P^k are rational varieties; mu_h = 1 throughout
        return ZetaSeries(curve_zeta(0, N).coefficients, serialize(leaf))
    raise UsageError(f"no zeta series for {serialize(leaf)}")


def cmd_zeta(args) -> int:
    S = _series(_leaf(args.expr), args.terms, args.measure)
    if args.out == "json":
        doc = {"series": S.label, "N": S.N, "measure": args.measure, "coefficients": [str(c) for c in S.coefficients]}
        if S.provenance != "exact":
            doc["provenance"] = S.provenance
        print(json.dumps(doc, indent=2))
    elif args.out == "csv":
        sys.stdout.write(coefficients_csv(S))
    else:
        form = _rational_form(_leaf(args.expr), args.measure)
        if form is None:
            raise UsageError(f"no known rational form for {S.label}")
        P, Q = form
        if not rational_check_mul(S, P, Q):
            print(f"rational form does not match {S.label} to order {S.N}", file=sys.stderr)
            return 1
        print(series_tex(P, Q))
    if S.provenance == LEADING_TERM_MODEL:
        print(f"note: {LEADING_TERM_MODEL} (not the exact mu_h coefficients)", file=sys.stderr)
    return 0


def _rational_form(leaf: Leaf, measure: str):
    if measure == "id-symbolic":
        return id_rational_form(id_variety_name(leaf))
    if leaf.kind in ("curve", "E"):
        return curve_rational_form(1 if leaf.kind == "E" else leaf.args[0])
    if leaf.kind in ("P", "point"):
        return curve_rational_form(0)
    return None


def cmd_hankel(args) -> int:
    leaf = _leaf(args.expr)
    n_lo, n_hi = args.n
    m_lo, m_hi = args.m
    if n_lo < 0:
        raise UsageError("n must be nonnegative")
    S = _series(leaf, m_hi + 2 * n_hi, args.measure)
    reports = rationality_scan(S, n_hi, m_hi, n_min=n_lo, m_min=m_lo, exact=args.exact, trials=args.trials)
    print(json.dumps(scan_report(S, reports), indent=2))
    return 0


def cmd_certify(args) -> int:
    q, r = args.surface
    lo, hi = args.mwindow
    try:
        cert = certify_irrational(q, r, args.nmax, (lo, hi))
    except CertificateError as exc:
        print(f"CERTIFICATE FAILURE: {exc}", file=sys.stderr)
        return 1
    print(cert.dumps() if args.out == "json" else cert.render_text())
    return 0


def cmd_examples(args) -> int:
    names = {"p1": "P1", "p2": "P2", "elliptic": "elliptic"}
    wanted = [w.strip().lower() for w in args.check.split(",") if w.strip()]
    unknown = [w for w in wanted if w not in names]
    if unknown:
        raise UsageError(f"unknown example(s) {unknown}; choose from p1, p2, elliptic")
    ok = True
    results = []
    for w in wanted:
        S = id_measure_series(names[w], args.terms)
        P, Q = id_rational_form(names[w])
        passed = rational_check_mul(S, P, Q)
        ok &= passed
        results.append({"example": w, "N": args.terms, "identity": series_tex(P, Q), "holds": passed})
        print(f"{'PASS' if passed else 'FAIL'} {w}: Q(t)*zeta(t) == P(t) mod t^{args.terms + 1}, zeta = {series_tex(P, Q)}")
    if args.json:
        print(json.dumps(results, indent=2))
    return 0 if ok else 1


def cmd_factor(args) -> int:
    p = parse_poly(args.poly)
    fac = factor_in_C(p)
    if args.json:
        print(json.dumps({
            "input": str(p),
            "content_primes": [[q, e] for q, e in fac.content_primes],
            "irreducible_factors": [[str(g), e] for g, e in fac.irreducible_factors],
            "word": str(embed_poly(p)),
        }, indent=2))
    else:
        print(fac)
    return 0


def cmd_symhodge(args) -> int:
    leaf = _leaf(args.expr)
    a = leaf_hodge(leaf)
    h = hodge.sym_power(a, args.n)
    doc = {"variety": serialize(Sym(leaf, args.n)) if leaf.kind in ("curve", "surface", "P", "E") else serialize(leaf),
           "dim": h.dim, "h": h.to_json(), "pg": hodge.pg(h), "psi_h": str(hodge.psi_h(h))}
    print(json.dumps(doc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mzeta", description="Motivic zeta functions under the Hodge measure.")
    sub = ap.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="coefficients of a zeta series")
    z.add_argument("--expr", required=True)
    z.add_argument("--terms", type=int, default=10)
    z.add_argument("--measure", choices=["hodge", "id-symbolic"], default="hodge")
    z.add_argument("--out", choices=["json", "csv", "tex"], default="json")
    z.set_defaults(func=cmd_zeta)

    h = sub.add_parser("hankel", help="Hankel determinant scan")
    h.add_argument("--expr", required=True)
    h.add_argument("--n", type=_range, required=True)
    h.add_argument("--m", type=_range, required=True)
    h.add_argument("--measure", choices=["hodge", "id-symbolic"], default="hodge")
    h.add_argument("--exact", action="store_true", help="decide every determinant exactly")
    h.add_argument("--trials", type=int, default=3)
    h.set_defaults(func=cmd_hankel)

    c = sub.add_parser("certify", help="irrationality certificate for a surface")
    c.add_argument("--surface", type=_surface_spec, required=True)
    c.add_argument("--nmax", type=int, default=5)
    c.add_argument("--mwindow", type=_range, default=(1, 30))
    c.add_argument("--out", choices=["json", "text"], default="json")
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("examples", help="check the closed forms for P1, P2 and an elliptic curve")
    e.add_argument("--check", default="p1,p2,elliptic")
    e.add_argument("--terms", type=int, default=50)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_examples)

    f = sub.add_parser("factor", help="factor a polynomial in the monoid C")
    f.add_argument("--poly", required=True)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_factor)

    s = sub.add_parser("symhodge", help="(k,0)-Hodge numbers of a symmetric power")
    s.add_argument("--expr", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_symhodge)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"mzeta {args.command}: error: {exc}", file=sys.stderr)
        return 2


run_command = main
