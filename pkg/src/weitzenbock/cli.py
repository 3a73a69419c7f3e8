"""Command-line interface.

Exit status: 0 on success, 1 when a verification check fails, 2 for usage
errors (including layers above the size cap).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .derivations import (
    Automorphism,
    JordanType,
    LinearDerivation,
    NotLocallyNilpotent,
    PolyDerivation,
    exp_derivation,
    log_automorphism,
)
from .kernel import kernel_at
from .linalg import LayerTooLarge
from .parsing import ParseError, parse_cpoly, parse_ncpoly, poly_to_json
from .poly import CPoly, NCPoly, default_names
from .quotients import CONTEXT_NAMES, make_context
from .series import (
    DEFAULT_TRUNC,
    constants_hilbert_closed_form,
    hilbert_of,
    multiplicity_series,
    schur2,
    schur_decompose,
)

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        out = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text)
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _matrix(text):
    try:
        entries = [Fraction(p) for p in text.replace(";", ",").replace(" ", ",").split(",") if p]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("matrix entries must be rationals, got %r" % text)
    m = int(round(len(entries) ** 0.5))
    if m * m != len(entries) or m == 0:
        raise argparse.ArgumentTypeError("need m*m entries, got %d" % len(entries))
    return [entries[i * m:(i + 1) * m] for i in range(m)]


def _derivation(args, default_rank=None):
    if args.jordan and args.matrix:
        raise UsageError("give --jordan or --matrix, not both")
    if args.matrix:
        return LinearDerivation(args.matrix)
    if args.jordan:
        try:
            return LinearDerivation.from_jordan(JordanType(args.jordan))
        except ValueError as exc:
            raise UsageError(str(exc))
    if default_rank is None:
        raise UsageError("need --jordan or --matrix")
    return LinearDerivation.basic(default_rank)


def _context(args, arity):
    rank = args.rank if args.rank is not None else arity
    if args.algebra == "trace2x2":
        rank = 2
    if rank != arity:
        raise UsageError("--rank %d does not match a derivation on %d variables" % (rank, arity))
    try:
        return make_context(args.algebra, rank)
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit(args, data, text):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


# ------------------------------------------------------------------ commands

def cmd_constants(args):
    d = _derivation(args)
    ctx = _context(args, d.arity)
    if (args.degree is None) == (args.bidegree is None):
        raise UsageError("give exactly one of --degree and --bidegree")
    if args.bidegree is not None and len(args.bidegree) != d.arity:
        raise UsageError("--bidegree needs %d entries" % d.arity)
    kb = kernel_at(ctx, d, multidegree=args.bidegree, degree=args.degree)
    names = default_names(ctx.arity)
    lines = ["algebra: %s" % ctx.name,
             ("degree: %d" % kb.degree) if kb.multidegree is None else
             "multidegree: %s" % ",".join(map(str, kb.multidegree)),
             "dimension: %d" % kb.dimension]
    lines += ["  " + ctx.render(b, names) for b in kb.basis]
    _emit(args, kb.to_json(names), "\n".join(lines))
    return 0


def cmd_sl2_generators(args):
    from .sl2 import generate_up_to

    if args.degree < 2 or args.degree % 2:
        raise UsageError("--degree must be a positive even integer")
    records = generate_up_to(args.degree)
    counts = [sum(1 for r in records if r.degree == k) for k in range(2, args.degree + 1, 2)]
    data = {"degree": args.degree, "counts": counts, "generators": [r.to_json() for r in records]}
    lines = ["counts by degree 2..%d: %s" % (args.degree, ", ".join(map(str, counts)))]
    for r in records:
        j = r.to_json()
        how = j["construction"].get("base") or "x*(%s)*y - y*(%s)*x" % (("*".join(j["construction"]["wrap"]),) * 2)
        lines.append("%s (degree %d) = %s" % (j["name"], r.degree, how))
        if args.verbose:
            lines.append("    " + j["element"])
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_hilbert_constants(args):
    h, a = constants_hilbert_closed_form(args.degree)
    data = {"H": h.to_json(), "a": a.to_json()}
    text = "H(t,v) = %s + ...\na(t,v) = %s + ..." % (h.to_str(("t", "v")), a.to_str(("t", "v")))
    _emit(args, data, text)
    return 0


def cmd_schur(args):
    lam = args.lam
    if len(lam) == 1:
        lam = lam + [0]
    if len(lam) != 2 or lam[1] < 0 or lam[0] < lam[1]:
        raise UsageError("--lambda must be a partition with at most two parts")
    s = schur2(tuple(lam), args.degree)
    _emit(args, s.to_json(), "S_(%d,%d) = %s" % (lam[0], lam[1], s.to_str()))
    return 0


def cmd_multiplicity(args):
    try:
        f = hilbert_of(args.algebra, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    table = schur_decompose(f)
    m, mp = multiplicity_series(table)
    data = {"algebra": args.algebra, "multiplicities": table.to_json(),
            "M": m.to_json(), "M_prime": mp.to_json()}
    lines = ["m(%d,%d) = %s" % (l1, l2, c) for (l1, l2), c in table.mult.items()]
    lines.append("M(t,u) = %s + ..." % m.to_str(("t", "u")))
    lines.append("M'(t,v) = %s + ..." % mp.to_str(("t", "v")))
    _emit(args, data, "\n".join(lines))
    return 0


def _poly_kind(args):
    if args.algebra == "free":
        return NCPoly
    if args.algebra == "comm":
        return CPoly
    raise UsageError("this command works in the free or commutative algebra (got %s)" % args.algebra)


def _parse(kind, text, m):
    names = default_names(m)
    return parse_ncpoly(text, names) if kind is NCPoly else parse_cpoly(text, names)


def cmd_exp_derivation(args):
    if args.algebra == "trace2x2":
        return _exp_trace(args)
    kind = _poly_kind(args)
    d = _derivation(args)
    m = d.arity
    names = default_names(m)
    if args.w is None:
        big = d
    else:
        big = PolyDerivation.scaled(_parse(kind, args.w, m), d)
    phi = exp_derivation(big, kind)
    data = {"images": [poly_to_json(f, names) for f in phi.images]}
    text = "\n".join("%s -> %s" % (v, f.to_str(names)) for v, f in zip(names, phi.images))
    _emit(args, data, text)
    return 0


def _exp_trace(args):
    from .generic2x2 import CBAR_NAMES, OMEGA_NAMES, exp_w_delta

    if not args.example:
        raise UsageError("trace2x2 needs --example")
    res = exp_w_delta(args.w or "1", args.example)
    data = {"example": res["example"], "w": res["w"], "images": {}, "matrices": {},
            "inverse_ok": res["inverse_ok"], "divisible_by_disc": res["divisible_by_disc"]}
    if "in_R" in res:
        data["in_R"] = res["in_R"]
    lines = ["example %s, w = %s" % (res["example"], res["w"])]
    for k in "xy":
        img, mat = res["images"][k], res["matrices"][k]
        data["images"][k] = {"text": img.to_str(),
                             "coeffs": [poly_to_json(c, CBAR_NAMES) for c in img.coeffs]}
        data["matrices"][k] = [[poly_to_json(e, OMEGA_NAMES) for e in row] for row in mat.entries]
        lines.append("%s -> %s" % (k, img.to_str()))
        for i, row in enumerate(mat.entries):
            lines.append("    row %d: [%s]" % (i + 1, ", ".join(e.to_str(OMEGA_NAMES) for e in row)))
    lines.append("inverse check: %s" % ("ok" if res["inverse_ok"] else "FAILED"))
    if "in_R" in res:
        lines.append("generic matrix algebra preserved: %s" % res["in_R"])
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_log_automorphism(args):
    kind = _poly_kind(args)
    texts = [t.strip() for t in args.images.split(";") if t.strip()]
    m = len(texts)
    if args.rank is not None and args.rank != m:
        raise UsageError("--rank %d but %d images given" % (args.rank, m))
    names = default_names(m)
    phi = Automorphism([_parse(kind, t, m) for t in texts], unipotent=args.assume_unipotent)
    if args.assume_unipotent and not phi.is_triangular:
        d = log_automorphism(phi, max_terms=64, max_size=5000, max_degree=64)
    else:
        d = log_automorphism(phi)
    data = {"images": [poly_to_json(f, names) for f in d.images]}
    text = "\n".join("%s -> %s" % (v, f.to_str(names)) for v, f in zip(names, d.images))
    _emit(args, data, text)
    return 0


def cmd_verify(args):
    from .verify import run_suite

    try:
        report = run_suite(args.suite, degree=args.degree, max_degree=args.max_degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(args, report.to_json(), report.to_text())
    return report.exit_code


# -------------------------------------------------------------------- parser

SUITE_NAMES = ("nowicki", "nagata", "sl2", "series", "metabelian", "grassmann", "wreath", "generic2x2", "all")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    deriv = argparse.ArgumentParser(add_help=False)
    deriv.add_argument("--algebra", choices=CONTEXT_NAMES, default="free")
    deriv.add_argument("--rank", type=int)
    deriv.add_argument("--jordan", type=_int_list, help="block sizes, e.g. 3,2")
    deriv.add_argument("--matrix", type=_matrix, help="row-major rationals; column j is the image of x_j")

    p = argparse.ArgumentParser(prog="weitzenbock", description="Constants of Weitzenboeck derivations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("constants", parents=[common, deriv], help="kernel basis at a degree or multidegree")
    s.add_argument("--degree", type=int)
    s.add_argument("--bidegree", "--multidegree", type=_int_list, dest="bidegree")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("sl2-generators", parents=[common], help="free generators of the SL2-invariants")
    s.add_argument("--degree", type=int, default=8)
    s.add_argument("--verbose", action="store_true", help="also print expanded polynomials")
    s.set_defaults(func=cmd_sl2_generators)

    s = sub.add_parser("hilbert-constants", parents=[common], help="closed-form series H and a")
    s.add_argument("--degree", type=int, default=DEFAULT_TRUNC)
    s.set_defaults(func=cmd_hilbert_constants)

    s = sub.add_parser("schur", parents=[common], help="Schur function in two variables")
    s.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    s.add_argument("--degree", type=int, default=DEFAULT_TRUNC)
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("multiplicity", parents=[common], help="Schur multiplicities of a Hilbert series")
    s.add_argument("--algebra", choices=("free", "metabelian2", "grassmann-l2"), default="free")
    s.add_argument("--degree", type=int, default=DEFAULT_TRUNC)
    s.set_defaults(func=cmd_multiplicity)

    s = sub.add_parser("exp-derivation", parents=[common, deriv], help="exp(w*delta) on the generators")
    s.add_argument("--w", help="a constant multiplier (default 1)")
    s.add_argument("--example", help="trace2x2 derivation: fix-x or chain5")
    s.set_defaults(func=cmd_exp_derivation)

    s = sub.add_parser("log-automorphism", parents=[common], help="log of a unipotent automorphism")
    s.add_argument("--algebra", choices=("free", "comm"), default="comm")
    s.add_argument("--rank", type=int)
    s.add_argument("--images", required=True, help="images of the generators separated by ';'")
    s.add_argument("--assume-unipotent", action="store_true",
                   help="accept a non-triangular input (for example an exponential of a nonlinear derivation)")
    s.set_defaults(func=cmd_log_automorphism)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=SUITE_NAMES, default="all")
    s.add_argument("--degree", type=int, help="top degree for the sl2 suite")
    s.add_argument("--max-degree", type=int, dest="max_degree", help="top degree for the nowicki suite")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, LayerTooLarge, NotLocallyNilpotent, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
