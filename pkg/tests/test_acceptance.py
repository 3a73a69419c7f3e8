"""Acceptance criteria 1-10, one test each.

Run under pytest (a per-criterion PASS/FAIL summary is printed at the end of
the session) or directly with ``python3 tests/test_acceptance.py``.
"""
import random
import time
from math import comb

from weitzenbock.commutative import NOWICKI_SETS, nagata_data, nowicki_set, verify_generating_set
from weitzenbock.derivations import LinearDerivation, apply_derivation
from weitzenbock.generic2x2 import (
    CBAR_NAMES,
    GenericMatrix,
    TraceElem,
    cbar,
    example_delta,
    example_generators,
    exp_w_delta,
    matrix_realization,
    verify_cbar_constants,
)
from weitzenbock.kernel import highest_weight_test, is_constant, kernel_at, lifting_check
from weitzenbock.linalg import rank as vec_rank
from weitzenbock.parsing import parse_cpoly, parse_ncpoly
from weitzenbock.poly import CPoly, NCPoly, word_key
from weitzenbock.quotients import FreeAssoc, GrassmannL2, Metabelian2, Wreath, lr_operator
from weitzenbock.series import (
    TruncSeries2,
    constants_hilbert_closed_form,
    hilbert_of,
    inverse_multiplicity_check,
    multiplicity_series,
    schur_decompose,
)
from weitzenbock.sl2 import generate_up_to, verify_span

BASIC2 = LinearDerivation.basic(2)

CRITERIA = {
    1: "free-algebra constants have central-binomial dimensions (n <= 10)",
    2: "bidegree dimensions follow the hook formula; bases are highest weight vectors",
    3: "SL2 generator counts 1,1,2,5,14,42; products form bases for n <= 5",
    4: "closed forms H and a match kernel dimensions; multiplicity round trips",
    5: "generating sets of polynomial constants reproduce kernel dimensions (degree <= 8)",
    6: "Nagata automorphism images",
    7: "constants of the Grassmann and metabelian quotients",
    8: "free constants map onto quotient constants (total degree <= 10)",
    9: "wreath embedding and lr-operator witnesses",
    10: "generic 2x2 matrices and their trace algebra",
}


def _elapsed_below(limit, fn):
    start = time.perf_counter()
    fn()
    took = time.perf_counter() - start
    assert took < limit, "took %.1fs, limit %ds" % (took, limit)


# -------------------------------------------------------------------- 1
def test_criterion_01():
    def body():
        free = FreeAssoc(2)
        for n in range(11):
            p = n // 2
            want = comb(2 * p, p) if n % 2 == 0 else comb(2 * p + 1, p)
            assert kernel_at(free, BASIC2, degree=n).dimension == want, n

    _elapsed_below(30, body)


# -------------------------------------------------------------------- 2
def test_criterion_02():
    free = FreeAssoc(2)
    for n in range(11):
        for l2 in range(n + 1):
            l1 = n - l2
            kb = kernel_at(free, BASIC2, multidegree=(l1, l2))
            want = comb(n, l2) - (comb(n, l2 - 1) if l2 else 0) if l1 >= l2 else 0
            assert kb.dimension == want, (l1, l2)
            assert all(highest_weight_test(b, (l1, l2)) for b in kb.basis), (l1, l2)


# -------------------------------------------------------------------- 3
def test_criterion_03():
    def body():
        records = generate_up_to(12)
        counts = [sum(r.degree == d for r in records) for d in range(2, 13, 2)]
        assert counts == [1, 1, 2, 5, 14, 42]
        for n in range(1, 6):
            res = verify_span(records, n)
            assert res["independent"] and res["span_equal"], res

    _elapsed_below(120, body)


# -------------------------------------------------------------------- 4
def _generator_counts(max_degree):
    """Minimal generators of the free-algebra constants per bidegree:
    kernel dimension minus the rank of products of lower-degree constants."""
    free = FreeAssoc(2)
    bases = {}
    for n in range(max_degree + 1):
        for a in range(n + 1):
            bases[(a, n - a)] = kernel_at(free, BASIC2, multidegree=(a, n - a)).basis
    out = {}
    for (a, b), basis in bases.items():
        if a + b == 0 or not basis:
            continue
        prods = []
        for (c, d), left in bases.items():
            if 0 < c + d < a + b and c <= a and d <= b:
                for f in left:
                    for g in bases[(a - c, b - d)]:
                        prods.append((f * g).terms)
        extra = len(basis) - vec_rank(prods, order=word_key)
        if extra:
            out[(a, b)] = extra
    return out


def test_criterion_04():
    h, a = constants_hilbert_closed_form(12)
    free = FreeAssoc(2)
    for n in range(11):
        for l2 in range(n + 1):
            l1 = n - l2
            dim = kernel_at(free, BASIC2, multidegree=(l1, l2)).dimension
            assert dim == (h.coeff(l1 - l2, l2) if l1 >= l2 else 0), (l1, l2)
    gens = _generator_counts(10)
    want = {(i + j, j): int(c) for (i, j), c in a.coeffs.items() if i + 2 * j <= 10}
    assert gens == want
    for name in ("free", "grassmann-l2", "metabelian2"):
        f = hilbert_of(name, 12)
        _, mp = multiplicity_series(schur_decompose(f))
        assert inverse_multiplicity_check(mp, 12) == f, name


# -------------------------------------------------------------------- 5
def test_criterion_05():
    assert sorted(NOWICKI_SETS) == ["basic3", "basic4", "basic5", "jordan22", "jordan32"]
    for name in NOWICKI_SETS:
        d, gens = nowicki_set(name)
        assert all(not apply_derivation(d, g) for g in gens), name
        res = verify_generating_set(gens, d, 8)
        assert res["ok"], (name, res["rows"])


# -------------------------------------------------------------------- 6
def test_criterion_06():
    data = nagata_data()
    displayed = [
        "x - 2*(x*z + y^2)*y - (x*z + y^2)^2*z",
        "y + (x*z + y^2)*z",
        "z",
    ]
    got = data["nu"].images
    assert got == [parse_cpoly(s) for s in displayed]
    assert [f.to_str() for f in got] == [parse_cpoly(s).to_str() for s in displayed]


# -------------------------------------------------------------------- 7
def _ordered_products(ctx, gens, degs, n):
    out = []

    def rec(prod, left):
        if left == 0:
            out.append(prod)
            return
        for g, d in zip(gens, degs):
            if d <= left:
                rec(prod * g, left - d)

    rec(ctx.one(), n)
    return out


def _rank(ctx, elems):
    return vec_rank([ctx.coords(e) for e in elems], order=ctx.sort_key)


def test_criterion_07():
    # rank 2: generated by x and [x,y]
    g2 = GrassmannL2(2)
    gens = [g2.gen(0), g2.coerce(parse_ncpoly("[x,y]", arity=2))]
    for a in range(7):
        for b in range(7):
            ker = kernel_at(g2, BASIC2, multidegree=(a, b)).dimension
            prods = [e for e in _ordered_products(g2, gens, [1, 2], a + b)
                     if e and e.multidegrees() == [(a, b)]]
            assert ker == (_rank(g2, prods) if a + b else 1), (a, b)
    # rank 3: the five listed generators
    g3 = GrassmannL2(3)
    basic3 = LinearDerivation.basic(3)
    texts = ["x", "y^2 - x*z - z*x", "[x,y]", "y*[x,y] - x*[x,z]", "z*[x,y] - y*[x,z] + x*[y,z]"]
    gens = [g3.coerce(parse_ncpoly(t, names=["x", "y", "z"])) for t in texts]
    assert all(is_constant(g3, basic3, g) for g in gens)
    for n in range(1, 7):
        prods = _ordered_products(g3, gens, [1, 2, 2, 3, 3], n)
        assert _rank(g3, prods) == kernel_at(g3, basic3, degree=n).dimension, n
    # metabelian: Hilbert series of the constants, and the listed highest weight vectors
    m = Metabelian2()
    w = (1, 2)
    t, v, one = TruncSeries2.monomial(1, 0, 1, 12, w), TruncSeries2.monomial(0, 1, 1, 12, w), TruncSeries2.one(12, w)
    mp = (one - t).inverse() + v * ((one - t) * (one - t) * (one - v)).inverse()
    for n in range(13):
        for b in range(n + 1):
            a = n - b
            dim = kernel_at(m, BASIC2, multidegree=(a, b)).dimension
            assert dim == (mp.coeff(a - b, b) if a >= b else 0), (a, b)
    x1, y1, x2, y2 = CPoly.gens(4)
    for n in range(1, 7):
        assert is_constant(m, BASIC2, m.gen(0) ** n)
    for p in range(3):
        for q in range(3):
            for r in range(3):
                e = Metabelian2.from_parts(CPoly.zero(2), x1 ** p * x2 ** q * (x1 * y2 - y1 * x2) ** r)
                assert is_constant(m, BASIC2, e), (p, q, r)


# -------------------------------------------------------------------- 8
def test_criterion_08():
    for ctx in (Metabelian2(), GrassmannL2(2)):
        for n in range(11):
            for a in range(n + 1):
                res = lifting_check(BASIC2, (a, n - a), ctx)
                assert res["surjective"], res


# -------------------------------------------------------------------- 9
def test_criterion_09():
    meta, w = Metabelian2(), Wreath(2)
    rng = random.Random(2024)
    for _ in range(30):
        f, g = (sum((NCPoly.word(tuple(rng.randrange(2) for _ in range(rng.randint(0, 4))), 2, rng.randint(-3, 3))
                     for _ in range(3)), NCPoly.zero(2)) for _ in range(2))
        assert w.reduce(f * g) == w.reduce(f) * w.reduce(g)
        assert w.reduce(meta.lift(meta.reduce(f))) == w.reduce(f)
    for n in range(9):
        for a in range(n + 1):
            keys = meta.basis((a, n - a))
            images = [w.reduce(meta.lift_key(k)) for k in keys]
            assert _rank(w, images) == len(keys), (a, n - a)
    c = parse_ncpoly("[x,y]", arity=2)
    u1, u2, v1, v2 = CPoly.gens(4)
    base = w.reduce(c).module_part
    for n in range(5):
        for ctx in (FreeAssoc(2), meta, w):
            assert is_constant(ctx, BASIC2, lr_operator(c, n, ctx)), (ctx.name, n)
        w3 = Wreath(3)
        assert is_constant(w3, LinearDerivation.basic(3), lr_operator(NCPoly(c.terms, 3), n, w3))
        image = lr_operator(c, n, w)
        assert image == w.module_elem([p * (u1 * v2 - u2 * v1) ** n for p in base])
        assert image == w.reduce(meta.lift(lr_operator(c, n, meta)))


# -------------------------------------------------------------------- 10
def test_criterion_10():
    def body():
        for i in range(4):
            for j in range(4):
                a, b = TraceElem.basis(i), TraceElem.basis(j)
                assert matrix_realization(a * b) == matrix_realization(a) * matrix_realization(b)
        X, Y = GenericMatrix.generic("x"), GenericMatrix.generic("y")
        comm = X * Y - Y * X
        assert matrix_realization(cbar("t^2 - u*v")) == comm * comm
        x0 = matrix_realization(TraceElem.x0())
        assert matrix_realization(cbar("u")) == GenericMatrix.scalar(x0.det() * -2)
        d = example_delta("fix-x")
        assert [c.to_str(CBAR_NAMES) for c in d.cbar_images] == ["0", "p", "0", "u", "2*t"]
        fix = verify_cbar_constants("fix-x")
        assert fix["ok"] and fix["syzygy"]
        assert [g.to_str(CBAR_NAMES) for g in example_generators("fix-x")] == [
            "p", "u", "p*t - q*u", "-u*v + t^2", "p^2*v - 2*p*q*t + q^2*u"]
        assert verify_cbar_constants("chain5")["ok"]
        assert example_generators("chain5")[3] == cbar("t^3 - 3/2*u*t*v + 3/2*u^2*p")
        wt = cbar("t^2 - u*v")
        res = exp_w_delta(wt, "fix-x")
        assert res["images"]["x"] == TraceElem.x()
        assert res["images"]["y"] == TraceElem.y() + TraceElem.x().scale(wt)
        assert res["in_R"]
        u, t, v = cbar("u"), cbar("t"), cbar("v")
        for wc in (u, wt):
            res = exp_w_delta(wc, "chain5")
            assert res["images"]["x"] == TraceElem.x() + TraceElem.scalar(
                wc * v / 2 + wc ** 2 * t / 2 + wc ** 3 * u / 6)
            assert res["images"]["y"] == TraceElem.y() + TraceElem.x().scale(wc) + TraceElem.scalar(
                wc ** 2 * v / 4 + wc ** 3 * t / 6 + wc ** 4 * u / 24)

    _elapsed_below(60, body)


if __name__ == "__main__":
    import sys

    failed = 0
    for k, title in CRITERIA.items():
        try:
            globals()["test_criterion_%02d" % k]()
            status = "PASS"
        except Exception as exc:  # report and keep going
            status = "FAIL (%s: %s)" % (type(exc).__name__, exc)
            failed += 1
        print("criterion %2d: %s  %s" % (k, status, title))
    sys.exit(1 if failed else 0)
