"""Weitzenboeck derivations of polynomial algebras.

Covers the localized generators ``z_j``, subalgebra-versus-kernel dimension
checks for explicit generating sets, a Jacobian transcendence-rank test, and
the Nagata automorphism built from a triangular derivation.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import factorial

from .derivations import (
    JordanType,
    LinearDerivation,
    PolyDerivation,
    apply_derivation,
    exp_derivation,
    log_automorphism,
)
from .kernel import kernel_at
from .linalg import Echelon, rank as vec_rank
from .parsing import parse_cpoly
from .poly import CPoly, mono_key
from .quotients import Commutative

__all__ = [
    "LocalizedCPoly",
    "z_generators",
    "localized_form",
    "expand_localized",
    "verify_generating_set",
    "transcendence_rank",
    "NOWICKI_SETS",
    "nowicki_set",
    "nagata_data",
]


class LocalizedCPoly:
    """``numerator / x1^power`` with ``x1`` not dividing the numerator unless ``power == 0``."""

    __slots__ = ("numerator", "x1_power")

    def __init__(self, numerator, x1_power=0):
        if x1_power < 0:
            numerator = numerator * CPoly.var(0, numerator.arity) ** (-x1_power)
            x1_power = 0
        while x1_power and numerator and all(k[0] for k in numerator.terms):
            numerator = CPoly({(k[0] - 1,) + k[1:]: c for k, c in numerator.terms.items()}, numerator.arity)
            x1_power -= 1
        if not numerator:
            x1_power = 0
        self.numerator = numerator
        self.x1_power = x1_power

    @property
    def arity(self):
        return self.numerator.arity

    def _lift(self, other):
        if isinstance(other, CPoly):
            return LocalizedCPoly(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        e = max(self.x1_power, other.x1_power)
        x1 = CPoly.var(0, self.arity)
        num = self.numerator * x1 ** (e - self.x1_power) + other.numerator * x1 ** (e - other.x1_power)
        return LocalizedCPoly(num, e)

    def __neg__(self):
        return LocalizedCPoly(-self.numerator, self.x1_power)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        return LocalizedCPoly(self.numerator * other.numerator, self.x1_power + other.x1_power)

    def __eq__(self, other):
        other = self._lift(other)
        return self.numerator == other.numerator and self.x1_power == other.x1_power

    def __hash__(self):
        return hash((self.numerator, self.x1_power))

    def is_polynomial(self):
        return self.x1_power == 0

    def to_cpoly(self):
        if self.x1_power:
            raise ValueError("not a polynomial: denominator x1^%d" % self.x1_power)
        return self.numerator

    def derive(self, d):
        """``d`` extended to the localization; needs ``d(x1) == 0``."""
        if d.image(0, CPoly):
            raise ValueError("x1 must be a constant to localize at it")
        return LocalizedCPoly(apply_derivation(d, self.numerator), self.x1_power)

    def __repr__(self):
        if not self.x1_power:
            return "LocalizedCPoly(%s)" % self.numerator
        return "LocalizedCPoly((%s) / x1^%d)" % (self.numerator, self.x1_power)


def _check_z_shape(d):
    m = d.arity
    if m < 3:
        raise ValueError("z_j are defined for m >= 3")
    x1, x2 = CPoly.var(0, m), CPoly.var(1, m)
    if apply_derivation(d, x1) or apply_derivation(d, x2) != x1:
        raise ValueError("need d(x1) = 0 and d(x2) = x1 (first Jordan block of size >= 2)")


def z_generators(jordan):
    """``z_j = sum_k d^k(x_j)/k! * (-x2)^k * x1^(p_j - k)`` for ``j = 3..m``.

    ``jordan`` is a :class:`JordanType`, a partition, or a linear derivation
    with ``d(x1) = 0`` and ``d(x2) = x1``.  Indices in the result are 0-based
    (entry 0 is ``z_3``).
    """
    d = _as_derivation(jordan)
    _check_z_shape(d)
    m = d.arity
    x1, x2 = CPoly.var(0, m), CPoly.var(1, m)
    out = []
    for j in range(2, m):
        powers = [CPoly.var(j, m)]
        while True:
            nxt = apply_derivation(d, powers[-1])
            if not nxt:
                break
            powers.append(nxt)
        p = len(powers) - 1
        z = CPoly.zero(m)
        for k, dk in enumerate(powers):
            z = z + dk * (-x2) ** k * x1 ** (p - k) / factorial(k)
        out.append(z)
    return out


def _as_derivation(jordan):
    if isinstance(jordan, LinearDerivation):
        return jordan
    return LinearDerivation.from_jordan(jordan if isinstance(jordan, JordanType) else JordanType(jordan))


def _nilpotency(d, j):
    g, p = CPoly.var(j, d.arity), 0
    while True:
        g = apply_derivation(d, g)
        if not g:
            return p
        p += 1


def localized_form(f, jordan):
    """Rewrite ``f`` in ``x1`` and the ``z_j``.

    Computes ``exp(s d)(f)`` at ``s = -x2/x1``, i.e. ``f(x1, 0, z3/x1^p3, ...)``,
    as a :class:`LocalizedCPoly` in the variables ``(x1, z3, ..., zm)``.  For a
    constant this is ``f`` itself, so :func:`expand_localized` gives ``f`` back.
    """
    d = _as_derivation(jordan)
    _check_z_shape(d)
    m = d.arity
    n = m - 1
    pows = [_nilpotency(d, j) for j in range(m)]
    kept = {k: c for k, c in f.terms.items() if not k[1]}
    if not kept:
        return LocalizedCPoly(CPoly.zero(n))
    denom = max(sum(k[j] * pows[j] for j in range(2, m)) for k in kept)
    num = {}
    for k, c in kept.items():
        lowered = sum(k[j] * pows[j] for j in range(2, m))
        num[(k[0] + denom - lowered,) + k[2:]] = c
    return LocalizedCPoly(CPoly(num, n), denom)


def expand_localized(loc, jordan):
    """Inverse of :func:`localized_form`: substitute ``z_j`` back, as a :class:`LocalizedCPoly` in ``x``."""
    d = _as_derivation(jordan)
    zs = z_generators(d)
    m = d.arity
    num = loc.numerator.substitute([CPoly.var(0, m)] + zs)
    return LocalizedCPoly(num, loc.x1_power)


def _products_of_degree(gens, degs, n):
    """Exponent vectors ``e`` with ``sum e_i * degs[i] == n``."""
    out = []

    def rec(i, left, prefix):
        if i == len(gens):
            if left == 0:
                out.append(tuple(prefix))
            return
        for e in range(left // degs[i] + 1 if degs[i] else 1):
            prefix.append(e)
            rec(i + 1, left - e * degs[i], prefix)
            prefix.pop()

    rec(0, n, [])
    return out


def verify_generating_set(gens, d, max_degree):
    """Per degree, compare the span of products of ``gens`` with the kernel of ``d``."""
    m = d.arity
    ctx = Commutative(m)
    for g in gens:
        if not g.is_multihomogeneous() and len({sum(k) for k in g.terms}) != 1:
            raise ValueError("generators must be homogeneous: %s" % g)
        if apply_derivation(d, g):
            raise ValueError("listed generator is not a constant: %s" % g)
    degs = [g.degree() for g in gens]
    rows = []
    ok = True
    for n in range(max_degree + 1):
        vecs = []
        for e in _products_of_degree(gens, degs, n):
            prod = CPoly.one(m)
            for g, k in zip(gens, e):
                if k:
                    prod = prod * g ** k
            vecs.append(prod.terms)
        sub = vec_rank(vecs, order=mono_key)
        ker = kernel_at(ctx, d, degree=n).dimension
        rows.append({"degree": n, "subalgebra_dim": sub, "kernel_dim": ker, "equal": sub == ker})
        ok = ok and sub == ker
    return {"ok": ok, "rows": rows}


def _det(mat):
    n = len(mat)
    if n == 0:
        return CPoly.one(1)
    if n == 1:
        return mat[0][0]
    total = None
    for j in range(n):
        if not mat[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        term = term if j % 2 == 0 else -term
        total = term if total is None else total + term
    return total if total is not None else mat[0][0] - mat[0][0]


def _numeric_rank(rows):
    ech = Echelon()
    for r in rows:
        ech.add({j: v for j, v in enumerate(r) if v})
    return ech.rank


def transcendence_rank(gens, m=None, seed=0, tries=3, symbolic_limit=5):
    """Rank of the Jacobian of ``gens`` over the rational-function field.

    Random rational points give lower bounds; for ``m <= symbolic_limit`` the
    next-larger minors are expanded symbolically to certify the value.
    Returns ``(rank, point, certified)``.
    """
    gens = list(gens)
    m = m if m is not None else gens[0].arity
    jac = [[g.partial(i) for i in range(m)] for g in gens]
    rng = random.Random(seed)
    best, best_point = 0, None
    for _ in range(tries):
        point = [Fraction(rng.randint(-97, 97), rng.randint(1, 13)) for _ in range(m)]
        r = _numeric_rank([[entry.evaluate(point) for entry in row] for row in jac])
        if r > best:
            best, best_point = r, point
    certified = False
    if m <= symbolic_limit:
        k = best + 1
        certified = True
        if k <= min(len(gens), m):
            for rows in itertools.combinations(range(len(gens)), k):
                for cols in itertools.combinations(range(m), k):
                    if _det([[jac[r][c] for c in cols] for r in rows]):
                        certified = False
                        break
                if not certified:
                    break
    return best, best_point, certified


def _parse_list(texts, m):
    return [parse_cpoly(t, arity=m) for t in texts]


# generating sets of polynomial constants; variables x1..xm, Jordan blocks as listed
NOWICKI_SETS = {
    "basic3": ((3,), ["x", "y^2 - 2*x*z"]),
    "basic4": ((4,), [
        "x1",
        "x2^2 - 2*x1*x3",
        "x2^3 - 3*x1*x2*x3 + 3*x1^2*x4",
        "x2^2*x3^2 - 2*x2^3*x4 + 6*x1*x2*x3*x4 - 8/3*x1*x3^3 - 3*x1^2*x4^2",
    ]),
    "basic5": ((5,), [
        "x1",
        "x2^2 - 2*x1*x3",
        "2*x2*x4 - x3^2 - 2*x1*x5",
        "x2^3 - 3*x1*x2*x3 + 3*x1^2*x4",
        "6*x2^2*x5 - 6*x2*x3*x4 + 2*x3^3 - 12*x1*x3*x5 + 9*x1*x4^2",
    ]),
    "jordan22": ((2, 2), ["x1", "x3", "x1*x4 - x2*x3"]),
    "jordan32": ((3, 2), ["x1", "x4", "x1*x5 - x2*x4", "x2^2 - 2*x1*x3", "2*x3*x4^2 - 2*x2*x4*x5 + x1*x5^2"]),
}


def nowicki_set(name):
    parts, texts = NOWICKI_SETS[name]
    d = LinearDerivation.from_jordan(parts)
    return d, _parse_list(texts, d.arity)


def nagata_data():
    """The triangular derivation, its constant ``w``, ``w*d``, and ``exp(w*d)``.

    Variables ``(x, y, z)``: ``d(x) = -2y``, ``d(y) = z``, ``d(z) = 0``.
    """
    d = LinearDerivation([[0, 0, 0], [-2, 0, 0], [0, 1, 0]])
    w = parse_cpoly("x*z + y^2")
    big = PolyDerivation.scaled(w, d)
    nu = exp_derivation(big, CPoly)
    displayed = ["x - 2*(x*z + y^2)*y - (x*z + y^2)^2*z", "y + (x*z + y^2)*z", "z"]
    return {
        "delta": d,
        "w": w,
        "Delta": big,
        "nu": nu,
        "log_nu": log_automorphism(nu),
        "displayed": displayed,
        "expected": [parse_cpoly(s) for s in displayed],
    }
