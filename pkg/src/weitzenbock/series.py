"""Truncated bivariate power series, Schur functions in two variables, and
multiplicity series.

Series carry integer weights for their two variables; a monomial ``a^i b^j``
is kept when ``w0*i + w1*j <= trunc``.  Hilbert series in ``(t1, t2)`` or
``(t, u)`` use weights ``(1, 1)``; series in ``(t, v)`` with ``v = t*u`` use
``(1, 2)`` so that truncation still means total degree in the original
variables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "TruncSeries2",
    "MultiplicityTable",
    "NotDivisible",
    "schur2",
    "schur_decompose",
    "multiplicity_series",
    "inverse_multiplicity_check",
    "divide_by_difference",
    "catalan_numbers",
    "catalan_series",
    "constants_hilbert_closed_form",
    "specialize_v_to_t2",
    "hilbert_free2",
    "hilbert_l2_rank2",
    "hilbert_metabelian2",
    "hilbert_from_basis",
    "hilbert_of",
    "DEFAULT_TRUNC",
]

DEFAULT_TRUNC = 12


class NotDivisible(ArithmeticError):
    pass


def _fmt(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


class TruncSeries2:
    __slots__ = ("coeffs", "trunc", "weights")

    def __init__(self, coeffs=None, trunc=DEFAULT_TRUNC, weights=(1, 1)):
        self.trunc = int(trunc)
        self.weights = tuple(weights)
        w0, w1 = self.weights
        self.coeffs = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in series")
            c = Fraction(c)
            if c and w0 * i + w1 * j <= self.trunc:
                self.coeffs[(i, j)] = c

    @classmethod
    def _raw(cls, coeffs, trunc, weights):
        obj = cls.__new__(cls)
        obj.coeffs, obj.trunc, obj.weights = coeffs, trunc, weights
        return obj

    @classmethod
    def one(cls, trunc=DEFAULT_TRUNC, weights=(1, 1)):
        return cls({(0, 0): 1}, trunc, weights)

    @classmethod
    def monomial(cls, i, j, coef=1, trunc=DEFAULT_TRUNC, weights=(1, 1)):
        return cls({(i, j): coef}, trunc, weights)

    def like(self, coeffs):
        return TruncSeries2(coeffs, self.trunc, self.weights)

    def _compatible(self, other):
        if not isinstance(other, TruncSeries2):
            raise TypeError("expected a TruncSeries2")
        if self.weights != other.weights:
            raise ValueError("series have different weights")
        return min(self.trunc, other.trunc)

    def weight(self, i, j):
        return self.weights[0] * i + self.weights[1] * j

    def coeff(self, i, j):
        return self.coeffs.get((i, j), Fraction(0))

    def __getitem__(self, ij):
        return self.coeff(*ij)

    def __add__(self, other):
        n = self._compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TruncSeries2(out, n, self.weights)

    def __neg__(self):
        return self._raw({k: -c for k, c in self.coeffs.items()}, self.trunc, self.weights)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TruncSeries2({k: v * c for k, v in self.coeffs.items()}, self.trunc, self.weights)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        n = self._compatible(other)
        out = {}
        w = self.weight
        for (i1, j1), c1 in self.coeffs.items():
            r = n - w(i1, j1)
            for (i2, j2), c2 in other.coeffs.items():
                if w(i2, j2) <= r:
                    k = (i1 + i2, j1 + j2)
                    out[k] = out.get(k, 0) + c1 * c2
        return TruncSeries2(out, n, self.weights)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.one(self.trunc, self.weights)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        """Multiplicative inverse; needs a nonzero constant term."""
        c0 = self.coeff(0, 0)
        if not c0:
            raise ZeroDivisionError("series has zero constant term")
        # 1/(c0 (1 - r)) = (1/c0) * sum r^k, r has positive weight
        r = (self.scale(1 / c0) - self.one(self.trunc, self.weights)).scale(-1)
        total = self.one(self.trunc, self.weights)
        power = total
        min_w = min(self.weights)
        for _ in range(self.trunc // max(min_w, 1) + 1):
            power = power * r
            if not power.coeffs:
                break
            total = total + power
        return total.scale(1 / c0)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return self * other.inverse()

    def truncate(self, n):
        return TruncSeries2(self.coeffs, min(n, self.trunc), self.weights)

    def swap(self):
        return TruncSeries2({(j, i): c for (i, j), c in self.coeffs.items()}, self.trunc, self.weights[::-1])

    def is_symmetric(self):
        return self.weights[0] == self.weights[1] and self == self.swap()

    def __eq__(self, other):
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return self.weights == other.weights and self.truncate(n).coeffs == other.truncate(n).coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "TruncSeries2(%s, trunc=%d, weights=%r)" % (self.to_str(), self.trunc, self.weights)

    def to_str(self, names=("t1", "t2")):
        if not self.coeffs:
            return "0"
        out = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kc: (self.weight(*kc[0]), -kc[0][0])):
            fac = []
            for name, e in zip(names, (i, j)):
                if e == 1:
                    fac.append(name)
                elif e:
                    fac.append("%s^%d" % (name, e))
            mono = "*".join(fac)
            body = _fmt(abs(c)) if not mono else (mono if abs(c) == 1 else _fmt(abs(c)) + "*" + mono)
            if out:
                out.append(("- " if c < 0 else "+ ") + body)
            else:
                out.append(("-" if c < 0 else "") + body)
        return " ".join(out)

    def to_json(self):
        return {
            "trunc": self.trunc,
            "weights": list(self.weights),
            "coeffs": [{"deg": [i, j], "coef": _fmt(c)} for (i, j), c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, obj):
        coeffs = {tuple(e["deg"]): Fraction(e["coef"]) for e in obj["coeffs"]}
        return cls(coeffs, obj["trunc"], tuple(obj.get("weights", (1, 1))))


def geometric(base):
    """``1 / (1 - base)`` for a series without constant term."""
    return (base.one(base.trunc, base.weights) - base).inverse()


def divide_by_difference(num):
    """Exact quotient ``num / (t1 - t2)`` of a polynomial in weights ``(1, 1)``.

    Raises :class:`NotDivisible` when some homogeneous layer leaves a remainder.
    """
    if num.weights != (1, 1):
        raise ValueError("division by t1 - t2 needs weights (1, 1)")
    layers = {}
    for (i, j), c in num.coeffs.items():
        layers.setdefault(i + j, {})[i] = c
    out = {}
    for n, layer in layers.items():
        if n == 0:
            raise NotDivisible("nonzero constant term")
        # (t1 - t2) * sum q_k t1^k t2^(n-1-k): coefficient of t1^k t2^(n-k) is q_(k-1) - q_k
        q_prev = Fraction(0)
        for k in range(n):
            q = q_prev - layer.get(k, 0)
            if q:
                out[(k, n - 1 - k)] = q
            q_prev = q
        if q_prev != layer.get(n, 0):
            raise NotDivisible("remainder in degree %d" % n)
    return TruncSeries2(out, num.trunc - 1, (1, 1))


def schur2(lam, trunc=DEFAULT_TRUNC):
    """``S_lam(t1, t2)`` from the quotient formula, divided exactly."""
    l1, l2 = (tuple(lam) + (0,))[:2]
    if len(tuple(lam)) > 2 or l2 < 0 or l1 < l2:
        raise ValueError("not a partition with at most two parts: %r" % (lam,))
    k = l1 - l2 + 1
    num = TruncSeries2({(k, 0): 1, (0, k): -1}, max(trunc, l1 + l2) + 1)
    h = divide_by_difference(num)
    return (TruncSeries2.monomial(l2, l2, 1, h.trunc) * h).truncate(trunc)


@dataclass
class MultiplicityTable:
    trunc: int
    mult: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (l1, l2), c in self.mult.items():
            if l2 < 0 or l1 < l2:
                raise ValueError("not a partition: %r" % ((l1, l2),))
            if c and l1 + l2 <= self.trunc:
                clean[(l1, l2)] = Fraction(c)
        self.mult = dict(sorted(clean.items()))

    def __getitem__(self, lam):
        return self.mult.get(tuple(lam), Fraction(0))

    def to_series(self):
        total = TruncSeries2({}, self.trunc)
        for lam, c in self.mult.items():
            total = total + schur2(lam, self.trunc).scale(c)
        return total

    def to_json(self):
        return {"trunc": self.trunc, "multiplicities": [
            {"lambda": list(lam), "mult": _fmt(c)} for lam, c in self.mult.items()]}


def schur_decompose(f):
    """Multiplicities ``m(lam)`` with ``f = sum m(lam) S_lam`` up to ``f.trunc``."""
    if f.weights != (1, 1):
        raise ValueError("expected a series in (t1, t2)")
    if not f.is_symmetric():
        raise ValueError("series is not symmetric in t1, t2")
    n_max = f.trunc
    rest = dict(f.coeffs)
    mult = {}
    for n in range(n_max + 1):
        for l1 in range(n, (n + 1) // 2 - 1, -1):
            l2 = n - l1
            if l1 < l2:
                break
            c = rest.get((l1, l2), 0)
            if not c:
                continue
            mult[(l1, l2)] = c
            for k, v in schur2((l1, l2), n_max).coeffs.items():
                s = rest.get(k, 0) - c * v
                if s:
                    rest[k] = s
                else:
                    rest.pop(k, None)
        if any(i + j == n for (i, j) in rest):
            raise ValueError("reconstruction failed in degree %d" % n)
    table = MultiplicityTable(n_max, mult)
    if table.to_series() != f:
        raise ValueError("reconstruction check failed")
    return table


def multiplicity_series(mt):
    """``(M, M')``: ``M`` in ``(t, u)`` weights (1,1); ``M'`` in ``(t, v)`` weights (1,2)."""
    m = TruncSeries2({lam: c for lam, c in mt.mult.items()}, mt.trunc, (1, 1))
    mp = TruncSeries2({(l1 - l2, l2): c for (l1, l2), c in mt.mult.items()}, mt.trunc, (1, 2))
    return m, mp


def inverse_multiplicity_check(mp, trunc=None):
    """Rebuild ``f(t1,t2) = (t1 M'(t1, t1 t2) - t2 M'(t2, t1 t2)) / (t1 - t2)``."""
    if mp.weights != (1, 2):
        raise ValueError("expected a series in (t, v) with weights (1, 2)")
    n = mp.trunc if trunc is None else min(trunc, mp.trunc)
    num = {}
    for (a, b), c in mp.coeffs.items():
        if a + 2 * b > n:
            continue
        for key, s in (((a + b + 1, b), c), ((b, a + b + 1), -c)):
            num[key] = num.get(key, 0) + s
    return divide_by_difference(TruncSeries2(num, n + 1, (1, 1)))


def catalan_numbers(n):
    """``c_0 .. c_n`` via ``c_(k+1) = sum_i c_i c_(k-i)``."""
    cs = [1]
    while len(cs) <= n:
        k = len(cs) - 1
        cs.append(sum(cs[i] * cs[k - i] for i in range(k + 1)))
    return cs[: n + 1]


def catalan_series(trunc=DEFAULT_TRUNC, weights=(1, 1)):
    """``(1 - sqrt(1 - 4v)) / (2v)`` as a series in the second variable."""
    n = trunc // weights[1]
    return TruncSeries2({(0, k): c for k, c in enumerate(catalan_numbers(n))}, trunc, weights)


def constants_hilbert_closed_form(trunc=DEFAULT_TRUNC):
    """``(H, a)`` in ``(t, v)``: constants of the basic derivation on two
    generators and the generating function of their free generators.

    ``H = c / (1 - c t)`` and ``a = t + v c`` where ``c = 1 + v c^2``;
    ``1 / (1 - a) == H`` is checked before returning.
    """
    w = (1, 2)
    c = catalan_series(trunc, w)
    t = TruncSeries2.monomial(1, 0, 1, trunc, w)
    v = TruncSeries2.monomial(0, 1, 1, trunc, w)
    h = c * geometric(c * t)
    a = t + v * c
    if geometric(a) != h:
        raise ArithmeticError("closed forms are inconsistent")
    return h, a


def specialize_v_to_t2(series):
    """One-variable coefficients after ``v = t^2`` (weights (1, 2) input)."""
    if series.weights != (1, 2):
        raise ValueError("expected weights (1, 2)")
    out = [Fraction(0)] * (series.trunc + 1)
    for (a, b), c in series.coeffs.items():
        out[a + 2 * b] += c
    return out


def _t1(trunc):
    return TruncSeries2.monomial(1, 0, 1, trunc)


def _t2(trunc):
    return TruncSeries2.monomial(0, 1, 1, trunc)


def hilbert_free2(trunc=DEFAULT_TRUNC):
    return geometric(_t1(trunc) + _t2(trunc))


def hilbert_l2_rank2(trunc=DEFAULT_TRUNC):
    t1, t2 = _t1(trunc), _t2(trunc)
    return (TruncSeries2.one(trunc) + t1 * t2) * geometric(t1) * geometric(t2)


def hilbert_metabelian2(trunc=DEFAULT_TRUNC):
    t1, t2 = _t1(trunc), _t2(trunc)
    g1, g2 = geometric(t1), geometric(t2)
    return g1 * g2 + t1 * t2 * g1 * g1 * g2 * g2


def hilbert_from_basis(ctx, trunc=DEFAULT_TRUNC):
    """Hilbert series of a two-variable context, counted from its normal basis."""
    if ctx.arity != 2:
        raise ValueError("two-variable contexts only")
    out = {}
    for n in range(trunc + 1):
        for a in range(n + 1):
            out[(a, n - a)] = len(ctx.basis((a, n - a)))
    return TruncSeries2(out, trunc)


def hilbert_of(name, trunc=DEFAULT_TRUNC):
    closed = {"free": hilbert_free2, "grassmann-l2": hilbert_l2_rank2, "metabelian2": hilbert_metabelian2}
    if name not in closed:
        raise ValueError("no closed-form Hilbert series for %r" % name)
    return closed[name](trunc)
