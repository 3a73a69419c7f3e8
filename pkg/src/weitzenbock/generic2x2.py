"""Two generic 2x2 matrices and their trace algebra.

The trace algebra is handled as the free module over ``Cbar = Q[p, q, u, t, v]``
with basis ``1, x0, y0, z`` where ``x0, y0`` are the traceless parts of the
generic matrices and ``z = [x0, y0]``.  Here ``p = tr x``, ``q = tr y``,
``u = tr x0^2``, ``v = tr y0^2``, ``t = tr x0 y0``.  Products use structure
constants that follow from Cayley-Hamilton for traceless 2x2 matrices; the
explicit matrices over ``Q[x_ij, y_ij]`` serve as an independent oracle.
"""
from __future__ import annotations

from fractions import Fraction

from .derivations import LinearDerivation, NotLocallyNilpotent, PolyDerivation, apply_derivation
from .kernel import kernel_at
from .linalg import Echelon, rank as vec_rank
from .parsing import parse_cpoly
from .poly import CPoly, NCPoly, mono_key
from .quotients import AlgebraContext, Commutative

__all__ = [
    "CBAR_NAMES",
    "OMEGA_NAMES",
    "TraceElem",
    "GenericMatrix",
    "TraceDerivation",
    "Trace2x2",
    "cbar",
    "matrix_realization",
    "trace_mul",
    "trace_derivation_apply",
    "example_delta",
    "example_generators",
    "verify_cbar_constants",
    "exp_w_delta",
    "realization_rank_check",
    "EXAMPLE_ALIASES",
]

CBAR_NAMES = ["p", "q", "u", "t", "v"]
OMEGA_NAMES = ["x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22"]
P, Q, U, T, V = range(5)
BASIS_NAMES = ["1", "x0", "y0", "[x0,y0]"]


def cbar(text):
    """Parse an element of ``Q[p, q, u, t, v]``."""
    return parse_cpoly(text, names=CBAR_NAMES)


def _c(i):
    return CPoly.var(i, 5)


_ZERO = CPoly.zero(5)
_ONE = CPoly.one(5)
_HALF = Fraction(1, 2)

# products of basis elements e_i * e_j = sum_k STRUCT[i][j][k] e_k, k over 1, x0, y0, z
# x0^2 = u/2, y0^2 = v/2, x0 y0 = t/2 + z/2, y0 x0 = t/2 - z/2,
# x0 z = u y0 - t x0, z x0 = t x0 - u y0, y0 z = t y0 - v x0, z y0 = v x0 - t y0,
# z^2 = t^2 - u v
_STRUCT = None


def _struct():
    global _STRUCT
    if _STRUCT is None:
        u, t, v = _c(U), _c(T), _c(V)
        z4 = [_ZERO] * 4

        def vec(**kw):
            out = list(z4)
            for name, val in kw.items():
                out[["one", "x0", "y0", "z"].index(name)] = val
            return out

        s = [[None] * 4 for _ in range(4)]
        for j in range(4):
            s[0][j] = vec(**{["one", "x0", "y0", "z"][j]: _ONE})
            s[j][0] = list(s[0][j])
        s[1][1] = vec(one=u * _HALF)
        s[2][2] = vec(one=v * _HALF)
        s[1][2] = vec(one=t * _HALF, z=_ONE * _HALF)
        s[2][1] = vec(one=t * _HALF, z=-_ONE * _HALF)
        s[1][3] = vec(x0=-t, y0=u)
        s[3][1] = vec(x0=t, y0=-u)
        s[2][3] = vec(x0=-v, y0=t)
        s[3][2] = vec(x0=v, y0=-t)
        s[3][3] = vec(one=t * t - u * v)
        _STRUCT = s
    return _STRUCT


class TraceElem:
    """``c0 + c1*x0 + c2*y0 + c3*[x0, y0]`` with ``c_i`` in ``Cbar``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != 4 or any(not isinstance(c, CPoly) or c.arity != 5 for c in coeffs):
            raise ValueError("need four coefficients in Q[p,q,u,t,v]")
        self.coeffs = tuple(coeffs)

    @classmethod
    def scalar(cls, c):
        if not isinstance(c, CPoly):
            c = CPoly.const(c, 5)
        return cls([c, _ZERO, _ZERO, _ZERO])

    @classmethod
    def basis(cls, i):
        out = [_ZERO] * 4
        out[i] = _ONE
        return cls(out)

    @classmethod
    def x0(cls):
        return cls.basis(1)

    @classmethod
    def y0(cls):
        return cls.basis(2)

    @classmethod
    def z(cls):
        return cls.basis(3)

    @classmethod
    def x(cls):
        return cls([_c(P) * _HALF, _ONE, _ZERO, _ZERO])

    @classmethod
    def y(cls):
        return cls([_c(Q) * _HALF, _ZERO, _ONE, _ZERO])

    @classmethod
    def zero(cls):
        return cls([_ZERO] * 4)

    @classmethod
    def one(cls):
        return cls.scalar(1)

    def __add__(self, other):
        other = _as_trace(other)
        return TraceElem([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TraceElem([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_trace(other))

    def __rsub__(self, other):
        return _as_trace(other) - self

    def scale(self, c):
        if isinstance(c, CPoly):
            return TraceElem([a * c for a in self.coeffs])
        return TraceElem([a.scale(c) for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CPoly)):
            return self.scale(other)
        return trace_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CPoly)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def __pow__(self, n):
        out = TraceElem.one()
        for _ in range(n):
            out = out * self
        return out

    def trace(self):
        """Trace of the realized matrix (only the scalar part contributes)."""
        return self.coeffs[0] * 2

    def __eq__(self, other):
        if isinstance(other, TraceElem):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not self

    def to_str(self, names=None):
        pieces = []
        for c, b in zip(self.coeffs, BASIS_NAMES):
            if not c:
                continue
            text = c.to_str(CBAR_NAMES)
            if b == "1":
                pieces.append(text)
            elif text in ("1", "-1"):
                pieces.append(("-" if text == "-1" else "") + b)
            elif len(c.terms) == 1:
                pieces.append(text + "*" + b)
            else:
                pieces.append("(%s)*%s" % (text, b))
        return " + ".join(pieces).replace("+ -", "- ") if pieces else "0"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "TraceElem(%s)" % self.to_str()


def _as_trace(e):
    if isinstance(e, TraceElem):
        return e
    if isinstance(e, (int, Fraction, CPoly)):
        return TraceElem.scalar(e)
    raise TypeError("cannot use %r as a trace-algebra element" % (e,))


def trace_mul(a, b):
    s = _struct()
    out = [_ZERO] * 4
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if not cb:
                continue
            prod = ca * cb
            for k, sk in enumerate(s[i][j]):
                if sk:
                    out[k] = out[k] + prod * sk
    return TraceElem(out)


class GenericMatrix:
    """2x2 matrix over ``Q[x11, x12, x21, x22, y11, y12, y21, y22]``."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(r) for r in entries)

    @classmethod
    def generic(cls, which):
        off = {"x": 0, "y": 4}[which]
        return cls([[CPoly.var(off, 8), CPoly.var(off + 1, 8)], [CPoly.var(off + 2, 8), CPoly.var(off + 3, 8)]])

    @classmethod
    def scalar(cls, c):
        c = c if isinstance(c, CPoly) else CPoly.const(c, 8)
        z = CPoly.zero(8)
        return cls([[c, z], [z, c]])

    def __add__(self, other):
        return GenericMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return GenericMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return GenericMatrix([[-a for a in r] for r in self.entries])

    def scale(self, c):
        return GenericMatrix([[a * c for a in r] for r in self.entries])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CPoly)):
            return self.scale(other)
        a, b = self.entries, other.entries
        return GenericMatrix([[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)] for i in range(2)])

    def trace(self):
        return self.entries[0][0] + self.entries[1][1]

    def det(self):
        a = self.entries
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]

    def is_scalar(self):
        a = self.entries
        return not a[0][1] and not a[1][0] and a[0][0] == a[1][1]

    def __eq__(self, other):
        return isinstance(other, GenericMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def flat(self):
        return [e for r in self.entries for e in r]

    def __repr__(self):
        return "GenericMatrix([%s])" % "; ".join(", ".join(e.to_str(OMEGA_NAMES) for e in r) for r in self.entries)


class _Realizer:
    """Cached images of ``p, q, u, t, v`` and the basis in ``M_2(Omega)``."""

    _inst = None

    @classmethod
    def get(cls):
        if cls._inst is None:
            cls._inst = cls()
        return cls._inst

    def __init__(self):
        x, y = GenericMatrix.generic("x"), GenericMatrix.generic("y")
        p, q = x.trace(), y.trace()
        x0 = x - GenericMatrix.scalar(p * _HALF)
        y0 = y - GenericMatrix.scalar(q * _HALF)
        self.x, self.y, self.x0, self.y0 = x, y, x0, y0
        self.z = x0 * y0 - y0 * x0
        self.cbar_images = [p, q, (x0 * x0).trace(), (x0 * y0).trace(), (y0 * y0).trace()]
        self.basis = [GenericMatrix.scalar(1), x0, y0, self.z]
        self._cache = {}

    def scalar(self, c):
        hit = self._cache.get(c)
        if hit is None:
            hit = c.substitute(self.cbar_images)
            self._cache[c] = hit
        return hit


def matrix_realization(e):
    r = _Realizer.get()
    e = _as_trace(e)
    total = GenericMatrix.scalar(0)
    for c, b in zip(e.coeffs, r.basis):
        if c:
            total = total + b * r.scalar(c)
    return total


def realization_rank_check(max_coeff_degree=4):
    """Independence of ``m * b`` (``m`` a Cbar monomial of degree ``<= d``,
    ``b`` in ``1, x0, y0, z``) after realization as matrices."""
    from .poly import compositions

    # bidegree in (x-entries, y-entries) keeps the eliminations small
    xdeg = {P: (1, 0), Q: (0, 1), U: (2, 0), T: (1, 1), V: (0, 2)}
    bdeg = [(0, 0), (1, 0), (0, 1), (1, 1)]
    groups = {}
    for n in range(max_coeff_degree + 1):
        for mono in compositions(n, 5):
            a = sum(mono[k] * xdeg[k][0] for k in range(5))
            b = sum(mono[k] * xdeg[k][1] for k in range(5))
            for i in range(4):
                groups.setdefault((a + bdeg[i][0], b + bdeg[i][1]), []).append((mono, i))
    total = 0
    independent = 0
    for key in sorted(groups):
        vecs = []
        for mono, i in groups[key]:
            coeffs = [_ZERO] * 4
            coeffs[i] = CPoly.monomial(mono)
            mat = matrix_realization(TraceElem(coeffs))
            vec = {}
            for pos, entry in enumerate(mat.flat()):
                for k, c in entry.terms.items():
                    vec[(pos, k)] = c
            vecs.append(vec)
        total += len(vecs)
        independent += vec_rank(vecs)
    return {"elements": total, "rank": independent, "injective": total == independent}


class TraceDerivation:
    """Derivation of the trace algebra fixed by ``p, q, x0, y0``.

    ``dp, dq`` lie in ``Cbar``; ``dx0, dy0`` have no scalar component.  The
    values on ``u, t, v`` are induced through traces.
    """

    arity = 2

    def __init__(self, dp, dq, dx0, dy0):
        dx0, dy0 = _as_trace(dx0), _as_trace(dy0)
        if dx0.coeffs[0] or dy0.coeffs[0]:
            raise ValueError("images of x0 and y0 must have no scalar component")
        self.dp, self.dq, self.dx0, self.dy0 = dp, dq, dx0, dy0
        x0, y0 = TraceElem.x0(), TraceElem.y0()
        du = (dx0 * x0 + x0 * dx0).trace()
        dt = (dx0 * y0 + x0 * dy0).trace()
        dv = (dy0 * y0 + y0 * dy0).trace()
        self.cbar_images = [dp, dq, du, dt, dv]
        self._cbar = PolyDerivation(self.cbar_images)

    @classmethod
    def from_linear(cls, d):
        """Extend a linear derivation of ``<x, y>`` (2x2 matrix) to the trace algebra."""
        if d.arity != 2:
            raise ValueError("need a derivation of two generators")
        a = d.matrix
        dx = TraceElem.x().scale(a[0][0]) + TraceElem.y().scale(a[1][0])
        dy = TraceElem.x().scale(a[0][1]) + TraceElem.y().scale(a[1][1])
        dp, dq = dx.trace(), dy.trace()
        return cls(dp, dq, dx - TraceElem.scalar(dp * _HALF), dy - TraceElem.scalar(dq * _HALF))

    def scaled(self, w):
        w = w if isinstance(w, CPoly) else CPoly.const(w, 5)
        return TraceDerivation(self.dp * w, self.dq * w, self.dx0.scale(w), self.dy0.scale(w))

    def on_cbar(self, c):
        return apply_derivation(self._cbar, c)

    def cbar_linear(self):
        """The action on ``span(p, q, u, t, v)`` as a :class:`LinearDerivation`, if linear."""
        m = [[Fraction(0)] * 5 for _ in range(5)]
        for j, img in enumerate(self.cbar_images):
            for k, c in img.terms.items():
                if sum(k) != 1:
                    return None
                m[k.index(1)][j] = c
        return LinearDerivation(m)

    def __eq__(self, other):
        return isinstance(other, TraceDerivation) and (
            self.dp, self.dq, self.dx0, self.dy0) == (other.dp, other.dq, other.dx0, other.dy0)

    def __hash__(self):
        return hash((self.dp, self.dq, self.dx0, self.dy0))


def trace_derivation_apply(d, e):
    e = _as_trace(e)
    c0, c1, c2, c3 = e.coeffs
    x0, y0 = TraceElem.x0(), TraceElem.y0()
    dz = d.dx0 * y0 + x0 * d.dy0 - d.dy0 * x0 - y0 * d.dx0
    out = TraceElem([d.on_cbar(c0), d.on_cbar(c1), d.on_cbar(c2), d.on_cbar(c3)])
    for c, img in ((c1, d.dx0), (c2, d.dy0), (c3, dz)):
        if c:
            out = out + img.scale(c)
    return out


EXAMPLE_ALIASES = {"7.3": "fix-x", "7.4": "chain5"}


def _example_name(name):
    name = EXAMPLE_ALIASES.get(name, name)
    if name not in _GENERATORS:
        raise ValueError("unknown example %r (use fix-x or chain5)" % (name,))
    return name


def example_delta(name):
    """``"fix-x"``: ``x -> 0, y -> x``.  ``"chain5"``: additionally ``p -> v``,
    a single Jordan chain ``q -> p -> v -> t -> u`` on ``Cbar``."""
    name = _example_name(name)
    x0 = TraceElem.x0()
    if name == "fix-x":
        return TraceDerivation(_ZERO, _c(P), TraceElem.zero(), x0)
    return TraceDerivation(_c(V), _c(P), TraceElem.zero(), x0)


_GENERATORS = {
    "fix-x": ["p", "u", "p*t - q*u", "t^2 - u*v", "q^2*u - 2*p*q*t + p^2*v"],
    "chain5": [
        "u",
        "t^2 - u*v",
        "t*p - q*u - v^2/4",
        "t^3 - 3/2*u*t*v + 3/2*u^2*p",
        "3*t^2*q - 3/2*t*v*p + v^3/4 - 3*u*v*q + 9/4*u*p^2",
    ],
}


def example_generators(name):
    return [cbar(s) for s in _GENERATORS[_example_name(name)]]


def verify_cbar_constants(name, max_degree=8):
    name = _example_name(name)
    d = example_delta(name)
    gens = example_generators(name)
    lin = d.cbar_linear()
    report = {"example": name, "constants": [not d.on_cbar(g) for g in gens]}
    if name == "fix-x":
        p, q, u, t, v = (_c(i) for i in range(5))
        lhs = u * (q * q * u - 2 * p * q * t + p * p * v) + p * p * (t * t - u * v)
        report["syzygy"] = lhs == (p * t - q * u) ** 2
        report["induced"] = [str(c.to_str(CBAR_NAMES)) for c in d.cbar_images]
    rows = []
    ctx = Commutative(5)
    degs = [g.degree() for g in gens]
    from .commutative import _products_of_degree

    for n in range(max_degree + 1):
        vecs = []
        for e in _products_of_degree(gens, degs, n):
            prod = _ONE
            for g, k in zip(gens, e):
                if k:
                    prod = prod * g ** k
            vecs.append(prod.terms)
        sub = vec_rank(vecs, order=mono_key)
        ker = kernel_at(ctx, lin, degree=n).dimension
        rows.append({"degree": n, "subalgebra_dim": sub, "kernel_dim": ker})
    report["rows"] = rows
    report["ok"] = all(report["constants"]) and report.get("syzygy", True) and all(
        r["subalgebra_dim"] == r["kernel_dim"] for r in rows)
    return report


def _exp_apply(d, e, max_terms=200):
    total = term = _as_trace(e)
    for k in range(1, max_terms):
        term = trace_derivation_apply(d, term) / k
        if not term:
            return total
        total = total + term
    raise NotLocallyNilpotent("exp did not terminate")


_DISC = None


def _disc():
    global _DISC
    if _DISC is None:
        _DISC = cbar("t^2 - u*v")
    return _DISC


def exp_w_delta(w, name):
    """``exp(w * delta)`` on ``x`` and ``y`` for a constant ``w`` of the example derivation."""
    if not isinstance(w, CPoly):
        w = cbar(str(w))
    name = _example_name(name)
    d = example_delta(name)
    if d.on_cbar(w):
        raise ValueError("w is not a constant of the derivation")
    wd = d.scaled(w)
    images = {"x": _exp_apply(wd, TraceElem.x()), "y": _exp_apply(wd, TraceElem.y())}
    inverse = d.scaled(-w)
    roundtrip = all(_exp_apply(inverse, images[k]) == getattr(TraceElem, k)() for k in "xy")
    _, rem = w.divide_exact(_disc(), T)
    divisible = not rem
    out = {
        "example": name,
        "w": w.to_str(CBAR_NAMES),
        "images": images,
        "matrices": {k: matrix_realization(v) for k, v in images.items()},
        "inverse_ok": roundtrip,
        "divisible_by_disc": divisible,
    }
    if divisible:
        # image - generator = (t^2 - uv) * E with E a Cbar-combination of 1, x0, y0, z;
        # t^2 - uv realizes [x, y]^2, which is central, so the image lies in R
        cert = []
        for k in "xy":
            diff = images[k] - getattr(TraceElem, k)()
            cert.append(all(not c.divide_exact(_disc(), T)[1] for c in diff.coeffs))
        r = _Realizer.get()
        comm = r.x * r.y - r.y * r.x
        out["in_R"] = all(cert) and matrix_realization(_disc()) == comm * comm
    return out


class Trace2x2(AlgebraContext):
    """The trace algebra as a context on the generators ``x, y``.

    Basis keys are ``(i, mono)``: ``mono`` a Cbar exponent vector, ``i``
    indexing ``1, x0, y0, z``.  Multidegrees count ``x``- and ``y``-weight
    (``p, u, t`` carry x-weight 1, 2, 1; ``q, t, v`` carry y-weight 1, 1, 2).
    """

    name = "trace2x2"
    elem_type = TraceElem
    _W = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    _B = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def __init__(self, arity=2):
        super().__init__(2)

    def coerce(self, f):
        if isinstance(f, TraceElem):
            return f
        if isinstance(f, CPoly) and f.arity == 5:
            return TraceElem.scalar(f)
        if isinstance(f, NCPoly):
            return self.reduce(f)
        raise TypeError("cannot interpret %r in the trace algebra" % (f,))

    def gen(self, i):
        return [TraceElem.x, TraceElem.y][i]()

    def gens(self):
        return [self.gen(0), self.gen(1)]

    def one(self):
        return TraceElem.one()

    def zero(self):
        return TraceElem.zero()

    def reduce(self, f):
        if f.arity != 2:
            raise ValueError("the trace algebra has two generators")
        gens = self.gens()
        total = TraceElem.zero()
        for word, c in f.terms.items():
            term = TraceElem.one()
            for letter in word:
                term = term * gens[letter]
            total = total + term.scale(c)
        return total

    def basis(self, multidegree):
        from .poly import compositions

        a, b = multidegree
        keys = []
        for n in range(a + b + 1):
            for mono in compositions(n, 5):
                wa = sum(mono[k] * self._W[k][0] for k in range(5))
                wb = sum(mono[k] * self._W[k][1] for k in range(5))
                for i, (ba, bb) in enumerate(self._B):
                    if wa + ba == a and wb + bb == b:
                        keys.append((i, mono))
        return sorted(keys, key=self.sort_key)

    def key_multidegree(self, key):
        i, mono = key
        return (sum(mono[k] * self._W[k][0] for k in range(5)) + self._B[i][0],
                sum(mono[k] * self._W[k][1] for k in range(5)) + self._B[i][1])

    def sort_key(self, key):
        return (sum(self.key_multidegree(key)), key[0], mono_key(key[1]))

    def coords(self, elem):
        out = {}
        for i, c in enumerate(elem.coeffs):
            for k, v in c.terms.items():
                out[(i, k)] = v
        return out

    def from_coords(self, coords):
        parts = [{} for _ in range(4)]
        for (i, k), v in coords.items():
            parts[i][k] = v
        return TraceElem([CPoly(p, 5) for p in parts])

    def lift_key(self, key):
        raise NotImplementedError("trace-algebra elements need not come from the free algebra")

    def derive(self, d, elem):
        if isinstance(d, LinearDerivation):
            d = TraceDerivation.from_linear(d)
        return trace_derivation_apply(d, elem)

    def render(self, elem, names=None):
        return elem.to_str()
