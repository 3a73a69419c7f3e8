"""Linear (Weitzenboeck) and polynomial derivations, exp and log.

Matrix convention: ``A[i][j]`` is the coefficient of ``x_i`` in ``d(x_j)``,
so column ``j`` holds the image of ``x_j``.  A Jordan block acts by
``d(x_first) = 0`` and ``d(x_k) = x_{k-1}`` inside the block.
"""
from __future__ import annotations

from fractions import Fraction
from graphlib import CycleError, TopologicalSorter

from .poly import CPoly, NCPoly

__all__ = [
    "JordanType",
    "LinearDerivation",
    "PolyDerivation",
    "Automorphism",
    "NotLocallyNilpotent",
    "apply_derivation",
    "exp_derivation",
    "log_automorphism",
    "fixed_point_check",
]

# hard stop for exp/log iterations; every supported input terminates far earlier
MAX_SERIES_TERMS = 500


class NotLocallyNilpotent(ValueError):
    pass


class JordanType:
    """Partition of ``m`` into nilpotent Jordan block sizes."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError("Jordan block sizes must be positive integers: %r" % (parts,))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("Jordan block sizes must be non-increasing: %r" % (parts,))
        self.parts = parts

    @classmethod
    def parse(cls, text):
        return cls(int(s) for s in str(text).split(",") if s.strip())

    @property
    def m(self):
        return sum(self.parts)

    def blocks(self):
        """Variable indices of each block, in order."""
        out, start = [], 0
        for p in self.parts:
            out.append(list(range(start, start + p)))
            start += p
        return out

    def nilpotency(self, j):
        """``p_j`` with ``d^(p_j+1)(x_j) = 0`` minimal."""
        for block in self.blocks():
            if j in block:
                return block.index(j)
        raise IndexError(j)

    def matrix(self):
        m = self.m
        a = [[Fraction(0)] * m for _ in range(m)]
        for block in self.blocks():
            for prev, cur in zip(block, block[1:]):
                a[prev][cur] = Fraction(1)
        return a

    def __eq__(self, other):
        return isinstance(other, JordanType) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "JordanType(%s)" % ",".join(map(str, self.parts))


class LinearDerivation:
    """Derivation acting linearly on the span of the generators."""

    def __init__(self, matrix, jordan=None):
        rows = [[Fraction(c) for c in row] for row in matrix]
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("derivation matrix must be square")
        self.matrix = tuple(tuple(r) for r in rows)
        self.arity = m
        self.jordan = jordan
        if jordan is not None and [list(r) for r in self.matrix] != jordan.matrix():
            raise ValueError("matrix does not match the given Jordan type")
        self._images = {}

    @classmethod
    def from_jordan(cls, parts):
        jt = parts if isinstance(parts, JordanType) else JordanType(parts)
        return cls(jt.matrix(), jordan=jt)

    @classmethod
    def basic(cls, m):
        return cls.from_jordan([m])

    @property
    def is_nilpotent(self):
        m = self.arity
        power = [list(r) for r in self.matrix]
        for _ in range(m - 1):
            power = _matmul(power, self.matrix)
        return all(c == 0 for row in power for c in row)

    def image(self, j, kind=NCPoly):
        key = (j, kind)
        if key not in self._images:
            img = kind.zero(self.arity)
            for i in range(self.arity):
                c = self.matrix[i][j]
                if c:
                    img = img + kind.var(i, self.arity).scale(c)
            self._images[key] = img
        return self._images[key]

    def images(self, kind=NCPoly):
        return [self.image(j, kind) for j in range(self.arity)]

    def as_poly(self, kind=NCPoly):
        return PolyDerivation(self.images(kind), locally_nilpotent=self.is_nilpotent)

    def scaled(self, c):
        return LinearDerivation([[c * a for a in row] for row in self.matrix])

    def __neg__(self):
        return self.scaled(-1)

    def __eq__(self, other):
        return isinstance(other, LinearDerivation) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        if self.jordan is not None:
            return "LinearDerivation(jordan=%s)" % ",".join(map(str, self.jordan.parts))
        return "LinearDerivation(%r)" % ([[str(c) for c in r] for r in self.matrix],)


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _variables(f):
    if isinstance(f, NCPoly):
        return {letter for word in f.terms for letter in word}
    return {i for mono in f.terms for i, e in enumerate(mono) if e}


def _triangular_after_renaming(parts):
    """Is there a variable order in which ``parts[j]`` involves only earlier variables?"""
    graph = {j: _variables(f) for j, f in enumerate(parts)}
    if any(j in deps for j, deps in graph.items()):
        return False
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError:
        return False
    return True


class PolyDerivation:
    """Derivation given by arbitrary images of the generators.

    ``locally_nilpotent`` records a known certificate (triangular shape,
    nilpotent linear part, or a constant multiple of one); exp refuses
    anything without it.
    """

    def __init__(self, images, locally_nilpotent=False):
        images = list(images)
        if not images:
            raise ValueError("need at least one image")
        kind = type(images[0])
        arity = images[0].arity
        if kind not in (NCPoly, CPoly) or any(type(f) is not kind or f.arity != arity for f in images):
            raise ValueError("images must be polynomials of one kind and arity")
        if arity != len(images):
            raise ValueError("need one image per generator")
        self.images = images
        self.kind = kind
        self.arity = arity
        self._lnd = bool(locally_nilpotent)

    @classmethod
    def scaled(cls, w, d):
        """``w * d`` for a linear nilpotent ``d`` and a ``d``-constant ``w``."""
        if not d.is_nilpotent:
            raise NotLocallyNilpotent("linear part is not nilpotent")
        kind = type(w)
        if apply_derivation(d, w):
            raise ValueError("multiplier is not a constant of the derivation")
        return cls([w * im for im in d.images(kind)], locally_nilpotent=True)

    @property
    def is_triangular(self):
        return _triangular_after_renaming(self.images)

    @property
    def locally_nilpotent(self):
        return self._lnd or self.is_triangular

    def image(self, j, kind=None):
        return self.images[j]

    def __eq__(self, other):
        if isinstance(other, LinearDerivation):
            other = other.as_poly(self.kind)
        return isinstance(other, PolyDerivation) and self.images == other.images

    def __hash__(self):
        return hash(tuple(self.images))

    def __repr__(self):
        return "PolyDerivation([%s])" % ", ".join(str(f) for f in self.images)


def _leibniz_nc(images, f):
    out = {}
    for word, c in f.terms.items():
        for pos, letter in enumerate(word):
            img = images[letter]
            if not img.terms:
                continue
            pre, post = word[:pos], word[pos + 1:]
            for w2, c2 in img.terms.items():
                k = pre + w2 + post
                s = out.get(k, 0) + c * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
    return NCPoly._raw(out, f.arity)


def _leibniz_comm(images, f):
    total = CPoly.zero(f.arity)
    for i, img in enumerate(images):
        if img.terms:
            dfi = f.partial(i)
            if dfi.terms:
                total = total + dfi * img
    return total


def apply_derivation(d, f, ctx=None):
    """Apply the Leibniz extension of ``d`` to ``f``.

    With a quotient context the result is in that context's normal form.
    """
    if ctx is not None:
        return ctx.derive(d, ctx.coerce(f))
    if f.arity != d.arity:
        raise ValueError("arity mismatch: polynomial %d vs derivation %d" % (f.arity, d.arity))
    kind = type(f)
    if isinstance(d, PolyDerivation):
        if d.kind is not kind:
            raise TypeError("derivation images are %s, polynomial is %s" % (d.kind.__name__, kind.__name__))
        images = d.images
    else:
        images = d.images(kind)
    if kind is NCPoly:
        return _leibniz_nc(images, f)
    return _leibniz_comm(images, f)


class Automorphism:
    """Endomorphism ``x_j -> images[j]`` of a free or polynomial algebra."""

    def __init__(self, images, unipotent=False):
        images = list(images)
        kind = type(images[0])
        arity = images[0].arity
        if any(type(f) is not kind or f.arity != arity for f in images) or arity != len(images):
            raise ValueError("images must be polynomials of one kind, one per generator")
        self.images = images
        self.kind = kind
        self.arity = arity
        self._unipotent = bool(unipotent)

    @property
    def is_triangular(self):
        gens = self.kind.gens(self.arity)
        return _triangular_after_renaming([f - x for f, x in zip(self.images, gens)])

    @property
    def unipotent(self):
        return self._unipotent or self.is_triangular

    def __call__(self, f):
        return f.substitute(self.images)

    def compose(self, other):
        """``self o other``."""
        return Automorphism([self(img) for img in other.images], unipotent=self.unipotent and other.unipotent)

    def is_identity(self):
        return self.images == self.kind.gens(self.arity)

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.images == other.images

    def __repr__(self):
        return "Automorphism([%s])" % ", ".join(str(f) for f in self.images)


def _as_poly_derivation(d, kind):
    if isinstance(d, LinearDerivation):
        if not d.is_nilpotent:
            raise NotLocallyNilpotent("linear derivation is not nilpotent")
        return d.as_poly(kind)
    if not d.locally_nilpotent:
        raise NotLocallyNilpotent("refusing exp of a derivation without a local nilpotence certificate")
    return d


def exp_derivation(d, kind=None):
    """``exp d`` on each generator, summed until the next term vanishes."""
    if kind is None:
        kind = d.kind if isinstance(d, PolyDerivation) else NCPoly
    pd = _as_poly_derivation(d, kind)
    images = []
    for j in range(pd.arity):
        term = kind.var(j, pd.arity)
        total = term
        for k in range(1, MAX_SERIES_TERMS):
            term = apply_derivation(pd, term) / k
            if not term:
                break
            total = total + term
        else:
            raise NotLocallyNilpotent("exp series did not terminate")
        images.append(total)
    return Automorphism(images, unipotent=True)


def log_automorphism(phi, max_terms=MAX_SERIES_TERMS, max_size=None, max_degree=None):
    """Derivation ``log(phi) = sum (-1)^(k+1) (phi - 1)^k / k`` on generators.

    ``max_size`` and ``max_degree`` cap the iterates ``(phi - 1)^k(x_j)``;
    they guard inputs whose unipotence is only assumed.
    """
    if not phi.unipotent:
        raise NotLocallyNilpotent("automorphism is neither triangular nor known to be unipotent")
    kind, arity = phi.kind, phi.arity
    images = []
    for j in range(arity):
        g = kind.var(j, arity)
        total = kind.zero(arity)
        for k in range(1, max_terms):
            g = phi(g) - g
            if not g:
                break
            if (max_size is not None and len(g.terms) > max_size) or (
                    max_degree is not None and g.degree() > max_degree):
                raise NotLocallyNilpotent("log series is growing without bound; not unipotent?")
            total = total + g.scale(Fraction((-1) ** (k + 1), k))
        else:
            raise NotLocallyNilpotent("log series did not terminate")
        images.append(total)
    return PolyDerivation(images, locally_nilpotent=True)


def fixed_point_check(phi, f, ctx=None):
    image = phi(f)
    if ctx is not None:
        return ctx.coerce(image) == ctx.coerce(f)
    return image == f
