"""Exact noncommutative and commutative polynomials over the rationals.

Both kinds store a dict from a monomial key to a nonzero :class:`Fraction`.
For :class:`NCPoly` the key is a word (tuple of 0-based variable indices),
for :class:`CPoly` it is an exponent vector.  Values are treated as immutable
once constructed.

The canonical term order is degree-lexicographic with ``x1 < x2 < ...``.
Commutative monomials are compared through their sorted-letter word, so both
kinds share one order.
"""
from __future__ import annotations

from fractions import Fraction

__all__ = [
    "NCPoly",
    "CPoly",
    "default_names",
    "word_key",
    "mono_key",
    "commutator",
    "left_normed",
]


def default_names(arity):
    if arity <= 3:
        return ["x", "y", "z"][:arity]
    return ["x%d" % (i + 1) for i in range(arity)]


def word_key(word):
    return (len(word), word)


def mono_key(mono):
    letters = tuple(i for i, e in enumerate(mono) for _ in range(e))
    return (len(letters), letters)


def _frac(c):
    return c if isinstance(c, Fraction) else Fraction(c)


def _format_coef(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


class _Poly:
    """Shared linear structure of both polynomial kinds."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms=None, arity=1):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[tuple(k)] = _frac(c)
        self.terms = clean
        self.arity = arity

    @classmethod
    def _raw(cls, terms, arity):
        # trusted constructor: keys are tuples, values nonzero Fractions
        p = cls.__new__(cls)
        p.terms = terms
        p.arity = arity
        return p

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls, arity):
        return cls._raw({}, arity)

    @classmethod
    def const(cls, c, arity):
        return cls({cls._unit_key(arity): c}, arity)

    @classmethod
    def one(cls, arity):
        return cls.const(1, arity)

    # -- basic protocol -----------------------------------------------
    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError("cannot combine %s with %s" % (type(self).__name__, type(other).__name__))
        if other.arity != self.arity:
            raise ValueError("arity mismatch: %d vs %d" % (self.arity, other.arity))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self).const(other, self.arity)
        self._check(other)
        return other

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def items(self):
        return self.terms.items()

    def coeff(self, key):
        return self.terms.get(tuple(key), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).const(other, self.arity)
        if type(other) is not type(self):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.arity, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(out, self.arity)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -c for k, c in self.terms.items()}, self.arity)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = _frac(c)
        if not c:
            return self.zero(self.arity)
        return self._raw({k: v * c for k, v in self.terms.items()}, self.arity)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        join = self._join
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = join(k1, k2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return self._raw(out, self.arity)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1) / _frac(c))
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.one(self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def sorted_terms(self, reverse=False):
        key = self._order_key
        return sorted(self.terms.items(), key=lambda kc: key(kc[0]), reverse=reverse)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self._key_degree(k) for k in self.terms)

    def multidegree_of(self, key):
        raise NotImplementedError

    def multidegrees(self):
        return sorted({self.multidegree_of(k) for k in self.terms})

    def multihomogeneous_component(self, multidegree):
        md = tuple(multidegree)
        md = md + (0,) * (self.arity - len(md))
        return self._raw({k: c for k, c in self.terms.items() if self.multidegree_of(k) == md}, self.arity)

    def homogeneous_component(self, n):
        return self._raw({k: c for k, c in self.terms.items() if self._key_degree(k) == n}, self.arity)

    def components(self):
        """Split into multihomogeneous components, keyed by multidegree."""
        out = {}
        for k, c in self.terms.items():
            out.setdefault(self.multidegree_of(k), {})[k] = c
        return {md: self._raw(t, self.arity) for md, t in sorted(out.items())}

    def is_multihomogeneous(self):
        return len({self.multidegree_of(k) for k in self.terms}) <= 1

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.to_str())

    def __str__(self):
        return self.to_str()

    def to_str(self, names=None):
        if names is None:
            names = default_names(self.arity)
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = self._render_key(k, names)
            if mono == "1":
                body = _format_coef(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = _format_coef(abs(c)) + "*" + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


class NCPoly(_Poly):
    """Element of the free associative algebra ``Q<x1, ..., xm>``."""

    __slots__ = ()

    @staticmethod
    def _unit_key(arity):
        return ()

    @staticmethod
    def _join(a, b):
        return a + b

    _order_key = staticmethod(word_key)

    @staticmethod
    def _key_degree(k):
        return len(k)

    @classmethod
    def var(cls, i, arity):
        if not 0 <= i < arity:
            raise ValueError("variable index %d out of range for arity %d" % (i, arity))
        return cls._raw({(i,): Fraction(1)}, arity)

    @classmethod
    def gens(cls, arity):
        return [cls.var(i, arity) for i in range(arity)]

    @classmethod
    def word(cls, word, arity, coef=1):
        return cls({tuple(word): coef}, arity)

    def multidegree_of(self, word):
        md = [0] * self.arity
        for i in word:
            md[i] += 1
        return tuple(md)

    @staticmethod
    def _render_key(word, names):
        if not word:
            return "1"
        return "*".join(names[i] for i in word)

    def substitute(self, images):
        """Image under the algebra endomorphism ``x_i -> images[i]``."""
        images = list(images)
        if len(images) != self.arity:
            raise ValueError("need %d images, got %d" % (self.arity, len(images)))
        if not images:
            return self
        target = images[0].arity
        for im in images:
            if not isinstance(im, NCPoly) or im.arity != target:
                raise ValueError("images must be NCPoly of a common arity")
        out = {}
        cache = {}
        for word, c in self.terms.items():
            img = _word_image(word, images, cache, target)
            for k, v in img.terms.items():
                s = out.get(k, 0) + c * v
                if s:
                    out[k] = s
                else:
                    del out[k]
        return NCPoly._raw(out, target)

    def minimal_word(self):
        if not self.terms:
            raise ValueError("zero polynomial has no minimal monomial")
        return min(self.terms, key=word_key)

    def leading_word(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=word_key)

    def abelianize(self):
        """Image in the polynomial algebra."""
        out = {}
        for word, c in self.terms.items():
            k = self.multidegree_of(word)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return CPoly._raw(out, self.arity)


def _word_image(word, images, cache, arity):
    if word in cache:
        return cache[word]
    if not word:
        res = NCPoly.one(arity)
    elif len(word) == 1:
        res = images[word[0]]
    else:
        half = len(word) // 2
        res = _word_image(word[:half], images, cache, arity) * _word_image(word[half:], images, cache, arity)
    cache[word] = res
    return res


class CPoly(_Poly):
    """Element of the polynomial algebra ``Q[x1, ..., xm]``."""

    __slots__ = ()

    @staticmethod
    def _unit_key(arity):
        return (0,) * arity

    @staticmethod
    def _join(a, b):
        return tuple(x + y for x, y in zip(a, b))

    _order_key = staticmethod(mono_key)

    @staticmethod
    def _key_degree(k):
        return sum(k)

    @classmethod
    def var(cls, i, arity):
        if not 0 <= i < arity:
            raise ValueError("variable index %d out of range for arity %d" % (i, arity))
        e = [0] * arity
        e[i] = 1
        return cls._raw({tuple(e): Fraction(1)}, arity)

    @classmethod
    def gens(cls, arity):
        return [cls.var(i, arity) for i in range(arity)]

    @classmethod
    def monomial(cls, exps, coef=1):
        return cls({tuple(exps): coef}, len(exps))

    def multidegree_of(self, mono):
        return mono

    @staticmethod
    def _render_key(mono, names):
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append("%s^%d" % (names[i], e))
        return "*".join(factors) if factors else "1"

    def constant_term(self):
        return self.terms.get((0,) * self.arity, Fraction(0))

    def substitute(self, images):
        """Image under ``x_i -> images[i]`` (images are CPoly of a common arity)."""
        images = list(images)
        if len(images) != self.arity:
            raise ValueError("need %d images, got %d" % (self.arity, len(images)))
        target = images[0].arity if images else 0
        for im in images:
            if not isinstance(im, CPoly) or im.arity != target:
                raise ValueError("images must be CPoly of a common arity")
        powers = [[CPoly.one(target)] for _ in images]
        acc = {}
        for mono, c in self.terms.items():
            term = None
            for i, e in enumerate(mono):
                if not e:
                    continue
                pw = powers[i]
                while len(pw) <= e:
                    pw.append(pw[-1] * images[i])
                term = pw[e] if term is None else term * pw[e]
            if term is None:
                term = CPoly.one(target)
            for k, v in term.terms.items():
                s = acc.get(k, 0) + c * v
                if s:
                    acc[k] = s
                else:
                    del acc[k]
        return CPoly._raw(acc, target)

    def partial(self, i):
        """Formal partial derivative with respect to ``x_i``."""
        if not 0 <= i < self.arity:
            raise ValueError("variable index %d out of range" % i)
        out = {}
        for mono, c in self.terms.items():
            e = mono[i]
            if e:
                k = mono[:i] + (e - 1,) + mono[i + 1:]
                out[k] = c * e
        return CPoly._raw(out, self.arity)

    def evaluate(self, point):
        point = [_frac(a) for a in point]
        if len(point) != self.arity:
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = c
            for a, e in zip(point, mono):
                if e:
                    v *= a ** e
            total += v
        return total

    def extend(self, arity, offset=0):
        """Re-embed into a ring with more variables, shifting indices by ``offset``."""
        if offset + self.arity > arity:
            raise ValueError("does not fit")
        pad_l = (0,) * offset
        pad_r = (0,) * (arity - offset - self.arity)
        return CPoly._raw({pad_l + k + pad_r: c for k, c in self.terms.items()}, arity)

    def divide_exact(self, divisor, var):
        """Exact quotient by ``divisor``, which must be monic in ``x_var``.

        Returns ``(quotient, remainder)`` from division with respect to ``x_var``.
        """
        lead_deg = max(k[var] for k in divisor.terms)
        leads = [k for k in divisor.terms if k[var] == lead_deg]
        if len(leads) != 1 or divisor.terms[leads[0]] != 1 or any(leads[0][j] for j in range(self.arity) if j != var):
            raise ValueError("divisor must be monic in the chosen variable")
        tail = divisor - CPoly.monomial(leads[0])
        rem = self
        quot = CPoly.zero(self.arity)
        while True:
            top = [k for k in rem.terms if k[var] >= lead_deg]
            if not top:
                return quot, rem
            k = max(top, key=mono_key)
            shift = list(k)
            shift[var] -= lead_deg
            q = CPoly({tuple(shift): rem.terms[k]}, self.arity)
            quot = quot + q
            rem = rem - q * CPoly.monomial(leads[0]) - q * tail


def commutator(a, b):
    return a * b - b * a


def left_normed(*elems):
    """Left-normed commutator ``[u1, u2, ..., uk]``."""
    if len(elems) < 2:
        raise ValueError("need at least two arguments")
    acc = elems[0]
    for e in elems[1:]:
        acc = commutator(acc, e)
    return acc


def all_words(multidegree):
    """All words with the given letter-count vector, in lexicographic order."""
    md = list(multidegree)
    n = sum(md)
    out = []

    def rec(prefix, rest):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for i, r in enumerate(rest):
            if r:
                rest[i] -= 1
                prefix.append(i)
                rec(prefix, rest)
                prefix.pop()
                rest[i] += 1

    rec([], md)
    return out


def compositions(n, parts):
    """Exponent vectors of length ``parts`` summing to ``n``, in canonical order."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(tuple(prefix) + (left,))
            return
        for e in range(left + 1):
            prefix.append(e)
            rec(prefix, left - e, slots - 1)
            prefix.pop()

    if parts == 0:
        return [()] if n == 0 else []
    rec([], n, parts)
    out.sort(key=mono_key)
    return out
