"""Algebra contexts: free, polynomial, and relatively free quotients with normal bases.

A context knows how to enumerate a normal basis per multidegree, how to map a
free-algebra element to normal form (``reduce``), and how a derivation acts.
Quotient elements are sparse coordinate vectors over basis keys; each context
supplies the product of two basis keys and the action of a linear derivation
on a basis key.  Everything else (linear structure, products of elements,
caching) lives in the shared base class.
"""
from __future__ import annotations

from fractions import Fraction

from .derivations import LinearDerivation, apply_derivation
from .poly import CPoly, NCPoly, all_words, compositions, default_names, word_key

__all__ = [
    "AlgebraContext",
    "FreeAssoc",
    "Commutative",
    "Metabelian2",
    "GrassmannL2",
    "Wreath",
    "QElem",
    "MetabelianElem",
    "GrassmannL2Elem",
    "WreathElem",
    "make_context",
    "wreath_embed",
    "lr_operator",
]


def _add_into(target, coords, scale=1):
    for k, v in coords.items():
        s = target.get(k, 0) + scale * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def _shift(exps, idx, delta):
    out = list(exps)
    out[idx] += delta
    return tuple(out)


def _linear_images(d):
    """``[[(k, A[k][j]) for nonzero entries] for j]``: sparse columns of ``d``."""
    m = d.arity
    return [[(k, d.matrix[k][j]) for k in range(m) if d.matrix[k][j]] for j in range(m)]


def _mono_leibniz(exps, images, offset=0):
    """Commutative Leibniz on ``prod x_v^exps[v]``.

    ``images[v]`` is a sparse list ``(target, coef)`` for the linear image of
    the variable ``offset + v``; yields ``(new_exps, coef)`` pairs.
    """
    out = {}
    for v, e in enumerate(exps[offset:offset + len(images)]):
        if not e:
            continue
        src = offset + v
        for k, c in images[v]:
            new = _shift(_shift(exps, src, -1), offset + k, 1)
            s = out.get(new, 0) + e * c
            if s:
                out[new] = s
            else:
                del out[new]
    return out


def _fmt(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _module_piece(prefix, poly, names):
    """``(negative, text)`` for ``prefix * poly``."""
    if len(poly.terms) == 1:
        (k, c), = poly.terms.items()
        mono = poly._render_key(k, names)
        text = prefix if mono == "1" else prefix + "*" + mono
        if abs(c) != 1:
            text = _fmt(abs(c)) + "*" + text
        return c < 0, text
    return False, prefix + "*(" + poly.to_str(names) + ")"


def _join(pieces):
    if not pieces:
        return "0"
    out = []
    for neg, text in pieces:
        if not out:
            out.append(("-" if neg else "") + text)
        else:
            out.append(("- " if neg else "+ ") + text)
    return " ".join(out)


class AlgebraContext:
    """Common interface; see the concrete subclasses."""

    name = "abstract"
    elem_type = None
    is_polynomial_ring = False

    def __init__(self, arity):
        self.arity = arity

    def __eq__(self, other):
        return type(self) is type(other) and self.arity == other.arity

    def __hash__(self):
        return hash((type(self).__name__, self.arity))

    def __repr__(self):
        return "%s(%d)" % (type(self).__name__, self.arity)

    def names(self):
        return default_names(self.arity)

    def coerce(self, f):
        if isinstance(f, self.elem_type):
            return f
        if isinstance(f, NCPoly):
            return self.reduce(f)
        raise TypeError("cannot interpret %r in %r" % (type(f).__name__, self))

    def layer_multidegrees(self, n):
        return compositions(n, self.arity)

    def layer_basis(self, n):
        out = []
        for md in self.layer_multidegrees(n):
            out.extend(self.basis(md))
        return out

    def element(self, key, coef=1):
        return self.from_coords({key: Fraction(coef)})

    def is_zero(self, elem):
        return not self.coords(elem)

    def lift(self, elem):
        """A free-algebra preimage of ``elem`` (sum of lifted basis keys)."""
        total = {}
        for key, c in self.coords(elem).items():
            _add_into(total, self.lift_key(key).terms, c)
        return NCPoly._raw(total, self.arity)


class FreeAssoc(AlgebraContext):
    """``Q<x1, ..., xm>``; elements are :class:`NCPoly`."""

    name = "free"
    elem_type = NCPoly
    is_polynomial_ring = True

    def gen(self, i):
        return NCPoly.var(i, self.arity)

    def gens(self):
        return NCPoly.gens(self.arity)

    def one(self):
        return NCPoly.one(self.arity)

    def zero(self):
        return NCPoly.zero(self.arity)

    def reduce(self, f):
        if f.arity != self.arity:
            raise ValueError("arity mismatch: %d vs %d" % (f.arity, self.arity))
        return f

    def basis(self, multidegree):
        return all_words(multidegree)

    def key_multidegree(self, key):
        return tuple(key.count(i) for i in range(self.arity))

    def sort_key(self, key):
        return word_key(key)

    def coords(self, elem):
        return elem.terms

    def from_coords(self, coords):
        return NCPoly(coords, self.arity)

    def lift_key(self, key):
        return NCPoly.word(key, self.arity)

    def lift(self, elem):
        return elem

    def derive(self, d, elem):
        return apply_derivation(d, elem)

    def render(self, elem, names=None):
        return elem.to_str(names)


class Commutative(AlgebraContext):
    """``Q[x1, ..., xm]``; elements are :class:`CPoly`."""

    name = "comm"
    elem_type = CPoly
    is_polynomial_ring = True

    def coerce(self, f):
        if isinstance(f, NCPoly):
            return self.reduce(f)
        if isinstance(f, CPoly) and f.arity == self.arity:
            return f
        raise TypeError("cannot interpret %r in %r" % (f, self))

    def gen(self, i):
        return CPoly.var(i, self.arity)

    def gens(self):
        return CPoly.gens(self.arity)

    def one(self):
        return CPoly.one(self.arity)

    def zero(self):
        return CPoly.zero(self.arity)

    def reduce(self, f):
        if f.arity != self.arity:
            raise ValueError("arity mismatch: %d vs %d" % (f.arity, self.arity))
        return f.abelianize()

    def basis(self, multidegree):
        return [tuple(multidegree)]

    def key_multidegree(self, key):
        return tuple(key)

    def sort_key(self, key):
        from .poly import mono_key

        return mono_key(key)

    def coords(self, elem):
        return elem.terms

    def from_coords(self, coords):
        return CPoly(coords, self.arity)

    def lift_key(self, key):
        return NCPoly.word(tuple(i for i, e in enumerate(key) for _ in range(e)), self.arity)

    def derive(self, d, elem):
        return apply_derivation(d, elem)

    def render(self, elem, names=None):
        return elem.to_str(names)


class QElem:
    """Element of a quotient context: sparse coordinates over its basis keys."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.coords = {k: Fraction(v) for k, v in coords.items() if v}

    @classmethod
    def _raw(cls, ctx, coords):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coords = coords
        return obj

    def _same(self, other):
        if not isinstance(other, QElem) or other.ctx != self.ctx:
            raise TypeError("elements of different contexts")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coords)
        _add_into(out, other.coords)
        return self._raw(self.ctx, out)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.coords)
        _add_into(out, other.coords, -1)
        return self._raw(self.ctx, out)

    def __neg__(self):
        return self._raw(self.ctx, {k: -v for k, v in self.coords.items()})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return self._raw(self.ctx, {})
        return self._raw(self.ctx, {k: v * c for k, v in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same(other)
        return self._raw(self.ctx, self.ctx.mul_coords(self.coords, other.coords))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def __pow__(self, n):
        out = self.ctx.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, QElem):
            return self.ctx == other.ctx and self.coords == other.coords
        if isinstance(other, int) and other == 0:
            return not self.coords
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def __bool__(self):
        return bool(self.coords)

    def is_zero(self):
        return not self.coords

    def multidegrees(self):
        return sorted({self.ctx.key_multidegree(k) for k in self.coords})

    def is_multihomogeneous(self):
        return len(self.multidegrees()) <= 1

    def degree(self):
        mds = self.multidegrees()
        return max(sum(md) for md in mds) if mds else -1

    def sorted_terms(self):
        return sorted(self.coords.items(), key=lambda kc: self.ctx.sort_key(kc[0]))

    def to_str(self, names=None):
        return self.ctx.render(self, names)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.to_str())


class _QuotientContext(AlgebraContext):
    """Shared machinery for contexts whose elements are :class:`QElem`."""

    elem_type = QElem

    def __init__(self, arity):
        super().__init__(arity)
        self._key_products = {}
        self._word_cache = {}
        self._derived = {}

    # subclasses supply: gen_coords, unit_key, key_product, basis,
    # key_multidegree, lift_key, derive_key_linear, render

    def sort_key(self, key):
        return (sum(self.key_multidegree(key)), key)

    def coerce(self, f):
        if isinstance(f, QElem):
            if f.ctx != self:
                raise TypeError("element belongs to %r, not %r" % (f.ctx, self))
            return f
        if isinstance(f, NCPoly):
            return self.reduce(f)
        raise TypeError("cannot interpret %r in %r" % (type(f).__name__, self))

    def coords(self, elem):
        return elem.coords

    def from_coords(self, coords):
        return self.elem_type(self, coords)

    def one(self):
        return self.from_coords({self.unit_key(): 1})

    def zero(self):
        return self.from_coords({})

    def gen(self, i):
        return self.from_coords(self.gen_coords(i))

    def gens(self):
        return [self.gen(i) for i in range(self.arity)]

    def mul_keys(self, a, b):
        key = (a, b)
        hit = self._key_products.get(key)
        if hit is None:
            hit = self.key_product(a, b)
            self._key_products[key] = hit
        return hit

    def mul_coords(self, x, y):
        out = {}
        for k1, c1 in x.items():
            for k2, c2 in y.items():
                _add_into(out, self.mul_keys(k1, k2), c1 * c2)
        return out

    def _reduce_word(self, word):
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        if not word:
            hit = {self.unit_key(): Fraction(1)}
        elif len(word) == 1:
            hit = self.gen_coords(word[0])
        else:
            hit = self.mul_coords(self._reduce_word(word[:-1]), self.gen_coords(word[-1]))
        self._word_cache[word] = hit
        return hit

    def reduce(self, f):
        if not isinstance(f, NCPoly):
            raise TypeError("reduce expects an NCPoly")
        if f.arity != self.arity:
            raise ValueError("arity mismatch: %d vs %d" % (f.arity, self.arity))
        out = {}
        for word, c in f.terms.items():
            _add_into(out, self._reduce_word(word), c)
        return self.elem_type._raw(self, out)

    def derive_key(self, d, key):
        ck = (d, key)
        hit = self._derived.get(ck)
        if hit is None:
            if isinstance(d, LinearDerivation):
                hit = self.derive_key_linear(d, key)
            else:
                # no native rule: push through a free preimage; valid because
                # the defining ideals here are stable under these derivations
                hit = self.reduce(apply_derivation(d, self.lift_key(key))).coords
            self._derived[ck] = hit
        return hit

    def derive(self, d, elem):
        if d.arity != self.arity:
            raise ValueError("arity mismatch: derivation %d vs context %d" % (d.arity, self.arity))
        out = {}
        for key, c in elem.coords.items():
            _add_into(out, self.derive_key(d, key), c)
        return self.elem_type._raw(self, out)

    def _ordered_word_leibniz(self, d, exps):
        """Linear ``d`` applied to the ordered word ``x1^e1 x2^e2 ...``."""
        letters = [i for i, e in enumerate(exps) for _ in range(e)]
        cols = _linear_images(d)
        out = {}
        for pos, letter in enumerate(letters):
            if not cols[letter]:
                continue
            image = {}
            for k, c in cols[letter]:
                _add_into(image, self.gen_coords(k), c)
            left = self._reduce_word(tuple(letters[:pos]))
            right = self._reduce_word(tuple(letters[pos + 1:]))
            _add_into(out, self.mul_coords(self.mul_coords(left, image), right))
        return out


class MetabelianElem(QElem):
    """Element of the free metabelian algebra of rank two.

    Keys: ``(0, (a, b))`` for ``x^a y^b`` and ``(1, (a1, b1, a2, b2))`` for
    ``x^a1 y^b1 [x,y] x^a2 y^b2``, written ``[x,y] x1^a1 y1^b1 x2^a2 y2^b2``.
    """

    __slots__ = ()

    @property
    def comm_free(self):
        return CPoly({k[1]: c for k, c in self.coords.items() if k[0] == 0}, 2)

    @property
    def comm_part(self):
        return CPoly({k[1]: c for k, c in self.coords.items() if k[0] == 1}, 4)


class Metabelian2(_QuotientContext):
    """Relatively free algebra of rank 2 for the identity ``[x1,x2][x3,x4] = 0``."""

    name = "metabelian2"
    elem_type = MetabelianElem
    PART_NAMES = ["x1", "y1", "x2", "y2"]

    def __init__(self, arity=2):
        if arity != 2:
            raise ValueError("direct metabelian normal forms exist for rank 2 only; use Wreath(m)")
        super().__init__(2)

    @classmethod
    def from_parts(cls, comm_free, comm_part, ctx=None):
        ctx = ctx or cls()
        coords = {(0, k): c for k, c in comm_free.terms.items()}
        coords.update({(1, k): c for k, c in comm_part.terms.items()})
        return ctx.from_coords(coords)

    def unit_key(self):
        return (0, (0, 0))

    def gen_coords(self, i):
        return {(0, _shift((0, 0), i, 1)): Fraction(1)}

    def commutator_elem(self):
        return self.element((1, (0, 0, 0, 0)))

    def key_product(self, a, b):
        (ta, ea), (tb, eb) = a, b
        if ta == 1 and tb == 1:
            return {}
        if ta == 1:
            return {(1, (ea[0], ea[1], ea[2] + eb[0], ea[3] + eb[1])): Fraction(1)}
        if tb == 1:
            return {(1, (eb[0] + ea[0], eb[1] + ea[1], eb[2], eb[3])): Fraction(1)}
        (a0, b0), (c0, d0) = ea, eb
        out = {(0, (a0 + c0, b0 + d0)): Fraction(1)}
        # y^b x^c = x^c y^b - sum_{i<b, j<c} y^i x^j [x,y] x^(c-1-j) y^(b-1-i)
        for i in range(b0):
            for j in range(c0):
                _add_into(out, {(1, (a0 + j, i, c0 - 1 - j, b0 - 1 - i + d0)): Fraction(-1)})
        return out

    def basis(self, multidegree):
        a, b = multidegree
        keys = [(0, (a, b))]
        if a >= 1 and b >= 1:
            for a1 in range(a):
                for b1 in range(b):
                    keys.append((1, (a1, b1, a - 1 - a1, b - 1 - b1)))
        return sorted(keys)

    def key_multidegree(self, key):
        t, e = key
        if t == 0:
            return e
        return (e[0] + e[2] + 1, e[1] + e[3] + 1)

    def lift_key(self, key):
        t, e = key
        if t == 0:
            return NCPoly.word((0,) * e[0] + (1,) * e[1], 2)
        left = NCPoly.word((0,) * e[0] + (1,) * e[1], 2)
        right = NCPoly.word((0,) * e[2] + (1,) * e[3], 2)
        x, y = NCPoly.gens(2)
        return left * (x * y - y * x) * right

    def derive_key_linear(self, d, key):
        t, e = key
        if t == 0:
            return self._ordered_word_leibniz(d, e)
        cols = _linear_images(d)
        # d[x,y] = tr(A)[x,y]; the bimodule variables transform like (x, y)
        trace = d.matrix[0][0] + d.matrix[1][1]
        out = {key: trace} if trace else {}
        for offset in (0, 2):
            for new, c in _mono_leibniz(e, cols, offset).items():
                _add_into(out, {(1, new): c})
        return out

    def render(self, elem, names=None):
        names = names or default_names(2)
        pieces = []
        if elem.comm_free:
            pieces.append((False, elem.comm_free.to_str(names)))
        if elem.comm_part:
            pn = [names[0] + "1", names[1] + "1", names[0] + "2", names[1] + "2"]
            pieces.append(_module_piece("[%s,%s]" % tuple(names), elem.comm_part, pn))
        return _join(pieces)


class GrassmannL2Elem(QElem):
    """Keys ``(tag, exps)``: ``tag == ()`` for ordered monomials, ``(i, j)``
    (``i < j``) for ``x^exps [x_i, x_j]``."""

    __slots__ = ()

    @property
    def components(self):
        out = {}
        for (tag, e), c in self.coords.items():
            out.setdefault(tag, {})[e] = c
        m = self.ctx.arity
        return {tag: CPoly(t, m) for tag, t in sorted(out.items())}


class GrassmannL2(_QuotientContext):
    """Relatively free algebra for ``[[x, y], z] = 0`` in rank 2 or 3."""

    name = "grassmann-l2"
    elem_type = GrassmannL2Elem

    def __init__(self, arity):
        if arity not in (2, 3):
            raise ValueError("GrassmannL2 normal forms are implemented for rank 2 and 3 only, not %d" % arity)
        super().__init__(arity)
        self.tags = [(i, j) for i in range(arity) for j in range(i + 1, arity)]

    def unit_key(self):
        return ((), (0,) * self.arity)

    def gen_coords(self, i):
        return {((), _shift((0,) * self.arity, i, 1)): Fraction(1)}

    def bracket(self, i, j):
        """Normal form of ``[x_i, x_j]``."""
        if i == j:
            return self.zero()
        z = (0,) * self.arity
        if i < j:
            return self.element(((i, j), z))
        return self.element(((j, i), z), -1)

    def key_product(self, a, b):
        (ta, ea), (tb, eb) = a, b
        if ta and tb:
            return {}
        s = tuple(p + q for p, q in zip(ea, eb))
        if ta or tb:
            return {(ta or tb, s): Fraction(1)}
        out = {((), s): Fraction(1)}
        # each pair (x_j from the left factor, x_i from the right, j > i) costs -[x_i, x_j]
        for i, j in self.tags:
            n = ea[j] * eb[i]
            if n:
                _add_into(out, {((i, j), _shift(_shift(s, i, -1), j, -1)): Fraction(-n)})
        return out

    def basis(self, multidegree):
        md = tuple(multidegree)
        keys = [((), md)]
        for i, j in self.tags:
            if md[i] and md[j]:
                keys.append(((i, j), _shift(_shift(md, i, -1), j, -1)))
        return keys

    def key_multidegree(self, key):
        tag, e = key
        if not tag:
            return e
        return _shift(_shift(e, tag[0], 1), tag[1], 1)

    def lift_key(self, key):
        tag, e = key
        m = self.arity
        mono = NCPoly.word(tuple(i for i, k in enumerate(e) for _ in range(k)), m)
        if not tag:
            return mono
        xi, xj = NCPoly.var(tag[0], m), NCPoly.var(tag[1], m)
        return mono * (xi * xj - xj * xi)

    def derive_key_linear(self, d, key):
        tag, e = key
        if not tag:
            return self._ordered_word_leibniz(d, e)
        cols = _linear_images(d)
        i, j = tag
        out = {}
        # d[x_i, x_j] = [d x_i, x_j] + [x_i, d x_j]
        for k, c in cols[i]:
            _add_into(out, self.mul_coords(self.bracket(k, j).coords, {((), e): Fraction(1)}), c)
        for k, c in cols[j]:
            _add_into(out, self.mul_coords(self.bracket(i, k).coords, {((), e): Fraction(1)}), c)
        for new, c in _mono_leibniz(e, cols, 0).items():
            _add_into(out, {(tag, new): c})
        return out

    def render(self, elem, names=None):
        names = names or default_names(self.arity)
        pieces = []
        for tag, poly in elem.components.items():
            if tag:
                pieces.append(_module_piece("[%s,%s]" % (names[tag[0]], names[tag[1]]), poly, names))
            else:
                pieces.append((False, poly.to_str(names)))
        return _join(pieces)


class WreathElem(QElem):
    """Keys ``(0, exps)`` for ``y^exps`` and ``(1, i, exps2)`` for
    ``a_i u^exps2[:m] v^exps2[m:]``."""

    __slots__ = ()

    @property
    def y_part(self):
        return CPoly({k[1]: c for k, c in self.coords.items() if k[0] == 0}, self.ctx.arity)

    @property
    def module_part(self):
        m = self.ctx.arity
        parts = [{} for _ in range(m)]
        for k, c in self.coords.items():
            if k[0] == 1:
                parts[k[1]][k[2]] = c
        return tuple(CPoly(p, 2 * m) for p in parts)


class Wreath(_QuotientContext):
    """``K[Y]`` extended by the square-zero bimodule ``sum a_i K[U, V]``.

    ``reduce`` is the embedding ``x_j -> y_j + a_j`` of the free metabelian
    algebra; left multiplication by ``y_j`` acts on ``a_i`` as ``u_j`` and
    right multiplication as ``v_j``.
    """

    name = "wreath"
    elem_type = WreathElem

    def unit_key(self):
        return (0, (0,) * self.arity)

    def y(self, j):
        return self.element((0, _shift((0,) * self.arity, j, 1)))

    def a(self, i):
        return self.element((1, i, (0,) * (2 * self.arity)))

    def gen_coords(self, i):
        m = self.arity
        return {(0, _shift((0,) * m, i, 1)): Fraction(1), (1, i, (0,) * (2 * m)): Fraction(1)}

    def module_elem(self, polys):
        """``sum a_i * polys[i]`` with ``polys`` in ``K[U, V]`` (arity ``2m``)."""
        coords = {}
        for i, p in enumerate(polys):
            for k, c in p.terms.items():
                coords[(1, i, k)] = c
        return self.from_coords(coords)

    def key_product(self, a, b):
        m = self.arity
        if a[0] == 1 and b[0] == 1:
            return {}
        if a[0] == 0 and b[0] == 0:
            return {(0, tuple(p + q for p, q in zip(a[1], b[1]))): Fraction(1)}
        if a[0] == 0:
            _, i, e = b
            return {(1, i, tuple(e[k] + (a[1][k] if k < m else 0) for k in range(2 * m))): Fraction(1)}
        _, i, e = a
        return {(1, i, tuple(e[k] + (b[1][k - m] if k >= m else 0) for k in range(2 * m))): Fraction(1)}

    def basis(self, multidegree):
        md = tuple(multidegree)
        m = self.arity
        keys = [(0, md)]
        for i in range(m):
            if not md[i]:
                continue
            rest = _shift(md, i, -1)
            for split in _splits(rest):
                keys.append((1, i, split))
        return sorted(keys)

    def key_multidegree(self, key):
        if key[0] == 0:
            return key[1]
        m = self.arity
        _, i, e = key
        return _shift(tuple(e[k] + e[k + m] for k in range(m)), i, 1)

    def lift_key(self, key):
        raise NotImplementedError("the wreath product is not a quotient of the free algebra")

    def derive_key_linear(self, d, key):
        cols = _linear_images(d)
        m = self.arity
        if key[0] == 0:
            return {(0, new): c for new, c in _mono_leibniz(key[1], cols, 0).items()}
        _, i, e = key
        out = {}
        for k, c in cols[i]:
            _add_into(out, {(1, k, e): c})
        for new, c in _mono_leibniz(e, cols, 0).items():
            _add_into(out, {(1, i, new): c})
        for new, c in _mono_leibniz(e, cols, m).items():
            _add_into(out, {(1, i, new): c})
        return out

    def uv_names(self):
        m = self.arity
        return ["u%d" % (k + 1) for k in range(m)] + ["v%d" % (k + 1) for k in range(m)]

    def render(self, elem, names=None):
        m = self.arity
        pieces = []
        if elem.y_part:
            pieces.append((False, elem.y_part.to_str(["y%d" % (k + 1) for k in range(m)])))
        for i, p in enumerate(elem.module_part):
            if p:
                pieces.append(_module_piece("a%d" % (i + 1), p, self.uv_names()))
        return _join(pieces)


def _splits(md):
    """All ``e`` of length ``2m`` with ``e[:m] + e[m:] == md``, sorted."""
    out = [()]
    for k in md:
        out = [pre + (j,) for pre in out for j in range(k + 1)]
    m = len(md)
    return sorted(tuple(e) + tuple(md[k] - e[k] for k in range(m)) for e in out)


CONTEXT_NAMES = ("free", "comm", "metabelian2", "grassmann-l2", "wreath", "trace2x2")


def make_context(name, rank=2):
    if name == "free":
        return FreeAssoc(rank)
    if name == "comm":
        return Commutative(rank)
    if name == "metabelian2":
        return Metabelian2(rank)
    if name == "grassmann-l2":
        return GrassmannL2(rank)
    if name == "wreath":
        return Wreath(rank)
    if name == "trace2x2":
        from .generic2x2 import Trace2x2

        return Trace2x2()
    raise ValueError("unknown algebra %r (choose from %s)" % (name, ", ".join(CONTEXT_NAMES)))


def wreath_embed(f, ctx=None):
    """``x_j -> y_j + a_j``, evaluated in the wreath product."""
    ctx = ctx or Wreath(f.arity)
    return ctx.reduce(f)


def lr_operator(f, n, ctx):
    """Apply ``u -> x1 u x2 - x2 u x1`` to ``f`` ``n`` times inside ``ctx``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    u = ctx.coerce(f)
    x1, x2 = ctx.gen(0), ctx.gen(1)
    for _ in range(n):
        u = x1 * u * x2 - x2 * u * x1
    return u
