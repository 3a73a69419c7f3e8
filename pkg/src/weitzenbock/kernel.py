"""Constants of derivations, computed one graded piece at a time.

A linear derivation maps the span of the normal basis at a multidegree into
finitely many other multidegrees, so ``ker d`` restricted to that span is the
kernel of a finite sparse matrix.  For a whole degree layer we split along a
grading ``d`` respects (block degrees plus total weight for Jordan forms),
which keeps each elimination small.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .derivations import LinearDerivation, NotLocallyNilpotent
from .linalg import Echelon, LayerTooLarge, kernel, max_layer, same_span
from .poly import CPoly, NCPoly

__all__ = [
    "KernelBasis",
    "kernel_at",
    "is_constant",
    "highest_weight_test",
    "lowering_test",
    "lifting_check",
    "sl2_invariants_at",
    "exp_apply",
    "fixed_space_at",
    "canonical_basis",
]


@dataclass
class KernelBasis:
    ctx: object
    derivation: object
    multidegree: tuple | None
    degree: int
    basis: list = field(default_factory=list)

    @property
    def dimension(self):
        return len(self.basis)

    def to_json(self, names=None):
        from .parsing import poly_to_json

        out = {
            "algebra": self.ctx.name,
            "degree": self.degree,
            "multidegree": list(self.multidegree) if self.multidegree is not None else None,
            "dimension": self.dimension,
            "basis": [],
        }
        for b in self.basis:
            item = {"text": self.ctx.render(b, names)}
            if isinstance(b, (NCPoly, CPoly)):
                item["poly"] = poly_to_json(b, names)
            elif getattr(self.ctx, "liftable", True):
                try:
                    item["lift"] = poly_to_json(self.ctx.lift(b), names)
                except NotImplementedError:
                    pass
            out["basis"].append(item)
        return out


def _primitive(vec, pivot):
    """Scale to coprime integers with a positive pivot entry."""
    den = 1
    for v in vec.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = {k: int(v * den) for k, v in vec.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    sign = -1 if ints[pivot] < 0 else 1
    return {k: Fraction(sign * v, g) for k, v in ints.items()}


def canonical_basis(ctx, vectors, keys=None):
    """Reduced echelon form of a span, pivots at the smallest basis key.

    ``vectors`` are coordinate dicts; the result is a list of context elements
    scaled to primitive integer coefficients, ordered by pivot.
    """
    order = ctx.sort_key
    ech = Echelon(order=order)
    for v in vectors:
        ech.add(v)
    out = []
    for row in ech.basis():
        pivot = min(row, key=order)
        out.append(ctx.from_coords(_primitive(row, pivot)))
    return out


def _check_size(n):
    cap = max_layer()
    if n > cap:
        raise LayerTooLarge("layer has %d basis monomials, cap is %d (set WEITZ_MAX_LAYER to raise it)" % (n, cap))


def _kernel_over(ctx, d, keys):
    columns = [ctx.coords(ctx.derive(d, ctx.element(k))) for k in keys]
    out = []
    for vec in kernel(columns):
        out.append({keys[j]: c for j, c in vec.items()})
    return out


def _grading(d, arity):
    """Function ``multidegree -> grade`` that ``d`` shifts uniformly, or None."""
    jt = getattr(d, "jordan", None)
    if not isinstance(d, LinearDerivation) or jt is None:
        return None
    blocks = jt.blocks()

    def grade(md):
        return tuple(sum(md[j] for j in b) for b in blocks) + (
            sum(md[j] * pos for b in blocks for pos, j in enumerate(b)),)

    return grade


def kernel_at(ctx, d, multidegree=None, degree=None):
    """Basis of the constants of ``d`` at one multidegree or one total degree."""
    if d.arity != ctx.arity:
        raise ValueError("derivation has %d variables, context has %d" % (d.arity, ctx.arity))
    if (multidegree is None) == (degree is None):
        raise ValueError("give exactly one of multidegree and degree")
    if multidegree is not None:
        md = tuple(int(a) for a in multidegree)
        if len(md) != ctx.arity or any(a < 0 for a in md):
            raise ValueError("multidegree %r does not fit %r" % (md, ctx))
        keys = sorted(ctx.basis(md), key=ctx.sort_key)
        _check_size(len(keys))
        vecs = _kernel_over(ctx, d, keys)
        return KernelBasis(ctx, d, md, sum(md), canonical_basis(ctx, vecs))
    n = int(degree)
    if n < 0:
        raise ValueError("degree must be non-negative")
    mds = ctx.layer_multidegrees(n)
    sizes = {md: len(ctx.basis(md)) for md in mds}
    _check_size(sum(sizes.values()))
    grade = _grading(d, ctx.arity)
    groups = {}
    for md in mds:
        groups.setdefault(grade(md) if grade else None, []).extend(ctx.basis(md))
    vecs = []
    for g in sorted(groups, key=lambda g: () if g is None else g):
        keys = sorted(groups[g], key=ctx.sort_key)
        vecs.extend(_kernel_over(ctx, d, keys))
    return KernelBasis(ctx, d, None, n, canonical_basis(ctx, vecs))


def is_constant(ctx, d, f):
    return ctx.is_zero(ctx.derive(d, ctx.coerce(f)))


def _lowered(f, j, i):
    """Partial linearization of ``f`` in ``x_j`` with the new variable set to ``x_i``.

    Literal construction: substitute ``x_j -> x_j + x_new``, keep the part
    linear in ``x_new``, then put ``x_new = x_i``.
    """
    m = f.arity
    kind = type(f)
    big = [kind.var(k, m + 1) for k in range(m)]
    big[j] = big[j] + kind.var(m, m + 1)
    if kind is NCPoly:
        g = f.substitute(big)
        linear = {w: c for w, c in g.terms.items() if w.count(m) == 1}
        back = {}
        for w, c in linear.items():
            k = tuple(i if a == m else a for a in w)
            back[k] = back.get(k, 0) + c
        return NCPoly(back, m)
    g = f.substitute(big)
    back = {}
    for e, c in g.terms.items():
        if e[m] == 1:
            k = list(e[:m])
            k[i] += 1
            k = tuple(k)
            back[k] = back.get(k, 0) + c
    return CPoly(back, m)


def highest_weight_test(f, lam):
    """Koshlukov criterion for a multihomogeneous polynomial of shape ``lam``."""
    m = f.arity
    lam = tuple(lam) + (0,) * (m - len(lam))
    if len(lam) != m:
        raise ValueError("shape has more parts than variables")
    if f and (not f.is_multihomogeneous() or f.multidegrees()[0] != lam):
        raise ValueError("polynomial is not multihomogeneous of multidegree %r" % (lam,))
    for j in range(1, m):
        if not lam[j]:
            continue
        for i in range(j):
            if _lowered(f, j, i):
                return False
    return True


def lowering_test(ctx, f):
    """Highest-weight test inside a context, via the raising derivations ``x_j -> x_i``."""
    m = ctx.arity
    f = ctx.coerce(f)
    for j in range(1, m):
        for i in range(j):
            mat = [[0] * m for _ in range(m)]
            mat[i][j] = 1
            if not ctx.is_zero(ctx.derive(LinearDerivation(mat), f)):
                return False
    return True


def lifting_check(d, bidegree, quotient):
    """Does the free-algebra kernel project onto the quotient kernel?"""
    from .quotients import FreeAssoc

    free = FreeAssoc(quotient.arity)
    kf = kernel_at(free, d, multidegree=bidegree)
    kq = kernel_at(quotient, d, multidegree=bidegree)
    images = [quotient.coords(quotient.reduce(b)) for b in kf.basis]
    target = [quotient.coords(b) for b in kq.basis]
    ech = Echelon(order=quotient.sort_key)
    for v in target:
        ech.add(v)
    inside = all(ech.contains(v) for v in images)
    surjective = inside and same_span(images, target, order=quotient.sort_key)
    return {
        "algebra": quotient.name,
        "bidegree": list(bidegree),
        "free_dim": kf.dimension,
        "quotient_dim": kq.dimension,
        "image_inside_kernel": inside,
        "surjective": surjective,
    }


def sl2_invariants_at(ctx, n):
    if ctx.arity != 2:
        raise ValueError("needs a two-variable context")
    return kernel_at(ctx, LinearDerivation.basic(2), multidegree=(n, n))


def exp_apply(ctx, d, f, max_terms=500):
    """``exp(d)`` applied to one element, summing until a term vanishes."""
    f = ctx.coerce(f)
    total = f
    term = f
    for k in range(1, max_terms):
        term = ctx.derive(d, term) / k
        if ctx.is_zero(term):
            return total
        total = total + term
    raise NotLocallyNilpotent("exp did not terminate on this element")


def fixed_space_at(ctx, d, multidegree):
    """Fixed points of ``exp(d)`` in the span of one multidegree (canonical basis)."""
    keys = sorted(ctx.basis(tuple(multidegree)), key=ctx.sort_key)
    _check_size(len(keys))
    columns = []
    for k in keys:
        e = ctx.element(k)
        columns.append(ctx.coords(exp_apply(ctx, d, e) - e))
    vecs = [{keys[j]: c for j, c in v.items()} for v in kernel(columns)]
    return canonical_basis(ctx, vecs)
