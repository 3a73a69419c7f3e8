"""Free generators of the SL2-invariants of ``Q<x, y>``.

Start from ``w1 = [x, y]``.  Once every generator of degree at most ``2n``
is known, each product ``omega`` of generators of total degree ``2n`` gives
a new generator ``x omega y - y omega x`` of degree ``2n + 2``.  Products are
enumerated lexicographically in their id sequences, so ids are stable.
"""
from __future__ import annotations

from dataclasses import dataclass

from .derivations import LinearDerivation, apply_derivation
from .kernel import highest_weight_test, sl2_invariants_at
from .linalg import Echelon, same_span
from .poly import NCPoly, word_key

__all__ = [
    "GeneratorRecord",
    "generate_up_to",
    "products_of_degree",
    "verify_span",
    "minimal_monomial",
    "dyck_profile",
    "is_dyck",
    "dyck_words",
]


@dataclass(frozen=True)
class GeneratorRecord:
    id: int
    element: NCPoly
    degree: int
    construction: tuple  # ("base",) or ("wrap", (ids of the product))

    def to_json(self):
        if self.construction[0] == "base":
            tree = {"base": "[x,y]"}
        else:
            tree = {"wrap": ["w%d" % i for i in self.construction[1]]}
        return {
            "id": self.id,
            "name": "w%d" % self.id,
            "degree": self.degree,
            "construction": tree,
            "minimal_monomial": "".join("xy"[c] for c in minimal_monomial(self.element)),
            "element": self.element.to_str(),
        }


class _ProductCache:
    def __init__(self, records):
        self.by_id = {r.id: r for r in records}
        self.memo = {(): NCPoly.one(2)}

    def product(self, ids):
        hit = self.memo.get(ids)
        if hit is None:
            hit = self.product(ids[:-1]) * self.by_id[ids[-1]].element
            self.memo[ids] = hit
        return hit


def _id_sequences(records, degree):
    """Id sequences of generators whose degrees sum to ``degree``, lexicographic."""
    gens = sorted((r.id, r.degree) for r in records)
    out = []

    def rec(prefix, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for gid, deg in gens:
            if deg <= left:
                prefix.append(gid)
                rec(prefix, left - deg)
                prefix.pop()

    if degree > 0:
        rec([], degree)
    return out


def generate_up_to(max_degree):
    if max_degree < 2 or max_degree % 2:
        raise ValueError("max_degree must be a positive even integer, got %r" % (max_degree,))
    x, y = NCPoly.gens(2)
    records = [GeneratorRecord(1, x * y - y * x, 2, ("base",))]
    cache = _ProductCache(records)
    for deg in range(4, max_degree + 1, 2):
        fresh = []
        for ids in _id_sequences(records, deg - 2):
            omega = cache.product(ids)
            fresh.append(GeneratorRecord(len(records) + len(fresh) + 1, x * omega * y - y * omega * x, deg, ("wrap", ids)))
        records.extend(fresh)
        cache.by_id.update({r.id: r for r in fresh})
    return records


def products_of_degree(records, degree):
    """``[(ids, element)]`` for all products of total degree ``degree``."""
    cache = _ProductCache(records)
    return [(ids, cache.product(ids)) for ids in _id_sequences(records, degree)]


def minimal_monomial(f):
    """Least word of ``f`` (lexicographic with ``x < y`` inside one degree)."""
    if not f:
        raise ValueError("zero polynomial has no minimal monomial")
    return min(f.terms, key=word_key)


def dyck_profile(word):
    """Prefix counts ``(#x, #y)`` and whether the word is a Dyck word."""
    nx = ny = 0
    prefix = []
    ok = True
    for c in word:
        if c == 0:
            nx += 1
        elif c == 1:
            ny += 1
        else:
            raise ValueError("two-letter words only")
        prefix.append((nx, ny))
        if ny > nx:
            ok = False
    return prefix, ok and nx == ny


def is_dyck(word):
    return dyck_profile(word)[1]


def dyck_words(n):
    """All Dyck words with ``n`` letters of each kind, lexicographic."""
    out = []

    def rec(prefix, nx, ny):
        if nx == ny == n:
            out.append(tuple(prefix))
            return
        if nx < n:
            prefix.append(0)
            rec(prefix, nx + 1, ny)
            prefix.pop()
        if ny < nx:
            prefix.append(1)
            rec(prefix, nx, ny + 1)
            prefix.pop()

    rec([], 0, 0)
    return out


def verify_span(records, n):
    """Compare products of degree ``2n`` with the invariant layer ``(n, n)``."""
    from .quotients import FreeAssoc

    prods = products_of_degree(records, 2 * n)
    vecs = [p.terms for _, p in prods]
    ech = Echelon(order=word_key)
    independent = all(ech.add(v) for v in vecs)
    layer = sl2_invariants_at(FreeAssoc(2), n)
    equal = independent and len(vecs) == layer.dimension and same_span(
        vecs, [b.terms for b in layer.basis], order=word_key)
    minimal = [minimal_monomial(p) for _, p in prods]
    dyck = sorted(minimal) == dyck_words(n)
    basic = LinearDerivation.basic(2)
    constants = all(not apply_derivation(basic, r.element) for r in records if r.degree == 2 * n)
    hw = all(highest_weight_test(r.element, (n, n)) for r in records if r.degree == 2 * n)
    return {
        "n": n,
        "products": len(vecs),
        "independent": independent,
        "kernel_dim": layer.dimension,
        "span_equal": equal,
        "dyck_bijection": dyck,
        "new_generators_constant": constants,
        "new_generators_highest_weight": hw,
        "ok": independent and equal and dyck and constants and hw,
    }
