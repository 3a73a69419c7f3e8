"""Exact sparse linear algebra over Q.

Vectors are dicts ``key -> Fraction`` with no stored zeros.  Keys must be
mutually comparable (the smallest key of a row is its pivot), which fixes a
unique reduced row echelon form for every span.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = ["Echelon", "kernel", "rank", "span_basis", "same_span", "in_span", "LayerTooLarge", "max_layer"]


class LayerTooLarge(ValueError):
    """Raised when a requested dense layer exceeds the configured cap."""


def max_layer():
    import os

    raw = os.environ.get("WEITZ_MAX_LAYER")
    if raw is None:
        return 4096
    try:
        return int(raw)
    except ValueError:
        raise ValueError("WEITZ_MAX_LAYER must be an integer, got %r" % raw)


def _axpy(target, scale, src):
    # target += scale * src, in place, dropping zeros
    for k, v in src.items():
        s = target.get(k, 0) + scale * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon basis."""

    def __init__(self, order=None):
        self.rows = {}  # pivot key -> row (pivot entry == 1)
        self._order = order

    def _min(self, vec):
        return min(vec, key=self._order) if self._order else min(vec)

    def reduce(self, vec):
        out = {k: Fraction(v) for k, v in vec.items() if v}
        for k in [k for k in out if k in self.rows]:
            c = out.get(k)
            if c:
                _axpy(out, -c, self.rows[k])
        return out

    def add(self, vec):
        """Insert ``vec``; return True when it enlarged the span."""
        res = self.reduce(vec)
        if not res:
            return False
        p = self._min(res)
        inv = 1 / res[p]
        res = {k: v * inv for k, v in res.items()}
        for row in self.rows.values():
            c = row.get(p)
            if c:
                _axpy(row, -c, res)
        self.rows[p] = res
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.rows)

    def basis(self):
        keys = sorted(self.rows, key=self._order) if self._order else sorted(self.rows)
        return [dict(self.rows[k]) for k in keys]


def rank(vectors, order=None):
    ech = Echelon(order)
    for v in vectors:
        ech.add(v)
    return ech.rank


def span_basis(vectors, order=None):
    ech = Echelon(order)
    for v in vectors:
        ech.add(v)
    return ech.basis()


def same_span(a, b, order=None):
    return span_basis(a, order) == span_basis(b, order)


def in_span(vec, vectors, order=None):
    ech = Echelon(order)
    for v in vectors:
        ech.add(v)
    return ech.contains(vec)


def _int_row(vec):
    den = 1
    for v in vec.values():
        d = v.denominator if isinstance(v, Fraction) else 1
        den = den * d // gcd(den, d)
    return {k: int(v * den) for k, v in vec.items() if v}


def _normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def kernel(columns):
    """Basis of ``{c : sum_j c_j * columns[j] = 0}``.

    The result is the standard basis read off the RREF: one vector per free
    column ``f`` with ``v[f] = 1`` and support otherwise on pivot columns
    smaller than ``f``.  Elimination is fraction-free on integer rows; only
    the back-substitution uses rationals.
    """
    rows = {}
    for j, col in enumerate(columns):
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[j] = v
    echelon = {}  # pivot column -> integer row whose smallest column is the pivot
    for r in rows.values():
        row = _int_row(r)
        while row:
            p = min(row)
            other = echelon.get(p)
            if other is None:
                echelon[p] = _normalize(row)
                break
            a, b = other[p], row[p]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {k: v * fa for k, v in row.items()}
            for k, v in other.items():
                s = new.get(k, 0) - fb * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = _normalize(new)
    pivots = sorted(echelon, reverse=True)
    out = []
    for f in range(len(columns)):
        if f in echelon:
            continue
        vec = {f: Fraction(1)}
        for p in pivots:
            if p > f:
                continue
            row = echelon[p]
            acc = Fraction(0)
            for k, v in row.items():
                if k != p and k in vec:
                    acc += v * vec[k]
            if acc:
                vec[p] = -acc / row[p]
        out.append(dict(sorted(vec.items())))
    return out
