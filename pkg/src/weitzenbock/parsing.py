"""Text and JSON forms of polynomials.

Text grammar (superset of what :meth:`to_str` emits)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+') factor | atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')' | '[' expr (',' expr)+ ']'

``/`` is only allowed with a constant right operand, so ``3/2*x*y*x - y``
parses as expected.  Brackets denote left-normed commutators.  Whether products commute depends on the ring chosen.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .poly import CPoly, NCPoly, default_names

__all__ = ["parse_poly", "parse_ncpoly", "parse_cpoly", "poly_to_json", "poly_from_json", "ParseError"]


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        elif sym is not None and not sym.isspace():
            if sym not in "+-*/^()[],":
                raise ParseError("unexpected character %r" % sym)
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, cls, names):
        self.tokens = tokens
        self.i = 0
        self.cls = cls
        self.names = {n: k for k, n in enumerate(names)}
        self.arity = len(names)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym):
        tok = self.take()
        if tok != ("sym", sym):
            raise ParseError("expected %r, got %r" % (sym, tok[1]))

    def expr(self):
        acc = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.degree() > 0 or rhs.is_zero():
                    raise ParseError("can only divide by a nonzero constant")
                acc = acc / rhs.coeff(self.cls._unit_key(self.arity))
        return acc

    def factor(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return -self.factor()
        if self.peek() == ("sym", "+"):
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.cls.const(Fraction(val), self.arity)
        if kind == "name":
            if val not in self.names:
                raise ParseError("unknown variable %r (known: %s)" % (val, ", ".join(self.names)))
            return self.cls.var(self.names[val], self.arity)
        if (kind, val) == ("sym", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        if (kind, val) == ("sym", "["):
            acc = self.expr()
            self.expect(",")
            while True:
                rhs = self.expr()
                acc = acc * rhs - rhs * acc
                if self.peek() == ("sym", "]"):
                    self.take()
                    return acc
                self.expect(",")
        raise ParseError("unexpected token %r" % (val,))


def parse_poly(text, names, commutative=False):
    cls = CPoly if commutative else NCPoly
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    p = _Parser(tokens, cls, list(names))
    out = p.expr()
    if p.i != len(tokens):
        raise ParseError("trailing input at token %r" % (tokens[p.i][1],))
    return out


def parse_ncpoly(text, names=None, arity=None):
    if names is None:
        names = default_names(arity if arity is not None else 3)
    return parse_poly(text, names, commutative=False)


def parse_cpoly(text, names=None, arity=None):
    if names is None:
        names = default_names(arity if arity is not None else 3)
    return parse_poly(text, names, commutative=True)


def _coef_str(c):
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def poly_to_json(p, names=None):
    if names is None:
        names = default_names(p.arity)
    field = "word" if isinstance(p, NCPoly) else "mono"
    return {
        "vars": list(names),
        "terms": [{"coef": _coef_str(c), field: list(k)} for k, c in p.sorted_terms()],
    }


def poly_from_json(obj, kind=None):
    """Inverse of :func:`poly_to_json`.  ``kind`` (``NCPoly`` or ``CPoly``)
    settles the zero polynomial, whose JSON has no terms to go by."""
    names = obj["vars"]
    arity = len(names)
    terms = obj.get("terms", [])
    commutative = any("mono" in t for t in terms) if terms or kind is None else kind is CPoly
    if commutative and any("word" in t for t in terms):
        raise ParseError("mixed word/mono terms")
    cls = CPoly if commutative else NCPoly
    out = {}
    for t in terms:
        key = tuple(t["mono"] if commutative else t["word"])
        if commutative and len(key) != arity:
            raise ParseError("exponent vector has wrong length")
        if any(not 0 <= i < arity for i in key) and not commutative:
            raise ParseError("letter index out of range")
        out[key] = out.get(key, 0) + Fraction(t["coef"])
    return cls(out, arity)
