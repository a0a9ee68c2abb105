"""Parser for the scalar and polynomial expression grammar.

Scalars: integers, ``p/q``, ``zeta(N)`` with ``^k``, formal variable names,
``+ - *`` and parentheses.  Polynomials add generator names, juxtaposition as
multiplication, ``star(x)`` or a trailing ``'`` for adjoints, ``x@i`` to place
a factor in tensor slot ``i`` and ``x ⊗ y`` or ``tens(x, y)`` for tensors.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .scalars import Scalar, ScalarError


class ParseError(ValueError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        where = f" at position {pos}" if text else ""
        super().__init__(f"{message}{where}" + (f": {text!r}" if text else ""))


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>[^\W\d]\w*)
  | (?P<op>⊗|\^|\+|-|−|\*|/|\(|\)|,|'|@)
""", re.VERBOSE)


def tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        val = m.group(kind)
        if kind != "ws":
            out.append((kind, "-" if val == "−" else val, pos))
        pos = m.end()
    out.append(("end", "", pos))
    return out


# AST nodes are tuples: ("num", Fraction) ("name", str) ("zeta", n) ("add", a, b)
# ("sub", a, b) ("neg", a) ("mul", a, b) ("div", a, b) ("pow", a, k) ("star", a)
# ("slot", a, i) ("tens", a, b)

class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, val):
        tok = self.take()
        if tok[1] != val or tok[0] == "end":
            raise ParseError(f"expected {val!r}, got {tok[1]!r}", self.text, tok[2])

    def parse(self):
        node = self.sum()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return node

    def sum(self):
        node = self.tensor()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.tensor()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def tensor(self):
        node = self.product()
        while self.peek()[1] == "⊗":
            self.take()
            node = ("tens", node, self.product())
        return node

    def _starts_atom(self, tok):
        return tok[0] in ("num", "name") or tok[1] == "("

    def product(self):
        node = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in ("*", "/"):
                self.take()
                rhs = self.unary()
                node = ("mul" if tok[1] == "*" else "div", node, rhs)
            elif self._starts_atom(tok):
                node = ("mul", node, self.postfix())
            else:
                return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            return ("neg", self.unary())
        if tok[0] == "op" and tok[1] == "+":
            self.take()
            return self.unary()
        return self.postfix()

    def _int(self):
        sign = 1
        tok = self.take()
        paren = False
        if tok[1] == "(":
            paren = True
            tok = self.take()
        if tok[1] in ("-", "+"):
            sign = -1 if tok[1] == "-" else 1
            tok = self.take()
        if tok[0] != "num":
            raise ParseError("expected an integer", self.text, tok[2])
        if paren:
            self.expect(")")
        return sign * int(tok[1])

    def postfix(self):
        node = self.atom()
        while True:
            tok = self.peek()
            if tok[1] == "^":
                self.take()
                node = ("pow", node, self._int())
            elif tok[1] == "'":
                self.take()
                node = ("star", node)
            elif tok[1] == "@":
                self.take()
                node = ("slot", node, self._int())
            else:
                return node

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return ("num", Fraction(int(tok[1])))
        if tok[1] == "(":
            node = self.sum()
            self.expect(")")
            return node
        if tok[0] == "name":
            name = tok[1]
            if self.peek()[1] == "(" and name in ("zeta", "star", "tens"):
                self.take()
                if name == "zeta":
                    n = self._int()
                    self.expect(")")
                    return ("zeta", n)
                if name == "star":
                    node = self.sum()
                    self.expect(")")
                    return ("star", node)
                a = self.sum()
                self.expect(",")
                b = self.sum()
                self.expect(")")
                return ("tens", a, b)
            return ("name", name)
        raise ParseError(f"unexpected {tok[1] or 'end of input'!r}", self.text, tok[2])


def parse_ast(text):
    return _Parser(text).parse()


def parse_scalar(text, ring):
    """Parse a scalar-grammar string into a Scalar of ``ring``."""
    if isinstance(text, (int, Fraction)):
        return ring.const(text)
    value = _eval(parse_ast(str(text)), _ScalarContext(ring), str(text))
    if not isinstance(value, Scalar):
        raise ParseError("expression is not a scalar", str(text))
    return value


class _ScalarContext:
    def __init__(self, ring):
        self.ring = ring

    def name(self, name):
        if name in self.ring.variables:
            return self.ring.var(name)
        raise ParseError(f"unknown name {name!r}")


class Tensor:
    """Unreduced element of a free tensor power: {(mono_1, ..., mono_n): Scalar}."""

    __slots__ = ("slots", "terms")

    def __init__(self, slots, terms):
        self.slots = slots
        self.terms = terms


def _eval(node, ctx, text):
    kind = node[0]
    ring = ctx.ring
    if kind == "num":
        return ring.const(node[1])
    if kind == "zeta":
        try:
            return ring.zeta(1, node[1])
        except ScalarError as exc:
            raise ParseError(str(exc), text) from None
    if kind == "name":
        return ctx.name(node[1])
    if kind == "neg":
        return _scale(_eval(node[1], ctx, text), ring.const(-1))
    if kind in ("add", "sub"):
        a = _eval(node[1], ctx, text)
        b = _eval(node[2], ctx, text)
        if kind == "sub":
            b = _scale(b, ring.const(-1))
        return _add(a, b, ctx)
    if kind == "mul":
        a = _eval(node[1], ctx, text)
        b = _eval(node[2], ctx, text)
        if isinstance(a, Scalar):
            return _scale(b, a)
        if isinstance(b, Scalar):
            return _scale(a, b)
        return ctx.mul(a, b)
    if kind == "div":
        a = _eval(node[1], ctx, text)
        b = _eval(node[2], ctx, text)
        if not isinstance(b, Scalar):
            raise ParseError("can only divide by a scalar", text)
        try:
            return _scale(a, b.inverse())
        except ZeroDivisionError as exc:
            raise ParseError(str(exc), text) from None
    if kind == "pow":
        a = _eval(node[1], ctx, text)
        k = node[2]
        if isinstance(a, Scalar):
            try:
                return a ** k
            except ZeroDivisionError as exc:
                raise ParseError(str(exc), text) from None
        if k < 0:
            raise ParseError("negative powers of algebra elements are not allowed", text)
        result = ctx.one(a.slots)
        for _ in range(k):
            result = ctx.mul(result, a)
        return result
    if kind == "star":
        a = _eval(node[1], ctx, text)
        if isinstance(a, Scalar):
            return a.conj()
        return ctx.star(a)
    if kind == "slot":
        a = _eval(node[1], ctx, text)
        return ctx.slot(a, node[2])
    if kind == "tens":
        a = _eval(node[1], ctx, text)
        b = _eval(node[2], ctx, text)
        return ctx.tens(a, b)
    raise ParseError(f"unknown node {kind}", text)


def _scale(a, s):
    if isinstance(a, Scalar):
        return a * s
    terms = {}
    for k, c in a.terms.items():
        v = c * s
        if v:
            terms[k] = v
    return Tensor(a.slots, terms)


def _add(a, b, ctx):
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return a + b
    if isinstance(a, Scalar):
        a = ctx.promote(a, b.slots)
    if isinstance(b, Scalar):
        b = ctx.promote(b, a.slots)
    if a.slots != b.slots:
        raise ParseError(f"cannot add elements with {a.slots} and {b.slots} tensor slots")
    terms = dict(a.terms)
    for k, c in b.terms.items():
        v = terms[k] + c if k in terms else c
        if v:
            terms[k] = v
        else:
            terms.pop(k, None)
    return Tensor(a.slots, terms)


class PolyContext:
    """Evaluation context resolving generator names against an alphabet.

    ``slots`` is the number of tensor slots of the target (None for a plain
    polynomial).  ``mul`` may be overridden to multiply multi-slot tensors
    with a braiding; the default is the slotwise free product.
    """

    def __init__(self, ring, alphabet, slots=None, mul=None, star=None):
        self.ring = ring
        self.alphabet = alphabet
        self.slots = slots
        self._mul = mul
        self._star = star

    def name(self, name):
        if name in self.ring.variables:
            return self.ring.var(name)
        idx = self.alphabet.index.get(name)
        if idx is None:
            raise ParseError(f"unknown name {name!r}")
        return Tensor(1, {((idx,),): self.ring.one()})

    def one(self, slots):
        return Tensor(slots, {((),) * slots: self.ring.one()})

    def promote(self, s, slots):
        return Tensor(slots, {((),) * slots: s} if s else {})

    def mul(self, a, b):
        if self._mul is not None and a.slots > 1:
            return self._mul(a, b)
        if a.slots != b.slots:
            raise ParseError(f"cannot multiply elements with {a.slots} and {b.slots} slots")
        terms = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                v = ca * cb
                if k in terms:
                    v = terms[k] + v
                if v:
                    terms[k] = v
                else:
                    terms.pop(k, None)
        return Tensor(a.slots, terms)

    def star(self, a):
        if a.slots == 1:
            star = self.alphabet.star
            terms = {}
            for (m,), c in a.terms.items():
                k = (tuple(star[s] for s in reversed(m)),)
                v = c.conj()
                terms[k] = terms[k] + v if k in terms else v
            return Tensor(1, {k: v for k, v in terms.items() if v})
        if self._star is not None:
            return self._star(a)
        raise ParseError("star of a tensor needs a slot algebra")

    def slot(self, a, i):
        if isinstance(a, Scalar):
            a = self.promote(a, 1)
        if a.slots != 1:
            raise ParseError("slot suffix applies to single-slot factors")
        n = self.slots
        if n is None or not 1 <= i <= n:
            raise ParseError(f"slot @{i} outside a {n}-slot context")
        terms = {}
        for (m,), c in a.terms.items():
            k = tuple(m if j == i - 1 else () for j in range(n))
            terms[k] = c
        return Tensor(n, terms)

    def tens(self, a, b):
        if isinstance(a, Scalar):
            a = self.promote(a, 1)
        if isinstance(b, Scalar):
            b = self.promote(b, 1)
        terms = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                terms[ka + kb] = ca * cb
        return Tensor(a.slots + b.slots, terms)


def parse_tensor(text, ring, alphabet, slots=None, mul=None, star=None):
    """Parse into a Tensor with the requested number of slots (1 = polynomial)."""
    text = str(text)
    ctx = PolyContext(ring, alphabet, slots=slots, mul=mul, star=star)
    try:
        value = _eval(parse_ast(text), ctx, text)
    except ParseError as exc:
        if exc.text:
            raise
        raise ParseError(str(exc), text) from None
    want = slots or 1
    if isinstance(value, Scalar):
        value = ctx.promote(value, want)
    if value.slots != want:
        raise ParseError(f"expected {want} tensor slots, got {value.slots}", text)
    return value
