"""Exact scalars: cyclotomic rationals times Laurent monomials in formal variables.

A scalar lives in Q(zeta_N)[u^{+-1}, ..., p^{+-1}, ...] where the ``u`` are
formal unitary variables (conjugation inverts them) and the ``p`` are formal
positive variables (conjugation fixes them).  Cyclotomic coefficients are kept
in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class ScalarError(Exception):
    pass


class RingMismatch(ScalarError):
    pass


class NotInvertible(ScalarError, ZeroDivisionError):
    pass


# --- integer polynomial helpers (coefficient lists, constant term first) ---

def _pdivmod(num, den):
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] // den[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        while num and num[-1] == 0:
            num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _pdivmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class _Cyclo:
    """Arithmetic tables for Q(zeta_N) in the power basis."""

    def __init__(self, n):
        self.n = n
        phi = cyclotomic_polynomial(n)
        self.deg = d = len(phi) - 1
        # zeta^k for 0 <= k < max(n, 2d) reduced to the power basis
        powers = []
        vec = [0] * d
        vec[0] = 1
        for _ in range(max(n, 2 * d)):
            powers.append(tuple(vec))
            # multiply by zeta
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(d):
                    vec[i] -= top * phi[i]
        self.powers = powers
        self.zero = tuple(Fraction(0) for _ in range(d))
        self.one = tuple(Fraction(int(i == 0)) for i in range(d))

    def power(self, k):
        return tuple(Fraction(c) for c in self.powers[k % self.n])

    def mul(self, a, b):
        d = self.deg
        if d == 1:
            return (a[0] * b[0],)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                for i, v in enumerate(self.powers[k]):
                    if v:
                        out[i] += c * v
        return tuple(Fraction(x) for x in out)

    def conj(self, a):
        if self.deg == 1:
            return a
        out = [Fraction(0)] * self.deg
        for k, c in enumerate(a):
            if c:
                for i, v in enumerate(self.powers[(-k) % self.n]):
                    if v:
                        out[i] += c * v
        return tuple(out)

    def inverse(self, a):
        if not any(a):
            raise NotInvertible("zero has no inverse")
        d = self.deg
        if d == 1:
            return (1 / a[0],)
        # solve a * x = 1 with the multiplication matrix of a
        cols = []
        for j in range(d):
            basis = [Fraction(0)] * d
            basis[j] = Fraction(1)
            cols.append(self.mul(a, tuple(basis)))
        m = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if m[r][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            inv = 1 / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for r in range(d):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return tuple(m[i][d] for i in range(d))


@lru_cache(maxsize=None)
def _cyclo(n):
    return _Cyclo(n)


class ScalarRing:
    """Ring spec: cyclotomic order and the names of the formal variables."""

    __slots__ = ("order", "unitary", "positive", "variables", "_index", "_cy", "_hash")

    def __init__(self, order=1, unitary=(), positive=()):
        if order < 1:
            raise ScalarError("cyclotomic order must be positive")
        unitary, positive = tuple(unitary), tuple(positive)
        names = unitary + positive
        if len(set(names)) != len(names):
            raise ScalarError(f"variable names must be distinct: {names}")
        for name in names:
            if not name.isidentifier() or name in ("zeta", "star", "tens"):
                raise ScalarError(f"bad variable name {name!r}")
        self.order = order
        self.unitary = unitary
        self.positive = positive
        self.variables = names
        self._index = {v: i for i, v in enumerate(names)}
        self._cy = _cyclo(order)
        self._hash = hash((order, unitary, positive))

    def __eq__(self, other):
        return (isinstance(other, ScalarRing) and self.order == other.order
                and self.unitary == other.unitary and self.positive == other.positive)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ScalarRing(order={self.order}, unitary={self.unitary}, positive={self.positive})"

    def to_json(self):
        return {"cyclotomic": self.order, "unitary": list(self.unitary),
                "positive": list(self.positive)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data.get("cyclotomic", 1)), data.get("unitary", ()), data.get("positive", ()))

    def is_unitary_var(self, name):
        return name in self.unitary

    # constructors

    def zero(self):
        return Scalar(self, {})

    def one(self):
        return self.const(1)

    def const(self, value):
        value = Fraction(value)
        if value == 0:
            return self.zero()
        coeff = (value,) + (Fraction(0),) * (self._cy.deg - 1)
        return Scalar(self, {self._unit_exp(): coeff}, _trusted=True)

    def zeta(self, k=1, n=None):
        """zeta_n^k, with n dividing the cyclotomic order (default n = order)."""
        n = self.order if n is None else n
        if self.order % n:
            raise RingMismatch(f"zeta({n}) is not in Q(zeta_{self.order})")
        k = (k * (self.order // n)) % self.order
        return Scalar(self, {self._unit_exp(): self._cy.power(k)}, _trusted=True)

    def var(self, name, exp=1):
        if name not in self._index:
            raise ScalarError(f"unknown variable {name!r}")
        e = [0] * len(self.variables)
        e[self._index[name]] = exp
        return Scalar(self, {tuple(e): self._cy.one}, _trusted=True)

    def _unit_exp(self):
        return (0,) * len(self.variables)

    # ring changes

    def join(self, other):
        """Smallest ring containing both (lcm of orders, union of variables)."""
        if self == other:
            return self
        for v in other.unitary:
            if v in self.positive:
                raise RingMismatch(f"variable {v} is unitary in one ring and positive in the other")
        for v in other.positive:
            if v in self.unitary:
                raise RingMismatch(f"variable {v} is unitary in one ring and positive in the other")
        order = self.order * other.order // gcd(self.order, other.order)
        unitary = self.unitary + tuple(v for v in other.unitary if v not in self.unitary)
        positive = self.positive + tuple(v for v in other.positive if v not in self.positive)
        return ScalarRing(order, unitary, positive)

    def extend(self, unitary=(), positive=(), order=1):
        return self.join(ScalarRing(order, unitary, positive))

    def contains(self, other):
        return (self.order % other.order == 0
                and all(v in self.unitary for v in other.unitary)
                and all(v in self.positive for v in other.positive))

    def parse(self, text):
        from .parse import parse_scalar
        return parse_scalar(text, self)


class Scalar:
    """Immutable element of a ScalarRing.

    ``terms`` maps exponent vectors (one integer per ring variable) to
    cyclotomic coefficient vectors.  Zero coefficients are never stored.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms, _trusted=False):
        self.ring = ring
        if not _trusted:
            terms = {tuple(e): tuple(Fraction(x) for x in c) for e, c in terms.items() if any(c)}
        self.terms = terms
        self._hash = None

    # --- basic predicates ---

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_one(self):
        if len(self.terms) != 1:
            return False
        (e, c), = self.terms.items()
        return not any(e) and c == self.ring._cy.one

    def is_unitary_monomial(self):
        if len(self.terms) != 1:
            return False
        return (self * self.conj()).is_one()

    def _check(self, other):
        if not isinstance(other, Scalar):
            other = self.ring.const(other)
        elif other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    # --- arithmetic ---

    def __add__(self, other):
        other = self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = tuple(x + y for x, y in zip(out[e], c))
                if any(s):
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return Scalar(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, {e: tuple(-x for x in c) for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return self.ring.zero()
                f = Fraction(other)
                return Scalar(self.ring, {e: tuple(x * f for x in c) for e, c in self.terms.items()},
                              _trusted=True)
            return NotImplemented
        other = self._check(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        cy = self.ring._cy
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2)) if e1 else e1
                c = cy.mul(c1, c2)
                if e in out:
                    c = tuple(x + y for x, y in zip(out[e], c))
                if any(c):
                    out[e] = c
                elif e in out:
                    del out[e]
        return Scalar(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def inverse(self):
        if len(self.terms) != 1:
            raise NotInvertible(f"only single-term scalars are invertible, got {self}")
        (e, c), = self.terms.items()
        inv = self.ring._cy.inverse(c)
        return Scalar(self.ring, {tuple(-x for x in e): inv}, _trusted=True)

    def conj(self):
        ring = self.ring
        nu = len(ring.unitary)
        cy = ring._cy
        out = {}
        for e, c in self.terms.items():
            ne = tuple(-x for x in e[:nu]) + e[nu:]
            out[ne] = cy.conj(c)
        return Scalar(ring, out, _trusted=True)

    # --- comparison / hashing ---

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # --- conversions ---

    def lift(self, ring):
        """Embed into a ring containing this one."""
        if ring == self.ring:
            return self
        if not ring.contains(self.ring):
            raise RingMismatch(f"cannot embed {self.ring} into {ring}")
        step = ring.order // self.ring.order
        idx = [ring._index[v] for v in self.ring.variables]
        nv = len(ring.variables)
        cy = ring._cy
        out = ring.zero()
        for e, c in self.terms.items():
            ne = [0] * nv
            for i, x in zip(idx, e):
                ne[i] = x
            ne = tuple(ne)
            val = cy.zero
            for k, x in enumerate(c):
                if x:
                    val = tuple(a + x * b for a, b in zip(val, cy.power(k * step)))
            out = out + Scalar(ring, {ne: val} if any(val) else {}, _trusted=True)
        return out

    def rational(self):
        """The value as a Fraction when the scalar is a plain rational, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        if any(e) or any(c[1:]):
            return None
        return c[0]

    def evaluate(self, values):
        """Complex value given numeric values for the formal variables."""
        import cmath
        z = cmath.exp(2j * cmath.pi / self.ring.order)
        total = 0j
        for e, c in self.terms.items():
            term = sum(complex(float(x)) * z ** k for k, x in enumerate(c))
            for name, x in zip(self.ring.variables, e):
                if x:
                    term *= complex(values[name]) ** x
            total += term
        return total

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                name if x == 1 else f"{name}^{x}"
                for name, x in zip(ring.variables, e) if x)
            coeff = _cyclo_str(c, ring.order)
            if not mono:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(mono)
            elif coeff == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{coeff}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _cyclo_str(c, order):
    pieces = []
    for k, x in enumerate(c):
        if not x:
            continue
        if k == 0:
            pieces.append(str(x))
        else:
            z = f"zeta({order})" if k == 1 else f"zeta({order})^{k}"
            if x == 1:
                pieces.append(z)
            elif x == -1:
                pieces.append("-" + z)
            else:
                pieces.append(f"{x}*{z}")
    if len(pieces) == 1:
        return pieces[0]
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return f"({out})"
