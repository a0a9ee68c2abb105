"""Noncommutative *-polynomials over bigraded generators and their rewriting.

Monomials are tuples of symbol ids.  Symbol ids are assigned so that the
monomial order is plain degree-lexicographic comparison of ``(len(m), m)``:
a larger id means a larger symbol.  Polynomials in hot loops are plain dicts
``{monomial: Scalar}``; :class:`NCPolynomial` wraps one for the public API.
"""
from __future__ import annotations

import heapq
from itertools import count



class RewriteError(Exception):
    pass


class DivergenceGuard(RewriteError):
    pass


class NonMonomialLeadingCoefficient(RewriteError):
    pass


class InhomogeneousRelation(RewriteError):
    pass


EQUAL, UNEQUAL, INCONCLUSIVE = "equal", "unequal", "inconclusive"


def star_name(name):
    return name[:-1] if name.endswith("'") else name + "'"


class Symbol:
    __slots__ = ("name", "bidegree", "ad", "starred", "star", "id")

    def __init__(self, name, bidegree, ad, starred):
        self.name = name
        self.bidegree = bidegree
        self.ad = ad
        self.starred = starred
        self.star = None
        self.id = None

    def __repr__(self):
        return f"Symbol({self.name!r}, {self.bidegree})"


class Alphabet:
    """Generators with their adjoints, bidegrees and the monomial order.

    ``generators`` is a list of ``(name, (a, b))``; each gets a starred
    partner ``name'`` of bidegree ``(-a, -b)``.  ``precedence`` lists names
    from greatest to smallest; a bare generator name stands for the
    generator followed by its adjoint.  The default precedence is the
    declaration order.
    """

    def __init__(self, group, generators, precedence=None):
        self.group = group
        syms = {}
        order = []
        for name, (a, b) in generators:
            a, b = group.element(a), group.element(b)
            if name in syms:
                raise RewriteError(f"duplicate generator {name!r}")
            s = Symbol(name, (a, b), group.sub(b, a), False)
            t = Symbol(star_name(name), (group.neg(a), group.neg(b)), group.sub(a, b), True)
            syms[s.name] = s
            syms[t.name] = t
            order.append(name)
        names = []
        listed = set(precedence or ())
        for entry in (precedence or order):
            if entry not in syms:
                raise RewriteError(f"unknown name {entry!r} in precedence")
            if entry in names:
                continue
            names.append(entry)
            partner = star_name(entry)
            if not syms[entry].starred and partner not in listed:
                names.append(partner)
        missing = [n for n in syms if n not in names]
        if missing:
            raise RewriteError(f"precedence does not mention {missing}")
        # greatest first -> largest id
        self.symbols = [syms[n] for n in reversed(names)]
        for i, s in enumerate(self.symbols):
            s.id = i
        self.index = {s.name: s.id for s in self.symbols}
        for s in self.symbols:
            s.star = self.index[star_name(s.name)]
        self.star = [s.star for s in self.symbols]
        self.bidegree = [s.bidegree for s in self.symbols]
        self.ad = [s.ad for s in self.symbols]
        self.names = [s.name for s in self.symbols]
        self.generators = [(name, syms[name].bidegree) for name in order]
        self.precedence = names
        self._bideg_cache = {}
        self._ad_cache = {}

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return (isinstance(other, Alphabet) and self.group == other.group
                and self.names == other.names and self.bidegree == other.bidegree)

    def __hash__(self):
        return hash((self.group, tuple(self.names)))

    def symbol(self, name):
        return self.symbols[self.index[name]]

    def mono_bidegree(self, m):
        hit = self._bideg_cache.get(m)
        if hit is None:
            g = self.group
            a = b = g.zero()
            for s in m:
                x, y = self.bidegree[s]
                a, b = g.add(a, x), g.add(b, y)
            hit = self._bideg_cache[m] = (a, b)
        return hit

    def mono_ad(self, m):
        hit = self._ad_cache.get(m)
        if hit is None:
            g = self.group
            a = g.zero()
            for s in m:
                a = g.add(a, self.ad[s])
            hit = self._ad_cache[m] = a
        return hit

    def mono_str(self, m):
        return " ".join(self.names[s] for s in m)

    def star_mono(self, m):
        star = self.star
        return tuple(star[s] for s in reversed(m))


def deg_key(m):
    return (len(m), m)


def _neg_key(m):
    return (-len(m), tuple(-x for x in m))


# --- raw polynomial helpers ---

def padd(p, q, scale=None):
    """p + scale*q as a new dict."""
    out = dict(p)
    for m, c in q.items():
        if scale is not None:
            c = c * scale
        if m in out:
            v = out[m] + c
            if v:
                out[m] = v
            else:
                del out[m]
        elif c:
            out[m] = c
    return out


def pmul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = m1 + m2
            c = c1 * c2
            if m in out:
                c = out[m] + c
                if c:
                    out[m] = c
                else:
                    del out[m]
            elif c:
                out[m] = c
    return out


def pscale(p, s):
    out = {}
    for m, c in p.items():
        v = c * s
        if v:
            out[m] = v
    return out


def pstar(p, alphabet):
    out = {}
    for m, c in p.items():
        k = alphabet.star_mono(m)
        v = c.conj()
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if v}


def leading(p):
    return max(p, key=deg_key)


def poly_str(p, alphabet):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=deg_key, reverse=True):
        c = p[m]
        cs = str(c)
        word = alphabet.mono_str(m)
        multi = not c.is_monomial()
        if not word:
            parts.append(f"({cs})" if multi and len(p) > 1 else cs)
        elif cs == "1":
            parts.append(word)
        elif cs == "-1":
            parts.append("-" + word)
        else:
            if multi:
                cs = f"({cs})"
            parts.append(f"{cs} {word}")
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


class NCPolynomial:
    """An element of the free *-algebra on an alphabet."""

    __slots__ = ("alphabet", "ring", "terms")

    def __init__(self, alphabet, ring, terms=None):
        self.alphabet = alphabet
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def parse(cls, text, alphabet, ring):
        from .parse import parse_tensor
        t = parse_tensor(text, ring, alphabet)
        return cls(alphabet, ring, {k[0]: c for k, c in t.terms.items()})

    @classmethod
    def scalar(cls, alphabet, ring, s):
        return cls(alphabet, ring, {(): s})

    def _wrap(self, terms):
        return NCPolynomial(self.alphabet, self.ring, terms)

    def _coerce(self, other):
        if isinstance(other, NCPolynomial):
            return other.terms
        if not hasattr(other, "ring"):
            other = self.ring.const(other)
        return {(): other} if other else {}

    def __add__(self, other):
        return self._wrap(padd(self.terms, self._coerce(other)))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(pscale(self.terms, self.ring.const(-1)))

    def __sub__(self, other):
        return self._wrap(padd(self.terms, self._coerce(other), self.ring.const(-1)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self._wrap(pmul(self.terms, self._coerce(other)))

    def __rmul__(self, other):
        return self._wrap(pmul(self._coerce(other), self.terms))

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            return self.terms == other.terms
        return self.terms == self._coerce(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def star(self):
        return star_poly(self)

    def bidegrees(self):
        return {self.alphabet.mono_bidegree(m) for m in self.terms}

    def is_homogeneous(self):
        return len(self.bidegrees()) <= 1

    def __str__(self):
        return poly_str(self.terms, self.alphabet)

    def __repr__(self):
        return f"NCPolynomial({str(self)!r})"


def star_poly(p):
    """Free *-algebra involution: reverse words, star letters, conjugate coefficients."""
    return NCPolynomial(p.alphabet, p.ring, pstar(p.terms, p.alphabet))


def homogeneous_components(p):
    """Split a polynomial by the bidegree of its monomials."""
    parts = {}
    for m, c in p.terms.items():
        parts.setdefault(p.alphabet.mono_bidegree(m), {})[m] = c
    return {d: NCPolynomial(p.alphabet, p.ring, t) for d, t in parts.items()}


class RewriteSystem:
    """Rules ``lhs -> rhs`` with monic leading monomials under deglex order."""

    def __init__(self, alphabet, ring, rules=None, status="unknown", budget=10 ** 6):
        self.alphabet = alphabet
        self.ring = ring
        self.rules = {}
        self._first = {}
        self.status = status
        self.budget = budget
        self._cache = {}
        self.relations = []
        self.cancelled = []
        for lhs, rhs in (rules or {}).items():
            self._insert(tuple(lhs), dict(rhs))

    def copy(self):
        rs = RewriteSystem(self.alphabet, self.ring, status=self.status, budget=self.budget)
        for lhs, rhs in self.rules.items():
            rs._insert(lhs, rhs)
        rs.relations = list(self.relations)
        rs.cancelled = list(self.cancelled)
        return rs

    # --- rule bookkeeping ---

    def _insert(self, lhs, rhs):
        self.rules[lhs] = rhs
        self._first.setdefault(lhs[0], set()).add(len(lhs))
        self._cache.clear()

    def _remove(self, lhs):
        del self.rules[lhs]
        lens = {len(l) for l in self.rules if l[0] == lhs[0]}
        if lens:
            self._first[lhs[0]] = lens
        else:
            del self._first[lhs[0]]
        self._cache.clear()

    def __len__(self):
        return len(self.rules)

    def _find(self, m):
        rules = self.rules
        first = self._first
        n = len(m)
        for i in range(n):
            lens = first.get(m[i])
            if lens:
                for length in lens:
                    if i + length <= n and m[i:i + length] in rules:
                        return i, i + length
        return None

    def is_reducible(self, m):
        return self._find(m) is not None

    # --- normal forms ---

    def reduce(self, p):
        """Normal form of a raw polynomial dict (deterministic, leftmost rule first)."""
        if not p:
            return {}
        rules = self.rules
        cache = self._cache
        todo = dict(p)
        heap = [(_neg_key(m), m) for m in todo]
        heapq.heapify(heap)
        out = {}
        steps = 0
        budget = self.budget
        while heap:
            _, m = heapq.heappop(heap)
            c = todo.pop(m, None)
            if c is None:
                continue
            hit = cache.get(m)
            if hit is not None:
                for t, d in hit.items():
                    v = c * d
                    if t in out:
                        v = out[t] + v
                        if v:
                            out[t] = v
                        else:
                            del out[t]
                    elif v:
                        out[t] = v
                continue
            pos = self._find(m)
            if pos is None:
                if m in out:
                    v = out[m] + c
                    if v:
                        out[m] = v
                    else:
                        del out[m]
                else:
                    out[m] = c
                continue
            steps += 1
            if steps > budget:
                raise DivergenceGuard(f"reduction exceeded {budget} steps")
            i, j = pos
            pre, post = m[:i], m[j:]
            for t, d in rules[m[i:j]].items():
                nm = pre + t + post
                v = c * d
                if nm in todo:
                    v = todo[nm] + v
                    if v:
                        todo[nm] = v
                    else:
                        del todo[nm]
                elif v:
                    todo[nm] = v
                    heapq.heappush(heap, (_neg_key(nm), nm))
        return out

    def reduce_mono(self, m):
        hit = self._cache.get(m)
        if hit is None:
            if self._find(m) is None:
                hit = {m: self.ring.one()}
            else:
                hit = self.reduce({m: self.ring.one()})
            self._cache[m] = hit
        return hit

    def normal_form(self, p):
        if isinstance(p, NCPolynomial):
            return NCPolynomial(self.alphabet, self.ring, self.reduce(p.terms))
        return self.reduce(p)

    def equal_mod(self, p, q):
        diff = padd(_terms(p), _terms(q), self.ring.const(-1))
        r = self.reduce(diff)
        if not r:
            return EQUAL
        return UNEQUAL if self.status == "complete" else INCONCLUSIVE

    def mul(self, p, q):
        return self.reduce(pmul(p, q))

    # --- building ---

    @classmethod
    def from_relations(cls, alphabet, ring, relations, star_close=True, check_homogeneous=True):
        """Interreduced rule set for the given relations (no critical pairs yet)."""
        rs = cls(alphabet, ring)
        polys = []
        for r in relations:
            r = _terms(r)
            if check_homogeneous:
                degs = {alphabet.mono_bidegree(m) for m in r}
                if len(degs) > 1:
                    raise InhomogeneousRelation(
                        f"relation {poly_str(r, alphabet)} mixes bidegrees {sorted(degs)}")
            polys.append(r)
            if star_close:
                polys.append(pstar(r, alphabet))
        rs.relations = polys
        queue = sorted(polys, key=lambda p: deg_key(leading(p)) if p else (0, ()))
        rs._absorb(queue)
        return rs

    def _add_poly(self, p, queue):
        """Turn a reduced nonzero polynomial into a rule; returns the lhs."""
        lm = leading(p)
        lc = p[lm]
        if not lc.is_monomial():
            # a common non-monomial content factor is nonzero for generic values
            # of the formal variables, so it can be cancelled
            ratios = {m: monomial_ratio(c, lc) for m, c in p.items()}
            if any(r is None for r in ratios.values()):
                raise NonMonomialLeadingCoefficient(
                    f"leading coefficient {lc} of {poly_str(p, self.alphabet)} is not invertible")
            self.cancelled.append(str(lc))
            p = ratios
            lc = p[lm]
        inv = lc.inverse()
        rhs = {m: -(c * inv) for m, c in p.items() if m != lm}
        n = len(lm)
        for lhs in [l for l in self.rules if len(l) >= n and _contains(l, lm)]:
            old = self.rules[lhs]
            self._remove(lhs)
            queue.append(padd({lhs: self.ring.one()}, old, self.ring.const(-1)))
        self._insert(lm, rhs)
        # keep right-hand sides reduced
        for lhs, r in list(self.rules.items()):
            if lhs != lm and any(_contains(t, lm) for t in r if len(t) >= n):
                self.rules[lhs] = self.reduce(r)
        self._cache.clear()
        return lm

    def _absorb(self, queue):
        while queue:
            p = self.reduce(queue.pop())
            if p:
                self._add_poly(p, queue)

    def overlaps(self, a, b):
        """Proper overlaps: suffix of a equal to a prefix of b."""
        la, lb = len(a), len(b)
        out = []
        for k in range(1, min(la, lb)):
            if a[la - k:] == b[:k]:
                out.append(k)
        return out

    def s_poly(self, a, b, k):
        ra, rb = self.rules[a], self.rules[b]
        left = pmul(ra, {b[k:]: self.ring.one()})
        right = pmul({a[:len(a) - k]: self.ring.one()}, rb)
        return padd(left, right, self.ring.const(-1))

    def critical_pairs(self, cap_len=None):
        pairs = []
        for a in self.rules:
            for b in self.rules:
                for k in self.overlaps(a, b):
                    if cap_len is None or len(a) + len(b) - k <= cap_len:
                        pairs.append((a, b, k))
        return pairs

    def is_confluent(self, cap_len=None):
        """True when every critical pair (up to cap_len) resolves."""
        for a, b, k in self.critical_pairs(cap_len):
            if self.reduce(self.s_poly(a, b, k)):
                return False
        return True

    def complete(self, cap_rules=500, cap_len=12):
        """Critical-pair completion in place; sets and returns the status."""
        counter = count()
        heap = []
        skipped = False
        ids = {}

        def push_pairs(new):
            nonlocal skipped
            for other in list(self.rules):
                cands = [(new, other), (other, new)] if other != new else [(new, new)]
                for a, b in cands:
                    for k in self.overlaps(a, b):
                        size = len(a) + len(b) - k
                        if size > cap_len:
                            skipped = True
                            continue
                        heapq.heappush(heap, (size, next(counter), a, ids[a], b, ids[b], k))

        for lhs in self.rules:
            ids[lhs] = next(counter)
        for lhs in list(self.rules):
            for other in list(self.rules):
                for k in self.overlaps(lhs, other):
                    size = len(lhs) + len(other) - k
                    if size > cap_len:
                        skipped = True
                        continue
                    heapq.heappush(heap, (size, next(counter), lhs, ids[lhs], other, ids[other], k))

        capped = False
        queue = []
        while heap or queue:
            if len(self.rules) > cap_rules:
                capped = True
                break
            if queue:
                p = queue.pop()
            else:
                _, _, a, ia, b, ib, k = heapq.heappop(heap)
                if ids.get(a) != ia or ids.get(b) != ib or a not in self.rules or b not in self.rules:
                    continue
                p = self.s_poly(a, b, k)
            p = self.reduce(p)
            if not p:
                continue
            before = set(self.rules)
            lm = self._add_poly(p, queue)
            for gone in before - set(self.rules):
                ids.pop(gone, None)
            ids[lm] = next(counter)
            push_pairs(lm)
        if capped or skipped:
            self.status = "capped"
        else:
            self.status = "complete"
        # final tidy: reduce all right-hand sides
        for lhs, r in list(self.rules.items()):
            self.rules[lhs] = self.reduce(r)
        self._cache.clear()
        return self.status

    def rules_as_polys(self):
        return [padd({l: self.ring.one()}, r, self.ring.const(-1)) for l, r in self.rules.items()]

    def __str__(self):
        lines = []
        for lhs in sorted(self.rules, key=deg_key):
            lines.append(f"{self.alphabet.mono_str(lhs)} -> {poly_str(self.rules[lhs], self.alphabet)}")
        return "\n".join(lines)


def monomial_ratio(c, d):
    """A single-term scalar r with c == d * r, or None."""
    if len(c.terms) != len(d.terms):
        return None
    ring = c.ring
    ec = max(c.terms)
    ed = max(d.terms)
    r = type(c)(ring, {ec: c.terms[ec]}, True) * type(d)(ring, {ed: d.terms[ed]}, True).inverse()
    return r if d * r == c else None


def _contains(word, sub):
    n = len(sub)
    if n > len(word):
        return False
    for i in range(len(word) - n + 1):
        if word[i:i + n] == sub:
            return True
    return False


def _terms(p):
    return p.terms if isinstance(p, NCPolynomial) else p


def normal_form(p, rs):
    return rs.normal_form(p)


def complete(rs, cap_rules=500, cap_len=12):
    out = rs.copy()
    out.complete(cap_rules, cap_len)
    return out


def equal_mod(rs, p, q):
    return rs.equal_mod(p, q)


class SlotAlgebra:
    """n-fold tensor power of a rewritten algebra, ordinary or braided.

    Elements are dicts ``{(m_1, ..., m_n): Scalar}`` with each ``m_i`` a
    normal-form monomial of the base system.  In the braided case a slot-j
    letter y moving left past a slot-i letter x (i < j) picks up
    ``beta(ad y, ad x)``.
    """

    def __init__(self, system, n, braiding=None):
        if n < 1:
            raise ValueError("need at least one slot")
        self.system = system
        self.alphabet = system.alphabet
        self.ring = system.ring
        self.n = n
        if braiding is not None and braiding.is_trivial():
            braiding = None
        self.braiding = braiding

    def one(self):
        return {((),) * self.n: self.ring.one()}

    def zero(self):
        return {}

    def embed(self, p, slot):
        """Place a polynomial (dict) in slot ``slot`` (0-based)."""
        out = {}
        empty = ((),) * self.n
        for m, c in self.system.reduce(_terms(p)).items():
            k = list(empty)
            k[slot] = m
            out[tuple(k)] = c
        return out

    def from_tensor(self, terms):
        """Normalize an unreduced element {(m_1..m_n): c}."""
        out = {}
        one = self.ring.one()
        for key, c in terms.items():
            prod = {(): c}
            for m in key:
                red = self.system.reduce_mono(m) if m else {(): one}
                prod = {k + (t,): a * b for k, a in prod.items() for t, b in red.items()}
            for k, v in prod.items():
                if k in out:
                    v = out[k] + v
                    if v:
                        out[k] = v
                    else:
                        del out[k]
                elif v:
                    out[k] = v
        return out

    def braid_factor(self, x, y):
        """Scalar picked up when the letters of y move left past those of x."""
        beta = self.braiding
        if beta is None:
            return None
        ad = self.alphabet.mono_ad
        g = self.alphabet.group
        zero = g.zero()
        f = None
        for i in range(self.n):
            if not y[i]:
                continue
            ay = ad(y[i])
            if ay == zero:
                continue
            for j in range(i + 1, self.n):
                if x[j]:
                    ax = ad(x[j])
                    if ax != zero:
                        v = beta.eval(ax, ay)
                        f = v if f is None else f * v
        return f

    def mul(self, x, y):
        out = {}
        one = self.ring.one()
        reduce_mono = self.system.reduce_mono
        for kx, cx in x.items():
            for ky, cy in y.items():
                c = cx * cy
                f = self.braid_factor(kx, ky)
                if f is not None:
                    c = c * f
                prod = {(): c}
                for a, b in zip(kx, ky):
                    m = a + b
                    red = reduce_mono(m) if m else {(): one}
                    if len(red) == 1 and m in red:
                        prod = {k + (m,): v for k, v in prod.items()}
                    else:
                        prod = {k + (t,): v * w for k, v in prod.items() for t, w in red.items()}
                for k, v in prod.items():
                    if k in out:
                        v = out[k] + v
                        if v:
                            out[k] = v
                        else:
                            del out[k]
                    elif v:
                        out[k] = v
        return out

    def add(self, x, y, scale=None):
        return padd(x, y, scale)

    def scale(self, x, s):
        return pscale(x, s)

    def star(self, x):
        """(x_1 (x) ... (x) x_n)* = x_n*@n ... x_1*@1, multiplied out in this algebra."""
        out = {}
        for key, c in x.items():
            acc = {((),) * self.n: c.conj()}
            for i in reversed(range(self.n)):
                if key[i]:
                    acc = self.mul(acc, self.embed({self.alphabet.star_mono(key[i]): self.ring.one()}, i))
            out = padd(out, acc)
        return out

    def cross_rules(self):
        """The generated cross-commutation rules as (slot_j letter, slot_i letter, scalar)."""
        rules = []
        names = self.alphabet.names
        for i in range(self.n):
            for j in range(i + 1, self.n):
                for y in range(len(names)):
                    for x in range(len(names)):
                        if self.braiding is None:
                            s = self.ring.one()
                        else:
                            s = self.braiding.eval(self.alphabet.ad[y], self.alphabet.ad[x])
                        rules.append(((j, names[y]), (i, names[x]), s))
        return rules

    def to_str(self, x):
        if not x:
            return "0"
        parts = []
        for key in sorted(x, key=lambda k: tuple(deg_key(m) for m in k), reverse=True):
            c = x[key]
            word = " ⊗ ".join(self.alphabet.mono_str(m) or "1" for m in key)
            cs = str(c)
            if cs == "1":
                parts.append(word)
            elif cs == "-1":
                parts.append("-" + word)
            else:
                parts.append(f"({cs}) {word}" if not c.is_monomial() else f"{cs} {word}")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def build_slot_algebra(base, n, braiding=None):
    system = getattr(base, "system", base)
    return SlotAlgebra(system, n, braiding)
