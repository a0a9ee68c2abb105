"""Finitely generated abelian groups Z^r + Z/n_1 + ..., bicharacters and cocycles.

Group elements are plain tuples of integers (free coordinates first, then
torsion coordinates reduced into [0, n_i)).  The group is written additively.
"""
from __future__ import annotations

import random
from itertools import product as iproduct

from .scalars import ScalarRing


class GroupError(Exception):
    pass


class FgAbelianGroup:
    __slots__ = ("rank", "torsion", "dim", "_hash")

    def __init__(self, rank=0, torsion=()):
        torsion = tuple(sorted(int(n) for n in torsion))
        if rank < 0 or any(n < 2 for n in torsion):
            raise GroupError("rank must be >= 0 and torsion orders >= 2")
        self.rank = int(rank)
        self.torsion = torsion
        self.dim = self.rank + len(torsion)
        self._hash = hash((self.rank, torsion))

    def __eq__(self, other):
        return isinstance(other, FgAbelianGroup) and (self.rank, self.torsion) == (other.rank, other.torsion)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FgAbelianGroup(rank={self.rank}, torsion={list(self.torsion)})"

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data.get("rank", 0)), data.get("torsion", ()))

    def is_finite(self):
        return self.rank == 0

    def element(self, vec):
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.dim:
            raise GroupError(f"expected {self.dim} coordinates, got {len(vec)}")
        r = self.rank
        return vec[:r] + tuple(x % n for x, n in zip(vec[r:], self.torsion))

    def zero(self):
        return (0,) * self.dim

    def add(self, a, b):
        r = self.rank
        if not self.torsion:
            return tuple(x + y for x, y in zip(a, b))
        return (tuple(x + y for x, y in zip(a[:r], b[:r]))
                + tuple((x + y) % n for x, y, n in zip(a[r:], b[r:], self.torsion)))

    def neg(self, a):
        r = self.rank
        return tuple(-x for x in a[:r]) + tuple((-x) % n for x, n in zip(a[r:], self.torsion))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, a, k):
        return self.element(tuple(k * x for x in a))

    def sum(self, elements):
        total = self.zero()
        for e in elements:
            total = self.add(total, e)
        return total

    def basis(self):
        return [tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)]

    def order(self, i):
        """Order of the i-th basis element (0 for infinite)."""
        return 0 if i < self.rank else self.torsion[i - self.rank]

    def elements(self):
        if not self.is_finite():
            raise GroupError("infinite group")
        return [tuple(v) for v in iproduct(*(range(n) for n in self.torsion))]

    def random_element(self, rng=random, bound=3):
        return self.element([rng.randint(-bound, bound) for _ in range(self.dim)])

    def relation_vectors(self):
        r = self.rank
        return [tuple(n if j == r + i else 0 for j in range(self.dim)) for i, n in enumerate(self.torsion)]


def pair_group(group):
    """The product group G x G with embedding and splitting maps.

    Returns ``(GG, join, split)`` where ``join(a, b)`` embeds a pair and
    ``split(x)`` recovers it.
    """
    r, t = group.rank, len(group.torsion)
    gg = FgAbelianGroup(2 * r, group.torsion + group.torsion)
    # sorted torsion of GG: position of each of the 2t torsion coordinates
    labels = sorted(range(2 * t), key=lambda k: ((group.torsion + group.torsion)[k], k))
    pos = {k: 2 * r + i for i, k in enumerate(labels)}

    def join(a, b):
        out = [0] * gg.dim
        out[:r] = a[:r]
        out[r:2 * r] = b[:r]
        for k in range(t):
            out[pos[k]] = a[r + k]
            out[pos[t + k]] = b[r + k]
        return tuple(out)

    def split(x):
        a = tuple(x[:r]) + tuple(x[pos[k]] for k in range(t))
        b = tuple(x[r:2 * r]) + tuple(x[pos[t + k]] for k in range(t))
        return a, b

    return gg, join, split


# --- integer normal forms ---

def smith_normal_form(mat):
    """Smith form of an integer matrix: returns (D, U, V) with U @ mat @ V = D.

    ``mat`` is a list of rows.  U and V are unimodular; D is diagonal with
    non-negative entries, each dividing the next.
    """
    n = len(mat)
    m = len(mat[0]) if n else 0
    a = [list(row) for row in mat]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(n, m):
        nz = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, m) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, m):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # divisibility of the remaining block
                bad = [(i, j) for i in range(t + 1, n) for j in range(t + 1, m) if a[i][j] % a[t][t]]
                if not bad:
                    break
                add_row(bad[0][0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v


def hermite_rows(vectors, dim):
    """Row echelon basis (Hermite-style) of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors if any(v)]
    out = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col]]
        zero = [r for r in rows if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            rest = []
            for r in nz[1:]:
                k = r[col] // p[col]
                r = [x - k * y for x, y in zip(r, p)]
                (rest if r[col] else zero).append(r)
            nz = [p] + rest
        if nz:
            p = nz[0]
            if p[col] < 0:
                p = [-x for x in p]
            out.append(p)
        rows = [r for r in zero if any(r)]
        col += 1
    return out


def _int_kernel(columns, dim):
    """Integer basis of {x : sum x_j columns[j] = 0}."""
    k = len(columns)
    if k == 0:
        return []
    mat = [[columns[j][i] for j in range(k)] for i in range(dim)] or [[0] * k]
    d, _, v = smith_normal_form(mat)
    rank = sum(1 for i in range(min(len(d), k)) if d[i][i])
    return [[v[i][j] for i in range(k)] for j in range(rank, k)]


class SubgroupSpec:
    """A subgroup S of a finitely generated abelian group, given by generators.

    Used as the annihilator of a closed subgroup T0 of the dual torus.
    """

    def __init__(self, group, generators):
        self.group = group
        self.generators = [group.element(g) for g in generators]
        self._rows = hermite_rows(self.generators + group.relation_vectors(), group.dim)

    @classmethod
    def whole(cls, group):
        return cls(group, group.basis())

    @classmethod
    def trivial(cls, group):
        return cls(group, [])

    def to_json(self):
        return {"generators": [list(g) for g in self.generators]}

    def member(self, a):
        vec = list(a)
        for row in self._rows:
            p = next(i for i, x in enumerate(row) if x)
            if vec[p] % row[p]:
                return False
            k = vec[p] // row[p]
            vec = [x - k * y for x, y in zip(vec, row)]
        return not any(vec)

    def __contains__(self, a):
        return self.member(a)

    def structure(self):
        """Independent generators of S with their orders (0 = infinite order).

        Returns a list of (element, order) pairs with S the direct sum of the
        cyclic groups they generate.
        """
        g = self.group
        gens = self.generators
        k = len(gens)
        if k == 0:
            return []
        cols = [list(x) for x in gens] + [list(x) for x in g.relation_vectors()]
        kernel = _int_kernel(cols, g.dim)
        rels = [row[:k] for row in kernel if any(row[:k])]
        if rels:
            mat = [[rels[j][i] for j in range(len(rels))] for i in range(k)]
            d, u, _ = smith_normal_form(mat)
            diag = [d[i][i] if i < len(d[0]) else 0 for i in range(k)]
        else:
            u = [[int(i == j) for j in range(k)] for i in range(k)]
            diag = [0] * k
        uinv = _unimodular_inverse(u)
        out = []
        for i in range(k):
            if diag[i] == 1:
                continue
            coeffs = [uinv[j][i] for j in range(k)]
            elem = g.sum(g.scale(gens[j], c) for j, c in enumerate(coeffs) if c)
            out.append((elem, diag[i]))
        return out

    def express(self, a):
        """Coordinates of ``a`` in terms of ``structure()``; None if a is not in S."""
        if not self.member(a):
            return None
        basis = self.structure()
        if not basis:
            return []
        # brute force over the finite part, solve over the free part
        g = self.group
        cols = [list(b) for b, _ in basis] + [list(x) for x in g.relation_vectors()]
        n = len(basis)
        target = list(a)
        # solve sum x_j cols[j] = target via Smith form
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(g.dim)]
        d, u, v = smith_normal_form(mat)
        ut = [sum(u[i][j] * target[j] for j in range(g.dim)) for i in range(g.dim)]
        y = [0] * len(cols)
        for i in range(min(g.dim, len(cols))):
            if d[i][i]:
                y[i] = ut[i] // d[i][i]
        x = [sum(v[i][j] * y[j] for j in range(len(cols))) for i in range(len(cols))]
        coords = x[:n]
        return [c % o if o else c for c, (_, o) in zip(coords, basis)]


def _unimodular_inverse(u):
    from fractions import Fraction
    n = len(u)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(u)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [[int(x) for x in row[n:]] for row in m]


class Bicharacter:
    """A bicharacter on a finitely generated abelian group.

    ``matrix[i][j]`` is the value on the i-th and j-th basis elements; values
    on arbitrary elements are obtained bimultiplicatively.
    """

    def __init__(self, group, ring, matrix):
        self.group = group
        self.ring = ring
        self.matrix = [[ring.parse(x) if isinstance(x, str) else x for x in row] for row in matrix]
        if len(self.matrix) != group.dim or any(len(row) != group.dim for row in self.matrix):
            raise GroupError("bicharacter matrix has the wrong size")
        self._cache = {}

    @classmethod
    def trivial(cls, group, ring=None):
        ring = ring or ScalarRing()
        return cls(group, ring, [[ring.one()] * group.dim for _ in range(group.dim)])

    @classmethod
    def from_json(cls, data, ring=None):
        group = FgAbelianGroup.from_json(data["group"])
        if ring is None:
            ring = ScalarRing.from_json(data.get("scalars", {}))
        return cls(group, ring, data["matrix"])

    def to_json(self):
        return {"group": self.group.to_json(), "scalars": self.ring.to_json(),
                "matrix": [[str(x) for x in row] for row in self.matrix]}

    def lift(self, ring):
        if ring == self.ring:
            return self
        return Bicharacter(self.group, ring, [[x.lift(ring) for x in row] for row in self.matrix])

    def is_trivial(self):
        return all(x.is_one() for row in self.matrix for x in row)

    def __call__(self, a, b):
        return self.eval(a, b)

    def eval(self, a, b):
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if len(a) != self.group.dim or len(b) != self.group.dim:
            raise GroupError("element does not belong to the bicharacter's group")
        val = self.ring.one()
        for i, x in enumerate(a):
            if x:
                row = self.matrix[i]
                for j, y in enumerate(b):
                    if y:
                        val = val * row[j] ** (x * y)
        self._cache[key] = val
        return val

    def validate(self):
        """Check the entries are unitary monomials compatible with the torsion."""
        g = self.group
        for i, row in enumerate(self.matrix):
            for j, x in enumerate(row):
                if not x.is_unitary_monomial():
                    return {"status": "fail", "entry": [i, j], "reason": f"{x} is not a unitary monomial"}
                for k, n in ((i, g.order(i)), (j, g.order(j))):
                    if n and not (x ** n).is_one():
                        return {"status": "fail", "entry": [i, j],
                                "reason": f"({x})^{n} != 1 for the generator of order {n}"}
        return {"status": "pass"}

    def restrict(self, elements):
        """Values on a list of elements, as a matrix (used for i*beta on a subgroup)."""
        return [[self.eval(a, b) for b in elements] for a in elements]


class Character:
    """A character x -> value on a group, given as a function."""

    def __init__(self, group, fn):
        self.group = group
        self._fn = fn

    def __call__(self, x):
        return self._fn(x)


def transpose_character(beta, w):
    """The character t_w with t_w(x) = beta(x, w)."""
    w = beta.group.element(w)
    return Character(beta.group, lambda x: beta.eval(x, w))


class TwistData:
    """A unitary 2-cocycle on the pair group (G x G) given by a formula.

    ``fn(p, q)`` takes two pairs ``p = (a, b)`` and ``q = (c, d)`` of group
    elements and returns a unitary monomial Scalar.
    """

    def __init__(self, group, ring, fn, name="J"):
        self.group = group
        self.ring = ring
        self._fn = fn
        self.name = name
        self._cache = {}

    def __call__(self, p, q):
        key = (p, q)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._fn(p, q)
        return hit

    def inverse(self):
        return TwistData(self.group, self.ring, lambda p, q: self(p, q).inverse(), name=self.name + "^-1")

    def u(self, p):
        """Value of u on the group-like element of degree p: J(p, p^-1)."""
        g = self.group
        return self(p, (g.neg(p[0]), g.neg(p[1])))

    def _add(self, p, q):
        g = self.group
        return (g.add(p[0], q[0]), g.add(p[1], q[1]))

    def check_cocycle(self, samples=200, rng=None, bound=3):
        """Cocycle identity J(x,y)J(x+y,z) = J(y,z)J(x,y+z) on random triples."""
        rng = rng or random.Random(0)
        g = self.group
        for _ in range(samples):
            x, y, z = [(g.random_element(rng, bound), g.random_element(rng, bound)) for _ in range(3)]
            lhs = self(x, y) * self(self._add(x, y), z)
            rhs = self(y, z) * self(x, self._add(y, z))
            if lhs != rhs:
                return False, (x, y, z)
        return True, None


def cocycles_from_bichar(beta):
    """The cocycles J1((a,b),(c,d)) = conj beta(b,c) and J2 = conj beta(b, c-d)."""
    g = beta.group
    j1 = TwistData(g, beta.ring, lambda p, q: beta.eval(p[1], q[0]).conj(), name="J1")
    j2 = TwistData(g, beta.ring, lambda p, q: beta.eval(p[1], g.sub(q[0], q[1])).conj(), name="J2")
    return j1, j2


class GroupCocycle:
    """A scalar 2-cocycle on a group given by a formula fn(a, b)."""

    def __init__(self, group, ring, fn):
        self.group = group
        self.ring = ring
        self._fn = fn
        self._cache = {}

    def __call__(self, a, b):
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._fn(a, b)
        return hit

    def check(self, samples=200, rng=None, bound=3):
        rng = rng or random.Random(0)
        g = self.group
        for _ in range(samples):
            x, y, z = (g.random_element(rng, bound) for _ in range(3))
            if self(x, y) * self(g.add(x, y), z) != self(y, z) * self(x, g.add(y, z)):
                return False, (x, y, z)
        return True, None
