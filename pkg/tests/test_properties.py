"""Seed-fixed randomized suites, 1000 samples each."""
import random

import pytest

from braidhopf.abgroup import Bicharacter, FgAbelianGroup
from braidhopf.catalog import beta_lambda, suq2_data
from braidhopf.constructions import transmute
from braidhopf.hopf import from_json
from braidhopf.ncalg import NCPolynomial, homogeneous_components, padd
from braidhopf.scalars import ScalarRing

N = 1000
COEFFS = ["1", "-1", "2", "q", "q^-1", "1/2", "3 q^2", "-q^2"]


def make_pair():
    H = from_json(suq2_data())
    beta = beta_lambda()
    return H, beta, transmute(H, beta)


@pytest.fixture(scope="module")
def pair():
    return make_pair()


def rand_mono(rng, alphabet, maxlen=4):
    return tuple(rng.randrange(len(alphabet)) for _ in range(rng.randint(0, maxlen)))


def rand_poly(rng, Q, terms=3):
    p = {}
    for _ in range(rng.randint(1, terms)):
        p = padd(p, {rand_mono(rng, Q.alphabet): Q.ring.parse(rng.choice(COEFFS))})
    return p


def rand_homogeneous(rng, Q):
    while True:
        p = rand_poly(rng, Q, 6)
        if p:
            comps = homogeneous_components(NCPolynomial(Q.alphabet, Q.ring, p))
            return rng.choice(list(comps.values())).terms


def bideg(Q, p):
    degs = {Q.alphabet.mono_bidegree(m) for m in p}
    assert len(degs) <= 1
    return next(iter(degs), None)


def test_star_involutive(pair):
    _, _, Q = pair
    rng = random.Random(1)
    for _ in range(N):
        x = Q.reduce(rand_homogeneous(rng, Q))
        assert Q.star(Q.star(x)) == x


def test_star_antimultiplicative(pair):
    _, _, Q = pair
    rng = random.Random(2)
    for _ in range(N):
        x, y = rand_homogeneous(rng, Q), rand_homogeneous(rng, Q)
        assert Q.star(Q.mul(x, y)) == Q.mul(Q.star(y), Q.star(x))


def test_star_matches_parent_formula(pair):
    # x^{*new} = beta(b - a, -a) x^{*old} for x of bidegree (a, b)
    H, beta, Q = pair
    g = H.group
    rng = random.Random(3)
    for _ in range(N):
        x = rand_homogeneous(rng, H)
        a, b = bideg(H, x)
        lhs = Q.star(Q.from_parent(x))
        rhs = Q.reduce(Q.from_parent({m: c * beta.eval(g.sub(b, a), g.neg(a)).lift(Q.ring)
                                      for m, c in H.star(x).items()}))
        assert lhs == rhs


def test_product_matches_parent_formula(pair):
    # x . y = beta(b - a, -c) xy for x of bidegree (a, b), y of (c, d)
    H, beta, Q = pair
    g = H.group
    rng = random.Random(4)
    for _ in range(N):
        x, y = rand_homogeneous(rng, H), rand_homogeneous(rng, H)
        (a, b), (c, _) = bideg(H, x), bideg(H, y)
        lhs = Q.mul(Q.from_parent(x), Q.from_parent(y))
        f = beta.eval(g.sub(b, a), g.neg(c)).lift(Q.ring)
        rhs = Q.reduce(Q.from_parent({m: v * f for m, v in H.mul(x, y).items()}))
        assert lhs == rhs


def make_torsion_bichar():
    G = FgAbelianGroup(2, [3])
    R = ScalarRing(3, unitary=["s"])
    beta = Bicharacter(G, R, [["s", "s^2", "zeta(3)"], ["s^-1", "1", "zeta(3)^2"],
                              ["zeta(3)", "1", "zeta(3)"]])
    assert beta.validate()["status"] == "pass"
    return G, beta


@pytest.fixture(scope="module")
def torsion_bichar():
    return make_torsion_bichar()


def test_bichar_bimultiplicative(torsion_bichar):
    G, beta = torsion_bichar
    rng = random.Random(5)
    for _ in range(N):
        a, b, c = (G.random_element(rng, 4) for _ in range(3))
        assert beta.eval(G.add(a, b), c) == beta.eval(a, c) * beta.eval(b, c)
        assert beta.eval(a, G.add(b, c)) == beta.eval(a, b) * beta.eval(a, c)


def test_bichar_unitary(torsion_bichar):
    G, beta = torsion_bichar
    rng = random.Random(6)
    for _ in range(N):
        a, b = G.random_element(rng, 4), G.random_element(rng, 4)
        v = beta.eval(a, b)
        assert v.conj() * v == beta.ring.one()
        assert v.conj() == beta.eval(G.neg(a), b)


def test_normal_form_idempotent(pair):
    H, _, Q = pair
    rng = random.Random(7)
    for _ in range(N):
        P = rng.choice((H, Q))
        r = P.reduce(rand_poly(rng, P, 5))
        assert P.reduce(r) == r
        assert all(not P.system.is_reducible(m) for m in r)


def test_reduction_preserves_bidegree(pair):
    H, _, Q = pair
    rng = random.Random(8)
    for _ in range(N):
        P = rng.choice((H, Q))
        x = rand_homogeneous(rng, P)
        d = bideg(P, x)
        r = P.reduce(x)
        assert bideg(P, r) in (d, None)


def test_product_adds_bidegrees(pair):
    H, _, Q = pair
    g = H.group
    rng = random.Random(9)
    for _ in range(N):
        P = rng.choice((H, Q))
        x, y = rand_homogeneous(rng, P), rand_homogeneous(rng, P)
        (a, b), (c, d) = bideg(P, x), bideg(P, y)
        assert bideg(P, P.mul(x, y)) in ((g.add(a, c), g.add(b, d)), None)


def test_homogeneous_components_partition(pair):
    _, _, Q = pair
    rng = random.Random(10)
    for _ in range(N):
        p = NCPolynomial(Q.alphabet, Q.ring, rand_poly(rng, Q, 8))
        comps = homogeneous_components(p)
        total = {}
        seen = set()
        for d, c in comps.items():
            assert c.terms and all(Q.alphabet.mono_bidegree(m) == d for m in c.terms)
            assert not seen & set(c.terms)
            seen |= set(c.terms)
            total = padd(total, c.terms)
        assert total == p.terms
