import pytest

from braidhopf.abgroup import FgAbelianGroup
from braidhopf.ncalg import (Alphabet, InhomogeneousRelation, NCPolynomial, RewriteSystem,
                             homogeneous_components, star_poly)
from braidhopf.scalars import ScalarRing

Z = FgAbelianGroup(1)
R = ScalarRing(1, [], ["q"])


def plane(extra=()):
    A = Alphabet(Z, [("x", ((1,), (1,))), ("y", ((0,), (1,)))] + list(extra))
    return A


def system(A, texts, cap=200, length=10):
    rels = [NCPolynomial.parse(t, A, R).terms for t in texts]
    rs = RewriteSystem.from_relations(A, R, rels)
    rs.complete(cap, length)
    return rs


def test_parse_and_print():
    A = plane()
    p = NCPolynomial.parse("x*y - q y x + 2", A, R)
    assert NCPolynomial.parse(str(p), A, R) == p
    assert NCPolynomial.parse("star(x) y", A, R) == NCPolynomial.parse("x' y", A, R)


def test_star_is_antilinear_antimultiplicative():
    A = plane()
    p = NCPolynomial.parse("q x y'", A, R)
    assert star_poly(p) == NCPolynomial.parse("q y x'", A, R)
    assert star_poly(star_poly(p)) == p


def test_quantum_plane_completes():
    A = plane()
    rs = system(A, ["x y - q y x", "x y' - q y' x", "x x' - x' x", "y y' - y' y"])
    assert rs.status == "complete"
    lhs = NCPolynomial.parse("x y x", A, R)
    rhs = NCPolynomial.parse("q y x x", A, R)
    assert rs.normal_form(lhs) == rhs
    assert rs.equal_mod(lhs.terms, NCPolynomial.parse("q^2 y x x", A, R).terms) == "unequal"


def test_inhomogeneous_rejected():
    A = plane()
    with pytest.raises(InhomogeneousRelation):
        system(A, ["x - y"])


def test_cap_reported():
    # the positive braid relation has no finite basis in this order
    A = Alphabet(Z, [("a", ((0,), (0,))), ("b", ((0,), (0,)))])
    rels = [NCPolynomial.parse("a b a - b a b", A, R).terms]
    rs = RewriteSystem.from_relations(A, R, rels, star_close=False)
    rs.complete(cap_rules=30, cap_len=8)
    assert rs.status == "capped"


def test_homogeneous_components_partition():
    A = plane()
    p = NCPolynomial.parse("x y + y x + x' + 3 + y y'", A, R)
    parts = homogeneous_components(p)
    total = NCPolynomial(A, R)
    for deg, part in parts.items():
        assert part.bidegrees() == {deg}
        total = total + part
    assert total == p
