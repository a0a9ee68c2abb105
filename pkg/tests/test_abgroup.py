import random

import pytest

from braidhopf.abgroup import (Bicharacter, FgAbelianGroup, GroupError, SubgroupSpec,
                               cocycles_from_bichar, pair_group)
from braidhopf.scalars import ScalarRing


def test_torsion_reduction():
    G = FgAbelianGroup(1, (4,))
    assert G.element([3, 6]) == (3, 2)
    assert G.add((1, 3), (2, 3)) == (3, 2)
    assert G.neg((1, 1)) == (-1, 3)
    with pytest.raises(GroupError):
        G.element([1])


def test_subgroup_membership_and_structure():
    Z = FgAbelianGroup(1)
    S = SubgroupSpec(Z, [[2]])
    assert S.member((4,)) and not S.member((3,))
    assert S.structure() == [((2,), 0)]
    G = FgAbelianGroup(0, (6,))
    H = SubgroupSpec(G, [[2]])
    assert [o for _, o in H.structure()] == [3]
    assert SubgroupSpec.whole(G).member((5,))
    assert not SubgroupSpec.trivial(G).member((1,))


def test_pair_group_split_join():
    G = FgAbelianGroup(1, (3,))
    GG, join, split = pair_group(G)
    a, b = G.element([2, 1]), G.element([-1, 2])
    assert split(join(a, b)) == (a, b)
    assert GG.dim == 2 * G.dim


def test_bicharacter_values():
    R = ScalarRing(4, ["lam"])
    G = FgAbelianGroup(1, (4,))
    beta = Bicharacter(G, R, [["lam", "1"], ["zeta(4)", "zeta(4)^2"]])
    assert beta.eval((2, 1), (1, 3)) == R.parse("lam^2 zeta(4)^1 zeta(4)^6")
    assert beta.eval((0, 4), (1, 1)) == R.one()


def test_bicharacter_from_json_round_trip():
    R = ScalarRing(1, ["lam"])
    beta = Bicharacter(FgAbelianGroup(1), R, [["lam^-1"]])
    again = Bicharacter.from_json(beta.to_json())
    assert again.eval((3,), (2,)) == R.parse("lam^-6")


def test_cocycles_from_bichar_are_cocycles():
    R = ScalarRing(1, ["lam"])
    G = FgAbelianGroup(1)
    beta = Bicharacter(G, R, [["lam"]])
    rng = random.Random(3)
    add = lambda p, q: (G.add(p[0], q[0]), G.add(p[1], q[1]))
    for J in cocycles_from_bichar(beta):
        for _ in range(200):
            p, q, r = ((G.random_element(rng, 3), G.random_element(rng, 3)) for _ in range(3))
            lhs = J(p, q) * J(add(p, q), r)
            rhs = J(q, r) * J(p, add(q, r))
            assert lhs == rhs
