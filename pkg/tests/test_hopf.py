import json

import pytest

from braidhopf.abgroup import FgAbelianGroup, SubgroupSpec
from braidhopf.catalog import build_group_algebra, build_suq2, suq2_data
from braidhopf.hopf import (GradingMismatch, from_json, is_cocentral, verify_hopf,
                            verify_morphism)


@pytest.fixture(scope="module")
def suq2():
    return build_suq2()


def test_suq2_complete_and_hopf(suq2):
    assert suq2.system.status == "complete"
    rep = verify_hopf(suq2)
    assert rep["status"] == "pass"
    assert all(c["status"] == "pass" for c in rep["checks"].values())


def test_suq2_identities(suq2):
    assert not suq2.parse("star(alpha) alpha + star(gamma) gamma - 1")
    assert not suq2.parse("alpha*gamma - q gamma*alpha")
    assert suq2.str(suq2.parse("alpha alpha'")) == suq2.str(suq2.parse("1 - q^2 gamma gamma'"))


def test_mutation_fails_with_certificate():
    rep = verify_hopf(build_suq2(mutate=True))
    assert rep["status"] == "fail"
    bad = [f for c in rep["checks"].values() for f in c.get("failures", [])]
    assert bad and all(f["certificate"] not in ("0", "", None) for f in bad)


def test_first_relation_mutation_collapses():
    # q -> q^2 in alpha gamma = q gamma alpha kills gamma; the quotient is still Hopf
    H = build_suq2(mutate=0)
    assert not H.parse("gamma")
    rep = verify_hopf(H)
    assert rep["status"] == "pass"
    # the collapse divides by factors such as q - 1, and the report says so
    assert rep["assumed_nonzero"]
    assert "assumed_nonzero" not in verify_hopf(build_suq2())


def test_json_round_trip(suq2):
    again = from_json(json.loads(json.dumps(suq2.to_json())))
    for text in ["alpha alpha' gamma", "gamma' gamma alpha", "alpha' alpha"]:
        assert again.str(again.parse(text)) == suq2.str(suq2.parse(text))


def test_cocentral(suq2):
    assert is_cocentral(suq2, SubgroupSpec(suq2.group, [[2]]))
    assert not is_cocentral(suq2, SubgroupSpec(suq2.group, [[4]]))


def test_group_algebra_with_torsion():
    H = build_group_algebra(FgAbelianGroup(1, (3,)))
    assert verify_hopf(H)["status"] == "pass"
    assert not H.parse("t2 t2 t2 - 1")


def test_identity_morphism_and_wrong_map(suq2):
    one = suq2.ring.one()
    ident = {s.id: {(s.id,): one} for s in suq2.alphabet.symbols}
    assert verify_morphism(suq2, suq2, ident, ident)["status"] == "pass"
    g = suq2.sym("gamma")
    swapped = dict(ident)
    swapped[g] = {(suq2.sym("gamma'"),): one}
    swapped[suq2.sym("gamma'")] = {(g,): one}
    assert verify_morphism(suq2, suq2, swapped)["status"] == "fail"


def test_pi_must_respect_grading():
    data = suq2_data()
    data["generators"][1]["pi"] = [["1", [1]]]
    with pytest.raises(GradingMismatch):
        from_json(data)
