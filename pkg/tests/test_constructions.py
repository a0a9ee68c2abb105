import warnings

import pytest

from braidhopf.abgroup import Bicharacter, FgAbelianGroup, SubgroupSpec
from braidhopf.catalog import beta_anyonic, beta_lambda, build_snplus, build_suq2
from braidhopf.constructions import (AdDegreeOutsideSubgroup, BSTwistData, CharMatrix, CorepMatrix,
                                     GammaInconsistent, bosonize, bs_twist, check_coaction_condition,
                                     group_tensor, quadratic, semidirect, transmute,
                                     ubar, verify_theta_iso, verify_thm_main)
from braidhopf.hopf import verify_braided_hopf, verify_hopf
from braidhopf.ncalg import Alphabet, pstar
from braidhopf.scalars import ScalarRing

warnings.simplefilter("ignore")


@pytest.fixture(scope="module")
def suq2():
    return build_suq2()


def test_trivial_transmutation_changes_nothing(suq2):
    T = transmute(suq2, Bicharacter.trivial(suq2.group, suq2.ring))
    assert all(k.is_one() for k in T.star_factor.values())
    for text in ["alpha gamma", "gamma alpha'", "alpha alpha'"]:
        assert T.str(T.parse(text)) == suq2.str(suq2.parse(text))


def test_transmutation_is_braided_hopf(suq2):
    T = transmute(suq2, beta_lambda())
    assert T.braided
    assert verify_braided_hopf(T)["status"] == "pass"


def test_group_attachments_are_hopf(suq2):
    S = SubgroupSpec(suq2.group, [[2]])
    for P in (group_tensor(suq2), semidirect(suq2), semidirect(suq2, S)):
        assert verify_hopf(P)["status"] == "pass"
    assert verify_hopf(bosonize(transmute(suq2, beta_lambda())))["status"] == "pass"


def test_semidirect_needs_cocentral_subgroup(suq2):
    with pytest.raises(AdDegreeOutsideSubgroup):
        semidirect(suq2, SubgroupSpec(suq2.group, [[4]]))


def test_theta(suq2):
    S = SubgroupSpec(suq2.group, [[2]])
    assert verify_theta_iso(suq2, S)["status"] == "pass"
    bad = verify_theta_iso(suq2, S, variant="drop_pi")
    assert bad["status"] == "fail"
    assert bad["checks"]["theta_coalgebra"]["status"] == "fail"


def test_thm_main_anyonic_s3_full_subgroup():
    H = build_snplus(3)
    rep = verify_thm_main(H, SubgroupSpec.whole(H.group), beta_anyonic(3))
    assert rep["status"] == "pass"
    # the containment it relies on
    assert verify_theta_iso(H)["status"] == "pass"


def _mu_data():
    R = ScalarRing(1, ["mu"])
    G = FgAbelianGroup(1)
    omega = Bicharacter(G, R, [["mu"]])
    return G, R, omega


def test_bs_twist_data_checks():
    G, R, omega = _mu_data()
    good = BSTwistData(G, R, omega.eval, quadratic(Bicharacter(G, R, [["mu^-1"]])))
    assert good.check(300)[0]
    assert good.gamma((2,), (3,)) == R.parse("mu^2")   # mu^(mn - m^2) at m = 2, n = 3
    bad = BSTwistData(G, R, omega.eval, lambda a: R.parse("mu"), lambda a: R.one())
    with pytest.raises(GammaInconsistent):
        bs_twist(build_suq2(), Bicharacter(G, R, [["mu^2"]]), bad)


def _bare(m, xs, G):
    u = lambda i, j: f"u{i + 1}{j + 1}"
    return u, Alphabet(G, [(u(i, j), ((xs[i],), (xs[j],))) for i in range(m) for j in range(m)])


def test_ubar_diagonal_formula_small():
    R = ScalarRing(7)
    G = FgAbelianGroup(1)
    beta = Bicharacter(G, R, [[R.zeta(1, 7)]])
    xs = [0, 2, 5]
    u, A = _bare(3, xs, G)
    U = CorepMatrix(A, R, [[{(A.index[u(i, j)],): R.one()} for j in range(3)] for i in range(3)])
    Ub = ubar(U, CharMatrix.diag(G, R, [[x] for x in xs]), beta)
    for i in range(3):
        for j in range(3):
            want = {(A.index[u(i, j) + "'"],): R.zeta(xs[i] * (xs[j] - xs[i]), 7)}
            assert Ub.entries[i][j] == want


def test_coaction_condition_on_braided_suq2(suq2):
    T = transmute(suq2, beta_lambda())
    R = T.ring
    g = lambda n: T.gen(n)
    U = CorepMatrix(T.alphabet, R, [[g("alpha"), {k: -R.parse("q") * c for k, c in g("gamma'").items()}],
                                    [g("gamma"), g("alpha'")]], star=lambda p: pstar(p, T.alphabet))
    assert check_coaction_condition(U, CharMatrix.diag(T.group, R, [[1], [-1]]), T)
    assert not check_coaction_condition(U, CharMatrix.diag(T.group, R, [[0], [0]]), T)


def test_bs_twist_over_joined_ring():
    G, R, omega = _mu_data()
    data = BSTwistData(G, R, omega.eval, quadratic(Bicharacter(G, R, [["mu^-1"]])))
    Q, rep = bs_twist(build_suq2(), Bicharacter(G, R, [["mu^2"]]), data)
    assert rep["status"] == "pass"
    assert {"q", "mu"} <= set(Q.ring.positive) | set(Q.ring.unitary)
