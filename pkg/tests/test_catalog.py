import warnings

import numpy as np
import pytest

from braidhopf import catalog
from braidhopf.catalog import (FFbarNotScalar, OddMNegativeTau, OmegaBarOmegaFailed, PreconditionFailed,
                               SupportConditionFailed, TraceConditionFailed, ZCompatibilityFailed,
                               beta_anyonic, build_bfo, build_meyer_roy, build_ofplus, build_quadruple,
                               build_snplus, build_ufplus, suq2_data)
from braidhopf.abgroup import Bicharacter, FgAbelianGroup
from braidhopf.constructions import transmute
from braidhopf.hopf import from_json, verify_braided_hopf, verify_hopf, verify_morphism
from braidhopf.scalars import ScalarRing

warnings.simplefilter("ignore")


def test_ofplus_preconditions():
    with pytest.raises(FFbarNotScalar):
        build_ofplus((("0", "2"), ("1", "0")))
    with pytest.raises(ZCompatibilityFailed):
        build_ofplus(exps=[1, 1])


def test_ufplus_trace_condition():
    sc = {"cyclotomic": 1, "unitary": [], "positive": ["r"]}
    H = build_ufplus((("r", "0"), ("0", "r^-1")), scalars=sc)
    assert verify_hopf(H)["status"] == "pass"
    with pytest.raises(TraceConditionFailed):
        build_ufplus((("r", "0"), ("0", "1")), scalars=sc)


def test_s2plus_star_is_self():
    H = build_snplus(2)
    assert not H.parse("a1_1' - a1_1")
    assert not H.parse("a0_0 - 1")


def test_trivial_beta_gives_ordinary_relations():
    H = build_ofplus()
    T = transmute(H, Bicharacter.trivial(H.group, H.ring))
    for r in H.relations:
        assert not T.reduce(r)


def test_ofplus_is_su1_2():
    data = suq2_data()
    data["scalars"] = {"cyclotomic": 1, "unitary": [], "positive": []}
    data["relations"] = [r.replace("q^2 ", "").replace("q ", "") for r in data["relations"]]
    data["coproduct"] = {k: v.replace("q ", "") for k, v in data["coproduct"].items()}
    data["antipode"] = {k: v.replace("-q^-1 ", "-").replace("-q ", "-") for k, v in data["antipode"].items()}
    S = from_json(data)
    O = build_ofplus()
    one = S.ring.one()
    g = lambda n, c=1: {(S.sym(n),): one * c}
    img = {O.sym("u11"): g("alpha"), O.sym("u12"): g("gamma'", -1), O.sym("u21"): g("gamma"),
           O.sym("u22"): g("alpha'"), O.sym("u11'"): g("alpha'"), O.sym("u12'"): g("gamma", -1),
           O.sym("u21'"): g("gamma'"), O.sym("u22'"): g("alpha")}
    h = lambda n, c=1: {(O.sym(n),): one * c}
    inv = {S.sym("alpha"): h("u11"), S.sym("gamma"): h("u21"), S.sym("alpha'"): h("u11'"),
           S.sym("gamma'"): h("u21'")}
    assert verify_morphism(O, S, img, inv)["status"] == "pass"


def _magic_data(N):
    u = lambda i, j: f"u{i}{j}"
    rels = []
    for i in range(N):
        rels.append(" + ".join(u(i, j) for j in range(N)) + " - 1")
        rels.append(" + ".join(u(j, i) for j in range(N)) + " - 1")
        for j in range(N):
            rels.append(f"{u(i, j)}' - {u(i, j)}")
            rels.append(f"{u(i, j)} {u(i, j)} - {u(i, j)}")
            for k in range(N):
                if k != j:
                    rels.append(f"{u(i, j)} {u(i, k)}")
                    rels.append(f"{u(j, i)} {u(k, i)}")
    names = [(i, j) for i in range(N) for j in range(N)]
    return {"schema": 1, "kind": "hopf", "name": "magic", "scalars": {"cyclotomic": N},
            "group": {"rank": 0, "torsion": []},
            "generators": [{"name": u(i, j), "bidegree": [[], []]} for i, j in names],
            "relations": rels,
            "coproduct": {u(i, j): " + ".join(f"{u(i, k)} ⊗ {u(k, j)}" for k in range(N)) for i, j in names},
            "counit": {u(i, j): "1" if i == j else "0" for i, j in names},
            "antipode": {**{u(i, j): u(j, i) for i, j in names}, **{u(i, j) + "'": u(j, i) for i, j in names}}}


@pytest.mark.parametrize("N", [2, 3])
def test_snplus_fourier_basis_change(N):
    # a = F U F^-1 with F = (omega^(-ij)) turns the magic unitary into the homogeneous generators
    U = from_json(_magic_data(N))
    A = catalog.snplus_data(N)
    A["group"] = {"rank": 0, "torsion": []}
    for gen in A["generators"]:
        gen["bidegree"] = [[], []]
        gen.pop("pi", None)
    A = from_json(A)
    R = U.ring
    w = lambda e: R.zeta(e % N, N)
    inv_n = R.const(1) * R.parse(f"1/{N}")
    img = {}
    for i in range(N):
        for j in range(N):
            p = {}
            for k in range(N):
                for l in range(N):
                    p[(U.sym(f"u{k}{l}"),)] = inv_n * w(-i * k + j * l)
            img[A.sym(f"a{i}_{j}")] = p
            img[A.sym(f"a{i}_{j}'")] = {m: c.conj() for m, c in p.items()}
    back = {}
    for k in range(N):
        for l in range(N):
            p = {}
            for i in range(N):
                for j in range(N):
                    p[(A.sym(f"a{i}_{j}"),)] = inv_n * w(i * k - j * l)
            back[U.sym(f"u{k}{l}")] = p
            back[U.sym(f"u{k}{l}'")] = {(A.alphabet.star[m[0]],): c.conj() for m, c in p.items()}
    assert verify_morphism(A, U, img, back)["status"] == "pass"


def test_quadruple_examples():
    q = build_quadruple([[0, 1], [1, 0]], 1)
    assert q["group"].rank == 2 and q["residual"] < 1e-9
    assert q["x"][0] == [1, 0] and q["x"][1] == [-1, 2] and q["w"] == [0, 1]
    assert abs(q["shadows"]["b1"] ** -2 - 1) < 1e-9      # beta(x1^-2 w^2, w) = 1
    q3 = build_quadruple(np.eye(3), 1)
    assert q3["x"][1] == q3["w"]
    qm = build_quadruple([[0, 1], [-1, 0]], -1)
    assert abs(qm["lambdas"][0] + 1) < 1e-9
    assert abs(qm["shadows"]["b1"] ** 2 - 1) < 1e-9      # tau * lambda = 1
    with pytest.raises(OddMNegativeTau):
        build_quadruple(np.eye(3), -1)
    with pytest.raises(catalog.NotUnitary):
        build_quadruple([[2, 0], [0, 1]], 1)


def test_quadruple_realizes_random_matrix():
    from braidhopf.stdform import random_pair
    rng = np.random.default_rng(11)
    for m in (2, 3, 4, 5):
        A, _, _ = random_pair(m, rng, 1, w0=(0,))
        q = build_quadruple(A, 1)
        assert q["residual"] < 1e-9


def test_bfo_examples():
    R = ScalarRing(1)
    G = FgAbelianGroup(2)
    beta = Bicharacter(G, R, [["1", "1"], ["1", "1"]])
    Q, rep = build_bfo([["0", "1"], ["1", "0"]], [[1, 0], [-1, 2]], [0, 1], beta)
    assert rep["tau"] == 1 and rep["status"] == "pass"
    assert verify_braided_hopf(Q)["status"] == "pass"
    Q, rep = build_bfo([["0", "1"], ["-1", "0"]], [[1], [-1]], [0], Bicharacter(FgAbelianGroup(1), R, [["1"]]))
    assert rep["tau"] == -1 and rep["status"] == "pass"
    with pytest.raises(PreconditionFailed):
        build_bfo([["0", "1"], ["1", "0"]], [[1, 0], [0, 1]], [0, 1], beta)
    with pytest.raises(PreconditionFailed):
        build_bfo([["0", "0", "1"], ["0", "1", "0"], ["-1", "0", "0"]], [[1], [0], [-1]], [0],
                  Bicharacter(FgAbelianGroup(1), R, [["1"]]))


def test_meyer_roy():
    Q, rep = build_meyer_roy()
    assert rep["status"] == "pass" and not rep["double_cover"]
    Q, rep = build_meyer_roy([["0", "1"], ["eta^-2", "0"]], [0, 1], 1)
    assert rep["status"] == "pass" and rep["double_cover"]
    with pytest.raises(catalog.ExampleError):
        build_meyer_roy([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]], [0, 0, 0], 1)
    with pytest.raises(SupportConditionFailed):
        build_meyer_roy([["1", "0"], ["0", "1"]], [0, 2], 2)
    with pytest.raises(OmegaBarOmegaFailed):
        build_meyer_roy([["1", "1"], ["0", "1"]], [1, 1], 2)


def test_meyer_roy_conjugate_entries():
    data = catalog.meyer_roy_data([["0", "1"], ["1", "0"]], [1, 1], 2)
    Q, _ = build_bfo(data["A"], data["x"], data["w"], data["beta"])
    _, ub = catalog.meyer_roy_relations(Q, data["A"], [1, 1], data["zeta"])
    from braidhopf.constructions import CharMatrix, CorepMatrix, ubar
    U = CorepMatrix(Q.alphabet, Q.ring, [[Q.gen(f"u{i}{j}") for j in (1, 2)] for i in (1, 2)])
    assert ubar(U, CharMatrix.diag(data["beta"].group, Q.ring, [[1], [1]]), data["beta"]).entries == ub


def test_anyonic_check_detects_wrong_phase():
    Q = transmute(build_snplus(3), beta_anyonic(3))
    fam = catalog.anyonic_snplus_relations(3)
    wrong = fam["stars"][4].replace("(zeta(3)^", "(zeta(3)^1+zeta(3)^")
    assert catalog._residue_check(Q, [wrong])["status"] == "fail"


def test_registry_round_trip(tmp_path):
    for name in ("suq2", "s2plus", "meyer-roy"):
        P = catalog.build_example(name)
        again = from_json(P.to_json())
        for r in P.relations:
            assert not again.reduce(r)
