import math
import warnings

import numpy as np
import pytest

from braidhopf.stdform import (CharVector, HypothesisViolated, PreconditionFailed, SingularMatrix, StdFormError,
                               check_bfo_numeric, check_iso_conditions, check_mrozinski, mrozinski_instance,
                               polar_antilinear, random_pair, random_unitary, standard_form, tl_form)

warnings.simplefilter("ignore")


def test_polar_examples():
    U, P = polar_antilinear(np.eye(2))
    assert np.allclose(U, np.eye(2)) and np.allclose(P, np.eye(2))
    U, P = polar_antilinear(np.diag([2, 0.5]))
    assert np.allclose(U, np.eye(2)) and np.allclose(P, np.diag([2, 0.5]))
    with pytest.raises(SingularMatrix):
        polar_antilinear(np.diag([1, 0]))


def test_polar_random():
    rng = np.random.default_rng(3)
    for _ in range(50):
        A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        U, P = polar_antilinear(A)
        # A J = U J P, i.e. A = U conj(P)
        assert np.linalg.norm(U @ P.conj() - A, np.inf) < 1e-10
        assert np.linalg.norm(U @ U.conj().T - np.eye(4), np.inf) < 1e-10
        assert np.linalg.eigvalsh(P).min() > 0


def test_std_form_swap():
    sf = standard_form([[0, 1], [1, 0]], [(1,), (-1,)], (0,))
    (b,) = sf.blocks
    assert b["size"] == 2 and abs(b["lambda"] - 1) < 1e-9 and abs(b["theta"] - 1) < 1e-9


def test_std_form_identity_single_blocks():
    sf = standard_form(np.eye(2), [(1,), (1,)], (2,))
    assert [b["size"] for b in sf.blocks] == [1, 1]
    assert all(b["chi"] == (1,) for b in sf.blocks)


def test_std_form_half():
    sf = standard_form([[0, 0.5], [2, 0]], [(1,), (-1,)], (0,))
    (b,) = sf.blocks
    assert abs(b["lambda"] - 0.5) < 1e-9


def test_std_form_rejects_bad_hypothesis():
    with pytest.raises(HypothesisViolated):
        standard_form([[0, 1], [1, 0]], [(1,), (1,)], (0,))
    with pytest.raises(HypothesisViolated):
        standard_form([[2, 0], [0, 1]], [(0,), (0,)], (0,))


def test_std_form_reconstruction_and_invariance():
    rng = np.random.default_rng(20)
    for m in (2, 3, 4, 5):
        A, X, w0 = random_pair(m, rng, rank=2)
        sf = standard_form(A, X, w0)
        assert max(sf.residuals.values()) < 1e-9
        ref = sf.invariants()
        for _ in range(20):
            u = random_unitary(m, rng)
            sf2 = standard_form(u @ A @ u.T, X.conjugated(u), w0)
            assert sf2.invariants() == ref
            assert max(sf2.residuals.values()) < 1e-9


def test_std_form_json_deterministic():
    A, X, w0 = random_pair(4, np.random.default_rng(5))
    assert standard_form(A, X, w0).to_json() == standard_form(A, X, w0).to_json()


def test_tl_form_examples():
    v, M, a = tl_form([[0, 2], [0.5, 0]])
    assert abs(a[0] - 0.5) < 1e-9 and abs(a[1] - 2) < 1e-9
    v, M, a = tl_form(np.eye(2))
    assert abs(M[0, 0]) < 1e-9 and abs(M[1, 1]) < 1e-9
    v, M, a = tl_form([[0, 1], [-1, 0]])
    assert np.allclose(np.diag(M), 0, atol=1e-9)
    assert abs(a[0] * np.conj(a[1]) + 1) < 1e-9 or abs(a[0] * a[1].conjugate() - -1) < 1e-9
    with pytest.raises(StdFormError):
        tl_form(np.eye(2), two_torsion_free=False)


def test_tl_form_random():
    rng = np.random.default_rng(8)
    for m in (2, 3, 4, 5, 6):
        A, _, _ = random_pair(m, rng, w0=(0,))
        v, M, a = tl_form(A)
        assert np.linalg.norm(v @ v.conj().T - np.eye(m), np.inf) < 1e-9
        anti = np.zeros_like(M)
        for i in range(m):
            anti[m - 1 - i, i] = M[m - 1 - i, i]
        assert np.linalg.norm(M - anti, np.inf) < 1e-9
        for i in range((m + 1) // 2):
            assert abs(a[i].imag) < 1e-9 and 0 < a[i].real <= 1 + 1e-9


def test_mrozinski_examples():
    q = 0.5
    rep = check_mrozinski([[0, math.sqrt(q)], [-1 / math.sqrt(q), 0]])
    assert rep["status"] == "pass" and np.allclose(rep["lambda"], [-1, 0])
    assert check_mrozinski(np.eye(3))["status"] == "fail"
    rep = check_mrozinski(mrozinski_instance([1j]))
    assert rep["status"] == "pass" and np.allclose(rep["lambda"], [0, 1])
    assert check_mrozinski(mrozinski_instance([1]))["status"] == "pass"
    assert check_mrozinski(mrozinski_instance([1, -1]))["status"] == "fail"


def test_mrozinski_invariance():
    rng = np.random.default_rng(9)
    lam = np.exp(0.7j)
    B = mrozinski_instance([lam ** -1, lam ** -3, lam ** 5])
    ref = check_mrozinski(B)
    assert ref["status"] == "pass"
    for _ in range(10):
        u = random_unitary(6, rng)
        rep = check_mrozinski(u @ B @ u.T)
        assert rep["status"] == "pass" and np.allclose(rep["lambda"], ref["lambda"], atol=1e-8)
    bad = mrozinski_instance([np.exp(1j), np.exp(1j * math.sqrt(2))])
    for _ in range(5):
        u = random_unitary(4, rng)
        assert check_mrozinski(u @ bad @ u.T)["status"] == "fail"


def test_bfo_numeric_examples():
    beta = [[1]]
    rep = check_bfo_numeric([[0, 1], [1, 0]], [(1,), (-1,)], (0,), beta)
    assert rep["status"] == "pass" and rep["tau"] == 1
    rep = check_bfo_numeric([[0, 1], [-1, 0]], [(1,), (-1,)], (0,), beta)
    assert rep["status"] == "pass" and rep["tau"] == -1
    A = np.zeros((3, 3), dtype=complex)
    A[0, 2], A[1, 1], A[2, 0] = 1, 1j, -1
    rep = check_bfo_numeric(A * 1j, [(1,), (0,), (-1,)], (0,), beta)
    assert rep["status"] == "fail"


def test_iso_self_and_swap():
    rng = np.random.default_rng(4)
    beta = np.exp(1j * rng.uniform(-3, 3, (2, 2)))
    for m in (2, 3, 4):
        A, X, w0 = random_pair(m, rng, rank=2, w0=(0, 0))
        rep = check_iso_conditions(A, X, A, X, beta, (0, 0), (0, 0))
        assert rep["status"] == "iso" and rep["chi"] == [0, 0]
    # a_1 = 1 swap: exchanging the two characters of a symmetric 2x2 block
    A = np.array([[0, 1], [1, 0]], dtype=complex)
    rep = check_iso_conditions(A, [(1,), (-1,)], A, [(-1,), (1,)], [[1]], (0,), (0,))
    assert rep["status"] == "iso"


def test_iso_different_lambda():
    X = [(1,), (-1,)]
    rep = check_iso_conditions([[0, 2], [0.5, 0]], X, [[0, 3], [1 / 3, 0]], X, [[1]], (0,), (0,))
    assert rep["status"] == "no_iso"


def test_iso_random_conjugate():
    rng = np.random.default_rng(12)
    beta = [[1]]
    for m in (2, 3, 4):
        A, X, _ = random_pair(m, rng, w0=(0,))
        u = random_unitary(m, rng)
        rep = check_iso_conditions(A, X, u @ A @ u.T, X.conjugated(u), beta, (0,), (0,))
        assert rep["status"] == "iso"
        v = np.array([[complex(*z) for z in row] for row in rep["v"]])
        sf1 = standard_form(A, X, (0,))
        sf2 = standard_form(u @ A @ u.T, X.conjugated(u), (0,))
        assert sf1.invariants() == sf2.invariants()
        assert np.linalg.norm(v @ v.conj().T - np.eye(m), np.inf) < 1e-8


def test_iso_precondition():
    with pytest.raises(PreconditionFailed):
        check_iso_conditions([[0, 1], [1, 0]], [(1,), (1,)], np.eye(2), [(0,), (0,)], [[1]], (0,), (0,))


def test_charvector_shift():
    X = CharVector([(1,), (2,)])
    t = np.array([0.3])
    assert np.allclose(X.shifted((1,)).evaluate(t), np.exp(0.3j) * X.evaluate(t))
