"""Numerical normal forms for matrices A with A Abar unitary.

The classification data of pairs (A, X), where X is a unitary corepresentation
of a torus given by integer character labels on an orthonormal basis, is read
off from the joint spectrum of |AJ|, u^2 and X (J = complex conjugation,
AJ = u|AJ| the antilinear polar decomposition).  Characters are exact integer
tuples; all matrix arithmetic is floating point.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space, orth

TOL = 1e-10
CLUSTER = 1e-8


class StdFormError(ValueError):
    pass


class SingularMatrix(StdFormError):
    pass


class NotUnitary(StdFormError):
    pass


class HypothesisViolated(StdFormError):
    pass


class ConditionFailed(StdFormError):
    pass


class PreconditionFailed(StdFormError):
    pass


class DegenerateSpectrumWarning(UserWarning):
    pass


def cmatrix(data):
    """Matrix from nested lists of numbers or [re, im] pairs."""
    if isinstance(data, np.ndarray):
        return data.astype(complex)
    rows = []
    for row in data:
        rows.append([complex(x[0], x[1]) if isinstance(x, (list, tuple)) else complex(x) for x in row])
    return np.array(rows, dtype=complex)


def to_pairs(M):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M)]


def _lab(x):
    return tuple(int(v) for v in (x if isinstance(x, (list, tuple)) else [x]))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _dual_label(chi, w0):
    return _sub(w0, chi)


@dataclass
class CharVector:
    """Diagonal characters: ``labels[k]`` is the character on column k of ``basis``.

    X(t) = basis diag(exp(i <label, t>)) basis^*.
    """

    labels: list
    basis: np.ndarray = None

    def __post_init__(self):
        self.labels = [_lab(x) for x in self.labels]
        m = len(self.labels)
        self.basis = np.eye(m, dtype=complex) if self.basis is None else cmatrix(self.basis)
        if self.basis.shape != (m, m):
            raise StdFormError("basis has the wrong shape")

    @property
    def rank(self):
        return len(self.labels[0]) if self.labels else 0

    def evaluate(self, t):
        d = np.array([cmath.exp(1j * float(np.dot(lab, t))) for lab in self.labels])
        return self.basis @ np.diag(d) @ self.basis.conj().T

    def conjugated(self, v):
        """The pair for v X v^*."""
        return CharVector(self.labels, v @ self.basis)

    def shifted(self, chi):
        """The characters chi X."""
        return CharVector([_add(chi, lab) for lab in self.labels], self.basis)

    def eigenspace(self, chi):
        cols = [k for k, lab in enumerate(self.labels) if lab == chi]
        return self.basis[:, cols]


def _unitary_residual(M):
    m = M.shape[0]
    return max(np.linalg.norm(M @ M.conj().T - np.eye(m), np.inf),
               np.linalg.norm(M.conj().T @ M - np.eye(m), np.inf))


def random_unitary(m, rng):
    """Haar-random unitary from a numpy Generator."""
    z = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


# --- antilinear polar decomposition ---

def polar_antilinear(A, tol=TOL):
    """AJ = u |AJ| with u = U J antiunitary; returns (U, P).

    P = |AJ| is the positive square root of A^t Abar.
    """
    A = cmatrix(A)
    W, sv, Vh = np.linalg.svd(A)
    if sv.min() <= tol:
        raise SingularMatrix("A is not invertible")
    # A J = W Vh J . (Vh^t diag(sv) conj(Vh)); both factors are exact by construction
    U = W @ Vh
    P = Vh.T @ np.diag(sv) @ Vh.conj()
    P = (P + P.conj().T) / 2
    return U, P


def _apply_u(U, xi):
    return U @ xi.conj()


# --- joint eigenspaces ---

def _clusters(values, tol=CLUSTER):
    """Group sorted (value, index) pairs whose consecutive distances are below tol."""
    groups = []
    for v, k in sorted(((v, k) for k, v in enumerate(values)), key=lambda p: (p[0].real, p[0].imag) if isinstance(p[0], complex) else p[0]):
        if groups and abs(v - groups[-1][0][-1]) < tol:
            groups[-1][0].append(v)
            groups[-1][1].append(k)
        else:
            groups.append(([v], [k]))
    return [(sum(vs) / len(vs), ks) for vs, ks in groups]


def _unit_clusters(values, tol=CLUSTER):
    """Cluster points on the circle by angle, merging across the branch cut."""
    out = []
    for k, v in enumerate(values):
        for grp in out:
            if abs(v - grp[0]) < tol * 10:
                grp[1].append(k)
                break
        else:
            out.append([v, [k]])
    res = []
    for v, ks in out:
        mean = sum(values[k] for k in ks) / len(ks)
        res.append((mean / abs(mean), ks))
    return res


def joint_spaces(A, X, tol=CLUSTER):
    """Orthonormal bases of the joint eigenspaces of |AJ|, u^2 and X.

    Returns (U, P, spaces) with spaces a dict (lambda, theta, chi) -> matrix.
    """
    U, P = polar_antilinear(A)
    U2 = U @ U.conj()
    spaces = {}
    degenerate = False
    for chi in sorted(set(X.labels)):
        E = X.eigenspace(chi)
        Pr = E.conj().T @ P @ E
        Pr = (Pr + Pr.conj().T) / 2
        pv, pw = np.linalg.eigh(Pr)
        for lam, ks in _clusters(list(pv), tol):
            if len(ks) > 1 and np.ptp(pv[ks]) > tol / 10:
                degenerate = True
            F = E @ pw[:, ks]
            Ur = F.conj().T @ U2 @ F
            tv, tw = np.linalg.eig(Ur)
            # u^2 restricted is unitary and normal; orthonormalize each eigenspace
            for theta, ts in _unit_clusters(list(tv), tol):
                G = orth(F @ tw[:, ts])
                if G.shape[1] != len(ts):
                    G = orth(F @ null_space(Ur - theta * np.eye(Ur.shape[0]), rcond=1e-6))
                spaces[(float(lam), complex(theta), chi)] = G
    if degenerate:
        warnings.warn("clustered eigenvalues; block assignment depends on the representative",
                      DegenerateSpectrumWarning, stacklevel=2)
    return U, P, spaces


# --- standard form ---

@dataclass
class StandardForm:
    v: np.ndarray
    blocks: list
    A_blocks: np.ndarray
    labels: list
    w0: tuple
    residuals: dict = field(default_factory=dict)

    def invariants(self, digits=7):
        """Multiset of (lambda, theta, {chi, w0 - chi}) for 2x2 blocks and chi for 1x1 blocks."""
        out = []
        for b in self.blocks:
            if b["size"] == 2:
                pair = tuple(sorted([b["chi"], _dual_label(b["chi"], self.w0)]))
                th = b["theta"]
                out.append((2, round(b["lambda"], digits), round(th.real, digits) + 0.0,
                            round(th.imag, digits) + 0.0, pair))
            else:
                out.append((1, b["chi"]))
        return sorted(out)

    def to_json(self):
        bl = []
        for b in self.blocks:
            d = {"size": b["size"], "chi": list(b["chi"])}
            if b["size"] == 2:
                d.update(**{"lambda": b["lambda"], "theta": [b["theta"].real, b["theta"].imag],
                            "chi_dual": list(_dual_label(b["chi"], self.w0))})
            bl.append(d)
        return {"v": to_pairs(self.v), "blocks": bl, "residuals": self.residuals}


def _phase_normalize(xi, real_only=False, tol=1e-8):
    for z in xi:
        if abs(z) > tol:
            if real_only:
                return xi if z.real > 0 else -xi
            return xi * (abs(z) / z)
    return xi


def _representative(lam, theta, chi, w0, tol=CLUSTER):
    """True if (lam, theta, chi) is the chosen member of its pair."""
    if lam < 1 - tol:
        return True
    if lam > 1 + tol:
        return False
    arg = cmath.phase(theta)
    if abs(theta - 1) < tol or abs(theta + 1) < tol:
        dual = _dual_label(chi, w0)
        return chi <= dual
    return 0 < arg <= math.pi


def _check_hypothesis(A, X, w0, tol, samples=5, rng=None):
    if _unitary_residual(A @ A.conj()) > max(tol, 1e-8) * 10:
        raise HypothesisViolated("A Abar is not unitary")
    rng = rng or np.random.default_rng(0)
    Ainv = np.linalg.inv(A)
    for _ in range(samples):
        t = rng.uniform(-math.pi, math.pi, X.rank)
        Xt = X.evaluate(t)
        w0t = cmath.exp(1j * float(np.dot(w0, t)))
        r = np.linalg.norm(A @ (w0t * Xt.conj()) @ Ainv - Xt, np.inf)
        if r > 1e-7:
            raise HypothesisViolated(f"A (w0 Xbar) A^-1 != X (residual {r:.2e})")


def standard_form(A, X, w0, tol=TOL, check=True):
    """Unitary v with v A v^t and v X v^* block diagonal.

    ``X`` is a CharVector (or a list of labels for the standard basis) and
    ``w0`` the character with A (w0 Xbar) A^-1 = X.
    """
    A = cmatrix(A)
    X = X if isinstance(X, CharVector) else CharVector(X)
    w0 = _lab(w0)
    m = A.shape[0]
    if check:
        _check_hypothesis(A, X, w0, tol)
    U, P, spaces = joint_spaces(A, X)
    cols, blocks = [], []
    done = set()
    for key in sorted(spaces, key=lambda k: (k[0], cmath.phase(k[1]) % (2 * math.pi), k[2])):
        lam, theta, chi = key
        G = spaces[key]
        self_dual = abs(lam - 1) < CLUSTER and abs(theta.imag) < CLUSTER and chi == _dual_label(chi, w0)
        if key in done:
            continue
        if self_dual and theta.real < 0:
            # u xi is orthogonal to xi; peel off pairs
            rem = G
            while rem.shape[1] > 0:
                xi = _phase_normalize(rem[:, 0])
                eta = _apply_u(U, xi)
                cols += [xi, eta]
                blocks.append({"size": 2, "lambda": 1.0, "theta": complex(-1), "chi": chi})
                B = np.column_stack([xi, eta])
                rem = orth(rem - B @ (B.conj().T @ rem)) if rem.shape[1] > 2 else np.zeros((m, 0))
            done.add(key)
            continue
        if self_dual:
            # real form: vectors fixed by u
            cands = []
            for k in range(G.shape[1]):
                e = G[:, k]
                cands += [e + _apply_u(U, e), 1j * e + _apply_u(U, 1j * e)]
            basis = []
            for c in cands:
                for b in basis:
                    c = c - np.real(np.vdot(b, c)) * b
                n = np.linalg.norm(c)
                if n > 1e-6:
                    basis.append(c / n)
                if len(basis) == G.shape[1]:
                    break
            for xi in basis:
                cols.append(_phase_normalize(xi, real_only=True))
                blocks.append({"size": 1, "chi": chi})
            done.add(key)
            continue
        if not _representative(lam, theta, chi, w0):
            continue
        partner = None
        for k2 in spaces:
            if abs(k2[0] - 1 / lam) < 1e-6 and abs(k2[1] - theta.conjugate()) < 1e-6 and k2[2] == _dual_label(chi, w0):
                partner = k2
        done.add(key)
        if partner is not None:
            done.add(partner)
        for k in range(G.shape[1]):
            xi = _phase_normalize(G[:, k])
            cols += [xi, _apply_u(U, xi)]
            blocks.append({"size": 2, "lambda": lam, "theta": theta, "chi": chi})
    if len(cols) != m:
        raise HypothesisViolated("joint eigenspaces do not pair up; check the hypothesis on (A, X)")
    V = np.column_stack(cols)
    v = V.conj().T
    Ab = np.zeros((m, m), dtype=complex)
    labels = []
    pos = 0
    for b in blocks:
        if b["size"] == 2:
            Ab[pos, pos + 1] = b["theta"] / b["lambda"]
            Ab[pos + 1, pos] = b["lambda"]
            labels += [b["chi"], _dual_label(b["chi"], w0)]
            pos += 2
        else:
            Ab[pos, pos] = 1
            labels.append(b["chi"])
            pos += 1
    sf = StandardForm(v, blocks, Ab, labels, w0)
    sf.residuals = _residuals(A, X, sf)
    return sf


def _residuals(A, X, sf, points=10):
    v = sf.v
    rng = np.random.default_rng(12345)
    ra = float(np.linalg.norm(v @ A @ v.T - sf.A_blocks, np.inf))
    rx = 0.0
    target = CharVector(sf.labels)
    for _ in range(points):
        t = rng.uniform(-math.pi, math.pi, X.rank)
        rx = max(rx, float(np.linalg.norm(v @ X.evaluate(t) @ v.conj().T - target.evaluate(t), np.inf)))
    return {"A": ra, "X": rx, "unitary": float(_unitary_residual(v))}


# --- antidiagonal form ---

def tl_form(A, two_torsion_free=True, tol=TOL):
    """Unitary v with v A v^t antidiagonal.

    Entry a_i sits in row m-i+1, column i (1-based).  Returns (v, M, a) with
    0 < a_i <= 1 for i <= [(m+1)/2] and 0 <= arg a_i <= pi whenever |a_i| = 1
    beyond that.
    """
    if not two_torsion_free:
        raise StdFormError("the antidiagonal form is only canonical without 2-torsion")
    A = cmatrix(A)
    m = A.shape[0]
    sf = standard_form(A, CharVector([(0,)] * m), (0,), tol)
    U, _ = polar_antilinear(A)
    pairs, singles = [], []
    rows = sf.v.conj().T  # columns are basis vectors
    pos = 0
    for b in sf.blocks:
        if b["size"] == 2:
            pairs.append((b["lambda"], b["theta"], rows[:, pos], rows[:, pos + 1]))
            pos += 2
        else:
            singles.append(rows[:, pos])
            pos += 1
    # fixed vectors of u pair up as (eta_a + i eta_b)/sqrt2 and its image
    while len(singles) >= 2:
        ea, eb = singles.pop(0), singles.pop(0)
        xi = (ea + 1j * eb) / math.sqrt(2)
        pairs.append((1.0, complex(1), xi, _apply_u(U, xi)))
    pairs.sort(key=lambda p: (p[0], cmath.phase(p[1]) % (2 * math.pi)))
    cols = [None] * m
    for i, (lam, theta, xi, eta) in enumerate(pairs):
        cols[i] = xi
        cols[m - 1 - i] = eta
    if singles:
        cols[m // 2] = singles[0]
    V = np.column_stack(cols)
    v = V.conj().T
    M = v @ A @ v.T
    a = [M[m - 1 - i, i] for i in range(m)]
    return v, M, a


# --- odd-power spectrum criterion ---

def check_mrozinski(B, max_exponent=15, tol=1e-9):
    """m even and the spectrum of B Bbar made of odd powers of one lambda.

    On success returns lambda, the eigenvalues and integers l_i with
    eigenvalue_i = lambda^(-2 l_i - 1).
    """
    B = cmatrix(B)
    m = B.shape[0]
    BB = B @ B.conj()
    if _unitary_residual(BB) > 1e-8:
        raise NotUnitary("B Bbar is not unitary")
    if m % 2:
        return {"status": "fail", "reason": "m is odd", "m": m}
    mu = np.linalg.eigvals(BB)
    mu = [complex(z / abs(z)) for z in mu]
    mu.sort(key=lambda z: (round(cmath.phase(z), 9), z.imag))
    odd = [n for k in range(max_exponent + 1) for n in (2 * k + 1, -(2 * k + 1)) if abs(n) <= max_exponent]

    def exponents(lam):
        ns = []
        for z in mu:
            n = next((n for n in odd if abs(lam ** n - z) < tol), None)
            if n is None:
                return None
            ns.append(n)
        return ns

    best = None
    for n0 in (n for n in odd if n > 0):
        for k in range(n0):
            lam = cmath.exp(1j * (cmath.phase(mu[0]) + 2 * math.pi * k) / n0)
            ns = exponents(lam)
            if ns is None:
                continue
            arg = cmath.phase(lam)
            key = (max(abs(n) for n in ns), not (-1e-12 <= arg <= math.pi + 1e-12), round(arg % (2 * math.pi), 12))
            if best is None or key < best[0]:
                best = (key, lam, ns)
    if best is None:
        return {"status": "fail", "reason": "no common lambda with odd exponents",
                "witness": [[mu[0].real, mu[0].imag], [mu[-1].real, mu[-1].imag]],
                "max_exponent": max_exponent}
    _, lam, ns = best
    ls = [(-n - 1) // 2 for n in ns]
    err = max(abs(lam ** (-2 * l - 1) - z) for l, z in zip(ls, mu))
    if err > tol:
        return {"status": "fail", "reason": "exponent re-evaluation failed", "residual": err}
    return {"status": "pass", "lambda": [lam.real, lam.imag],
            "eigenvalues": [[z.real, z.imag] for z in mu], "exponents": ls, "residual": err}


def mrozinski_instance(mus, rng=None):
    """B with B Bbar similar to diag(mu_1, conj mu_1, mu_2, ...), randomly rotated."""
    m = 2 * len(mus)
    B = np.zeros((m, m), dtype=complex)
    for i, mu in enumerate(mus):
        B[2 * i, 2 * i + 1] = 1
        B[2 * i + 1, 2 * i] = np.conj(mu)
    if rng is not None:
        u = random_unitary(m, rng)
        B = u @ B @ u.T
    return B


def random_pair(m, rng, rank=1, w0=None, bound=3):
    """Random (A, X, w0) satisfying the standard-form hypothesis, with well-separated spectra.

    Built as a random unitary rotation of a block form; also returns that block data.
    """
    w0 = tuple(2 * int(x) for x in rng.integers(-bound, bound + 1, rank)) if w0 is None else _lab(w0)
    half = tuple(x // 2 for x in w0)
    nsingle = 2 * int(rng.integers(0, 2)) if m % 2 == 0 else 1
    npair = (m - nsingle) // 2
    lams = np.sort(rng.choice(np.arange(1, 40), size=npair, replace=False)) / 45.0
    blocks, labels = [], []
    B = np.zeros((m, m), dtype=complex)
    pos = 0
    for lam in lams:
        theta = cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        chi = tuple(int(x) for x in rng.integers(-bound, bound + 1, rank))
        B[pos, pos + 1] = theta / lam
        B[pos + 1, pos] = lam
        labels += [chi, _dual_label(chi, w0)]
        blocks.append((float(lam), theta, chi))
        pos += 2
    for _ in range(nsingle):
        B[pos, pos] = 1
        labels.append(half)
        pos += 1
    u = random_unitary(m, rng)
    A = u @ B @ u.T
    X = CharVector(labels, u)
    return A, X, w0


# --- bicharacter shadows ---

class BetaShadow:
    """Numeric bicharacter on Z^r given by the matrix of values on basis pairs."""

    def __init__(self, matrix):
        self.matrix = cmatrix(matrix)

    def __call__(self, a, b):
        val = 1 + 0j
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                if x and y:
                    val *= self.matrix[i, j] ** (x * y)
        return val

    def transpose_point(self, w):
        """Angles t with chi(t) = beta(chi, w) for all basis characters."""
        r = self.matrix.shape[0]
        return np.array([cmath.phase(self(tuple(int(i == k) for i in range(r)), w)) for k in range(r)])


def _x_at(X, beta, w):
    """X(t_w): the corepresentation evaluated where every character x gives beta(x, w)."""
    d = np.array([beta(lab, w) for lab in X.labels])
    return X.basis @ np.diag(d) @ X.basis.conj().T


def check_bfo_numeric(A, X, w, beta, tol=1e-9):
    """Check A (w^2 Xbar) A^-1 = X and A Abar = c X(t_w)^-2; report tau = c beta(w, w)^-2."""
    A = cmatrix(A)
    X = X if isinstance(X, CharVector) else CharVector(X)
    beta = beta if isinstance(beta, BetaShadow) else BetaShadow(beta)
    w = _lab(w)
    m = A.shape[0]
    rep = {"schema": 1, "kind": "check-bfo", "m": m}
    try:
        _check_hypothesis(A, X, _add(w, w), tol)
        rep["conjugation"] = "pass"
    except HypothesisViolated as e:
        rep.update(status="fail", conjugation="fail", reason=str(e))
        return rep
    Xw = _x_at(X, beta, w)
    M = A @ A.conj() @ Xw @ Xw
    c = complex(np.trace(M) / m)
    res = float(np.linalg.norm(M - c * np.eye(m), np.inf))
    rep["c"] = [c.real, c.imag]
    rep["residual"] = res
    if res > 1e-8 or abs(abs(c) - 1) > 1e-8:
        rep.update(status="fail", reason="A Abar is not a scalar multiple of X(t_w)^-2")
        return rep
    tau = c / beta(w, w) ** 2
    rep["tau"] = [tau.real, tau.imag]
    if min(abs(tau - 1), abs(tau + 1)) > 1e-8:
        rep.update(status="fail", reason="tau is not +-1")
        return rep
    tau = 1 if abs(tau - 1) < 1e-8 else -1
    rep["tau"] = tau
    if m % 2 and tau == -1:
        rep.update(status="fail", reason="tau = -1 is impossible for odd m")
        return rep
    rep["status"] = "pass"
    return rep


# --- isomorphism conditions ---

def _chi_candidates(X, X2, w, w2, torsion_free=True):
    if torsion_free:
        return [_sub(w, w2)]
    out = []
    target = sorted(X2.labels)
    for a in X.labels:
        chi = _sub(a, X2.labels[0])
        if sorted(_sub(x, chi) for x in X.labels) == target and chi not in out:
            out.append(chi)
    return out


def _align(sf1, sf2, tol=1e-6):
    """Permutation/reordering of sf1's basis matching sf2's blocks, or None."""
    rows1 = sf1.v
    used = [False] * len(sf2.blocks)
    pos1 = {}
    p = 0
    for k, b in enumerate(sf1.blocks):
        pos1[k] = p
        p += b["size"]
    pos2 = []
    p = 0
    for b in sf2.blocks:
        pos2.append(p)
        p += b["size"]
    new_rows = [None] * rows1.shape[0]
    for k, b in enumerate(sf1.blocks):
        for j, c in enumerate(sf2.blocks):
            if used[j] or c["size"] != b["size"]:
                continue
            if b["size"] == 1:
                if c["chi"] != b["chi"]:
                    continue
                new_rows[pos2[j]] = rows1[pos1[k]]
            else:
                if abs(b["lambda"] - c["lambda"]) > tol or abs(b["theta"] - c["theta"]) > tol:
                    continue
                r0, r1 = rows1[pos1[k]], rows1[pos1[k] + 1]
                if c["chi"] == b["chi"]:
                    new_rows[pos2[j]], new_rows[pos2[j] + 1] = r0, r1
                elif c["chi"] == _dual_label(b["chi"], sf1.w0) and abs(b["lambda"] - 1) < tol:
                    # swap the representative: basis (u xi, theta xi); rows are conjugate vectors
                    new_rows[pos2[j]], new_rows[pos2[j] + 1] = r1, np.conj(b["theta"]) * r0
                else:
                    continue
            used[j] = True
            break
        else:
            return None
    return np.array(new_rows)


def check_iso_conditions(A, X, A2, X2, beta, w, w2, torsion_free=True, tol=1e-8):
    """Search for a character chi and unitary v with v X v^* = chi X2 and v A D v^t = A2,
    D = conj X(t_chi)."""
    A, A2 = cmatrix(A), cmatrix(A2)
    X = X if isinstance(X, CharVector) else CharVector(X)
    X2 = X2 if isinstance(X2, CharVector) else CharVector(X2)
    beta = beta if isinstance(beta, BetaShadow) else BetaShadow(beta)
    w, w2 = _lab(w), _lab(w2)
    rep = {"schema": 1, "kind": "check-iso"}
    for side, (M, Y, ww) in (("first", (A, X, w)), ("second", (A2, X2, w2))):
        try:
            _check_hypothesis(M, Y, _add(ww, ww), tol)
        except HypothesisViolated as e:
            raise PreconditionFailed(f"{side} pair: {e}")
    if A.shape != A2.shape:
        rep.update(status="no_iso", reason="sizes differ")
        return rep
    tried = []
    for chi in _chi_candidates(X, X2, w, w2, torsion_free):
        D = _x_at(X, beta, chi).conj()
        AD = A @ D
        Xs = CharVector([_sub(x, chi) for x in X.labels], X.basis)
        w0 = _add(w2, w2)
        try:
            sf1 = standard_form(AD, Xs, w0, check=False)
            sf2 = standard_form(A2, X2, w0, check=False)
        except HypothesisViolated:
            tried.append(list(chi))
            continue
        if sf1.invariants() != sf2.invariants():
            tried.append(list(chi))
            continue
        rows = _align(sf1, sf2)
        if rows is None:
            tried.append(list(chi))
            continue
        v = sf2.v.conj().T @ rows
        rng = np.random.default_rng(7)
        rx = 0.0
        for _ in range(5):
            t = rng.uniform(-math.pi, math.pi, X.rank)
            rx = max(rx, float(np.linalg.norm(v @ X.evaluate(t) @ v.conj().T - X2.shifted(chi).evaluate(t), np.inf)))
        ra = float(np.linalg.norm(v @ AD @ v.T - A2, np.inf))
        if rx < 1e-7 and ra < 1e-7:
            rep.update(status="iso", chi=list(chi), v=to_pairs(v), residuals={"X": rx, "A": ra})
            return rep
        tried.append(list(chi))
    rep.update(status="no_iso", tried=tried)
    return rep
