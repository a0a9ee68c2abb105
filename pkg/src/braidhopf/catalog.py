"""Built-in presentations: group algebras, SU_q(2), free orthogonal and unitary
quantum groups, quantum permutation groups, and the braided examples built on them.

Builders return plain JSON-shaped dicts (the presentation file format) through
``*_data`` functions and loaded presentations through ``build_*``.
"""
from __future__ import annotations

from .abgroup import Bicharacter, FgAbelianGroup
from .hopf import from_json
from .scalars import ScalarRing


class ExampleError(ValueError):
    pass


def _scalars(order=1, unitary=(), positive=()):
    return {"cyclotomic": order, "unitary": list(unitary), "positive": list(positive)}


def _vec(group, v):
    return list(group.element(v))


# --- group algebras ---

def group_algebra_data(group, names=None):
    """The group algebra of a f.g. abelian group, one group-like per basis element."""
    dim = group.dim
    names = names or [f"t{i + 1}" for i in range(dim)]
    gens, rels, cop, cou, ant = [], [], {}, {}, {}
    for i, n in enumerate(names):
        e = [1 if j == i else 0 for j in range(dim)]
        gens.append({"name": n, "bidegree": [e, e], "pi": [["1", e]]})
        order = group.order(i)
        rels.append(f"{n} {n}' - 1")
        rels.append(f"{n}' {n} - 1")
        if order:
            rels.append(f"{n}^{order} - 1")
        cop[n] = f"{n} ⊗ {n}"
        cou[n] = "1"
        ant[n] = f"{n}'"
        ant[n + "'"] = n
    for i in range(dim):
        for j in range(i + 1, dim):
            a, b = names[i], names[j]
            for x in (a, a + "'"):
                for y in (b, b + "'"):
                    rels.append(f"{x} {y} - {y} {x}")
    return {"schema": 1, "kind": "hopf", "name": "group-algebra", "scalars": _scalars(),
            "group": group.to_json(), "generators": gens, "relations": rels,
            "coproduct": cop, "counit": cou, "antipode": ant}


def build_group_algebra(group, names=None):
    return from_json(group_algebra_data(group, names))


# --- SU_q(2) ---

def suq2_data(mutate=False):
    """SU_q(2) with pi(alpha) = z, pi(gamma) = 0 over the circle.

    ``mutate`` replaces q by q^2 in one relation (an index into the relation
    list, or True for the last one) as a negative control.  Mutating the first
    relation is a poor control: it forces gamma = 0, and the quotient is
    still a Hopf algebra.
    """
    rels = [
        "alpha gamma - q gamma alpha",
        "alpha gamma' - q gamma' alpha",
        "gamma' gamma - gamma gamma'",
        "alpha' alpha + gamma' gamma - 1",
        "alpha alpha' + q^2 gamma gamma' - 1",
    ]
    mutated = {0: "alpha gamma - q^2 gamma alpha", 1: "alpha gamma' - q^2 gamma' alpha",
               4: "alpha alpha' + q^4 gamma gamma' - 1"}
    if mutate is not False:
        idx = 4 if mutate is True else mutate
        if idx not in mutated:
            raise ExampleError("only relations 0, 1 and 4 involve q")
        rels[idx] = mutated[idx]
    return {
        "schema": 1, "kind": "hopf", "name": "suq2" if mutate is False else "suq2-mutated",
        "scalars": _scalars(1, ["lam"], ["q"]),
        "group": {"rank": 1, "torsion": []},
        "generators": [
            {"name": "alpha", "bidegree": [[1], [1]], "pi": [["1", [1]]]},
            {"name": "gamma", "bidegree": [[-1], [1]], "pi": []},
        ],
        "relations": rels,
        "coproduct": {"alpha": "alpha ⊗ alpha - q gamma' ⊗ gamma",
                      "gamma": "gamma ⊗ alpha + alpha' ⊗ gamma"},
        "counit": {"alpha": "1", "gamma": "0"},
        "antipode": {"alpha": "alpha'", "alpha'": "alpha",
                     "gamma": "-q gamma", "gamma'": "-q^-1 gamma'"},
    }


def build_suq2(mutate=False):
    return from_json(suq2_data(mutate))


def beta_lambda(ring=None, name="lam"):
    """The bicharacter (m, n) -> lam^(-mn) on the integers."""
    ring = ring or ScalarRing()
    if name not in ring.variables:
        ring = ring.join(ScalarRing(1, [name]))
    return Bicharacter(FgAbelianGroup(1), ring, [[f"{name}^-1"]])


# --- helpers for matrix presentations ---

class FFbarNotScalar(ExampleError):
    pass


class ZCompatibilityFailed(ExampleError):
    pass


class TraceConditionFailed(ExampleError):
    pass


class CompatibilityFailed(ExampleError):
    pass


def _term(c, *names):
    return f"({c}) " + " ".join(names)


def _sum(terms, const=None):
    parts = list(terms)
    if const is not None:
        parts.append(f"({const})")
    return " + ".join(parts) if parts else "0"


def _uname(m, prefix="u"):
    if m <= 9:
        return lambda i, j: f"{prefix}{i + 1}{j + 1}"
    return lambda i, j: f"{prefix}{i + 1}_{j + 1}"


def monomial_matrix(ring, F):
    """Parse F and return (entries, sigma) with F[i][sigma[i]] the only nonzero entry of row i."""
    ents = [[ring.parse(str(x)) if not hasattr(x, "ring") else x for x in row] for row in F]
    m = len(ents)
    sigma = []
    for i, row in enumerate(ents):
        nz = [j for j, x in enumerate(row) if x]
        if len(nz) != 1 or not row[nz[0]].is_monomial():
            raise ExampleError("F must have exactly one monomial entry in each row and column")
        sigma.append(nz[0])
    if sorted(sigma) != list(range(m)):
        raise ExampleError("F must have exactly one monomial entry in each row and column")
    return ents, sigma


def _ring_of(scalars):
    return ScalarRing(scalars.get("cyclotomic", 1), scalars.get("unitary", ()), scalars.get("positive", ()))


def _ev(e):
    return [int(x) for x in e] if isinstance(e, (list, tuple)) else [int(e)]


def _diag_pi(m, exps, u):
    gens = []
    for i in range(m):
        for j in range(m):
            g = {"name": u(i, j), "bidegree": [_ev(exps[i]), _ev(exps[j])]}
            g["pi"] = [["1", _ev(exps[i])]] if i == j else []
            gens.append(g)
    return gens


def _unitary_relations(m, u):
    rels = []
    for i in range(m):
        for j in range(m):
            d = "-1" if i == j else None
            rels.append(_sum((f"{u(i, k)} {u(j, k)}'" for k in range(m)), d))
            rels.append(_sum((f"{u(k, i)}' {u(k, j)}" for k in range(m)), d))
    return rels


def _corep_structure(m, u, ring, fents, sigma):
    """Coproduct, counit, antipode S(U) = U*, S(Ubar) = G^-1 U^t G with G = F*F diagonal."""
    cop, cou, ant = {}, {}, {}
    inv = {s: i for i, s in enumerate(sigma)}
    gdiag = [fents[inv[k]][k] * fents[inv[k]][k].conj() for k in range(m)]
    for i in range(m):
        for j in range(m):
            n = u(i, j)
            cop[n] = " + ".join(f"{u(i, k)} ⊗ {u(k, j)}" for k in range(m))
            cou[n] = "1" if i == j else "0"
            ant[n] = f"{u(j, i)}'"
            ant[n + "'"] = _term(gdiag[i].inverse() * gdiag[j], u(j, i))
    return cop, cou, ant


# --- free orthogonal and free unitary quantum groups ---

def ofplus_data(F=(("0", "1"), ("-1", "0")), exps=None, scalars=None, name="ofplus", group=None):
    """O_F^+ for a monomial matrix F with F Fbar = +-1, graded by a diagonal Z = diag(z^k_i).

    ``group`` is a grading group as JSON (default: the integers); exponents are
    then vectors.
    """
    scalars = scalars or _scalars()
    group = group or {"rank": 1, "torsion": []}
    G = FgAbelianGroup(group["rank"], tuple(group.get("torsion", ())))
    ring = _ring_of(scalars)
    fents, sigma = monomial_matrix(ring, F)
    m = len(fents)
    if exps is None:
        exps = [1 if i < m // 2 else -1 for i in range(m)] if m % 2 == 0 else [0] * m
        exps = [exps[i] if sigma[i] != i else 0 for i in range(m)]
    exps = list(exps)
    c = None
    for i in range(m):
        # (F Fbar)_{i, sigma(sigma(i))} is the only entry of row i
        v = fents[i][sigma[i]] * fents[sigma[i]][sigma[sigma[i]]].conj()
        if sigma[sigma[i]] != i or (c is not None and v != c) or not (v.is_one() or (-v).is_one()):
            raise FFbarNotScalar("F Fbar is not +-1")
        c = v
    for i in range(m):
        if G.element(_ev(exps[i])) != G.neg(G.element(_ev(exps[sigma[i]]))):
            raise ZCompatibilityFailed("F Zbar F^-1 != Z for the given exponents")
    u = _uname(m)
    rels = _unitary_relations(m, u)
    for i in range(m):
        for j in range(m):
            coef = fents[i][sigma[i]] * fents[j][sigma[j]].inverse()
            rels.append(f"{u(i, j)} - " + _term(coef, f"{u(sigma[i], sigma[j])}'"))
    cop, cou, ant = _corep_structure(m, u, ring, fents, sigma)
    return {"schema": 1, "kind": "hopf", "name": name, "scalars": scalars,
            "group": dict(group), "generators": _diag_pi(m, exps, u),
            "relations": rels, "coproduct": cop, "counit": cou, "antipode": ant,
            "completion_cap": {"rules": 2000, "length": 12}}


def build_ofplus(F=(("0", "1"), ("-1", "0")), exps=None, scalars=None):
    return from_json(ofplus_data(F, exps, scalars))


def ofplus_q_data():
    """O_F^+ with F = [[0, r], [-1/r, 0]], r a positive square root of q."""
    return ofplus_data((("0", "r"), ("-r^-1", "0")), scalars=_scalars(1, (), ["r"]), name="ofplus-q")


def ufplus_data(F=(("1", "0"), ("0", "1")), exps=None, scalars=None, name="ufplus"):
    """U_F^+ for a monomial F with Tr(F*F) = Tr((F*F)^-1)."""
    scalars = scalars or _scalars()
    ring = _ring_of(scalars)
    fents, sigma = monomial_matrix(ring, F)
    m = len(fents)
    exps = list(exps) if exps is not None else ([1, -1] + [0] * (m - 2) if m >= 2 else [0])
    inv = {s: i for i, s in enumerate(sigma)}
    g = [fents[inv[k]][k] * fents[inv[k]][k].conj() for k in range(m)]
    tr, trinv = ring.zero(), ring.zero()
    for x in g:
        tr, trinv = tr + x, trinv + x.inverse()
    if tr != trinv:
        raise TraceConditionFailed(f"Tr(F*F) = {tr} but Tr((F*F)^-1) = {trinv}")
    u = _uname(m)
    rels = _unitary_relations(m, u)
    f = [fents[i][sigma[i]] for i in range(m)]
    for i in range(m):
        for j in range(m):
            d = "-1" if i == j else None
            # V = F Ubar F^-1, V_ij = f_i / f_j u*_{s(i) s(j)}
            rels.append(_sum((_term(f[i] * f[k].inverse() * (f[j] * f[k].inverse()).conj(),
                                    f"{u(sigma[i], sigma[k])}'", u(sigma[j], sigma[k])) for k in range(m)), d))
            rels.append(_sum((_term((f[k] * f[i].inverse()).conj() * f[k] * f[j].inverse(),
                                    u(sigma[k], sigma[i]), f"{u(sigma[k], sigma[j])}'") for k in range(m)), d))
    cop, cou, ant = _corep_structure(m, u, ring, fents, sigma)
    return {"schema": 1, "kind": "hopf", "name": name, "scalars": scalars,
            "group": {"rank": 1, "torsion": []}, "generators": _diag_pi(m, exps, u),
            "relations": rels, "coproduct": cop, "counit": cou, "antipode": ant,
            "completion_cap": {"rules": 2000, "length": 12}}


def build_ufplus(F=(("1", "0"), ("0", "1")), exps=None, scalars=None):
    return from_json(ufplus_data(F, exps, scalars))


# --- quantum permutation groups in homogeneous generators ---

def snplus_data(N):
    """S_N^+ on the generators a_ij (i, j mod N) of bidegree (i, j), cyclotomic order N."""
    if N < 2:
        raise ExampleError("N must be at least 2")
    a = lambda i, j: f"a{i % N}_{j % N}"
    gens = [{"name": a(i, j), "bidegree": [[i], [j]], "pi": [["1", [i]]] if i == j else []}
            for i in range(N) for j in range(N)]
    rels = []
    for i in range(N):
        for j in range(N):
            if i == 0 or j == 0:
                rels.append(f"{a(i, j)} - 1" if i == j == 0 else a(i, j))
            rels.append(f"{a(i, j)}' - {a(-i, -j)}")
    for k in range(N):
        for i in range(N):
            for j in range(N):
                rels.append(f"{a(k, i + j)} - " + " - ".join(f"{a(k - l, i)} {a(l, j)}" for l in range(N)))
                rels.append(f"{a(i + j, k)} - " + " - ".join(f"{a(j, l)} {a(i, k - l)}" for l in range(N)))
    cop = {a(i, j): " + ".join(f"{a(i, k)} ⊗ {a(k, j)}" for k in range(N)) for i in range(N) for j in range(N)}
    cou = {a(i, j): "1" if i == j else "0" for i in range(N) for j in range(N)}
    ant = {}
    for i in range(N):
        for j in range(N):
            ant[a(i, j)] = a(-j, -i)
            ant[a(i, j) + "'"] = a(j, i)
    # starred symbols on top so that a_ij* -> a_{-i,-j} removes them; the
    # default order leaves an infinite rule family for N = 4
    names = [g["name"] for g in gens]
    precedence = [n + "'" for n in names] + names
    return {"schema": 1, "kind": "hopf", "name": f"s{N}plus", "scalars": _scalars(N),
            "group": {"rank": 0, "torsion": [N]}, "generators": gens, "relations": rels,
            "coproduct": cop, "counit": cou, "antipode": ant, "precedence": precedence,
            "completion_cap": {"rules": 3000, "length": 12}}


def build_snplus(N):
    return from_json(snplus_data(N))


def beta_anyonic(N, ring=None):
    """beta(z^i, z^j) = omega^(-ij) with omega = zeta_N."""
    ring = ring or ScalarRing(N)
    return Bicharacter(FgAbelianGroup(0, (N,)), ring, [[ring.zeta(1, N).inverse()]])


# --- braided free orthogonal quantum groups O_A^{X, beta} ---

class PreconditionFailed(ExampleError):
    pass


class NotUnitary(ExampleError):
    pass


class OddMNegativeTau(ExampleError):
    pass


class SupportConditionFailed(ExampleError):
    pass


class OmegaBarOmegaFailed(ExampleError):
    pass


def _lift(x, ring):
    return x.lift(ring) if x.ring != ring else x


def bfo_relations(Q, A, x_exps, beta):
    """Defining relations of O_A^{X, beta} as polynomials over the alphabet of Q:
    U unitary and U = A Ubar_X A^-1, products and stars taken in Q.

    A is monomial; the second family is written as u_ij - a_i a_j^-1 ubar_{sigma i, sigma j}.
    """
    from .constructions import CharMatrix, CorepMatrix, ubar
    from .ncalg import padd, pscale, pstar

    ring = Q.ring
    ents, sigma = monomial_matrix(ring, [[_lift(x, ring) if hasattr(x, "ring") else x for x in row] for row in A])
    m = len(ents)
    u = _uname(m)
    rels = [Q.poly(r).terms for r in _unitary_relations(m, u)]
    U = CorepMatrix(Q.alphabet, ring, [[Q.gen(u(i, j)) for j in range(m)] for i in range(m)],
                    star=lambda p: pstar(p, Q.alphabet))
    X = CharMatrix.diag(beta.group, ring, [_ev(x) for x in x_exps])
    Ub = ubar(U, X, beta.lift(ring) if beta.ring != ring else beta)
    a = [ents[i][sigma[i]] for i in range(m)]
    for i in range(m):
        for j in range(m):
            # (A Ubar A^-1)_ij = a_i ubar_{s(i), s(j)} a_j^-1
            rels.append(padd(Q.gen(u(i, j)), pscale(Ub.entries[sigma[i]][sigma[j]], -(a[i] * a[j].inverse()))))
    return rels, Ub


def _mutual_reduction(Q, rels, cap_rules, cap_len):
    """Every relation of ``rels`` vanishes in Q, and every relation of Q vanishes modulo ``rels``."""
    from .ncalg import RewriteSystem

    fwd = [Q.str(Q.reduce(r)) for r in rels if Q.reduce(r)]
    rs = RewriteSystem.from_relations(Q.alphabet, Q.ring, rels)
    rs.complete(cap_rules, cap_len)
    back = [Q.str(rs.reduce(r)) for r in Q.relations if rs.reduce(r)]
    status = "pass" if not fwd and not back else ("fail" if fwd or rs.status == "complete" else "inconclusive")
    return {"status": status, "forward_residues": fwd, "backward_residues": back,
            "backward_system": rs.status, "backward_rules": len(rs)}


def build_bfo(A, x_exps, w, beta, name="bfo", cap_rules=2000, cap_len=12):
    """The braided free orthogonal quantum group O_A^{X, beta} for a monomial A.

    Realized as the transmutation of O_F^+ with F = AC, C = diag(beta(x_i^-1, w)),
    graded by Z = X w^-1.  Returns (Q, report); the report holds tau and the
    mutual-reduction check against the defining relations.
    """
    from .constructions import transmute

    ring = beta.ring
    G = beta.group
    ents, sigma = monomial_matrix(ring, [[_lift(x, ring) if hasattr(x, "ring") else x for x in row] for row in A])
    m = len(ents)
    if len(x_exps) != m:
        raise ExampleError("X must have one exponent per row of A")
    xs = [G.element(_ev(x)) for x in x_exps]
    w = G.element(_ev(w))
    w2 = G.add(w, w)
    for i in range(m):
        if G.add(xs[i], xs[sigma[i]]) != w2:
            raise PreconditionFailed(f"A (w^2 Xbar) A^-1 != X at row {i + 1}")
    a = [ents[i][sigma[i]] for i in range(m)]
    c = None
    for i in range(m):
        if sigma[sigma[i]] != i:
            raise PreconditionFailed("A Abar is not diagonal")
        ci = a[i] * a[sigma[i]].conj() * beta.eval(xs[i], w) ** 2
        if c is not None and ci != c:
            raise PreconditionFailed("A Abar is not a constant multiple of X(t_w)^-2")
        c = ci
    tau = c * beta.eval(w, w).inverse() ** 2
    if tau.is_one():
        tau = 1
    elif (-tau).is_one():
        tau = -1
    else:
        raise PreconditionFailed(f"tau = {tau} is not +-1")
    if m % 2 and tau == -1:
        raise PreconditionFailed("tau = -1 is impossible for odd m")
    cs = [beta.eval(G.neg(x), w) for x in xs]
    F = [[a[i] * cs[sigma[i]] if j == sigma[i] else ring.zero() for j in range(m)] for i in range(m)]
    zs = [list(G.sub(x, w)) for x in xs]
    data = ofplus_data(F, zs, ring.to_json(), name=name + "-ofplus", group=G.to_json())
    H = from_json(data, cap_rules=cap_rules, cap_len=cap_len)
    Q = transmute(H, beta, name=name)
    rels, _ = bfo_relations(Q, A, x_exps, beta)
    check = _mutual_reduction(Q, rels, cap_rules, cap_len)
    report = {"schema": 1, "kind": "bfo", "tau": tau, "F": [[str(x) for x in row] for row in F],
              "Z": zs, "checks": {"defining_relations": check}, "status": check["status"]}
    return Q, report


def build_quadruple(A, tau=1, tol=1e-10):
    """A free grading group, X, w and beta realizing a numeric A with A Abar unitary.

    A is first brought to antidiagonal form, a_i in row m-i+1 and column i;
    beta takes fresh unitary values b_i = beta(x_i, w) and is trivial on all
    other generator pairs.  The symbolic matrix has a_i = r_i (a positive
    variable) and a_{m-i+1} = tau b_i^-2 / r_i for i <= m/2, so that
    b_i^2 = tau a_i abar_{m-i+1}.  The returned dict carries numeric shadows of all
    variables and the unitary v with v A v^t equal to the shadow of the
    symbolic matrix.
    """
    import cmath

    import numpy as np

    from . import stdform

    A = stdform.cmatrix(A)
    m = A.shape[0]
    if stdform._unitary_residual(A @ A.conj()) > tol * 10:
        raise NotUnitary("A Abar is not unitary")
    if tau not in (1, -1):
        raise ExampleError("tau must be +1 or -1")
    if m % 2 and tau == -1:
        raise OddMNegativeTau("tau = -1 is impossible for odd m")
    v, M, anti = stdform.tl_form(A)
    k = m // 2
    rank = k + 1
    bs = [f"b{i + 1}" for i in range(k)]
    rs = [f"r{i + 1}" for i in range(k)]
    ring = ScalarRing(1, bs, rs)
    G = FgAbelianGroup(rank)
    e = lambda i: [1 if j == i else 0 for j in range(rank)]
    w = e(k)
    x = [e(i) for i in range(k)]
    if m % 2:
        x.append(w)
    x += [[2 * wi - xi for wi, xi in zip(w, x[k - 1 - i])] for i in range(k)]
    mat = [["1"] * rank for _ in range(rank)]
    for i in range(k):
        mat[i][k] = bs[i]
    beta = Bicharacter(G, ring, mat)
    shadows = {}
    lams = []
    for i in range(k):
        lam = complex(anti[i] * np.conj(anti[m - 1 - i]))
        lams.append(lam)
        shadows[rs[i]] = float(abs(anti[i]))
        shadows[bs[i]] = complex(cmath.sqrt(tau * lam))
    Asym = [["0"] * m for _ in range(m)]
    for i in range(k):
        Asym[m - 1 - i][i] = rs[i]
        Asym[i][m - 1 - i] = f"({tau}) {bs[i]}^-2 {rs[i]}^-1"
    if m % 2:
        Asym[k][k] = "1"
    # symbolic check of x_i x_{m-i+1} = w^2 and beta(x_i^-1 x_{m-i+1}, w) = b_i^-2, whose
    # shadow is tau times the conjugate of a_i abar_{m-i+1}
    for i in range(k):
        if G.add(G.element(x[i]), G.element(x[m - 1 - i])) != G.add(G.element(w), G.element(w)):
            raise ExampleError("internal: exponent pairing broken")
        val = beta.eval(G.sub(G.element(x[m - 1 - i]), G.element(x[i])), G.element(w))
        if val != ring.parse(f"{bs[i]}^-2"):
            raise ExampleError("internal: beta constraint broken")
    num = np.zeros((m, m), dtype=complex)
    for i in range(k):
        num[m - 1 - i, i] = shadows[rs[i]]
        num[i, m - 1 - i] = tau * shadows[bs[i]] ** -2 / shadows[rs[i]]
    if m % 2:
        num[k, k] = 1
    # a_i sits in row m-i+1, column i, as in tl_form
    resid = float(np.linalg.norm(v @ A @ v.T - num, np.inf))
    return {"group": G, "ring": ring, "x": x, "w": w, "beta": beta, "A": Asym, "tau": tau,
            "lambdas": lams, "shadows": shadows, "v": v, "residual": resid}


def meyer_roy_data(Omega, d_exps, d):
    """Check the hypotheses on (Omega, X = diag(t^d_i)) and return the matrix A and its grading data.

    The root zeta is a formal unitary variable ``zt`` for even d; for odd d it
    is eta^4 with eta a fresh unitary variable and the grading doubled.
    """
    d_exps = [int(x) for x in d_exps]
    m = len(d_exps)
    if d % 2:
        if m % 2:
            raise ExampleError("m must be even when d is odd")
        ring = ScalarRing(1, ["eta"])
        zeta = ring.parse("eta^4")
        G = FgAbelianGroup(1)
        beta = Bicharacter(G, ring, [["eta"]])
        x_exps = [2 * x for x in d_exps]
        w = d
    else:
        ring = ScalarRing(1, ["zt"])
        zeta = ring.parse("zt")
        G = FgAbelianGroup(1)
        beta = Bicharacter(G, ring, [["zt"]])
        x_exps = list(d_exps)
        w = d // 2
    Om = [[ring.parse(str(x)) if not hasattr(x, "ring") else x for x in row] for row in Omega]
    if len(Om) != m or any(len(r) != m for r in Om):
        raise ExampleError("Omega must be m x m")
    for i in range(m):
        for j in range(m):
            if Om[i][j] and d_exps[i] + d_exps[j] != d:
                raise SupportConditionFailed(f"omega_{i + 1}{j + 1} != 0 but d_i + d_j != d")
    # Omegabar Omega = c diag(zeta^(d d_i))
    c = None
    for i in range(m):
        for j in range(m):
            s = ring.zero()
            for k in range(m):
                s = s + Om[i][k].conj() * Om[k][j]
            want_zero = i != j
            if want_zero:
                if s:
                    raise OmegaBarOmegaFailed("Omegabar Omega is not diagonal")
                continue
            ci = s * (zeta ** (d * d_exps[i])).inverse()
            if c is not None and ci != c:
                raise OmegaBarOmegaFailed("Omegabar Omega is not a constant multiple of X(zeta^d)")
            c = ci
    if c is None or not c or not c.is_monomial():
        raise OmegaBarOmegaFailed("Omegabar Omega has no unit scalar")
    A = [[Om[j][i] * zeta ** (d * d_exps[j]) for j in range(m)] for i in range(m)]
    return {"ring": ring, "zeta": zeta, "beta": beta, "A": A, "x": x_exps, "w": w, "c": c}


def meyer_roy_relations(Q, A, d_exps, zeta):
    """U unitary and U = A Ubar A^-1 with Ubar = (zeta^(d_i (d_j - d_i)) u_ij*), over Q's alphabet."""
    from .ncalg import padd, pscale

    ring = Q.ring
    ents, sigma = monomial_matrix(ring, A)
    m = len(ents)
    u = _uname(m)
    rels = [Q.poly(r).terms for r in _unitary_relations(m, u)]
    ub = [[pscale(Q.gen(u(i, j) + "'"), zeta ** (d_exps[i] * (d_exps[j] - d_exps[i]))) for j in range(m)]
          for i in range(m)]
    a = [ents[i][sigma[i]] for i in range(m)]
    for i in range(m):
        for j in range(m):
            rels.append(padd(Q.gen(u(i, j)), pscale(ub[sigma[i]][sigma[j]], -(a[i] * a[j].inverse()))))
    return rels, ub


def build_meyer_roy(Omega=None, d_exps=None, d=None, cap_rules=2000, cap_len=12):
    """The quantum group A_o(Omega, X) compared with O_A^{X, beta}.

    Defaults: d = 2, d_i = (1, 1), Omega = [[0, 1], [1, 0]].
    """
    if Omega is None:
        Omega, d_exps, d = [["0", "1"], ["1", "0"]], [1, 1], 2
    if d_exps is None or d is None:
        raise ExampleError("d_exps and d are required with Omega")
    data = meyer_roy_data(Omega, d_exps, d)
    Q, rep = build_bfo(data["A"], data["x"], data["w"], data["beta"], name="meyer-roy",
                       cap_rules=cap_rules, cap_len=cap_len)
    rels, ub = meyer_roy_relations(Q, data["A"], [int(x) for x in d_exps], data["zeta"])
    check = _mutual_reduction(Q, rels, cap_rules, cap_len)
    rep["checks"]["meyer_roy_relations"] = check
    rep["kind"] = "meyer-roy"
    rep["double_cover"] = bool(d % 2)
    rep["A"] = [[str(x) for x in row] for row in data["A"]]
    from .hopf import combine
    rep["status"] = combine(c["status"] for c in rep["checks"].values())
    return Q, rep


# --- displayed braided relations ---

def _residue_check(Q, texts):
    res = {}
    for t in texts:
        r = Q.parse(t)
        if r:
            res[t] = Q.str(r)
    status = "pass" if not res else Q.verdict(next(iter(Q.parse(t) for t in res)))
    return {"status": status, "residues": res, "count": len(texts)}


def braided_suq2_relations():
    """The braided SU_q(2) relations with q' = q lam^2 (q real, lam unitary)."""
    return [
        "alpha gamma - q lam^-2 gamma alpha",
        "alpha gamma' - q lam^2 gamma' alpha",
        "gamma' gamma - gamma gamma'",
        "alpha' alpha + gamma' gamma - 1",
        "alpha alpha' + q^2 gamma gamma' - 1",
    ]


def check_braided_suq2(Q=None):
    """Relations and adjoints of the transmutation of SU_q(2) by lam^(-mn)."""
    from .constructions import transmute

    if Q is None:
        Q = transmute(build_suq2(), beta_lambda())
    checks = {"relations": _residue_check(Q, braided_suq2_relations())}
    lam = Q.ring.parse("lam")
    want = {"alpha'": Q.ring.one(), "gamma'": lam ** -2}
    bad = {n: str(Q.star_factor[Q.sym(n)]) for n, v in want.items() if Q.star_factor[Q.sym(n)] != v}
    checks["stars"] = {"status": "pass" if not bad else "fail", "mismatches": bad}
    from .hopf import combine
    return {"schema": 1, "kind": "braided-suq2", "checks": checks,
            "status": combine(c["status"] for c in checks.values())}


def anyonic_snplus_relations(N):
    """The four relation families of the anyonic quantum permutation group, omega = zeta_N."""
    a = lambda i, j: f"a{i % N}_{j % N}"
    w = lambda e: f"(zeta({N})^{e % N})"
    fam = {"units": [], "stars": [], "left": [], "right": []}
    for i in range(N):
        fam["units"].append(f"{a(0, i)} - 1" if i == 0 else a(0, i))
        if i:
            fam["units"].append(a(i, 0))
    for i in range(N):
        for j in range(N):
            fam["stars"].append(f"{a(i, j)}' - {w(i * (j - i))} {a(-i, -j)}")
    for k in range(N):
        for i in range(N):
            for j in range(N):
                fam["left"].append(f"{a(k, i + j)} - " + " - ".join(
                    f"{w(-l * (i - k + l))} {a(k - l, i)} {a(l, j)}" for l in range(N)))
                fam["right"].append(f"{a(i + j, k)} - " + " - ".join(
                    f"{w(i * (j - l))} {a(j, l)} {a(i, k - l)}" for l in range(N)))
    return fam


def check_anyonic_snplus(N, Q=None):
    from .constructions import transmute
    from .hopf import combine

    if Q is None:
        Q = transmute(build_snplus(N), beta_anyonic(N))
    checks = {k: _residue_check(Q, v) for k, v in anyonic_snplus_relations(N).items()}
    return {"schema": 1, "kind": "anyonic-snplus", "N": N, "checks": checks,
            "status": combine(c["status"] for c in checks.values())}


# --- registry ---

def _standard_suite(H, beta, extra=None):
    """verify_hopf on H, verify_braided_hopf on its transmutation, verify_hopf on the bosonization."""
    from .constructions import bosonize, transmute
    from .hopf import combine, verify_braided_hopf, verify_hopf

    out = {"hopf": verify_hopf(H)}
    T = transmute(H, beta)
    out["braided"] = verify_braided_hopf(T)
    out["bosonization"] = verify_hopf(bosonize(T))
    if extra:
        out.update(extra(H, T))
    return {"schema": 1, "kind": "example", "presentation": H.name,
            "checks": {k: {"status": v["status"]} for k, v in out.items()},
            "reports": out, "status": combine(v["status"] for v in out.values())}


def _suq2_extra(H, T):
    from .abgroup import SubgroupSpec
    from .constructions import verify_thm_main
    S = SubgroupSpec(H.group, [[2]])
    return {"braided_relations": check_braided_suq2(T),
            "thm_main": verify_thm_main(H, S, beta_lambda(H.ring))}


def _snplus_extra(N):
    return lambda H, T: {"anyonic_relations": check_anyonic_snplus(N, T)}


def _bfo_example():
    qd = build_quadruple([[0, 1], [1, 0]], 1)
    return build_bfo(qd["A"], qd["x"], qd["w"], qd["beta"], name="bfo-m2")


def _braided_verify(build):
    from .hopf import combine, verify_braided_hopf

    Q, rep = build()
    vb = verify_braided_hopf(Q)
    checks = dict(rep["checks"])
    checks["braided"] = {"status": vb["status"]}
    return {"schema": 1, "kind": "example", "presentation": Q.name, "checks": checks,
            "reports": {"construction": rep, "braided": vb},
            "status": combine(c["status"] for c in checks.values())}


EXAMPLES = {
    "suq2": ("SU_q(2) over the circle", lambda: suq2_data(),
             lambda H: _standard_suite(H, beta_lambda(H.ring), _suq2_extra)),
    "ofplus": ("O_F^+ with F = [[0,1],[-1,0]]", lambda: ofplus_data(),
               lambda H: _standard_suite(H, beta_lambda(H.ring))),
    "ofplus-q": ("O_F^+ with F = [[0,r],[-1/r,0]], r^2 = q", ofplus_q_data,
                 lambda H: _standard_suite(H, beta_lambda(H.ring))),
    "ufplus": ("U_F^+ with F = 1, m = 2", lambda: ufplus_data(),
               lambda H: _standard_suite(H, beta_lambda(H.ring))),
    "s2plus": ("S_2^+ in homogeneous generators", lambda: snplus_data(2),
               lambda H: _standard_suite(H, beta_anyonic(2), _snplus_extra(2))),
    "s3plus": ("S_3^+ in homogeneous generators", lambda: snplus_data(3),
               lambda H: _standard_suite(H, beta_anyonic(3), _snplus_extra(3))),
    "s4plus": ("S_4^+ in homogeneous generators", lambda: snplus_data(4),
               lambda H: _standard_suite(H, beta_anyonic(4), _snplus_extra(4))),
}

BRAIDED_EXAMPLES = {
    "suq2-braided": ("SU_q(2) transmuted by lam^(-mn)",
                     lambda: _transmuted(build_suq2(), beta_lambda())),
    "s3plus-anyonic": ("anyonic S_3^+", lambda: _transmuted(build_snplus(3), beta_anyonic(3))),
    "bfo-m2": ("O_A^{X,beta} for A = [[0,1],[1,0]] via its quadruple", _bfo_example),
    "meyer-roy": ("A_o(Omega, X) for d = 2, d_i = (1, 1)", lambda: build_meyer_roy()),
    "meyer-roy-odd": ("A_o(Omega, X) for d = 1, d_i = (0, 1), via the double cover",
                      lambda: build_meyer_roy([["0", "1"], ["eta^-2", "0"]], [0, 1], 1)),
}


def _transmuted(H, beta):
    from .constructions import transmute
    from .hopf import verify_braided_hopf

    Q = transmute(H, beta)
    rep = verify_braided_hopf(Q)
    return Q, {"checks": {"transmutation": {"status": rep["status"]}}}


def example_names():
    return list(EXAMPLES) + list(BRAIDED_EXAMPLES)


def build_example(name, cap_rules=None, cap_len=None):
    """The presentation of a named example."""
    if name in EXAMPLES:
        return from_json(EXAMPLES[name][1](), cap_rules, cap_len)
    if name in BRAIDED_EXAMPLES:
        return BRAIDED_EXAMPLES[name][1]()[0]
    raise ExampleError(f"unknown example {name!r}")


def verify_example(name, cap_rules=None, cap_len=None):
    if name in EXAMPLES:
        return EXAMPLES[name][2](build_example(name, cap_rules, cap_len))
    if name in BRAIDED_EXAMPLES:
        return _braided_verify(BRAIDED_EXAMPLES[name][1])
    raise ExampleError(f"unknown example {name!r}")


def describe_example(name):
    return (EXAMPLES.get(name) or BRAIDED_EXAMPLES[name])[0]
