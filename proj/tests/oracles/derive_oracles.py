"""Independent sympy oracle for the frozen values in oracles.json.

Everything here is recomputed from textbook formulas with sympy and shares no
code with the C++ engine. Run from the repo root:

    python3 tests/oracles/derive_oracles.py > tests/oracles/oracles.json
"""
import json

import mpmath
import sympy as sp

x1, x2, x3, y1, y2, y3, S = sp.symbols("x1 x2 x3 y1 y2 y3 sigma")
X = [x1, x2, x3]
Y = [y1, y2, y3]
Z = X + Y
n = 3

P0 = {x1: sp.Rational(1, 2), x2: -1, x3: 2, y1: 1, y2: 2, y3: 3}


def q(v):
    return str(sp.nsimplify(v))


def in_field(expr, p, qq):
    """a + b*sigma for an exact number in Q(sqrt(p^2+4q))."""
    D = p * p + 4 * qq
    root = (p + sp.sqrt(D)) / 2
    v = sp.radsimp(sp.nsimplify(sp.simplify(expr.subs(S, root))))
    v = sp.expand(v)
    b = v.coeff(sp.sqrt(D)) if not sp.sqrt(D).is_Rational else 0
    a = sp.simplify(v - b * sp.sqrt(D))
    # sqrt(D) = 2 sigma - p
    return [q(a - b * p), q(2 * b)] if b != 0 else [q(v), "0"]


# H^3 upper half-space
g = sp.diag(*[1 / x3**2] * 3)
ginv = g.inv()
Gam = [[[sum(ginv[k, l] * (sp.diff(g[l, i], X[j]) + sp.diff(g[l, j], X[i]) - sp.diff(g[i, j], X[l])) / 2
             for l in range(n)) for j in range(n)] for i in range(n)] for k in range(n)]  # Gam[k][i][j]
phi = sp.Matrix([[-1, 0, 0], [0, -1, 0], [0, 0, 0]])
eta = sp.Matrix([[0, 0, 1 / x3]])
xi = sp.Matrix([0, 0, x3])


def nabla_base(Xv, Yv):
    return sp.Matrix([sum(Xv[i] * sp.diff(Yv[k], X[i]) for i in range(n))
                      + sum(Gam[k][i][j] * Xv[i] * Yv[j] for i in range(n) for j in range(n)) for k in range(n)])


def riemann(Xv, Yv, Wv):
    br = sp.Matrix([sum(Xv[i] * sp.diff(Yv[k], X[i]) - Yv[i] * sp.diff(Xv[k], X[i]) for i in range(n)) for k in range(n)])
    return nabla_base(Xv, nabla_base(Yv, Wv)) - nabla_base(Yv, nabla_base(Xv, Wv)) - nabla_base(br, Wv)


e = [sp.Matrix([1 if i == k else 0 for i in range(n)]) for k in range(n)]
at2 = {x1: 1, x2: 1, x3: 2}

out = {}

# symcore
s21 = (2 + mpmath.sqrt(8)) / 2
out["sigma_2_1_float"] = float(s21)
out["one_plus_sigma_squared_1_1"] = in_field((1 + S) ** 2, 1, 1)
f = 1 / x3**2
d2 = sp.diff(f, x3, 2).subs(x3, 2)
h = mpmath.mpf("1e-4")
fd = (mpmath.mpf(1) / (2 + h) ** 2 - 2 * mpmath.mpf(1) / 4 + mpmath.mpf(1) / (2 - h) ** 2) / h**2
assert abs(fd - float(d2)) < 1e-6
out["d2_inv_x3_squared_at_2"] = q(d2)

# manifold at (1,1,2)
out["christoffel_at_1_1_2"] = {"3_11": q(Gam[2][0][0].subs(at2)), "1_13": q(Gam[0][0][2].subs(at2)),
                              "3_33": q(Gam[2][2][2].subs(at2))}
out["riemann_d1_d2_d2_at_1_1_2"] = [q(c.subs(at2)) for c in riemann(e[0], e[1], e[1])]
out["nabla_d1_xi_at_1_1_2"] = [q(c.subs(at2)) for c in nabla_base(e[0], xi)]
out["eta_nabla_d1_d1_at_1_1_2"] = q((eta * nabla_base(e[0], e[0]))[0].subs(at2))

# bundle objects in coordinates (x, y)
def yd(expr):
    return sum(Y[k] * sp.diff(expr, X[k]) for k in range(n))


B = sp.Matrix(n, n, lambda l, i: -sum(Y[k] * Gam[l][k][i] for k in range(n)))
N = sp.BlockMatrix([[sp.eye(n), sp.zeros(n)], [B, sp.eye(n)]]).as_explicit()  # columns: H_i then V_i
Ninv = N.inv()

gc = sp.BlockMatrix([[g.applyfunc(yd), g], [g, sp.zeros(n)]]).as_explicit()
G = (Ninv.T * sp.diag(g, g) * Ninv).applyfunc(sp.simplify)
gh = (Ninv.T * sp.BlockMatrix([[sp.zeros(n), g], [g, sp.zeros(n)]]).as_explicit() * Ninv).applyfunc(sp.simplify)

out["point"] = {"x": [q(P0[v]) for v in X], "y": [q(P0[v]) for v in Y]}
out["gc_d1c_d1c_at_point"] = q(gc[0, 0].subs(P0))
out["adapted_H1_at_point"] = [q(c.subs(P0)) for c in N[:, 0]]
out["sasaki_at_point"] = [[q(G[i, j].subs(P0)) for j in range(2 * n)] for i in range(2 * n)]
out["hlift_metric_at_point"] = [[q(gh[i, j].subs(P0)) for j in range(2 * n)] for i in range(2 * n)]
out["hlift_x3_at_point"] = q((yd(x3) - sum(Y[j] * sp.diff(x3, X[j]) for j in range(n))).subs(P0))
out["det_gc_at_point"] = q(gc.det().subs(P0))


def clift_vec(v):
    return sp.Matrix(list(v) + [yd(c) for c in v])


def vlift_vec(v):
    return sp.Matrix([0] * n + list(v))


def hlift_vec(v):
    return N * sp.Matrix(list(v) + [0] * n)


phic = sp.BlockMatrix([[phi, sp.zeros(n)], [phi.applyfunc(yd), phi]]).as_explicit()
phih = N * sp.diag(phi, phi) * Ninv
eta_v = sp.Matrix([[*eta, 0, 0, 0]])
eta_c = sp.Matrix([[*[yd(c) for c in eta], *eta]])
eta_h = sp.Matrix([[0, 0, 0, *eta]]) * Ninv
xi_v, xi_c, xi_h = vlift_vec(xi), clift_vec(xi), hlift_vec(xi)
I6 = sp.eye(2 * n)


def J_of(p, e1=1, e2=1):
    c = (2 * S - p) / 2
    return sp.Rational(p, 2) * I6 - c * (phic + e1 * xi_v * eta_v + e2 * xi_c * eta_c)


def F_of(p):
    c = (2 * S - p) / 2
    return sp.Rational(p, 2) * I6 - c * (phih + xi_h * eta_h + xi_v * eta_v)


def christoffel(metric):
    inv = metric.inv()
    m = metric.shape[0]
    d = [[[sp.diff(metric[a, b], Z[k]) for k in range(m)] for b in range(m)] for a in range(m)]
    return [[[sp.simplify(sum(inv[k, l] * (d[l][i][j] + d[l][j][i] - d[i][j][l]) for l in range(m)) / 2)
              for j in range(m)] for i in range(m)] for k in range(m)]


def nabla(C, A, Bv):
    m = len(A)
    return sp.Matrix([sum(A[i] * sp.diff(Bv[k], Z[i]) for i in range(m))
                      + sum(C[k][i][j] * A[i] * Bv[j] for i in range(m) for j in range(m)) for k in range(m)])


def bracket(A, Bv):
    m = len(A)
    return sp.Matrix([sum(A[i] * sp.diff(Bv[k], Z[i]) - Bv[i] * sp.diff(A[k], Z[i]) for i in range(m)) for k in range(m)])


def nijenhuis_pair(T, A, Bv):
    return bracket(T * A, T * Bv) - T * bracket(T * A, Bv) - T * bracket(A, T * Bv) + T * T * bracket(A, Bv)


E6 = [sp.Matrix([1 if i == k else 0 for i in range(2 * n)]) for k in range(2 * n)]

# The complete lift of the Levi-Civita connection of g is the Levi-Civita
# connection of g^c.
Cc = christoffel(gc)
for pq in [(1, 1), (3, 5)]:
    p, qq = pq
    tag = f"{p}_{qq}"
    J, F = J_of(p), F_of(p)
    out[f"J_{tag}_at_point"] = [[in_field(J[i, j].subs(P0), p, qq) for j in range(2 * n)] for i in range(2 * n)]
    out[f"F_{tag}_at_point"] = [[in_field(F[i, j].subs(P0), p, qq) for j in range(2 * n)] for i in range(2 * n)]
    X1c = clift_vec(e[0])
    par = nabla(Cc, X1c, J * xi_c) - J * nabla(Cc, X1c, xi_c)
    out[f"nablac_J_xic_d1_{tag}_at_point"] = [in_field(c.subs(P0), p, qq) for c in par]
    nf = nijenhuis_pair(F, E6[0], E6[2])
    out[f"NF_dx1_dx3_{tag}_at_point"] = [in_field(c.subs(P0), p, qq) for c in nf]
    nj = nijenhuis_pair(J, E6[0], E6[2])
    out[f"NJ_dx1_dx3_{tag}_at_point"] = [in_field(c.subs(P0), p, qq) for c in nj]

    # dPhi'(X^h, X^v, xi^v) for the unit field X = x3 d/dx1, coboundary with the 1/3 factor
    Xu = sp.Matrix([x3, 0, 0])
    A, Bv, Cv = hlift_vec(Xu), vlift_vec(Xu), xi_v
    Phi = G * F - sp.Rational(p, 2) * G

    def Phi_on(U, V):
        return (U.T * Phi * V)[0]

    def dirv(U, fexpr):
        return sum(U[i] * sp.diff(fexpr, Z[i]) for i in range(2 * n))

    three_d = (dirv(A, Phi_on(Bv, Cv)) + dirv(Bv, Phi_on(Cv, A)) + dirv(Cv, Phi_on(A, Bv))
               - Phi_on(bracket(A, Bv), Cv) - Phi_on(bracket(Bv, Cv), A) - Phi_on(bracket(Cv, A), Bv))
    out[f"dPhiprime_xh_xv_xiv_{tag}_at_point"] = in_field((three_d / 3).subs(P0), p, qq)

# Mixed sign variants: J^2 - pJ - qI applied to d/dx3 at the point.
for pq in [(1, 1), (3, 5)]:
    p, qq = pq
    for e1, e2 in [(1, -1), (-1, 1)]:
        J = J_of(p, e1, e2)
        R = (J * J - p * J - qq * I6) * E6[2]
        key = f"J_{p}_{qq}_{'+' if e1 > 0 else '-'}{'+' if e2 > 0 else '-'}_residual_dx3_at_point"
        out[key] = [in_field(sp.expand(c.subs(P0)), p, qq) for c in R]

print(json.dumps(out, indent=1))
