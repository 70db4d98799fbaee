"""The braided Hopf algebra H_-> attached to a matched pair, and the two
n^2-dimensional Hopf algebras built from it.

H_-> has product x . y = x1 (S(x2) -> y) (called ``bullet``), antipode
S_->(x) = x1 -> S(x2), coaction Ad_L(x) = x1 S(x3) (x) x2 and pre-braiding
c(x (x) y) = (x1 S(x3) -> y) (x) x2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .hopf import HopfAlgebra, tensor, vadd
from .linalg import Matrix, Tensor3, eye, kron
from .matched_pair import ActionPair, _action_table, _bilinear
from .report import AxiomReport, Check, compare_maps, compare_matrices, timed
from .scalars import ONE

__all__ = [
    "TransmutationData",
    "build_transmutation",
    "verify_yd_module",
    "verify_braided_hopf",
    "braided_commutativity_check",
    "check_hopf_brace_compat",
    "AdjointActions",
    "adjoint_actions",
    "double_cross_product",
    "bosonization",
    "phi_isomorphism",
    "IntertwinerError",
]


class IntertwinerError(ArithmeticError):
    def __init__(self, check: Check, basis=None):
        self.check = check
        where = "" if check.witness is None else f" at {check.witness.describe(basis)}"
        super().__init__(f"Phi fails: {check.name}{where}")


def _clean(v: dict) -> dict:
    return {k: c for k, c in v.items() if c}


def _lin(table, x: dict) -> dict:
    acc: dict = {}
    for i, a in x.items():
        vadd(acc, table[i], a)
    return _clean(acc)


@dataclass
class TransmutationData:
    H: HopfAlgebra
    pair: ActionPair
    bullet: Tensor3
    s_round: Matrix
    ad_l_coaction: Matrix
    prebraiding: Matrix

    def __post_init__(self):
        n = self.H.dim
        self._B = [[self.bullet.image(i, j) for j in range(n)] for i in range(n)]
        self._Sr = [dict(self.s_round.column(i)) for i in range(n)]
        self._co = [{divmod(k, n): c for k, c in self.ad_l_coaction.column(i).items()} for i in range(n)]
        self._c = [[{divmod(k, n): c for k, c in self.prebraiding.column(i * n + j).items()}
                    for j in range(n)] for i in range(n)]

    def bmul(self, x: dict, y: dict) -> dict:
        return _bilinear(self._B, x, y)

    def s_round_apply(self, x: dict) -> dict:
        return _lin(self._Sr, x)

    def coact(self, x: dict) -> dict:
        return _lin(self._co, x)

    def c_apply(self, v: dict) -> dict:
        acc: dict = {}
        for (i, j), a in v.items():
            vadd(acc, self._c[i][j], a)
        return _clean(acc)


def build_transmutation(pair: ActionPair) -> TransmutationData:
    H, n, e = pair.H, pair.H.dim, pair.H.e
    S = H.antipode

    def bullet(x, y):
        acc: dict = {}
        for (x1, x2), c in H._delta[x].items():
            vadd(acc, H.mul(e(x1), pair.lact(S(e(x2)), e(y))), c)
        return acc

    def s_round(x):
        acc: dict = {}
        for (x1, x2), c in H._delta[x].items():
            vadd(acc, pair.lact(e(x1), S(e(x2))), c)
        return _clean(acc)

    def coaction(x):
        acc: dict = {}
        for (x1, x2, x3), c in H.sweedler(x, 3).items():
            vadd(acc, tensor(H.mul(e(x1), S(e(x3))), e(x2)), c)
        return {p * n + q: v for (p, q), v in acc.items() if v}

    def prebraid(x, y):
        acc: dict = {}
        for (x1, x2, x3), c in H.sweedler(x, 3).items():
            vadd(acc, tensor(pair.lact(H.mul(e(x1), S(e(x3))), e(y)), e(x2)), c)
        return {p * n + q: v for (p, q), v in acc.items() if v}

    return TransmutationData(
        H=H,
        pair=pair,
        bullet=Tensor3.from_function(n, bullet),
        s_round=Matrix.from_columns(n, [s_round(x) for x in range(n)]),
        ad_l_coaction=Matrix.from_columns(n * n, [coaction(x) for x in range(n)]),
        prebraiding=Matrix.from_columns(n * n, [prebraid(x, y) for x in range(n) for y in range(n)]),
    )


def verify_yd_module(H: HopfAlgebra, action, coaction: Matrix) -> AxiomReport:
    """H acting and coacting on itself: module, comodule and the Yetter-Drinfeld
    condition rho(x.m) = x1 m_{-1} S(x3) (x) x2.m_0."""
    n, e = H.dim, H.e
    T = _action_table(H, action)
    if coaction.shape != (n * n, n):
        raise ValueError(f"coaction must be {n * n}x{n}")
    rho = [{divmod(k, n): c for k, c in coaction.column(i).items()} for i in range(n)]
    act = lambda x, y: _bilinear(T, x, y)  # noqa: E731
    report = AxiomReport(f"Yetter-Drinfeld module over {H.name}", basis=H.basis)

    def rho_lin(v):
        acc: dict = {}
        for i, a in v.items():
            vadd(acc, rho[i], a)
        return _clean(acc)

    def coassoc_lhs(m):
        acc: dict = {}
        for (p, q), c in rho[m].items():
            vadd(acc, tensor(H.delta(e(p)), e(q)), c)
        return acc

    def coassoc_rhs(m):
        acc: dict = {}
        for (p, q), c in rho[m].items():
            vadd(acc, tensor(e(p), rho[q]), c)
        return acc

    def counit(m):
        acc: dict = {}
        for (p, q), c in rho[m].items():
            vadd(acc, e(q), c * H.counit[p])
        return acc

    def yd_rhs(x, m):
        acc: dict = {}
        for (x1, x2, x3), c in H.sweedler(x, 3).items():
            for (p, q), d in rho[m].items():
                vadd(acc, tensor(H.prod(e(x1), e(p), H.antipode(e(x3))), T[x2][q]), c * d)
        return acc

    with timed(report):
        report.add(compare_maps("module action", lambda i, j, k: act(H._mul[i][j], e(k)),
                                lambda i, j, k: act(e(i), T[j][k]), n, 3))
        report.add(compare_maps("module unit", lambda j: act(H.one(), e(j)), e, n, 1))
        report.add(compare_maps("comodule coassociativity", coassoc_lhs, coassoc_rhs, n, 1))
        report.add(compare_maps("comodule counit", counit, e, n, 1))
        report.add(compare_maps("Yetter-Drinfeld compatibility",
                                lambda x, m: rho_lin(T[x][m]), yd_rhs, n, 2))
    return report


def braided_commutativity_check(T: TransmutationData) -> Check:
    """m_bullet c = m_bullet."""
    n = T.H.dim

    def lhs(x, y):
        acc: dict = {}
        for (u, w), c in T._c[x][y].items():
            vadd(acc, T._B[u][w], c)
        return acc

    return compare_maps("braided commutative: m_bullet c = m_bullet", lhs,
                        lambda x, y: T._B[x][y], n, 2)


def verify_braided_hopf(T: TransmutationData) -> AxiomReport:
    """Checks that (H, bullet, 1, Delta, eps, S_->) is a Hopf algebra in the
    Yetter-Drinfeld category with pre-braiding c."""
    H, n, e = T.H, T.H.dim, T.H.e
    pair = T.pair
    L, B, co, D = pair._L, T._B, T._co, H._delta
    one = H.one()
    report = AxiomReport(f"braided Hopf algebra H_-> for {pair.name} on {H.name}", basis=H.basis)

    def coact_pair(y, z):
        """Ad_L on H(x)H: y_{-1} z_{-1} (x) y_0 (x) z_0."""
        acc: dict = {}
        for (p, q), c in co[y].items():
            for (s, t), d in co[z].items():
                vadd(acc, tensor(H._mul[p][s], e(q), e(t)), c * d)
        return acc

    def bullet_module(x, y, z):
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            vadd(acc, T.bmul(L[x1][y], L[x2][z]), c)
        return acc

    def bullet_comodule_rhs(y, z):
        acc: dict = {}
        for (h, a, b), c in coact_pair(y, z).items():
            vadd(acc, tensor(e(h), B[a][b]), c)
        return acc

    def coact_lin(v):
        acc: dict = {}
        for i, a in v.items():
            vadd(acc, co[i], a)
        return _clean(acc)

    def delta_comodule_lhs(y):
        acc: dict = {}
        for (p, q), c in co[y].items():
            vadd(acc, tensor(e(p), H.delta(e(q))), c)
        return acc

    def delta_comodule_rhs(y):
        acc: dict = {}
        for (y1, y2), c in D[y].items():
            vadd(acc, coact_pair(y1, y2), c)
        return acc

    def delta_module_rhs(x, y):
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            for (y1, y2), d in D[y].items():
                vadd(acc, tensor(L[x1][y1], L[x2][y2]), c * d)
        return acc

    def eps_comodule(y):
        acc: dict = {}
        for (p, q), c in co[y].items():
            vadd(acc, e(p), c * H.counit[q])
        return acc

    def s_comodule_rhs(y):
        acc: dict = {}
        for (p, q), c in co[y].items():
            vadd(acc, tensor(e(p), T._Sr[q]), c)
        return acc

    def braided_bialgebra_rhs(x, y):
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            for (y1, y2), d in D[y].items():
                for (u, w), k in T._c[x2][y1].items():
                    vadd(acc, tensor(B[x1][u], B[w][y2]), c * d * k)
        return acc

    def antipode_law(left):
        def f(x):
            acc: dict = {}
            for (x1, x2), c in D[x].items():
                if left:
                    vadd(acc, T.bmul(T._Sr[x1], e(x2)), c)
                else:
                    vadd(acc, T.bmul(e(x1), T._Sr[x2]), c)
            return acc
        return f

    unit_eps = lambda x: {k: v * H.counit[x] for k, v in one.items()}  # noqa: E731
    I = eye(n)
    Cm = T.prebraiding

    with timed(report):
        report.extend(verify_yd_module(H, pair.left, T.ad_l_coaction), "YD: ")
        report.add(compare_maps("bullet associative", lambda x, y, z: T.bmul(B[x][y], e(z)),
                                lambda x, y, z: T.bmul(e(x), B[y][z]), n, 3))
        report.add(compare_maps("bullet unit", lambda x: T.bmul(one, e(x)), e, n, 1))
        report.add(compare_maps("bullet unit (right)", lambda x: T.bmul(e(x), one), e, n, 1))
        report.add(compare_maps("bullet is a module map", lambda x, y, z: pair.lact(e(x), B[y][z]),
                                bullet_module, n, 3))
        report.add(compare_maps("bullet is a comodule map", lambda y, z: coact_lin(B[y][z]),
                                bullet_comodule_rhs, n, 2))
        report.add(compare_maps("unit is a module map", lambda x: pair.lact(e(x), one), unit_eps, n, 1))
        report.add(compare_maps("unit is a comodule map", lambda _: coact_lin(one),
                                lambda _: tensor(one, one), 1, 1))
        report.add(compare_maps("Delta is a module map", lambda x, y: H.delta(L[x][y]),
                                delta_module_rhs, n, 2))
        report.add(compare_maps("Delta is a comodule map", delta_comodule_lhs, delta_comodule_rhs, n, 1))
        report.add(compare_maps("eps is a module map", lambda x, y: H.eps(L[x][y]),
                                lambda x, y: H.counit[x] * H.counit[y], n, 2))
        report.add(compare_maps("eps is a comodule map", eps_comodule,
                                lambda y: {k: v * H.counit[y] for k, v in one.items()}, n, 1))
        report.add(compare_maps("S_-> is a module map", lambda x, y: T.s_round_apply(L[x][y]),
                                lambda x, y: pair.lact(e(x), T._Sr[y]), n, 2))
        report.add(compare_maps("S_-> is a comodule map", lambda y: coact_lin(T._Sr[y]),
                                s_comodule_rhs, n, 1))
        report.add(compare_maps("eps(x . y) = eps(x)eps(y)", lambda x, y: H.eps(B[x][y]),
                                lambda x, y: H.counit[x] * H.counit[y], n, 2))
        report.add(compare_maps("braided bialgebra: Delta(x . y) = (m_b(x)m_b)(id(x)c(x)id)(Delta x(x)Delta y)",
                                lambda x, y: H.delta(B[x][y]), braided_bialgebra_rhs, n, 2))
        report.add(compare_maps("S_->(x1) . x2 = eps(x)1", antipode_law(True), unit_eps, n, 1))
        report.add(compare_maps("x1 . S_->(x2) = eps(x)1", antipode_law(False), unit_eps, n, 1))
        c12, c23 = kron(Cm, I), kron(I, Cm)
        report.add(compare_matrices("c satisfies the braid equation", c12 @ c23 @ c12, c23 @ c12 @ c23, n))
    return report


def check_hopf_brace_compat(pair: ActionPair, T: TransmutationData) -> Check:
    """x(y . z) = (x1 y) . S_->(x2) . (x3 z)."""
    H, n, e = pair.H, pair.H.dim, pair.H.e

    def rhs(x, y, z):
        acc: dict = {}
        for (x1, x2, x3), c in H.sweedler(x, 3).items():
            left = T.bmul(H._mul[x1][y], T._Sr[x2])
            vadd(acc, T.bmul(left, H._mul[x3][z]), c)
        return acc

    return compare_maps("x(y . z) = (x1 y) . S_->(x2) . (x3 z)",
                        lambda x, y, z: H.mul(e(x), T._B[y][z]), rhs, n, 3)


class AdjointActions(NamedTuple):
    """ad_L[k, x*n + y] is the coefficient of e_k in ad_{L,x}(y);
    ad_R[k, x*n + y] that of e_k in ad_{R,y}(x)."""

    ad_L: Matrix
    ad_R: Matrix

    def left_trivial(self, H: HopfAlgebra) -> Check:
        """ad_{L,x}(y) = eps(x) y."""
        return compare_matrices("ad_L trivial", self.ad_L, kron(H.e_, eye(H.dim)), H.dim)

    def right_trivial(self, H: HopfAlgebra) -> Check:
        """ad_{R,y}(x) = x eps(y)."""
        return compare_matrices("ad_R trivial", self.ad_R, kron(eye(H.dim), H.e_), H.dim)


def adjoint_actions(pair: ActionPair, T: TransmutationData | None = None) -> AdjointActions:
    """Closed forms of the two adjoint actions of H_->, cross-checked against
    their definitions through bullet, c and S_->."""
    from .braiding import InternalInconsistencyError

    H, n, e = pair.H, pair.H.dim, pair.H.e
    if T is None:
        T = build_transmutation(pair)
    S, lact, ract = H.antipode, pair.lact, pair.ract

    def ad_l_closed(x, y):
        acc: dict = {}
        for (x1, x2, x3, x4), c in H.sweedler(x, 4).items():
            for (y1, y2), d in H._delta[y].items():
                u = lact(S(e(x4)), e(y1))
                w = lact(S(lact(S(e(x3)), e(y2))), S(e(x2)))
                vadd(acc, H.prod(e(x1), u, w), c * d)
        return acc

    def ad_l_composed(x, y):
        acc: dict = {}
        for (x1, x2), c in H._delta[x].items():
            for (u, w), d in T._c[x2][y].items():
                vadd(acc, T.bmul(T._B[x1][u], T._Sr[w]), c * d)
        return acc

    def ad_r_closed(x, y):
        acc: dict = {}
        for (x1, x2, x3, x4), c in H.sweedler(x, 4).items():
            for (y1, y2), d in H._delta[y].items():
                u = lact(e(x1), lact(S(e(x4)), e(y1)))
                w = ract(e(x2), lact(S(e(x3)), e(y2)))
                vadd(acc, lact(u, w), c * d)
        return acc

    def ad_r_composed(x, y):
        acc: dict = {}
        for (y1, y2), c in H._delta[y].items():
            for (u, w), d in T._c[x][y1].items():
                vadd(acc, T.bmul(T.bmul(T._Sr[u], e(w)), e(y2)), c * d)
        return acc

    for name, closed, composed in (("ad_L", ad_l_closed, ad_l_composed),
                                   ("ad_R", ad_r_closed, ad_r_composed)):
        check = compare_maps(name, closed, composed, n, 2)
        if not check:
            raise InternalInconsistencyError(
                f"{name} closed form differs from its definition at {check.witness.describe(H.basis)}")

    cols_l = [_clean(ad_l_closed(x, y)) for x in range(n) for y in range(n)]
    cols_r = [_clean(ad_r_closed(x, y)) for x in range(n) for y in range(n)]
    return AdjointActions(Matrix.from_columns(n, cols_l), Matrix.from_columns(n, cols_r))


# -- n^2-dimensional Hopf algebras ------------------------------------------

def _product_hopf(name, H: HopfAlgebra, mul_pair, delta_pair, antipode_pair) -> HopfAlgebra:
    """Assemble a Hopf algebra on H(x)H; the callbacks take basis pairs (a, x)
    and return {(b, y): c} or {((b, y), (c, z)): k}."""
    n = H.dim
    N = n * n
    basis = [f"{H.basis[a]}|{H.basis[x]}" for a in range(n) for x in range(n)]
    flat = lambda k: k[0] * n + k[1]  # noqa: E731

    def mult(p, q):
        return {flat(k): c for k, c in mul_pair(divmod(p, n), divmod(q, n)).items() if c}

    comult_cols = []
    antipode_cols = []
    for p in range(N):
        ax = divmod(p, n)
        comult_cols.append({flat(k1) * N + flat(k2): c for (k1, k2), c in delta_pair(ax).items() if c})
        antipode_cols.append({flat(k): c for k, c in antipode_pair(ax).items() if c})
    unit = [ONE if p == 0 else 0 for p in range(N)]
    counit = [H.counit[a] * H.counit[x] for a in range(n) for x in range(n)]
    return HopfAlgebra(name, basis, Tensor3.from_function(N, mult), unit,
                       Matrix.from_columns(N * N, comult_cols), counit,
                       Matrix.from_columns(N, antipode_cols))


def double_cross_product(pair: ActionPair) -> HopfAlgebra:
    """H bowtie H: (a(x)x)(b(x)y) = a(x1 -> b1) (x) (x2 <- b2)y, tensor coproduct,
    S(a(x)x) = (1(x)S(x))(S(a)(x)1)."""
    H, e = pair.H, pair.H.e
    L, R, D = pair._L, pair._R, H._delta
    if H.one() != {0: ONE}:
        raise ValueError("the unit of H must be the first basis vector")

    def mul(ax, by):
        a, x = ax
        b, y = by
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            for (b1, b2), d in D[b].items():
                vadd(acc, tensor(H.mul(e(a), L[x1][b1]), H.mul(R[x2][b2], e(y))), c * d)
        return acc

    def delta(ax):
        a, x = ax
        out: dict = {}
        for (a1, a2), c in D[a].items():
            for (x1, x2), d in D[x].items():
                key = ((a1, x1), (a2, x2))
                out[key] = out.get(key, 0) + c * d
        return out

    def antipode(ax):
        a, x = ax
        acc: dict = {}
        for s, c in H.antipode(e(x)).items():
            for t, d in H.antipode(e(a)).items():
                vadd(acc, mul((0, s), (t, 0)), c * d)
        return acc

    return _product_hopf(f"{H.name}#dcp#{pair.name}", H, mul, delta, antipode)


def bosonization(T: TransmutationData) -> HopfAlgebra:
    """H_-> # H: (a(x)x)(b(x)y) = a . (x1 -> b) (x) x2 y and
    Delta(a(x)x) = (a1 (x) (a2)_{-1} x1) (x) ((a2)_0 (x) x2)."""
    H, e, D = T.H, T.H.e, T.H._delta
    if H.one() != {0: ONE}:
        raise ValueError("the unit of H must be the first basis vector")
    L = T.pair._L

    def mul(ax, by):
        a, x = ax
        b, y = by
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            vadd(acc, tensor(T.bmul(e(a), L[x1][b]), H._mul[x2][y]), c)
        return acc

    def delta(ax):
        a, x = ax
        out: dict = {}
        for (a1, a2), c in D[a].items():
            for (h, a0), d in T._co[a2].items():
                for (x1, x2), k in D[x].items():
                    for hx, m in H._mul[h][x1].items():
                        key = ((a1, hx), (a0, x2))
                        out[key] = out.get(key, 0) + c * d * k * m
        return out

    def antipode(ax):
        # S(a#x) = (1 # S(a_{-1} x)) (S_->(a_0) # 1)
        a, x = ax
        acc: dict = {}
        for (h, a0), c in T._co[a].items():
            for s, d in H.antipode(H._mul[h][x]).items():
                for t, k in T._Sr[a0].items():
                    vadd(acc, mul((0, s), (t, 0)), c * d * k)
        return acc

    return _product_hopf(f"{H.name}#bos#{T.pair.name}", H, mul, delta, antipode)


def phi_isomorphism(pair: ActionPair, T: TransmutationData | None = None,
                    dcp: HopfAlgebra | None = None, bos: HopfAlgebra | None = None) -> Matrix:
    """Phi(x(x)y) = x1 (x) x2 y from H bowtie H to H_-> # H, with inverse
    x(x)y -> x1 (x) S(x2) y.  Returned only after checking that it is an
    isomorphism of Hopf algebras; otherwise IntertwinerError."""
    H, n = pair.H, pair.H.dim
    N = n * n
    if T is None:
        T = build_transmutation(pair)
    if dcp is None:
        dcp = double_cross_product(pair)
    if bos is None:
        bos = bosonization(T)
    e, D = H.e, H._delta

    def phi_col(p, inverse=False):
        x, y = divmod(p, n)
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            left = H.antipode(e(x2)) if inverse else e(x2)
            for k, d in H.mul(left, e(y)).items():
                vadd(acc, {x1 * n + k: ONE}, c * d)
        return _clean(acc)

    Phi = Matrix.from_columns(N, [phi_col(p) for p in range(N)])
    Phi_inv = Matrix.from_columns(N, [phi_col(p, True) for p in range(N)])
    phi = [dict(Phi.column(p)) for p in range(N)]

    def phi_lin(v):
        return _lin(phi, v)

    def phi2(v):
        acc: dict = {}
        for (p, q), c in v.items():
            vadd(acc, tensor(phi[p], phi[q]), c)
        return _clean(acc)

    checks = [
        compare_matrices("Phi^-1 Phi = id", Phi_inv @ Phi, eye(N)),
        compare_matrices("Phi Phi^-1 = id", Phi @ Phi_inv, eye(N)),
        compare_maps("Phi(1) = 1", lambda _: phi_lin(dcp.one()), lambda _: bos.one(), 1, 1),
        compare_maps("eps Phi = eps", lambda p: bos.eps(phi[p]), lambda p: dcp.counit[p], N, 1),
        compare_maps("Phi m = m (Phi(x)Phi)", lambda p, q: phi_lin(dcp._mul[p][q]),
                     lambda p, q: bos.mul(phi[p], phi[q]), N, 2),
        compare_maps("Delta Phi = (Phi(x)Phi) Delta", lambda p: bos.delta(phi[p]),
                     lambda p: phi2(dcp._delta[p]), N, 1),
    ]
    for check in checks:
        if not check:
            raise IntertwinerError(check, dcp.basis)
    return Phi
