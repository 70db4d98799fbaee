"""Matched pairs of actions of a Hopf algebra on itself.

Conventions: ``left[i][j][k]`` is the coefficient of e_k in e_i -> e_j
(left action, written ``lact``), ``right[i][j][k]`` the coefficient of e_k in
e_i <- e_j (right action, ``ract``).
"""

from __future__ import annotations

from functools import cached_property

from .hopf import HopfAlgebra, tensor, vadd
from .linalg import Matrix, Tensor3
from .report import AxiomReport, compare_maps, timed
from .scalars import ONE

__all__ = [
    "ActionPair",
    "NotAGroupAlgebraError",
    "MatchedPairError",
    "verify_module_coalgebra_action",
    "verify_matched_pair",
    "derive_right_action",
    "check_antipode_identities",
    "conjugation_pair",
    "trivial_pair",
    "expand_generator_actions",
]


class NotAGroupAlgebraError(ValueError):
    pass


class MatchedPairError(ValueError):
    """Raised when an operation needs a verified matched pair and gets
    something else; carries the failing report."""

    def __init__(self, report: AxiomReport):
        self.report = report
        failed = ", ".join(c.name for c in report.failures())
        super().__init__(f"{report.subject} failed: {failed}")


def _images(t: Tensor3):
    return [[t.image(i, j) for j in range(t.n)] for i in range(t.n)]


def _bilinear(table, x: dict, y: dict) -> dict:
    acc: dict = {}
    for i, a in x.items():
        row = table[i]
        for j, b in y.items():
            vadd(acc, row[j], a * b)
    return {k: v for k, v in acc.items() if v}


class ActionPair:
    """A left action and a right action of H on itself."""

    def __init__(self, H: HopfAlgebra, left: Tensor3, right: Tensor3, name: str = "pair"):
        if left.n != H.dim or right.n != H.dim:
            raise ValueError("action tensors must match the dimension of H")
        self.H = H
        self.left = left
        self.right = right
        self.name = name
        self._L = _images(left)
        self._R = _images(right)

    def __repr__(self):
        return f"ActionPair({self.name!r} on {self.H.name})"

    def lact(self, x: dict, y: dict) -> dict:
        return _bilinear(self._L, x, y)

    def ract(self, x: dict, y: dict) -> dict:
        return _bilinear(self._R, x, y)

    @cached_property
    def L(self) -> Matrix:
        return self.left.to_matrix()

    @cached_property
    def R(self) -> Matrix:
        return self.right.to_matrix()

    def specialize(self, v) -> ActionPair:
        """Substitute a := v everywhere."""
        f = lambda x: x.subs(v)  # noqa: E731
        return ActionPair(self.H.specialize(v), self.left.map_entries(f),
                          self.right.map_entries(f), self.name)

    def is_constant(self) -> bool:
        return self.H.is_constant() and all(
            x.is_constant() for t in (self.left, self.right) for row in t.c for v in row for x in v)


def _action_table(H: HopfAlgebra, action) -> list:
    if isinstance(action, Tensor3):
        if action.n != H.dim:
            raise ValueError("action tensor must match the dimension of H")
        return _images(action)
    return action


def verify_module_coalgebra_action(H: HopfAlgebra, action: Tensor3, side: str = "left") -> AxiomReport:
    """Module axioms plus Delta- and epsilon-compatibility of an action of H on H."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    T = _action_table(H, action)
    act = lambda x, y: _bilinear(T, x, y)  # noqa: E731
    e, n = H.e, H.dim
    one = H.one()
    report = AxiomReport(f"{side} module coalgebra action on {H.name}", basis=H.basis)

    def delta_rhs(i, j):
        acc: dict = {}
        for (x1, x2), c in H._delta[i].items():
            for (y1, y2), d in H._delta[j].items():
                vadd(acc, tensor(T[x1][y1], T[x2][y2]), c * d)
        return acc

    with timed(report):
        if side == "left":
            report.add(compare_maps("action", lambda i, j, k: act(H._mul[i][j], e(k)),
                                    lambda i, j, k: act(e(i), T[j][k]), n, 3))
            report.add(compare_maps("unit", lambda j: act(one, e(j)), e, n, 1))
        else:
            report.add(compare_maps("action", lambda i, j, k: act(e(i), H._mul[j][k]),
                                    lambda i, j, k: act(T[i][j], e(k)), n, 3))
            report.add(compare_maps("unit", lambda i: act(e(i), one), e, n, 1))
        report.add(compare_maps("comultiplicative", lambda i, j: H.delta(T[i][j]), delta_rhs, n, 2))
        report.add(compare_maps("counital", lambda i, j: H.eps(T[i][j]),
                                lambda i, j: H.counit[i] * H.counit[j], n, 2))
    return report


def verify_matched_pair(pair: ActionPair) -> AxiomReport:
    """Module coalgebra prerequisites, the five matched-pair axioms and the
    factorisation xy = (x1 -> y1)(x2 <- y2)."""
    H, n, e = pair.H, pair.H.dim, pair.H.e
    L, R = pair._L, pair._R
    lact, ract, mul = pair.lact, pair.ract, H.mul
    D = H._delta
    report = AxiomReport(f"matched pair {pair.name} on {H.name}", basis=H.basis)

    def mp1_rhs(x, a, b):
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            for (a1, a2), d in D[a].items():
                vadd(acc, mul(L[x1][a1], lact(R[x2][a2], e(b))), c * d)
        return acc

    def mp3_rhs(x, y, a):
        acc: dict = {}
        for (y1, y2), c in D[y].items():
            for (a1, a2), d in D[a].items():
                vadd(acc, mul(ract(e(x), L[y1][a1]), R[y2][a2]), c * d)
        return acc

    def mp5(swap):
        def f(x, a):
            acc: dict = {}
            for (x1, x2), c in D[x].items():
                for (a1, a2), d in D[a].items():
                    if swap:
                        vadd(acc, tensor(L[x2][a2], R[x1][a1]), c * d)
                    else:
                        vadd(acc, tensor(L[x1][a1], R[x2][a2]), c * d)
            return acc
        return f

    def mpstar_rhs(x, y):
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            for (y1, y2), d in D[y].items():
                vadd(acc, mul(L[x1][y1], R[x2][y2]), c * d)
        return acc

    with timed(report):
        report.extend(verify_module_coalgebra_action(H, pair.left, "left"), "left ")
        report.extend(verify_module_coalgebra_action(H, pair.right, "right"), "right ")
        one = H.one()
        report.add(compare_maps("MP1 x->ab = (x1->a1)((x2<-a2)->b)",
                                lambda x, a, b: lact(e(x), H._mul[a][b]), mp1_rhs, n, 3))
        report.add(compare_maps("MP2 x->1 = eps(x)1", lambda x: lact(e(x), one),
                                lambda x: {k: v * H.counit[x] for k, v in one.items()}, n, 1))
        report.add(compare_maps("MP3 xy<-a = (x<-(y1->a1))(y2<-a2)",
                                lambda x, y, a: ract(H._mul[x][y], e(a)), mp3_rhs, n, 3))
        report.add(compare_maps("MP4 1<-a = eps(a)1", lambda a: ract(one, e(a)),
                                lambda a: {k: v * H.counit[a] for k, v in one.items()}, n, 1))
        report.add(compare_maps("MP5 (x1->a1)(x)(x2<-a2) = (x2->a2)(x)(x1<-a1)",
                                mp5(False), mp5(True), n, 2))
        report.add(compare_maps("MP* xy = (x1->y1)(x2<-y2)",
                                lambda x, y: H._mul[x][y], mpstar_rhs, n, 2))
    return report


def derive_right_action(H: HopfAlgebra, left: Tensor3) -> Tensor3:
    """The right action x <- y = S(x1 -> y1) x2 y2 forced by the factorisation."""
    L = _action_table(H, left)

    def image(x, y):
        acc: dict = {}
        for (x1, x2), c in H._delta[x].items():
            for (y1, y2), d in H._delta[y].items():
                vadd(acc, H.mul(H.antipode(L[x1][y1]), H._mul[x2][y2]), c * d)
        return acc

    return Tensor3.from_function(H.dim, image)


def check_antipode_identities(pair: ActionPair) -> AxiomReport:
    """The four antipode identities every matched pair of actions satisfies."""
    H, n, e = pair.H, pair.H.dim, pair.H.e
    L, R, D = pair._L, pair._R, H._delta
    S, lact, ract = H.antipode, pair.lact, pair.ract
    report = AxiomReport(f"antipode identities of {pair.name} on {H.name}", basis=H.basis)

    def id1_rhs(x, y):
        acc: dict = {}
        for (y1, y2), c in D[y].items():
            vadd(acc, lact(R[x][y1], S(e(y2))), c)
        return acc

    def id2_rhs(x, y):
        acc: dict = {}
        for (x1, x2), c in D[x].items():
            vadd(acc, ract(S(e(x1)), L[x2][y]), c)
        return acc

    def primed(act):
        def f(x, y):
            acc: dict = {}
            for (x1, x2), c in D[x].items():
                for (y1, y2), d in D[y].items():
                    vadd(acc, act(S(R[x1][y1]), S(L[x2][y2])), c * d)
            return acc
        return f

    with timed(report):
        report.add(compare_maps("S(x->y) = (x<-y1)->S(y2)",
                                lambda x, y: S(L[x][y]), id1_rhs, n, 2))
        report.add(compare_maps("S(x<-y) = S(x1)<-(x2->y)",
                                lambda x, y: S(R[x][y]), id2_rhs, n, 2))
        report.add(compare_maps("S(x1<-y1)->S(x2->y2) = eps(x)S(y)", primed(lact),
                                lambda x, y: {k: v * H.counit[x] for k, v in S(e(y)).items()}, n, 2))
        report.add(compare_maps("S(x1<-y1)<-S(x2->y2) = eps(y)S(x)", primed(ract),
                                lambda x, y: {k: v * H.counit[y] for k, v in S(e(x)).items()}, n, 2))
    return report


def conjugation_pair(G: HopfAlgebra) -> ActionPair:
    """x -> y = x y x^{-1} and x <- y = eps(y) x on a group algebra."""
    if not G.is_group_algebra():
        raise NotAGroupAlgebraError(f"{G.name} is not a group algebra")
    n, e = G.dim, G.e
    left = Tensor3.from_function(n, lambda i, j: G.prod(e(i), e(j), G.antipode(e(i))))
    right = Tensor3.from_function(n, lambda i, j: {i: ONE})
    return ActionPair(G, left, right, "conjugation")


def trivial_pair(H: HopfAlgebra) -> ActionPair:
    """x -> y = eps(x) y and x <- y = x eps(y)."""
    n = H.dim
    left = Tensor3.from_function(n, lambda i, j: {j: H.counit[i]} if H.counit[i] else {})
    right = Tensor3.from_function(n, lambda i, j: {i: H.counit[j]} if H.counit[j] else {})
    return ActionPair(H, left, right, "trivial")


def expand_generator_actions(H: HopfAlgebra, left_gen: dict, right_gen: dict,
                             name: str = "pair") -> ActionPair:
    """Extend actions given on pairs of generators to full tables.

    ``left_gen[(s, t)]`` and ``right_gen[(s, t)]`` are the elements s -> t and
    s <- t for generator letters s, t.  H must carry normal-form ``words``
    whose prefixes split as products (first letter) * (rest).  The tables are
    filled using only the action axioms and the matched-pair axioms:

        (s v) -> y = s -> (v -> y),      s -> (t b) = (s1 -> t1)((s2 <- t2) -> b),
        x <- (t b) = (x <- t) <- b,      (s v) <- t = (s <- (v1 -> t1))(v2 <- t2).
    """
    if H.words is None:
        raise ValueError(f"{H.name} has no generator presentation")
    words = H.words
    n = H.dim
    index = {w: i for i, w in enumerate(words)}
    unit = index[""]

    def split(i):
        w = words[i]
        head, rest = index[w[0]], index[w[1:]]
        if H._mul[head][rest] != {i: ONE}:
            raise ValueError(f"basis word {w!r} is not head * rest")
        return head, rest

    memo: dict = {}
    active: set = set()

    def lin(f, x, y):
        acc: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                vadd(acc, f(i, j), a * b)
        return {k: v for k, v in acc.items() if v}

    def cached(kind, fn):
        def wrapper(i, j):
            key = (kind, i, j)
            if key in memo:
                return memo[key]
            if key in active:
                raise RuntimeError(f"cyclic expansion at {kind}({words[i]!r}, {words[j]!r})")
            active.add(key)
            out = fn(i, j)
            active.discard(key)
            memo[key] = out
            return out
        return wrapper

    def _left(i, j):
        if i == unit:
            return {j: ONE}
        if j == unit:
            return {unit: H.counit[i]} if H.counit[i] else {}
        if len(words[i]) > 1:
            head, rest = split(i)
            return lin(L, {head: ONE}, L(rest, j))
        if len(words[j]) == 1:
            return H.element(left_gen[(words[i], words[j])])
        t, b = split(j)
        acc: dict = {}
        for (s1, s2), c in H._delta[i].items():
            for (t1, t2), d in H._delta[t].items():
                vadd(acc, H.mul(L(s1, t1), lin(L, R(s2, t2), {b: ONE})), c * d)
        return {k: v for k, v in acc.items() if v}

    def _right(i, j):
        if j == unit:
            return {i: ONE}
        if i == unit:
            return {unit: H.counit[j]} if H.counit[j] else {}
        if len(words[j]) > 1:
            t, b = split(j)
            return lin(R, R(i, t), {b: ONE})
        if len(words[i]) == 1:
            return H.element(right_gen[(words[i], words[j])])
        s, v = split(i)
        acc: dict = {}
        for (v1, v2), c in H._delta[v].items():
            for (t1, t2), d in H._delta[j].items():
                vadd(acc, H.mul(lin(R, {s: ONE}, L(v1, t1)), R(v2, t2)), c * d)
        return {k: v for k, v in acc.items() if v}

    L = cached("left", _left)
    R = cached("right", _right)
    left = Tensor3.from_function(n, L)
    right = Tensor3.from_function(n, R)
    return ActionPair(H, left, right, name)
