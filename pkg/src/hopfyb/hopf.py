"""Finite-dimensional Hopf algebras given by structure constants.

Elements of H are sparse vectors ``{basis index: Scalar}``; elements of
``H^{(x)k}`` are ``{(i_1, ..., i_k): Scalar}``.  All structure maps are
available both element-wise (``mul``, ``delta``, ``antipode``, ``eps``) and
as matrices in the global Kronecker convention (``m``, ``u``, ``D``, ``e``,
``S``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd
from typing import Sequence

from .linalg import Matrix, Tensor3, eye, kron, nullspace
from .report import AxiomReport, compare_maps, timed
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "HopfAlgebra",
    "DimensionError",
    "NotAGroupError",
    "NotGroupLikeError",
    "vadd",
    "tensor",
    "verify_hopf",
    "group_algebra",
    "cyclic_group_algebra",
    "klein_group_algebra",
    "s3_group_algebra",
    "presented_hopf_algebra",
    "a_c2c2",
    "sweedler_h4",
    "grouplikes",
    "skew_primitives",
]


class DimensionError(ValueError):
    """Structure data of inconsistent sizes (malformed input)."""


class NotAGroupError(ValueError):
    pass


class NotGroupLikeError(ValueError):
    pass


def vadd(acc: dict, vec: dict, c: Scalar = ONE) -> dict:
    """acc += c * vec, in place."""
    for k, x in vec.items():
        prev = acc.get(k)
        y = c * x
        acc[k] = y if prev is None else prev + y
    return acc


def _clean(vec: dict) -> dict:
    return {k: x for k, x in vec.items() if x}


def tensor(*vecs: dict) -> dict:
    """Tensor product of sparse vectors; int and tuple keys are concatenated."""
    out = {(): ONE}
    for v in vecs:
        nxt = {}
        for k, a in out.items():
            for j, b in v.items():
                key = k + (j if isinstance(j, tuple) else (j,))
                prev = nxt.get(key)
                nxt[key] = a * b if prev is None else prev + a * b
        out = nxt
    return _clean(out)


class HopfAlgebra:
    """A Hopf algebra on the basis ``e_0..e_{n-1}``.

    ``comult`` is the ``n^2 x n`` matrix whose column i is Delta(e_i);
    ``antipode`` is ``n x n`` with column i equal to S(e_i).
    """

    def __init__(self, name: str, basis: Sequence[str], mult: Tensor3, unit: Sequence,
                 comult: Matrix, counit: Sequence, antipode: Matrix, words=None):
        n = len(basis)
        if n < 1:
            raise DimensionError("dimension must be positive")
        if len(set(basis)) != n:
            raise DimensionError("basis names must be distinct")
        if mult.n != n:
            raise DimensionError(f"multiplication tensor has dimension {mult.n}, expected {n}")
        if len(unit) != n or len(counit) != n:
            raise DimensionError("unit and counit must have length dim")
        if comult.shape != (n * n, n):
            raise DimensionError(f"comultiplication must be {n * n}x{n}, got {comult.shape}")
        if antipode.shape != (n, n):
            raise DimensionError(f"antipode must be {n}x{n}, got {antipode.shape}")
        self.name = name
        self.basis = list(basis)
        self.mult = mult
        self.unit = [as_scalar(x) for x in unit]
        self.comult = comult
        self.counit = [as_scalar(x) for x in counit]
        self.antipode_matrix = antipode
        self.words = words
        self._index = {b: i for i, b in enumerate(self.basis)}
        self._mul = [[mult.image(i, j) for j in range(n)] for i in range(n)]
        self._delta = [
            {divmod(k, n): x for k, x in comult.column(i).items()} for i in range(n)
        ]
        self._S = [dict(antipode.column(i)) for i in range(n)]
        self._sweedler: dict = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    n = dim

    def __repr__(self):
        return f"HopfAlgebra({self.name!r}, dim={self.dim})"

    # -- elements -----------------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a basis element of {self.name}") from None

    def e(self, i: int) -> dict:
        return {i: ONE}

    def elem(self, name: str) -> dict:
        return {self.index(name): ONE}

    def one(self) -> dict:
        return {i: x for i, x in enumerate(self.unit) if x}

    def element(self, coeffs: dict) -> dict:
        """Element from ``{basis name: scalar-like}``."""
        return _clean({self.index(k): as_scalar(v) for k, v in coeffs.items()})

    def mul(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        table = self._mul
        for i, a in x.items():
            row = table[i]
            for j, b in y.items():
                vadd(acc, row[j], a * b)
        return _clean(acc)

    def prod(self, *xs: dict) -> dict:
        out = xs[0]
        for y in xs[1:]:
            out = self.mul(out, y)
        return out

    def delta(self, x: dict) -> dict:
        acc: dict = {}
        for i, a in x.items():
            vadd(acc, self._delta[i], a)
        return _clean(acc)

    def sweedler(self, i: int, legs: int) -> dict:
        """Iterated coproduct of e_i with ``legs`` tensor factors, computed as
        (Delta (x) id ... ) ... Delta."""
        key = (i, legs)
        cached = self._sweedler.get(key)
        if cached is not None:
            return cached
        if legs == 1:
            out = {(i,): ONE}
        else:
            out = {}
            for k, c in self.sweedler(i, legs - 1).items():
                for (p, q), d in self._delta[k[0]].items():
                    key2 = (p, q) + k[1:]
                    prev = out.get(key2)
                    out[key2] = c * d if prev is None else prev + c * d
            out = _clean(out)
        self._sweedler[key] = out
        return out

    def sweedler_terms(self, x: dict, legs: int):
        """(legs-tuple, coefficient) pairs of the iterated coproduct of x."""
        acc: dict = {}
        for i, a in x.items():
            vadd(acc, self.sweedler(i, legs), a)
        return [(k, c) for k, c in acc.items() if c]

    def antipode(self, x: dict) -> dict:
        acc: dict = {}
        for i, a in x.items():
            vadd(acc, self._S[i], a)
        return _clean(acc)

    S = antipode

    def eps(self, x: dict) -> Scalar:
        acc = ZERO
        for i, a in x.items():
            c = self.counit[i]
            if c:
                acc = acc + a * c
        return acc

    def tensor_mul(self, x: dict, y: dict) -> dict:
        """Componentwise product in H^{(x)k}."""
        acc: dict = {}
        for k1, a in x.items():
            for k2, b in y.items():
                part = {(): a * b}
                for p, q in zip(k1, k2):
                    part = tensor(part, self._mul[p][q])
                vadd(acc, part)
        return _clean(acc)

    # -- matrices -----------------------------------------------------------

    @cached_property
    def m(self) -> Matrix:
        return self.mult.to_matrix()

    @cached_property
    def u(self) -> Matrix:
        return Matrix.column_vector(self.unit)

    @property
    def D(self) -> Matrix:
        return self.comult

    @cached_property
    def e_(self) -> Matrix:
        return Matrix.row_vector(self.counit)

    @property
    def S_mat(self) -> Matrix:
        return self.antipode_matrix

    @cached_property
    def delta_tensor(self) -> Matrix:
        """Comultiplication of H (x) H: (id (x) flip (x) id)(Delta (x) Delta)."""
        from .linalg import leg_permutation
        return leg_permutation(self.dim, (0, 2, 1, 3)) @ kron(self.D, self.D)

    # -- misc ---------------------------------------------------------------

    def is_constant(self) -> bool:
        """True when no structure constant involves the parameter a."""
        return all(x.is_constant() for x in self._all_entries())

    def _all_entries(self):
        for row in self.mult.c:
            for v in row:
                yield from v
        yield from self.unit
        yield from self.counit
        for _, x in self.comult.items():
            yield x
        for _, x in self.antipode_matrix.items():
            yield x

    def map_scalars(self, f, name=None) -> HopfAlgebra:
        return HopfAlgebra(
            name or self.name, self.basis, self.mult.map_entries(f),
            [f(x) for x in self.unit], self.comult.map_entries(f),
            [f(x) for x in self.counit], self.antipode_matrix.map_entries(f), self.words)

    def specialize(self, v) -> HopfAlgebra:
        """Substitute a := v in every structure constant."""
        return self.map_scalars(lambda x: x.subs(v))

    def with_antipode(self, antipode: Matrix) -> HopfAlgebra:
        return HopfAlgebra(self.name, self.basis, self.mult, self.unit, self.comult,
                           self.counit, antipode, self.words)

    def is_group_algebra(self) -> bool:
        """Every basis vector group-like and the basis closed under products."""
        n = self.dim
        for i in range(n):
            if self._delta[i] != {(i, i): ONE} or self.counit[i] != ONE:
                return False
            for j in range(n):
                img = self._mul[i][j]
                if len(img) != 1 or next(iter(img.values())) != ONE:
                    return False
        return True


# -- axioms -----------------------------------------------------------------

def verify_hopf(H: HopfAlgebra) -> AxiomReport:
    n = H.dim
    e = H.e
    one = H.one()
    report = AxiomReport(f"Hopf axioms of {H.name}", basis=H.basis)

    def coassoc_left(i):
        acc: dict = {}
        for (p, q), c in H._delta[i].items():
            vadd(acc, tensor(H._delta[p], e(q)), c)
        return acc

    def coassoc_right(i):
        acc: dict = {}
        for (p, q), c in H._delta[i].items():
            vadd(acc, tensor(e(p), H._delta[q]), c)
        return acc

    def counit_left(i):
        acc: dict = {}
        for (p, q), c in H._delta[i].items():
            vadd(acc, e(q), c * H.counit[p])
        return acc

    def counit_right(i):
        acc: dict = {}
        for (p, q), c in H._delta[i].items():
            vadd(acc, e(p), c * H.counit[q])
        return acc

    def antipode_left(i):
        acc: dict = {}
        for (p, q), c in H._delta[i].items():
            vadd(acc, H.mul(H._S[p], e(q)), c)
        return acc

    def antipode_right(i):
        acc: dict = {}
        for (p, q), c in H._delta[i].items():
            vadd(acc, H.mul(e(p), H._S[q]), c)
        return acc

    def uniteps(i):
        return {k: x * H.counit[i] for k, x in one.items()}

    with timed(report):
        add = report.add
        add(compare_maps("associativity", lambda i, j, k: H.mul(H._mul[i][j], e(k)),
                         lambda i, j, k: H.mul(e(i), H._mul[j][k]), n, 3))
        add(compare_maps("left unit", lambda i: H.mul(one, e(i)), e, n, 1))
        add(compare_maps("right unit", lambda i: H.mul(e(i), one), e, n, 1))
        add(compare_maps("coassociativity", coassoc_left, coassoc_right, n, 1))
        add(compare_maps("left counit", counit_left, e, n, 1))
        add(compare_maps("right counit", counit_right, e, n, 1))
        add(compare_maps("comultiplication multiplicative",
                         lambda i, j: H.delta(H._mul[i][j]),
                         lambda i, j: H.tensor_mul(H._delta[i], H._delta[j]), n, 2))
        add(compare_maps("counit multiplicative", lambda i, j: H.eps(H._mul[i][j]),
                         lambda i, j: H.counit[i] * H.counit[j], n, 2))
        add(compare_maps("comultiplication unital", lambda: H.delta(one),
                         lambda: tensor(one, one), n, 0))
        add(compare_maps("counit unital", lambda: H.eps(one), lambda: ONE, n, 0))
        add(compare_maps("left antipode", antipode_left, uniteps, n, 1))
        add(compare_maps("right antipode", antipode_right, uniteps, n, 1))
    return report


# -- constructors -----------------------------------------------------------

def _basis_vector(n, i):
    return [ONE if k == i else ZERO for k in range(n)]


def group_algebra(mult_table: Sequence[Sequence[int]], names: Sequence[str], name="k[G]") -> HopfAlgebra:
    """k[G] with group-like basis, from a Cayley table of indices."""
    n = len(names)
    if len(mult_table) != n or any(len(r) != n for r in mult_table):
        raise NotAGroupError("closure: Cayley table must be n x n")
    if any(not (0 <= x < n) for r in mult_table for x in r):
        raise NotAGroupError("closure: table entry out of range")
    t = mult_table
    ident = next((i for i in range(n)
                  if all(t[i][j] == j and t[j][i] == j for j in range(n))), None)
    if ident is None:
        raise NotAGroupError("identity: no two-sided identity element")
    for i, j, k in product(range(n), repeat=3):
        if t[t[i][j]][k] != t[i][t[j][k]]:
            raise NotAGroupError(f"associativity: fails on ({names[i]}, {names[j]}, {names[k]})")
    inv = []
    for i in range(n):
        j = next((j for j in range(n) if t[i][j] == ident and t[j][i] == ident), None)
        if j is None:
            raise NotAGroupError(f"inverses: {names[i]} has no inverse")
        inv.append(j)
    mult = Tensor3(n, [[_basis_vector(n, t[i][j]) for j in range(n)] for i in range(n)])
    comult = Matrix(n * n, n, {i * n + i: {i: ONE} for i in range(n)})
    antipode = Matrix(n, n, {inv[i]: {i: ONE} for i in range(n)})
    return HopfAlgebra(name, names, mult, _basis_vector(n, ident), comult, [ONE] * n, antipode)


def cyclic_group_algebra(order: int, gen="g", name=None) -> HopfAlgebra:
    names = ["1"] + [gen if k == 1 else f"{gen}^{k}" for k in range(1, order)]
    table = [[(i + j) % order for j in range(order)] for i in range(order)]
    return group_algebra(table, names, name or f"c{order}")


def klein_group_algebra(name="c2c2") -> HopfAlgebra:
    names = ["1", "g", "h", "gh"]  # index bits: g = 1, h = 2
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return group_algebra(table, names, name)


S3_ELEMENTS = {
    "e": (0, 1, 2),
    "(12)": (1, 0, 2),
    "(13)": (2, 1, 0),
    "(23)": (0, 2, 1),
    "(123)": (1, 2, 0),
    "(132)": (2, 0, 1),
}


def s3_group_algebra(name="s3") -> HopfAlgebra:
    """k[S_3]; permutations compose as functions, (s t)(p) = s(t(p))."""
    names = list(S3_ELEMENTS)
    perms = list(S3_ELEMENTS.values())
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(s[t[k]] for k in range(3))] for t in perms] for s in perms]
    return group_algebra(table, names, name)


class _Rewriter:
    """Normal ordering of words in generators by left-most rule application.

    Rules are ``(pattern, coefficient, replacement)``; a replacement of None
    means the word is zero.
    """

    def __init__(self, rules):
        self.rules = rules

    def normalize(self, word: str) -> dict:
        done: dict = {}
        todo = [(word, 1)]
        while todo:
            w, c = todo.pop()
            hit = None
            for pat, coeff, rep in self.rules:
                pos = w.find(pat)
                if pos >= 0 and (hit is None or pos < hit[0]):
                    hit = (pos, pat, coeff, rep)
            if hit is None:
                done[w] = done.get(w, 0) + c
                continue
            pos, pat, coeff, rep = hit
            if rep is None or coeff == 0:
                continue
            todo.append((w[:pos] + rep + w[pos + len(pat):], c * coeff))
        return {w: c for w, c in done.items() if c}


def presented_hopf_algebra(name, words, rules, delta_gen, eps_gen, s_gen) -> HopfAlgebra:
    """Hopf algebra from generators, rewriting rules and generator data.

    ``words`` lists the normal-form basis monomials ('' is the unit).  The
    generator data map a letter to ``{(w1, w2): c}`` (Delta), a scalar
    (epsilon) and ``{w: c}`` (S); everything else is forced by Delta, epsilon
    being algebra maps and S an anti-algebra map.
    """
    rw = _Rewriter(rules)
    n = len(words)
    index = {w: i for i, w in enumerate(words)}
    names = [w or "1" for w in words]

    def to_vec(d):
        out = {}
        for w, c in d.items():
            for w2, c2 in rw.normalize(w).items():
                if w2 not in index:
                    raise ValueError(f"{w2!r} is not a normal-form basis word")
                out[index[w2]] = out.get(index[w2], 0) + c * c2
        return {k: Scalar.from_fraction(c) for k, c in out.items() if c}

    mult = Tensor3.from_function(n, lambda i, j: to_vec({words[i] + words[j]: 1}))

    def word_mul2(x, y):
        out = {}
        for (a1, a2), c in x.items():
            for (b1, b2), d in y.items():
                key = (a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + c * d
        return out

    comult_cols = []
    counit = []
    antipode_cols = []
    for w in words:
        d = {("", ""): 1}
        e = Fraction(1)
        s = {"": 1}
        for letter in w:
            d = word_mul2(d, delta_gen[letter])
            e *= eps_gen[letter]
            s = {a + b: c * c2 for b, c in s.items() for a, c2 in s_gen[letter].items()}
        col = {}
        for (w1, w2), c in d.items():
            for k1, c1 in to_vec({w1: 1}).items():
                for k2, c2 in to_vec({w2: 1}).items():
                    key = k1 * n + k2
                    col[key] = col.get(key, ZERO) + c1 * c2 * c
        comult_cols.append({k: x for k, x in col.items() if x})
        counit.append(Scalar.from_fraction(e))
        antipode_cols.append(to_vec(s))
    return HopfAlgebra(
        name, names, mult, _basis_vector(n, index[""]),
        Matrix.from_columns(n * n, comult_cols), counit,
        Matrix.from_columns(n, antipode_cols), words=list(words))


_A22_RULES = [
    ("xg", -1, "gx"),
    ("xh", -1, "hx"),
    ("hg", 1, "gh"),
    ("gg", 1, ""),
    ("hh", 1, ""),
    ("xx", 0, None),
]


def a_c2c2() -> HopfAlgebra:
    """The 8-dimensional pointed Hopf algebra with group-likes C2 x C2.

    Basis ``1, g, h, gh, x, gx, hx, ghx``; g, h group-like, x (1, g)-skew
    primitive: Delta(x) = x (x) 1 + g (x) x, S(x) = xg.
    """
    return presented_hopf_algebra(
        "a_c2c2",
        ["", "g", "h", "gh", "x", "gx", "hx", "ghx"],
        _A22_RULES,
        {"g": {("g", "g"): 1}, "h": {("h", "h"): 1}, "x": {("x", ""): 1, ("g", "x"): 1}},
        {"g": 1, "h": 1, "x": 0},
        {"g": {"g": 1}, "h": {"h": 1}, "x": {"xg": 1}},
    )


def sweedler_h4() -> HopfAlgebra:
    """Sweedler's 4-dimensional Hopf algebra on ``1, g, x, gx``."""
    return presented_hopf_algebra(
        "h4",
        ["", "g", "x", "gx"],
        [r for r in _A22_RULES if "h" not in r[0]],
        {"g": {("g", "g"): 1}, "x": {("x", ""): 1, ("g", "x"): 1}},
        {"g": 1, "x": 0},
        {"g": {"g": 1}, "x": {"xg": 1}},
    )


# -- group-likes and skew-primitives ----------------------------------------

def _charpoly(M: list[list[Fraction]]) -> list[Fraction]:
    """Characteristic polynomial det(tI - M), lowest degree first
    (Faddeev-LeVerrier)."""
    n = len(M)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- M * Mk + c_{n-k+1} I
        prod_ = [[sum(M[i][l] * Mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod_[i][i] += coeffs[n - k + 1]
        Mk = prod_
        tr = sum(sum(M[i][l] * Mk[l][i] for l in range(n)) for i in range(n))
        coeffs[n - k] = -tr / k
    return coeffs


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small = [d for d in range(1, int(m ** 0.5) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    p = [int(c * den) for c in coeffs]
    roots = set()
    while p and p[0] == 0:
        roots.add(Fraction(0))
        p = p[1:]
    if len(p) > 1:
        for num in _divisors(p[0]):
            for d in _divisors(p[-1]):
                for cand in (Fraction(num, d), Fraction(-num, d)):
                    if sum(c * cand ** k for k, c in enumerate(p)) == 0:
                        roots.add(cand)
    return sorted(roots)


def grouplikes(H: HopfAlgebra) -> list[tuple[Scalar, ...]]:
    """All group-like elements with rational coordinates.

    If g is group-like then (e_j^* (x) id)Delta(g) = g_j g, so each coordinate
    g_j is a rational eigenvalue of T_j = (e_j^* (x) id)Delta.  We search the
    eigenvalue tuples depth-first, pruning when the common eigenspace of the
    assigned T_j - g_j becomes zero, and keep the tuples that satisfy
    Delta(g) = g (x) g and eps(g) = 1.
    """
    if not H.is_constant():
        raise ValueError("grouplikes needs constant structure constants")
    n = H.dim
    T = []
    for j in range(n):
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for (p, q), c in H._delta[i].items():
                if p == j:
                    rows[q][i] = rows[q][i] + c
        T.append(rows)
    eig = [[Scalar.from_fraction(r) for r in
            _rational_roots(_charpoly([[x.to_fraction() for x in row] for row in t]))]
           for t in T]

    found = []

    def shifted(j, lam):
        return [[x - lam if r == c else x for c, x in enumerate(row)] for r, row in enumerate(T[j])]

    def search(j, coords, stacked):
        if stacked and not nullspace(Matrix.from_lists(stacked)):
            return
        if j == n:
            v = {i: c for i, c in enumerate(coords) if c}
            if v and H.eps(v) == ONE and H.delta(v) == tensor(v, v):
                found.append(tuple(coords))
            return
        for lam in eig[j]:
            search(j + 1, coords + [lam], stacked + shifted(j, lam))

    search(0, [], [])
    found.sort(key=lambda v: [(i, str(x)) for i, x in enumerate(v) if x])
    return found


def _as_dict(v) -> dict:
    if isinstance(v, dict):
        return _clean(v)
    return {i: as_scalar(x) for i, x in enumerate(v) if as_scalar(x)}


def skew_primitives(H: HopfAlgebra, g, h) -> list[tuple[Scalar, ...]]:
    """Basis of P_{g,h}(H) = {v : Delta(v) = v (x) g + h (x) v}."""
    gd, hd = _as_dict(g), _as_dict(h)
    for name, v in (("g", gd), ("h", hd)):
        if not v or H.eps(v) != ONE or H.delta(v) != tensor(v, v):
            raise NotGroupLikeError(f"{name} is not group-like in {H.name}")
    n = H.dim
    gcol = Matrix.column_vector([gd.get(i, ZERO) for i in range(n)])
    hcol = Matrix.column_vector([hd.get(i, ZERO) for i in range(n)])
    constraint = H.D - kron(eye(n), gcol) - kron(hcol, eye(n))
    return nullspace(constraint)
