from __future__ import annotations

from itertools import permutations, product

import pytest

from conftest import S3_PERMS, perm_mul
from hopfyb.catalog import ALGEBRAS, get_algebra
from hopfyb.hopf import (
    NotAGroupError,
    NotGroupLikeError,
    group_algebra,
    grouplikes,
    skew_primitives,
    verify_hopf,
)
from hopfyb.linalg import Matrix, eye, span_equal
from hopfyb.scalars import ONE, Scalar

# Monomial oracle for A: g^i h^j x^k has index i + 2j + 4k, and moving x
# across g or h costs a sign.


def mono(i, j, k):
    return (i % 2) + 2 * (j % 2) + 4 * k


def oracle_mul(p, q):
    (i, j, k), (l, m, n) = p, q
    if k + n > 1:
        return {}
    sign = -1 if k * (l + m) % 2 else 1
    return {mono(i + l, j + m, k + n): Scalar(sign)}


def oracle_delta(p):
    i, j, k = p
    if k == 0:
        return {(mono(i, j, 0), mono(i, j, 0)): ONE}
    return {(mono(i, j, 1), mono(i, j, 0)): ONE, (mono(i + 1, j, 0), mono(i, j, 1)): ONE}


def oracle_antipode(p):
    i, j, k = p
    if k == 0:
        return {mono(i, j, 0): ONE}
    return {mono(i + 1, j, 1): Scalar(-1 if (i + j) % 2 == 0 else 1)}


MONOMIALS = [(i, j, k) for k in (0, 1) for j in (0, 1) for i in (0, 1)]


@pytest.mark.parametrize("name", list(ALGEBRAS))
def test_catalog_algebras_pass(name):
    H = get_algebra(name)
    report = verify_hopf(H)
    assert report.passed, report.format()
    assert H.eps(H.one()) == ONE
    assert H.antipode(H.one()) == H.one()


def test_a_basis_order():
    assert get_algebra("a_c2c2").basis == ["1", "g", "h", "gh", "x", "gx", "hx", "ghx"]


def test_a_structure_matches_monomial_oracle():
    H = get_algebra("a_c2c2")
    for p in MONOMIALS:
        assert H.delta(H.e(mono(*p))) == oracle_delta(p)
        assert H.antipode(H.e(mono(*p))) == oracle_antipode(p)
        for q in MONOMIALS:
            assert H.mul(H.e(mono(*p)), H.e(mono(*q))) == oracle_mul(p, q), (p, q)


def test_a_generator_facts():
    H = get_algebra("a_c2c2")
    g, x = H.elem("g"), H.elem("x")
    assert H.mul(g, x) == {5: ONE}
    assert H.mul(x, g) == {5: -ONE}
    assert H.delta(x) == {(4, 0): ONE, (1, 4): ONE}
    assert H.antipode(x) == {5: -ONE}


def test_a_antipode_square_is_conjugation_by_g():
    H = get_algebra("a_c2c2")
    S = H.S_mat
    S2 = S @ S
    # S(x) = -gx, so S^2(x) = -S(x)S(g) = gxg = -x: S^2 is not the identity
    assert S2.apply({4: ONE}) == {4: -ONE}
    assert S2 != eye(8)
    assert S2 @ S2 == eye(8)
    g = H.elem("g")
    for i in range(8):
        assert S2.apply(H.e(i)) == H.prod(g, H.e(i), g)


def test_perturbed_antipode_fails_at_x():
    H = get_algebra("a_c2c2")
    cols = [H.S_mat.column(j) for j in range(8)]
    cols[4] = {4: ONE}  # S(x) := x
    report = verify_hopf(H.with_antipode(Matrix.from_columns(8, cols)))
    assert not report.passed
    bad = report["left antipode"]
    # hand oracle: m(S (x) id)Delta(x) = S(x) + S(g)x = x + gx, but eps(x)1 = 0
    assert bad.witness.index == (4,)
    assert bad.witness.output == (4,)
    assert report.names()[-2:] == ["left antipode", "right antipode"]
    assert all(c.passed for c in report.checks[:-2])


def test_cyclic_group_of_order_two():
    H = group_algebra([[0, 1], [1, 0]], ["1", "g"], "c2")
    assert H.dim == 2
    assert H.S_mat == eye(2)
    assert verify_hopf(H).passed


def test_s3_matches_permutation_oracle():
    H = get_algebra("s3")
    assert H.dim == 6 and verify_hopf(H).passed
    perms = S3_PERMS
    by_tuple = {v: k for k, v in perms.items()}
    assert sorted(perms.values()) == sorted(permutations(range(3)))
    for s, t in product(H.basis, repeat=2):
        st = perm_mul(perms[s], perms[t])
        assert H.mul(H.elem(s), H.elem(t)) == H.elem(by_tuple[st])


def test_non_associative_table_rejected():
    # a loop of order 5 with every element its own inverse cannot be a group
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroupError):
        group_algebra(loop, list("abcde"))


def test_missing_inverse_rejected():
    with pytest.raises(NotAGroupError):
        group_algebra([[0, 1], [1, 1]], ["1", "g"])


def test_h4_embeds_into_a():
    H4, A = get_algebra("h4"), get_algebra("a_c2c2")
    assert H4.basis == ["1", "g", "x", "gx"]
    iota = {0: 0, 1: 1, 2: 4, 3: 5}

    def push(v):
        return {iota[k]: c for k, c in v.items()}

    def push2(v):
        return {(iota[p], iota[q]): c for (p, q), c in v.items()}

    for i in range(4):
        assert push2(H4.delta(H4.e(i))) == A.delta(A.e(iota[i]))
        assert push(H4.antipode(H4.e(i))) == A.antipode(A.e(iota[i]))
        for j in range(4):
            assert push(H4.mul(H4.e(i), H4.e(j))) == A.mul(A.e(iota[i]), A.e(iota[j]))


def _names(H, vecs):
    return sorted(H.basis[next(i for i, c in enumerate(v) if c)] for v in vecs)


def test_grouplikes():
    A = get_algebra("a_c2c2")
    assert _names(A, grouplikes(A)) == ["1", "g", "gh", "h"]
    H4 = get_algebra("h4")
    assert _names(H4, grouplikes(H4)) == ["1", "g"]
    S3 = get_algebra("s3")
    G = grouplikes(S3)
    assert len(G) == 6 and all(sum(1 for c in v if c) == 1 for v in G)


def _vec(A, **coeffs):
    v = [0] * 8
    for name, c in coeffs.items():
        v[A.index(name.replace("_", ""))] = c
    return v


# Nonzero skew-primitive spaces of A, as (g, h, spanning vectors in basis names).
SKEW_TABLE = [
    ("1", "h", [{"1": 1, "h": -1}]),
    ("h", "1", [{"1": 1, "h": -1}]),
    ("1", "gh", [{"1": 1, "gh": -1}]),
    ("gh", "1", [{"1": 1, "gh": -1}]),
    ("g", "h", [{"g": 1, "h": -1}]),
    ("h", "g", [{"g": 1, "h": -1}]),
    ("g", "gh", [{"g": 1, "gh": -1}]),
    ("gh", "g", [{"g": 1, "gh": -1}]),
    ("1", "g", [{"1": 1, "g": -1}, {"x": 1}]),
    ("g", "1", [{"1": 1, "g": -1}, {"gx": 1}]),
    ("h", "gh", [{"h": 1, "gh": -1}, {"hx": 1}]),
    ("gh", "h", [{"h": 1, "gh": -1}, {"ghx": 1}]),
]


def test_skew_primitive_table_is_complete():
    A = get_algebra("a_c2c2")
    listed = {(g, h): span for g, h, span in SKEW_TABLE}
    for g, h in product(["1", "g", "h", "gh"], repeat=2):
        space = skew_primitives(A, A.elem(g), A.elem(h))
        if (g, h) in listed:
            expected = [[d.get(b, 0) for b in A.basis] for d in listed[g, h]]
            assert len(space) == len(expected), (g, h)
            assert span_equal(space, expected), (g, h)
        else:
            assert g == h and space == [], (g, h)


def test_skew_primitive_examples():
    A = get_algebra("a_c2c2")
    assert skew_primitives(A, A.elem("g"), A.elem("g")) == []
    hg = skew_primitives(A, A.elem("h"), A.elem("gh"))
    assert span_equal(hg, [_vec(A, h=1, gh=-1), _vec(A, hx=1)])


def test_skew_primitives_need_grouplikes():
    A = get_algebra("a_c2c2")
    with pytest.raises(NotGroupLikeError):
        skew_primitives(A, A.elem("x"), A.elem("g"))
