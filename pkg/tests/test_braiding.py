from __future__ import annotations

from itertools import product

import pytest

from conftest import CORPUS_IDS, INVOLUTIVE, group_oracle, pair_for, r_for
from hopfyb.braiding import (
    BraidingOperator,
    NotABraidingOperatorError,
    PreconditionError,
    build_r,
    check_braid_equation,
    involutive_antipode_check,
    extract_actions_from_r,
    involutivity_report,
    r_inverse_formula,
    r_inverse_via_antipode,
    verify_braiding_axioms,
    ybo_identities,
)
from hopfyb.catalog import family_pair, get_algebra
from hopfyb.linalg import Matrix, eye, flip_matrix
from hopfyb.matched_pair import MatchedPairError, conjugation_pair, trivial_pair
from hopfyb.scalars import A as ALPHA, ONE

GROUP_CASES = ["c2", "c2c2", "s3"]


def perm_matrix(n, f):
    """Matrix of e_x (x) e_y -> e_f(x,y), f on index pairs."""
    return Matrix.from_columns(n * n, [{f(x, y)[0] * n + f(x, y)[1]: ONE}
                                       for x in range(n) for y in range(n)])


def conjugation_oracle(hname):
    H = get_algebra(hname)
    elems, mul, inv = group_oracle(hname)
    idx = {elems[b]: i for i, b in enumerate(H.basis)}
    el = [elems[b] for b in H.basis]

    def f(x, y):
        u, v = el[x], el[y]
        return idx[mul(mul(u, v), inv(u))], x

    return H, f, el, idx, mul, inv


def test_r_on_x_tensor_x_family_one(A):
    r = r_for("family1")
    x, g = A.index("x"), A.index("g")
    # sum over x1(x)x2 in {x(x)1, g(x)x} and the same for y
    expected = {(0, 0): ALPHA, (g, g): -ALPHA, (x, x): -ONE}
    assert r.apply({(x, x): ONE}) == expected


@pytest.mark.parametrize("label", CORPUS_IDS)
def test_r_on_unit_left_is_flip(label):
    r = r_for(label)
    for y in range(r.H.dim):
        assert r.apply({(0, y): ONE}) == {(y, 0): ONE}


@pytest.mark.parametrize("hname", GROUP_CASES)
def test_conjugation_r_is_permutation_oracle(hname):
    H, f, *_ = conjugation_oracle(hname)
    r = build_r(conjugation_pair(H))
    assert r.matrix == perm_matrix(H.dim, f)


@pytest.mark.parametrize("label", CORPUS_IDS)
def test_axioms_and_braid_equation_hold_on_corpus(label):
    r = r_for(label)
    report = verify_braiding_axioms(r)
    assert report.passed, report.format()
    assert len(report.checks) == 6
    assert check_braid_equation(r).passed
    assert check_braid_equation(r, fast=True).passed


def test_s3_braid_identity_by_brute_force():
    H, f, *_ = conjugation_oracle("s3")
    n = H.dim
    for x, y, z in product(range(n), repeat=3):
        a, b = f(x, y)
        b, c = f(b, z)
        a, b = f(a, b)
        lhs = (a, b, c)
        b, c = f(y, z)
        a, b = f(x, b)
        b, c = f(b, c)
        assert lhs == (a, b, c)


def test_flip_on_s3_violates_m_r_equals_m(S3):
    report = verify_braiding_axioms(BraidingOperator(S3, flip_matrix(6)))
    assert not report["(a) m r = m"].passed
    w = report["(a) m r = m"].witness
    i, j = w.index
    assert S3.mul(S3.e(i), S3.e(j)) != S3.mul(S3.e(j), S3.e(i))


def test_braid_equation_counterexample():
    # (x, y) -> (y, xy) on C2 x C2: a coalgebra map whose braid sides differ
    H, _, el, idx, mul, _ = conjugation_oracle("c2c2")
    n = H.dim

    def f(x, y):
        return y, idx[mul(el[x], el[y])]

    M = perm_matrix(n, f)
    check = check_braid_equation(M, n)
    assert not check.passed

    def side(triple, order):
        a, b, c = triple
        for leg in order:
            if leg == 12:
                a, b = f(a, b)
            else:
                b, c = f(b, c)
        return a, b, c

    first = None
    for t in product(range(n), repeat=3):
        lhs, rhs = side(t, (12, 23, 12)), side(t, (23, 12, 23))
        if lhs != rhs:
            first = (t, min(lhs, rhs))
            break
    assert check.witness.index == first[0]
    assert check.witness.output == first[1]


def test_fast_mode_reports_sample_point():
    data = flip_matrix(2).to_lists()
    data[0][1] = ALPHA
    check = check_braid_equation(Matrix.from_lists(data), 2, fast=True)
    assert not check.passed
    assert check.witness.point == "2"


def test_fast_and_exact_verdicts_agree():
    for i, j in product(range(4), repeat=2):
        data = flip_matrix(2).to_lists()
        data[i][j] = ALPHA
        M = Matrix.from_lists(data)
        assert check_braid_equation(M, 2, fast=True).passed == check_braid_equation(M, 2).passed


def test_build_r_rejects_non_matched_pairs(S3):
    with pytest.raises(MatchedPairError):
        build_r(trivial_pair(S3))


@pytest.mark.parametrize("label", CORPUS_IDS)
def test_inverse_formulas(label):
    pair, r = pair_for(label), r_for(label)
    t = r_inverse_formula(pair, r)
    N = r.H.dim ** 2
    assert t @ r.matrix == eye(N) and r.matrix @ t == eye(N)
    assert r_inverse_via_antipode(r) == t


def test_inverse_is_flip_on_c2():
    assert r_inverse_formula(pair_for("conj-c2"), r_for("conj-c2")) == flip_matrix(2)


def test_inverse_on_s3_matches_group_oracle():
    H, _, el, idx, mul, inv = conjugation_oracle("s3")

    def t(u, v):
        return v, idx[mul(mul(inv(el[v]), el[u]), el[v])]

    assert r_inverse_formula(pair_for("conj-s3"), r_for("conj-s3")) == perm_matrix(H.dim, t)


@pytest.mark.parametrize("label", CORPUS_IDS)
def test_r_identities_on_corpus(label):
    report = ybo_identities(pair_for(label), r_for(label))
    assert report.passed, report.format()


@pytest.mark.parametrize("label", CORPUS_IDS)
def test_involutivity_conditions_agree(label):
    report = involutivity_report(pair_for(label), r_for(label))
    values = set(report.conditions().values())
    assert values == {label in INVOLUTIVE}


def test_s3_square_is_not_identity_by_oracle():
    H, f, *_ = conjugation_oracle("s3")
    moved = [(x, y) for x in range(6) for y in range(6) if f(*f(x, y)) != (x, y)]
    assert moved
    report = involutivity_report(pair_for("conj-s3"), r_for("conj-s3"))
    assert report.conditions() == {"i": False, "ii": False, "iii": False, "iv": False}
    w = report.checks[0].witness
    assert w.index in moved


def test_c2_conjugation_r_is_flip():
    assert r_for("conj-c2").matrix == flip_matrix(2)


@pytest.mark.parametrize("label", sorted(INVOLUTIVE))
def test_antipode_identities_for_involutive_r(label):
    report = involutive_antipode_check(pair_for(label), r_for(label))
    assert report.passed, report.format()


def test_antipode_identities_need_involutive_r():
    with pytest.raises(PreconditionError):
        involutive_antipode_check(pair_for("conj-s3"), r_for("conj-s3"))


@pytest.mark.parametrize("label", CORPUS_IDS)
def test_extract_round_trip(label):
    pair = pair_for(label)
    got = extract_actions_from_r(r_for(label).matrix, pair.H)
    assert got.left == pair.left and got.right == pair.right


def test_extract_from_flip_gives_trivial_actions():
    H = get_algebra("c2c2")
    got = extract_actions_from_r(flip_matrix(4), H)
    triv = trivial_pair(H)
    assert got.left == triv.left and got.right == triv.right


def test_extract_rejects_non_braiding_matrix(S3):
    with pytest.raises(NotABraidingOperatorError):
        extract_actions_from_r(flip_matrix(6), S3)
    with pytest.raises(NotABraidingOperatorError):
        extract_actions_from_r(eye(36), S3)


def test_specialised_r_matches_specialised_pair():
    r = r_for("family2").specialize(3)
    assert r.matrix == build_r(family_pair(2, alpha=3)).matrix
