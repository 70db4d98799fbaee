from __future__ import annotations

from itertools import product

import pytest

from hopfyb.braiding import build_r, involutivity_report
from hopfyb.catalog import family_pair, get_algebra
from hopfyb.cqt import (
    NotConvolutionInvertibleError,
    counit_form,
    cqt_braid_matrix,
    family2_obstruction,
    grouplike_obstruction,
    induce_pair_from_cqt,
    is_cotriangular,
    make_form,
    r_alpha_form,
    verify_cqt,
)
from hopfyb.linalg import Matrix
from hopfyb.matched_pair import trivial_pair, verify_matched_pair
from hopfyb.scalars import A as ALPHA, ZERO, Scalar

EXPONENTS = [(i, j, k) for k in (0, 1) for j in (0, 1) for i in (0, 1)]


def r_alpha_oracle(p, q, alpha=ALPHA):
    (i, j, k), (l, m, n) = EXPONENTS[p], EXPONENTS[q]
    v = ZERO
    if k == 0 and n == 0:
        v = v + Scalar((-1) ** ((i + j) * (l + m)))
    if k == 1 and n == 1:
        v = v + alpha * (-1) ** ((i + j) * (l + m + 1))
    return v


def convolve(H, F, G, a, b):
    total = ZERO
    for (a1, a2), c in H.delta(H.e(a)).items():
        for (b1, b2), d in H.delta(H.e(b)).items():
            total = total + c * d * F(a1, b1) * G(a2, b2)
    return total


def test_r_alpha_matches_formula():
    F = r_alpha_form()
    for p, q in product(range(8), repeat=2):
        assert F.form[p, q] == r_alpha_oracle(p, q)


def test_r_alpha_spot_values(A):
    F = r_alpha_form()
    g, x = A.index("g"), A.index("x")
    assert F.R(g, g) == Scalar(-1)
    assert F.R(x, x) == ALPHA
    assert F.R(g, x) == ZERO


def test_r_alpha_inverse_is_opposite(A):
    F = r_alpha_form()
    assert is_cotriangular(F)
    op = lambda a, b: r_alpha_oracle(b, a)  # noqa: E731
    for a, b in product(range(8), repeat=2):
        unit = A.counit[a] * A.counit[b]
        assert convolve(A, op, r_alpha_oracle, a, b) == unit
        assert convolve(A, r_alpha_oracle, op, a, b) == unit


def test_r_alpha_is_coquasitriangular():
    report = verify_cqt(r_alpha_form())
    assert report.passed, report.format()
    assert len(report.checks) == 5


def test_counit_form_is_its_own_inverse():
    for name in ("c2c2", "s3", "a_c2c2"):
        F = counit_form(get_algebra(name))
        assert F.inverse_form == F.form
        assert is_cotriangular(F)


def test_counit_form_on_commutative_algebra_passes():
    assert verify_cqt(counit_form(get_algebra("c2c2"))).passed


def test_counit_form_on_s3_fails_first_axiom(S3):
    report = verify_cqt(counit_form(S3))
    assert not report.passed
    first_axiom = report.checks[2]
    assert not first_axiom.passed
    i, j = first_axiom.witness.index
    assert S3.mul(S3.e(i), S3.e(j)) != S3.mul(S3.e(j), S3.e(i))


def test_zero_form_is_not_invertible(A):
    with pytest.raises(NotConvolutionInvertibleError):
        make_form(A, Matrix(8, 8))


def test_r_alpha_induces_family_one():
    induced = induce_pair_from_cqt(r_alpha_form())
    fam1 = family_pair(1)
    assert induced.left == fam1.left
    assert induced.right == fam1.right


def test_induced_braiding_equals_form_braiding():
    F = r_alpha_form()
    induced = induce_pair_from_cqt(F)
    assert build_r(induced).matrix == cqt_braid_matrix(F)


def test_counit_form_induces_trivial_actions():
    H = get_algebra("c2c2")
    induced = induce_pair_from_cqt(counit_form(H))
    triv = trivial_pair(H)
    assert induced.left == triv.left and induced.right == triv.right


def test_cotriangular_forms_give_involutive_pairs():
    for F in (r_alpha_form(), counit_form(get_algebra("c2c2"))):
        pair = induce_pair_from_cqt(F)
        assert verify_matched_pair(pair).passed
        assert involutivity_report(pair).passed


@pytest.mark.parametrize("alpha", [0, 1, Scalar(-3), Scalar(2) / 7])
def test_r_alpha_specialisations(alpha):
    F = r_alpha_form(alpha)
    assert verify_cqt(F).passed and is_cotriangular(F)
    assert induce_pair_from_cqt(F).left == family_pair(1, alpha=alpha).left


def test_family_two_obstruction():
    report = family2_obstruction()
    assert report.passed, report.format()
    assert any("h -> h" in n for n in report.notes)


def test_grouplike_obstruction_witness(A):
    report = grouplike_obstruction(family_pair(2))
    assert not report.passed
    w = report.checks[0].witness
    # h -> h = gh is the first nontrivial interaction in basis order
    assert w.index == (A.index("h"), A.index("h"))
    assert grouplike_obstruction(family_pair(1)).passed


def test_family_two_differs_from_every_specialisation():
    fam2 = family_pair(2)
    for alpha in (0, 1, -1, 5):
        induced = induce_pair_from_cqt(r_alpha_form(alpha))
        assert induced.left != fam2.specialize(alpha).left

