from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfyb.catalog import get_algebra
from hopfyb.hopf import skew_primitives
from hopfyb.linalg import (
    Matrix,
    SingularMatrixError,
    Tensor3,
    eye,
    flat_index,
    flip_matrix,
    kron,
    leg_permutation,
    mat_inverse,
    nullspace,
    rank,
    span_equal,
    split_index,
)
from hopfyb.scalars import A, ONE, ZERO, Scalar


# Plain list-of-Fraction oracles.

def naive_mul(X, Y):
    return [[sum((X[i][k] * Y[k][j] for k in range(len(Y))), Fraction(0))
             for j in range(len(Y[0]))] for i in range(len(X))]


def naive_kron(X, Y):
    p, q = len(Y), len(Y[0])
    return [[X[i // p][j // q] * Y[i % p][j % q] for j in range(len(X[0]) * q)]
            for i in range(len(X) * p)]


def as_fractions(M: Matrix):
    return [[x.to_fraction() for x in row] for row in M.to_lists()]


small = st.integers(-4, 4)
mat2 = st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2)


def test_kron_of_identities():
    assert kron(eye(2), eye(2)) == eye(4)


def test_kron_with_one_by_one_identity():
    X = Matrix.from_lists([[0, 1], [1, 0]])
    assert kron(X, eye(1)) == X


@settings(max_examples=40, deadline=None)
@given(mat2, mat2, mat2, mat2)
def test_kron_mixed_product(a, b, c, d):
    A_, B, C, D = (Matrix.from_lists(m) for m in (a, b, c, d))
    assert kron(A_, B) @ kron(C, D) == kron(A_ @ C, B @ D)
    assert as_fractions(kron(A_, B)) == naive_kron([[Fraction(x) for x in r] for r in a],
                                                   [[Fraction(x) for x in r] for r in b])


@settings(max_examples=40, deadline=None)
@given(mat2, mat2, mat2)
def test_product_associative_and_matches_oracle(a, b, c):
    X, Y, Z = (Matrix.from_lists(m) for m in (a, b, c))
    assert (X @ Y) @ Z == X @ (Y @ Z)
    assert as_fractions(X @ Y) == naive_mul([[Fraction(x) for x in r] for r in a],
                                            [[Fraction(x) for x in r] for r in b])


def test_inverse_of_identity():
    assert mat_inverse(eye(8)) == eye(8)


def test_inverse_of_antipode_of_a():
    S = get_algebra("a_c2c2").S_mat
    Sinv = mat_inverse(S)
    assert S @ Sinv == eye(8) and Sinv @ S == eye(8)


def test_inverse_symbolic():
    M = Matrix.from_lists([[A, 1], [1, A]])
    Minv = mat_inverse(M)
    assert M @ Minv == eye(2) and Minv @ M == eye(2)
    assert Minv[0, 0] == A / (A * A - 1)


def test_inverse_of_zero_is_singular():
    with pytest.raises(SingularMatrixError):
        mat_inverse(Matrix.from_lists([[0, 0], [0, 0]]))
    with pytest.raises(SingularMatrixError):
        mat_inverse(Matrix.from_lists([[1, 2], [2, 4]]))


def test_flip_small_cases():
    assert flip_matrix(1) == eye(1)
    F = flip_matrix(2)
    assert F @ F == eye(4)


def test_flip_is_involution_up_to_eight():
    for n in range(1, 9):
        F = flip_matrix(n)
        assert (F @ F).is_identity()


def test_flip_moves_basis_tensors():
    F = flip_matrix(8)
    assert F.apply({flat_index((3, 5), 8): ONE}) == {flat_index((5, 3), 8): ONE}


def test_leg_permutation_cycle():
    P = leg_permutation(2, (2, 0, 1))
    # output leg 0 carries input leg 2
    src = flat_index((1, 0, 0), 2)
    assert P.apply({src: ONE}) == {flat_index((0, 1, 0), 2): ONE}


def test_index_helpers_round_trip():
    for k in range(27):
        assert flat_index(split_index(k, 3, 3), 3) == k


def test_nullspace_examples():
    assert nullspace(eye(3)) == []
    assert len(nullspace(Matrix.from_lists([[0, 0], [0, 0]]))) == 2


def test_nullspace_vectors_are_killed():
    M = Matrix.from_lists([[1, 2, 3], [2, 4, 6], [A, 0, 1]])
    basis = nullspace(M)
    assert len(basis) == 1 and rank(M) == 2
    v = {i: x for i, x in enumerate(basis[0]) if x}
    assert M.apply(v) == {}


def test_skew_primitive_constraint_for_one_and_g():
    H = get_algebra("a_c2c2")
    one, g = H.elem("1"), H.elem("g")
    space = skew_primitives(H, one, g)
    expected = [[1, -1, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0, 0]]
    assert len(space) == 2
    assert span_equal(space, expected)


def test_span_equal_distinguishes():
    assert span_equal([[1, 0], [0, 1]], [[1, 1], [1, -1]])
    assert not span_equal([[1, 0]], [[0, 1]])
    assert span_equal([], [])


def test_tensor3_matrix_round_trip():
    t = Tensor3.from_function(2, lambda i, j: {(i + j) % 2: Scalar(i + 1)})
    M = t.to_matrix()
    assert M.shape == (2, 4)
    assert Tensor3.from_matrix(M) == t
    assert t.image(1, 0) == {1: Scalar(2)}
    assert t[0, 0, 1] == ZERO
