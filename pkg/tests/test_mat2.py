import pytest
from hypothesis import given, strategies as st

from bezoutree.bezout_core import PreconditionError
from bezoutree.mat2 import (
    IDENTITY,
    Gen,
    Mat2,
    apply,
    eval_word,
    factor,
    format_matrix,
    format_word,
    inv_transpose,
    mat_inv,
    mat_mul,
    parse_matrix,
    parse_word,
)

T, S, U = Gen.T.matrix, Gen.S.matrix, Gen.U.matrix
words = st.lists(st.sampled_from(list(Gen)), max_size=12)


def test_generators():
    assert U == Mat2(0, 1, 1, 0)
    assert S == Mat2(0, -1, 1, 0)
    assert T == Mat2(1, 1, 0, 1)
    for g in Gen:
        assert mat_mul(g.matrix, g.inverse.matrix) == IDENTITY


def test_rejects_non_unimodular():
    with pytest.raises(PreconditionError):
        Mat2(1, 2, 3, 4)
    with pytest.raises(PreconditionError):
        Mat2(2, 0, 0, 1)


def test_mat_mul():
    assert mat_mul(T, T) == Mat2(1, 2, 0, 1)
    A = Mat2(2, 1, 1, 0)
    assert mat_mul(A, IDENTITY) == A
    assert mat_mul(S, Gen.Sinv.matrix) == IDENTITY
    assert T @ T == Mat2(1, 2, 0, 1)


def test_mat_inv():
    assert mat_inv(Mat2(2, 1, 1, 0)) == Mat2(0, 1, 1, -2)
    assert mat_inv(IDENTITY) == IDENTITY
    assert mat_inv(T) == Mat2(1, -1, 0, 1)


def test_inv_transpose():
    assert inv_transpose(Mat2(2, 1, 1, 0)) == Mat2(0, 1, 1, -2)
    assert inv_transpose(IDENTITY) == IDENTITY
    assert inv_transpose(T) == Mat2(1, 0, -1, 1)


def test_apply():
    assert apply(Mat2(2, 1, 1, 0), (3, 1)) == (7, 3)
    assert apply(IDENTITY, (-4, 9)) == (-4, 9)
    assert apply(T, (1, -2)) == (-1, -2)


def test_eval_word():
    assert eval_word([Gen.T, Gen.T, Gen.S]) == Mat2(2, -1, 1, 0)
    assert eval_word("TTU") == Mat2(2, 1, 1, 0)
    assert eval_word([]) == IDENTITY


@pytest.mark.parametrize(
    "A", [Mat2(1, 2, 0, 1), IDENTITY, Mat2(2, 1, 1, 0), Mat2(-1, 0, 0, -1), Mat2(1, 0, 0, -1),
          Mat2(-1, 5, 0, 1), Mat2(0, 1, 1, 0), Mat2(-3, 7, 2, -5)],
)
def test_factor_round_trip(A):
    assert eval_word(factor(A)) == A


def test_factor_identity_is_empty():
    assert factor(IDENTITY) == []
    assert factor(Mat2(1, 2, 0, 1)) == [Gen.T, Gen.T]


def test_factor_rejects_non_unimodular():
    with pytest.raises(PreconditionError):
        factor([[2, 0], [0, 2]])


@given(words)
def test_factor_round_trip_random(word):
    A = eval_word(word)
    assert eval_word(factor(A)) == A


@given(words)
def test_det_from_letters(word):
    assert eval_word(word).det == (-1) ** sum(1 for g in word if g is Gen.U)


@given(words, words)
def test_inv_transpose_is_homomorphism(w1, w2):
    A, B = eval_word(w1), eval_word(w2)
    assert inv_transpose(A @ B) == inv_transpose(A) @ inv_transpose(B)


def test_literals():
    assert parse_matrix("2,-1;1,0") == Mat2(2, -1, 1, 0)
    assert format_matrix(Mat2(2, -1, 1, 0)) == "2,-1;1,0"
    assert parse_word("TTsU") == [Gen.T, Gen.T, Gen.Sinv, Gen.U]
    assert format_word(parse_word("tSsTU")) == "tSsTU"
    for bad in ("1,2", "1,2;3", "a,b;c,d"):
        with pytest.raises(ValueError):
            parse_matrix(bad)
    with pytest.raises(ValueError):
        parse_word("TX")
