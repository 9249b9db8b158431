import itertools

import pytest

from conftest import NI, mat
from semirank.errors import ResourceLimitError, ZeroArgumentError
from semirank.matrix import Matrix, mat_mul
from semirank.rank import (
    candidate_summands,
    factor_rank,
    factor_rank_bounded,
    factor_rank_oracle,
    galois_closure,
    is_rank_one,
    outer,
    rank_one_factor,
)
from semirank.semiring import B2, MAXPLUS


def test_rank_one_factor_examples():
    assert rank_one_factor(mat("b2", [[1, 1], [1, 1]])) == ((1, 1), (1, 1))
    b, c = rank_one_factor(mat("maxplus", [[0, 1], [1, 2]]))
    assert outer(MAXPLUS, b, c) == mat("maxplus", [[0, 1], [1, 2]])
    assert rank_one_factor(mat("maxtimes-n", [[2, 3], [3, 4]])) is None
    with pytest.raises(ZeroArgumentError):
        rank_one_factor(Matrix.zeros(B2, 2, 2))


def test_rank_one_factor_needs_integer_split():
    A = mat("maxtimes-n", [[4, 6], [6, 9]])
    b, c = rank_one_factor(A)
    assert sorted([b, c]) == [(2, 3), (2, 3)]


def test_galois_closure_examples():
    A = mat("b2", [[1, 1], [1, 0]])
    cand = galois_closure(A, (1, 1))
    assert (cand.b, cand.c) == ((1, 1), (1, 0))
    assert cand.product == mat("b2", [[1, 0], [1, 0]])
    cand = galois_closure(A, (1, 0))
    assert (cand.b, cand.c) == ((1, 0), (1, 1))
    assert cand.product == mat("b2", [[1, 1], [0, 0]])


def test_closure_of_rank_one_matrix_is_itself():
    A = mat("maxplus", [[1, NI, 3], [0, NI, 2]])
    b, _ = rank_one_factor(A)
    assert galois_closure(A, b).product == A


def test_candidate_summands_examples():
    prods = {c.product for c in candidate_summands(mat("b2", [[1, 0], [0, 1]]))}
    assert prods == {mat("b2", [[1, 0], [0, 0]]), mat("b2", [[0, 0], [0, 1]])}
    prods = {c.product for c in candidate_summands(mat("b2", [[1, 1], [1, 1]]))}
    assert prods == {mat("b2", [[1, 1], [1, 1]])}
    prods = {c.product for c in candidate_summands(mat("maxplus", [[0, 1], [1, 0]]))}
    assert mat("maxplus", [[0, -1], [1, 0]]) in prods
    assert mat("maxplus", [[0, 1], [-1, 0]]) in prods
    assert candidate_summands(Matrix.zeros(B2, 2, 2)) == []


def test_candidates_are_dominated():
    A = mat("maxtimes-n", [[3, 7, 4], [0, 0, 0], [2, 2, 6]])
    for cand in candidate_summands(A):
        assert cand.product <= A


@pytest.mark.parametrize(
    "tag,rows,k",
    [
        ("b2", [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
        ("b2", [[1, 1, 0], [0, 1, 1], [1, 0, 1]], 3),
        ("b2", [[0, 1, 1], [1, 0, 1], [1, 1, 0]], 3),
        ("maxplus", [[0, 1], [1, 0]], 2),
        ("b2", [[0, 0], [0, 0]], 0),
        ("maxtimes-n", [[3, 7, 4], [0, 0, 0], [2, 2, 6]], 2),
    ],
)
def test_factor_rank_examples(tag, rows, k):
    A = mat(tag, rows)
    cert = factor_rank(A)
    assert cert.k == k
    if k:
        assert cert.left.shape == (A.m, k) and cert.right.shape == (k, A.n)
        assert mat_mul(cert.left, cert.right) == A
    else:
        assert cert.left is None and cert.right is None


def test_factor_rank_bounded():
    I3 = Matrix.identity(B2, 3)
    assert factor_rank_bounded(I3, 2) is None
    assert factor_rank_bounded(I3, 3).k == 3
    assert factor_rank_bounded(Matrix.zeros(B2, 2, 2), 0).k == 0
    assert factor_rank_bounded(mat("b2", [[1, 1]]), 0) is None


def test_size_guard():
    with pytest.raises(ResourceLimitError):
        factor_rank(Matrix.zeros(B2, 7, 2))


def test_oracle_examples():
    assert factor_rank_oracle(Matrix.identity(B2, 2), 2) == 2
    assert factor_rank_oracle(Matrix.identity(B2, 2), 1) is None
    assert factor_rank_oracle(mat("maxtimes-n", [[4, 6], [6, 9]]), 1) == 1
    assert factor_rank_oracle(Matrix.zeros(MAXPLUS, 2, 2), 1) == 0


def test_all_boolean_2x2_agree():
    for bits in itertools.product((0, 1), repeat=4):
        A = Matrix(B2, (bits[:2], bits[2:]))
        r = factor_rank(A).k
        assert r in (0, 1, 2)
        assert r == factor_rank_oracle(A, 2)
        assert is_rank_one(A) == (r == 1)
