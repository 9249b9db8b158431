from fractions import Fraction

import pytest

from conftest import NI, mat
from semirank.errors import ParseError
from semirank.matrix import Matrix
from semirank.operator import collapse_operator, transpose_operator
from semirank.semiring import B2, MAXPLUS
from semirank.textio import parse_generators, parse_matrix, parse_operator, serialize, to_json


def test_parse_identity():
    assert parse_matrix("semiring b2\n2 2\n1 0\n0 1\n") == Matrix.identity(B2, 2)


def test_parse_neg_inf():
    assert parse_matrix("semiring maxplus\n1 2\n-inf 3\n") == Matrix(MAXPLUS, ((NI, 3),))


def test_parse_fraction_canonicalizes():
    A = parse_matrix("semiring maxtimes-q\n1 3\n  2/4   3   0/5 \n")
    assert A.rows == ((Fraction(1, 2), Fraction(3), Fraction(0)),)
    assert serialize(A) == "semiring maxtimes-q\n1 3\n1/2 3 0\n"


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("semiring maxtimes-n\n1 1\n-2\n", 3, 1),
        ("semiring tropical\n1 1\n0\n", 1, 10),
        ("semiring b2\n2 x\n", 2, 3),
        ("semiring b2\n1 2\n1\n", 3, 1),
        ("semiring b2\n1 2\n1 2\n", 3, 3),
        ("semiring b2\n2 1\n1\n", 4, None),
        ("semiring b2\n1 1\n1\n1\n", 4, None),
    ],
)
def test_parse_errors_have_positions(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_matrix(text)
    assert err.value.line == line
    assert err.value.column == column
    assert str(err.value).startswith(f"line {line}")


def test_roundtrip_matrix():
    for A in [mat("maxplus", [[NI, -3], [0, 7]]), mat("maxtimes-n", [[0, 12, 1]]), Matrix.identity(B2, 3)]:
        assert parse_matrix(serialize(A)) == A


def test_roundtrip_operator():
    for T in (transpose_operator(B2, 2), collapse_operator(MAXPLUS, 2, 3)):
        text = serialize(T)
        assert text.splitlines()[2] == "E 1 1"
        assert parse_operator(text) == T


def test_operator_cell_order_enforced():
    text = serialize(transpose_operator(B2, 2)).replace("E 1 2", "E 2 1", 1)
    with pytest.raises(ParseError):
        parse_operator(text)


def test_generators():
    gens = [mat("b2", [[1, 0]]), mat("b2", [[0, 1]])]
    assert parse_generators(serialize(gens)) == gens
    with pytest.raises(ParseError):
        parse_generators("semiring b2\n1 1\n1\n\nsemiring b2\n1 2\n1 1\n")


def test_json_mirrors_text():
    A = mat("maxplus", [[NI, 2]])
    assert to_json(A) == {"semiring": "maxplus", "m": 1, "n": 2, "rows": [["-inf", "2"]]}
    j = to_json(transpose_operator(B2, 2))
    assert j["images"][1] == {"cell": [1, 2], "rows": [["0", "0"], ["1", "0"]]}
