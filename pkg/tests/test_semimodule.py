import pytest

from conftest import NI, mat
from semirank.errors import NoCorrespondenceError
from semirank.matrix import standard_basis
from semirank.semimodule import (
    basis_correspondence,
    dimension,
    extract_basis,
    in_span,
    is_independent,
    principal_coefficient,
)
from semirank.semiring import B2


def test_principal_coefficient():
    assert principal_coefficient(mat("maxplus", [[2, 3]]), mat("maxplus", [[0, 1]])) == 2
    assert principal_coefficient(mat("b2", [[1, 1]]), mat("b2", [[1, 0]])) == 1
    assert principal_coefficient(mat("maxplus", [[2, 2]]), mat("maxplus", [[0, 1]])) == 1
    assert principal_coefficient(mat("maxplus", [[2, 2]]), mat("maxplus", [[NI, NI]])) is None


def test_in_span():
    assert in_span(mat("b2", [[1, 1]]), [mat("b2", [[1, 0]]), mat("b2", [[0, 1]])]) == (True, [1, 1])
    ok, coeffs = in_span(mat("maxplus", [[2, 3]]), [mat("maxplus", [[0, 1]])])
    assert ok and list(coeffs) == [2]
    assert in_span(mat("maxplus", [[2, 2]]), [mat("maxplus", [[0, 1]])]) == (False, None)


def test_dependent_boolean_set():
    E11, E12 = mat("b2", [[1, 0], [0, 0]]), mat("b2", [[0, 1], [0, 0]])
    G = [E11, E12, mat("b2", [[1, 1], [0, 0]])]
    assert not is_independent(G)
    assert extract_basis(G) == [E11, E12]
    assert dimension(G) == 2


def test_standard_basis_dimension():
    assert dimension(standard_basis(2, 2, B2)) == 4


def test_maxplus_dependent_pair():
    G = [mat("maxplus", [[0, 1]]), mat("maxplus", [[1, 2]])]
    assert not is_independent(G)
    assert dimension(G) == 1


def test_correspondence_identity():
    E11, E22 = mat("b2", [[1, 0], [0, 0]]), mat("b2", [[0, 0], [0, 1]])
    corr = basis_correspondence([E11, E22], [E11, E22])
    assert [(i, j) for i, j, _ in corr.pairs] == [(1, 1), (2, 2)]
    assert all(a.payload == 1 for a in corr.scalars())


def test_correspondence_maxplus_units():
    B1 = [mat("maxplus", [[0, NI]]), mat("maxplus", [[NI, 0]])]
    B2_ = [mat("maxplus", [[3, NI]]), mat("maxplus", [[NI, -1]])]
    corr = basis_correspondence(B1, B2_)
    assert [a.payload for a in corr.scalars()] == [3, -1]


def test_correspondence_fails_for_different_spans():
    with pytest.raises(NoCorrespondenceError):
        basis_correspondence([mat("b2", [[1, 0]])], [mat("b2", [[0, 1]])])
