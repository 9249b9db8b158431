from fractions import Fraction

import pytest

from semirank import semiring as sr
from semirank.errors import InstanceMismatchError, NotAUnitError, ResidualUndefinedError, ZeroArgumentError
from semirank.semiring import B2, MAXPLUS, MAXTIMES_N, MAXTIMES_Q, NEG_INF, check_axioms


def v(s, x):
    return s.value(x)


@pytest.mark.parametrize(
    "s,a,b,expected",
    [(B2, 1, 1, 1), (MAXPLUS, 3, 5, 5), (MAXPLUS, NEG_INF, 7, 7), (MAXTIMES_N, 0, 4, 4)],
)
def test_add_is_max(s, a, b, expected):
    assert sr.add(v(s, a), v(s, b)).payload == expected


@pytest.mark.parametrize(
    "s,a,b,expected",
    [
        (MAXPLUS, 3, 5, 8),
        (MAXTIMES_Q, Fraction(1, 2), Fraction(4), Fraction(2)),
        (B2, 1, 0, 0),
        (MAXPLUS, NEG_INF, 5, NEG_INF),
    ],
)
def test_mul(s, a, b, expected):
    assert sr.mul(v(s, a), v(s, b)).payload == expected


def test_operators_on_values():
    a, b = v(MAXPLUS, 2), v(MAXPLUS, -1)
    assert (a + b).payload == 2
    assert (a * b).payload == 1
    assert b <= a


def test_mixed_instances_rejected():
    with pytest.raises(InstanceMismatchError):
        sr.add(v(B2, 1), v(MAXTIMES_N, 1))


@pytest.mark.parametrize("s,a,b,expected", [(B2, 0, 1, True), (MAXPLUS, 5, 3, False), (MAXTIMES_N, 2, 7, True)])
def test_leq(s, a, b, expected):
    assert sr.leq(v(s, a), v(s, b)) is expected


def test_units():
    assert sr.is_unit(v(MAXPLUS, -3))
    assert sr.inv(v(MAXPLUS, -3)).payload == 3
    assert not sr.is_unit(v(MAXTIMES_N, 2))
    assert sr.inv(v(B2, 1)).payload == 1
    assert not sr.is_unit(v(MAXPLUS, NEG_INF))
    assert sr.inv(v(MAXTIMES_Q, Fraction(2, 3))).payload == Fraction(3, 2)
    with pytest.raises(NotAUnitError):
        sr.inv(v(MAXTIMES_N, 2))


@pytest.mark.parametrize(
    "s,a,b,expected",
    [
        (MAXPLUS, 7, 3, 4),
        (MAXPLUS, NEG_INF, 3, NEG_INF),
        (MAXTIMES_N, 7, 2, 3),
        (MAXTIMES_Q, Fraction(7), Fraction(2), Fraction(7, 2)),
        (B2, 0, 1, 0),
        (B2, 1, 1, 1),
    ],
)
def test_residual(s, a, b, expected):
    assert sr.residual(v(s, a), v(s, b)).payload == expected


def test_residual_by_zero():
    with pytest.raises(ResidualUndefinedError):
        sr.residual(v(MAXTIMES_N, 3), v(MAXTIMES_N, 0))


def test_residual_is_greatest():
    for a in range(0, 15):
        for b in range(1, 6):
            x = MAXTIMES_N.residual(a, b)
            assert x * b <= a < (x + 1) * b


def test_divisor_pairs():
    assert [(d.payload, q.payload) for d, q in sr.divisor_pairs(v(MAXTIMES_N, 6))] == [(1, 6), (2, 3), (3, 2), (6, 1)]
    assert [(d.payload, q.payload) for d, q in sr.divisor_pairs(v(B2, 1))] == [(1, 1)]
    assert [(d.payload, q.payload) for d, q in sr.divisor_pairs(v(MAXPLUS, 5))] == [(5, 0)]
    with pytest.raises(ZeroArgumentError):
        sr.divisor_pairs(v(MAXTIMES_N, 0))


def test_axioms_pass_on_documented_samples():
    assert check_axioms(B2, [0, 1]).passed
    assert check_axioms(MAXPLUS, [NEG_INF, -2, 0, 1, 3]).passed
    assert check_axioms(MAXTIMES_N, [0, 1, 2, 3, 4, 6]).passed
    assert check_axioms(MAXTIMES_Q, [Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(5, 2)]).passed


def test_axiom_report_lines():
    rep = check_axioms(MAXTIMES_N, [2, 3])
    assert all(line.endswith("pass") for line in rep.lines())
    assert "unit_irreducibility" in rep.results
    assert "cancellativity" in rep.results
