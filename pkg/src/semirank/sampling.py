"""Seeded random generation of values, matrices and operators.

Windows (kept small so exhaustive-style oracles stay cheap):

* maxplus: integers in [-3, 3], or -inf with probability 1/8
* maxtimes-n: 0 with probability 1/8, else an integer in [1, 8]
* maxtimes-q: 0 with probability 1/8, else p/q with p in [1, 6], q in [1, 4]
* b2: a fair bit
"""

from __future__ import annotations

import random
from fractions import Fraction

from semirank.matrix import Matrix, diagonal, mat_mul, permutation_matrix
from semirank.semiring import B2, MAXPLUS, MAXTIMES_N, MAXTIMES_Q, Semiring

ZERO_PROBABILITY = 1 / 8


def random_value(s: Semiring, rng: random.Random, *, nonzero: bool = False):
    if s is B2:
        return 1 if nonzero else rng.randint(0, 1)
    if not nonzero and rng.random() < ZERO_PROBABILITY:
        return s.zero
    if s is MAXPLUS:
        return rng.randint(-3, 3)
    if s is MAXTIMES_N:
        return rng.randint(1, 8)
    if s is MAXTIMES_Q:
        return Fraction(rng.randint(1, 6), rng.randint(1, 4))
    raise ValueError(f"no sampler for {s.tag}")


def random_unit(s: Semiring, rng: random.Random):
    if s is MAXPLUS:
        return rng.randint(-3, 3)
    if s is MAXTIMES_Q:
        return Fraction(rng.randint(1, 6), rng.randint(1, 4))
    return s.one


def random_matrix(s: Semiring, m: int, n: int, rng: random.Random) -> Matrix:
    return Matrix(s, tuple(tuple(random_value(s, rng) for _ in range(n)) for _ in range(m)), validate=False)


def random_vector(s: Semiring, k: int, rng: random.Random) -> tuple:
    while True:
        v = tuple(random_value(s, rng) for _ in range(k))
        if not all(s.is_zero(x) for x in v):
            return v


def random_rank_one(s: Semiring, m: int, n: int, rng: random.Random) -> Matrix:
    b = random_vector(s, m, rng)
    c = random_vector(s, n, rng)
    return Matrix(s, tuple(tuple(s.mul(x, y) for y in c) for x in b), validate=False)


def random_permutation(k: int, rng: random.Random) -> tuple[int, ...]:
    perm = list(range(1, k + 1))
    rng.shuffle(perm)
    return tuple(perm)


def random_unit_diagonal(s: Semiring, k: int, rng: random.Random) -> Matrix:
    return diagonal(s, [random_unit(s, rng) for _ in range(k)])


def random_invertible(s: Semiring, k: int, rng: random.Random) -> Matrix:
    """A random monomial matrix with unit entries."""
    return mat_mul(random_unit_diagonal(s, k, rng), permutation_matrix(random_permutation(k, rng), s))
