"""Dense matrices over a semiring.

Entries are stored row-major as a tuple of tuples of payloads.  All public
cell indices (``BasisCell``, ``entry``, ``support``, permutations) are
1-based.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from semirank.errors import InstanceMismatchError, NoInverseError, ShapeError
from semirank.semiring import Semiring, SemiringValue


class BasisCell(NamedTuple):
    i: int
    j: int


class Matrix:
    __slots__ = ("semiring", "rows", "_hash")

    def __init__(self, semiring: Semiring, rows: Iterable[Iterable], *, validate: bool = True):
        if validate:
            rows = tuple(tuple(semiring.validate(_payload(x, semiring)) for x in row) for row in rows)
            if not rows or not rows[0]:
                raise ShapeError("matrices must have at least one row and one column")
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged rows")
        self.semiring = semiring
        self.rows = rows
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, semiring: Semiring, m: int, n: int) -> "Matrix":
        _check_dims(m, n)
        z = semiring.zero
        return cls(semiring, tuple((z,) * n for _ in range(m)), validate=False)

    @classmethod
    def identity(cls, semiring: Semiring, k: int) -> "Matrix":
        return diagonal(semiring, [semiring.one] * k)

    # -- shape and access --------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]))

    def entry(self, i: int, j: int) -> SemiringValue:
        """The (i, j) entry, 1-based."""
        self._check_cell(i, j)
        return SemiringValue(self.semiring, self.rows[i - 1][j - 1])

    def _check_cell(self, i, j):
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise ShapeError(f"cell ({i},{j}) outside a {self.m}x{self.n} matrix")

    def cells(self):
        return [BasisCell(i + 1, j + 1) for i in range(self.m) for j in range(self.n)]

    def replace(self, updates: dict) -> "Matrix":
        """Copy with the given 1-based cells set to new payloads."""
        rows = [list(r) for r in self.rows]
        for (i, j), v in updates.items():
            self._check_cell(i, j)
            rows[i - 1][j - 1] = self.semiring.validate(_payload(v, self.semiring))
        return Matrix(self.semiring, tuple(map(tuple, rows)), validate=False)

    # -- value semantics ---------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.semiring is other.semiring and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.semiring.tag, self.rows))
        return self._hash

    def __repr__(self):
        fmt = self.semiring.format_token
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"Matrix({self.semiring.tag}, [{body}])"

    def sort_key(self):
        key = self.semiring.sort_key
        return tuple(key(x) for r in self.rows for x in r)

    def is_zero(self) -> bool:
        iz = self.semiring.is_zero
        return all(iz(x) for r in self.rows for x in r)

    # -- operators ---------------------------------------------------------
    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __rmul__(self, scalar):
        return scalar_mul(scalar, self)

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __le__(self, other):
        return dominates(self, other)


def _payload(x, semiring):
    if isinstance(x, SemiringValue):
        if x.semiring is not semiring:
            raise InstanceMismatchError(f"{x.semiring.tag} value in a {semiring.tag} matrix")
        return x.payload
    return x


def _check_dims(m, n):
    if m < 1 or n < 1:
        raise ShapeError(f"dimensions must be positive, got {m}x{n}")


def _same(A: Matrix, B: Matrix) -> Semiring:
    if A.semiring is not B.semiring:
        raise InstanceMismatchError(f"cannot combine {A.semiring.tag} and {B.semiring.tag} matrices")
    return A.semiring


def _same_shape(A: Matrix, B: Matrix) -> Semiring:
    s = _same(A, B)
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")
    return s


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    s = _same_shape(A, B)
    add = s.add
    return Matrix(s, tuple(tuple(map(add, ra, rb)) for ra, rb in zip(A.rows, B.rows)), validate=False)


def mat_sum(mats: Sequence[Matrix]) -> Matrix:
    it = iter(mats)
    total = next(it)
    for M in it:
        total = mat_add(total, M)
    return total


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    s = _same(A, B)
    if A.n != B.m:
        raise ShapeError(f"cannot multiply {A.m}x{A.n} by {B.m}x{B.n}")
    add, mul, zero = s.add, s.mul, s.zero
    cols = list(zip(*B.rows))
    out = []
    for ra in A.rows:
        row = []
        for cb in cols:
            acc = zero
            for x, y in zip(ra, cb):
                acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(tuple(row))
    return Matrix(s, tuple(out), validate=False)


def scalar_mul(alpha, A: Matrix) -> Matrix:
    s = A.semiring
    a = s.validate(_payload(alpha, s))
    mul = s.mul
    return Matrix(s, tuple(tuple(mul(a, x) for x in r) for r in A.rows), validate=False)


def transpose(A: Matrix) -> Matrix:
    return Matrix(A.semiring, tuple(zip(*A.rows)), validate=False)


def dominates(A: Matrix, B: Matrix) -> bool:
    """``A <= B`` entrywise (B dominates A)."""
    s = _same_shape(A, B)
    leq = s.leq
    return all(leq(x, y) for ra, rb in zip(A.rows, B.rows) for x, y in zip(ra, rb))


def nonzero_count(A: Matrix) -> int:
    iz = A.semiring.is_zero
    return sum(1 for r in A.rows for x in r if not iz(x))


def support(A: Matrix) -> frozenset:
    iz = A.semiring.is_zero
    return frozenset(
        BasisCell(i + 1, j + 1) for i, r in enumerate(A.rows) for j, x in enumerate(r) if not iz(x)
    )


def nonzero_rows(A: Matrix) -> list[int]:
    iz = A.semiring.is_zero
    return [i + 1 for i, r in enumerate(A.rows) if not all(iz(x) for x in r)]


def nonzero_cols(A: Matrix) -> list[int]:
    return nonzero_rows(transpose(A))


def basis_matrix(cell, m: int, n: int, semiring: Semiring) -> Matrix:
    """The standard basis matrix E_ij (1-based cell)."""
    _check_dims(m, n)
    i, j = cell
    if not (1 <= i <= m and 1 <= j <= n):
        raise ShapeError(f"cell ({i},{j}) outside {m}x{n}")
    z, one = semiring.zero, semiring.one
    rows = tuple(tuple(one if (r == i - 1 and c == j - 1) else z for c in range(n)) for r in range(m))
    return Matrix(semiring, rows, validate=False)


def standard_basis(m: int, n: int, semiring: Semiring) -> list[Matrix]:
    return [basis_matrix((i, j), m, n, semiring) for i in range(1, m + 1) for j in range(1, n + 1)]


def diagonal(semiring: Semiring, values: Sequence) -> Matrix:
    k = len(values)
    _check_dims(k, k)
    vals = [semiring.validate(_payload(v, semiring)) for v in values]
    z = semiring.zero
    return Matrix(
        semiring, tuple(tuple(vals[r] if r == c else z for c in range(k)) for r in range(k)), validate=False
    )


def diagonal_entries(D: Matrix) -> list:
    return [D.rows[i][i] for i in range(D.m)]


def is_diagonal(D: Matrix) -> bool:
    iz = D.semiring.is_zero
    return D.m == D.n and all(iz(x) for i, r in enumerate(D.rows) for j, x in enumerate(r) if i != j)


# -- permutations -------------------------------------------------------------

def check_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    """Validate a 1-based permutation given as the tuple of images."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    perm = check_permutation(perm)
    out = [0] * len(perm)
    for l, p in enumerate(perm, start=1):
        out[p - 1] = l
    return tuple(out)


def permutation_matrix(perm: Sequence[int], semiring: Semiring) -> Matrix:
    """P_k(perm): one() at (l, perm(l)), zero elsewhere."""
    perm = check_permutation(perm)
    k = len(perm)
    _check_dims(k, k)
    z, one = semiring.zero, semiring.one
    return Matrix(
        semiring,
        tuple(tuple(one if c == perm[r] - 1 else z for c in range(k)) for r in range(k)),
        validate=False,
    )


# -- invertibility ------------------------------------------------------------

def is_monomial(A: Matrix) -> bool:
    if A.m != A.n:
        raise ShapeError("monomial test needs a square matrix")
    iz = A.semiring.is_zero
    mask = [[not iz(x) for x in r] for r in A.rows]
    return all(sum(r) == 1 for r in mask) and all(sum(c) == 1 for c in zip(*mask))


def is_invertible(A: Matrix) -> bool:
    """A square matrix is invertible iff it is monomial with unit nonzero entries."""
    if not is_monomial(A):
        return False
    s = A.semiring
    return all(s.is_unit(x) for r in A.rows for x in r if not s.is_zero(x))


def inverse(A: Matrix) -> Matrix:
    if not is_invertible(A):
        raise NoInverseError("matrix is not monomial with unit entries")
    s = A.semiring
    k = A.m
    out = [[s.zero] * k for _ in range(k)]
    for i, r in enumerate(A.rows):
        for j, x in enumerate(r):
            if not s.is_zero(x):
                out[j][i] = s.inv(x)
    return Matrix(s, tuple(map(tuple, out)), validate=False)
