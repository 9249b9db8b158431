"""Linear operators on M_{m x n}(S) and their classification as rank preservers.

An operator is stored by its images of the standard basis; linearity then
fixes ``T(A) = sum_ij A_ij * T(E_ij)``.  :func:`classify` decides whether
``T`` preserves factor rank.  A positive verdict carries a (U, V) normal
form; a negative one carries a concrete matrix whose rank changes, always
re-checked with :func:`semirank.rank.factor_rank`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from semirank.errors import (
    NotAUnitError,
    NotInvertibleError,
    NotUVError,
    OutOfScopeError,
    PreconditionError,
    SearchExhaustedError,
    ShapeError,
    UnsupportedDomainError,
)
from semirank.matrix import (
    BasisCell,
    Matrix,
    basis_matrix,
    diagonal,
    invert_permutation,
    is_diagonal,
    is_invertible,
    mat_add,
    mat_mul,
    nonzero_count,
    nonzero_cols,
    nonzero_rows,
    permutation_matrix,
    standard_basis,
    support,
    transpose,
)
from semirank.rank import factor_rank, is_rank_one, outer
from semirank.sampling import random_matrix, random_rank_one
from semirank.semiring import Semiring

EXHAUSTIVE_MAX_CELLS = 9
SEPARATION_FALLBACK_BUDGET = 1 << 20


@dataclass(frozen=True)
class LinearOperator:
    """``images[(i-1)*n + (j-1)]`` is T(E_ij)."""

    semiring: Semiring
    m: int
    n: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.m * self.n:
            raise ShapeError(f"expected {self.m * self.n} images, got {len(self.images)}")
        for img in self.images:
            if img.semiring is not self.semiring or img.shape != (self.m, self.n):
                raise ShapeError("every image must be an m x n matrix over the operator's semiring")

    @classmethod
    def from_function(cls, semiring, m, n, f) -> "LinearOperator":
        """Build from ``f(i, j) -> Matrix`` giving T(E_ij) (1-based)."""
        return cls(semiring, m, n, tuple(f(i, j) for i in range(1, m + 1) for j in range(1, n + 1)))

    def image(self, i: int, j: int) -> Matrix:
        return self.images[(i - 1) * self.n + (j - 1)]

    def cells(self):
        return [BasisCell(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]

    def __call__(self, A: Matrix) -> Matrix:
        return apply(self, A)


def apply(T: LinearOperator, A: Matrix) -> Matrix:
    if A.semiring is not T.semiring or A.shape != (T.m, T.n):
        raise ShapeError(f"operator acts on {T.m}x{T.n} {T.semiring.tag} matrices, got {A!r}")
    s = T.semiring
    iz, add, mul = s.is_zero, s.add, s.mul
    out = [list(r) for r in Matrix.zeros(s, T.m, T.n).rows]
    k = 0
    for row in A.rows:
        for a in row:
            if not iz(a):
                for r_out, r_img in zip(out, T.images[k].rows):
                    for q, x in enumerate(r_img):
                        if not iz(x):
                            r_out[q] = add(r_out[q], mul(a, x))
            k += 1
    return Matrix(s, tuple(map(tuple, out)), validate=False)


# -- named operators ----------------------------------------------------------

def identity_operator(s: Semiring, m: int, n: int) -> LinearOperator:
    return LinearOperator.from_function(s, m, n, lambda i, j: basis_matrix((i, j), m, n, s))


def transpose_operator(s: Semiring, n: int) -> LinearOperator:
    return LinearOperator.from_function(s, n, n, lambda i, j: basis_matrix((j, i), n, n, s))


def collapse_operator(s: Semiring, m: int, n: int) -> LinearOperator:
    return LinearOperator.from_function(s, m, n, lambda i, j: basis_matrix((1, 1), m, n, s))


# -- invertibility and representation ---------------------------------------

@dataclass(frozen=True)
class Representation:
    """``entries[(i, j)] == (alpha, p, q)`` with T(E_ij) = alpha * E_pq."""

    entries: dict

    def cell_map(self) -> dict:
        return {cell: (p, q) for cell, (_, p, q) in self.entries.items()}


def _scaled_basis(img: Matrix):
    """``(alpha, p, q)`` if ``img == alpha * E_pq`` with ``alpha`` nonzero."""
    iz = img.semiring.is_zero
    hit = None
    for p, r in enumerate(img.rows, start=1):
        for q, x in enumerate(r, start=1):
            if not iz(x):
                if hit is not None:
                    return None
                hit = (x, p, q)
    return hit


def _representation_or_none(T: LinearOperator) -> Optional[Representation]:
    s = T.semiring
    entries = {}
    targets = set()
    for cell in T.cells():
        hit = _scaled_basis(T.image(*cell))
        if hit is None or not s.is_unit(hit[0]):
            return None
        targets.add(hit[1:])
        entries[cell] = hit
    if len(targets) != T.m * T.n:
        return None
    return Representation(entries)


def is_invertible_operator(T: LinearOperator) -> bool:
    return _representation_or_none(T) is not None


def representation(T: LinearOperator) -> Representation:
    rep = _representation_or_none(T)
    if rep is None:
        raise NotInvertibleError("operator does not permute the standard basis up to unit scalars")
    return rep


def inverse_operator(T: LinearOperator) -> LinearOperator:
    s = T.semiring
    rep = representation(T)
    images = {}
    for (i, j), (alpha, p, q) in rep.entries.items():
        images[(p, q)] = _scale(s, s.inv(alpha), basis_matrix((i, j), T.m, T.n, s))
    return LinearOperator.from_function(s, T.m, T.n, lambda i, j: images[(i, j)])


def _scale(s, alpha, A):
    return Matrix(s, tuple(tuple(s.mul(alpha, x) for x in r) for r in A.rows), validate=False)


# -- structural form and (U, V) synthesis -------------------------------------

@dataclass(frozen=True)
class StructuralForm:
    """T(E_ij) = alpha_ij E_{rho(i), sigma(j)}, or E_{sigma(j), rho(i)} when transposed."""

    rho: tuple
    sigma: tuple
    alpha: Matrix
    transposed: bool


def structural_form(T: LinearOperator) -> Optional[StructuralForm]:
    rep = representation(T)
    m, n = T.m, T.n
    cmap = rep.cell_map()
    alpha = Matrix(
        T.semiring,
        tuple(tuple(rep.entries[(i, j)][0] for j in range(1, n + 1)) for i in range(1, m + 1)),
        validate=False,
    )
    rho = tuple(cmap[(i, 1)][0] for i in range(1, m + 1))
    sigma = tuple(cmap[(1, j)][1] for j in range(1, n + 1))
    if all(cmap[(i, j)] == (rho[i - 1], sigma[j - 1]) for i, j in cmap):
        return StructuralForm(rho, sigma, alpha, False)
    if m == n:
        sigma = tuple(cmap[(1, j)][0] for j in range(1, n + 1))
        rho = tuple(cmap[(i, 1)][1] for i in range(1, m + 1))
        if all(cmap[(i, j)] == (sigma[j - 1], rho[i - 1]) for i, j in cmap):
            return StructuralForm(rho, sigma, alpha, True)
    return None


def cross_ratio_violation(alpha: Matrix) -> Optional[tuple]:
    """First 1-based ``(i, l, j, k)`` with alpha_ij alpha_lk != alpha_lj alpha_ik."""
    s = alpha.semiring
    for r in alpha.rows:
        for x in r:
            if not s.is_unit(x):
                raise NotAUnitError(f"cross-ratio needs unit entries, got {s.format_token(x)}")
    a, mul = alpha.rows, s.mul
    for i, l in itertools.combinations(range(alpha.m), 2):
        for j, k in itertools.combinations(range(alpha.n), 2):
            if mul(a[i][j], a[l][k]) != mul(a[l][j], a[i][k]):
                return (i + 1, l + 1, j + 1, k + 1)
    return None


def cross_ratio_holds(alpha: Matrix) -> bool:
    return cross_ratio_violation(alpha) is None


@dataclass(frozen=True)
class UVForm:
    """T(A) = U C A D V, or U (C A D)^t V when ``transposed``."""

    U: Matrix
    C: Matrix
    D: Matrix
    V: Matrix
    transposed: bool

    def apply(self, A: Matrix) -> Matrix:
        core = mat_mul(mat_mul(self.C, A), self.D)
        if self.transposed:
            core = transpose(core)
        return mat_mul(mat_mul(self.U, core), self.V)


def to_uv_form(T: LinearOperator) -> UVForm:
    s = T.semiring
    form = structural_form(T)
    if form is None:
        raise NotUVError("operator is invertible but not a product of row and column permutations")
    bad = cross_ratio_violation(form.alpha)
    if bad is not None:
        raise NotUVError(f"cross-ratio fails on rows {bad[:2]}, columns {bad[2:]}", minor=bad)
    a = form.alpha.rows
    inv11 = s.inv(a[0][0])
    C = diagonal(s, [s.mul(a[i][0], inv11) for i in range(T.m)])
    D = diagonal(s, [a[0][j] for j in range(T.n)])
    if form.transposed:
        U = permutation_matrix(invert_permutation(form.sigma), s)
        V = permutation_matrix(form.rho, s)
    else:
        U = permutation_matrix(invert_permutation(form.rho), s)
        V = permutation_matrix(form.sigma, s)
    uv = UVForm(U, C, D, V, form.transposed)
    for cell in T.cells():
        E = basis_matrix(cell, T.m, T.n, s)
        if uv.apply(E) != T.image(*cell):
            raise AssertionError(f"synthesized (U,V) form disagrees with T on E{cell}")
    return uv


def uv_operator(U: Matrix, V: Matrix, transposed: bool = False, C: Matrix = None, D: Matrix = None) -> LinearOperator:
    s = U.semiring
    if not (U.m == U.n and V.m == V.n):
        raise ShapeError("U and V must be square")
    if not is_invertible(U) or not is_invertible(V):
        raise NotInvertibleError("U and V must be monomial with unit entries")
    if transposed:
        m, n = U.m, V.n
        if m != n:
            raise ShapeError("the transposed form needs square matrices")
        inner_m, inner_n = m, n
    else:
        m, n = U.m, V.n
        inner_m, inner_n = m, n
    C = Matrix.identity(s, inner_m) if C is None else C
    D = Matrix.identity(s, inner_n) if D is None else D
    for M, k in ((C, inner_m), (D, inner_n)):
        if M.shape != (k, k) or not is_diagonal(M) or not is_invertible(M):
            raise NotInvertibleError("C and D must be invertible diagonal matrices of matching size")
    form = UVForm(U, C, D, V, transposed)
    return LinearOperator(s, m, n, tuple(form.apply(E) for E in standard_basis(m, n, s)))


def operator_from_uv(form: UVForm) -> LinearOperator:
    return uv_operator(form.U, form.V, form.transposed, form.C, form.D)


# -- enumeration helpers ------------------------------------------------------

def all_matrices(s: Semiring, m: int, n: int) -> list[Matrix]:
    if not s.finite:
        raise UnsupportedDomainError(f"cannot enumerate matrices over {s.tag}")
    vals = s.elements()
    return [
        Matrix(s, tuple(tuple(cells[r * n:(r + 1) * n]) for r in range(m)), validate=False)
        for cells in itertools.product(vals, repeat=m * n)
    ]


def _small_first(P: Matrix):
    return (nonzero_count(P), sorted(support(P)), P.sort_key())


def all_rank_one(s: Semiring, m: int, n: int) -> list[Matrix]:
    """Every rank-1 matrix over a finite semiring, smallest support first."""
    vals = s.elements()
    found = set()
    for b in itertools.product(vals, repeat=m):
        for c in itertools.product(vals, repeat=n):
            P = outer(s, b, c)
            if not P.is_zero():
                found.add(P)
    return sorted(found, key=_small_first)


def _ratio_scalars(T: LinearOperator, limit: int = 12) -> list:
    s = T.semiring
    entries = sorted({x for img in T.images for r in img.rows for x in r if not s.is_zero(x)}, key=s.sort_key)
    scal = {s.one}
    for x in entries:
        for y in entries:
            scal.add(s.residual(x, y))
    scal = sorted(scal, key=lambda v: (v != s.one, s.sort_key(v)))
    return scal[:limit]


def rank_one_pool(T: LinearOperator, seed: int = 0, extra: int = 200) -> list[Matrix]:
    """Rank-1 test inputs for witness searches, smallest support first.

    Exhaustive over finite semirings; otherwise scaled basis matrices,
    two- and four-cell gadgets scaled by ratios of the operator's entries,
    and ``extra`` seeded random rank-1 matrices.
    """
    s, m, n = T.semiring, T.m, T.n
    if s.finite and m * n <= EXHAUSTIVE_MAX_CELLS:
        return all_rank_one(s, m, n)
    scal = _ratio_scalars(T)
    pool = set()
    z = s.zero
    for i, j in itertools.product(range(m), range(n)):
        for a in scal:
            b = [z] * m
            c = [z] * n
            b[i], c[j] = s.one, a
            pool.add(outer(s, b, c))
    for i, l in itertools.combinations_with_replacement(range(m), 2):
        for j, k in itertools.combinations_with_replacement(range(n), 2):
            if i == l and j == k:
                continue
            for x, y in itertools.product(scal, repeat=2):
                b = [z] * m
                c = [z] * n
                b[i] = s.one
                b[l] = x if l != i else s.one
                c[j] = s.one
                c[k] = y if k != j else s.one
                pool.add(outer(s, b, c))
    rng = random.Random(seed)
    for _ in range(extra):
        pool.add(random_rank_one(s, m, n, rng))
    return sorted(pool, key=_small_first)


# -- rank preservation --------------------------------------------------------

@dataclass
class PreservationReport:
    checked: int
    by_rank: dict
    violation: Optional[tuple]

    @property
    def ok(self) -> bool:
        return self.violation is None


def preserves_rank_upto(T: LinearOperator, k_max: int, domain="exhaustive") -> PreservationReport:
    """Check r(T(A)) == r(A) for every A with r(A) <= k_max in ``domain``.

    ``domain`` is ``"exhaustive"`` (finite semirings, m*n <= 9) or a tuple
    ``("random", seed, count)``.
    """
    s = T.semiring
    if domain == "exhaustive":
        if not s.finite:
            raise UnsupportedDomainError(f"exhaustive check over infinite {s.tag}")
        if T.m * T.n > EXHAUSTIVE_MAX_CELLS:
            raise UnsupportedDomainError(f"exhaustive check limited to {EXHAUSTIVE_MAX_CELLS} cells")
        inputs: Iterable[Matrix] = sorted(all_matrices(s, T.m, T.n), key=_small_first)
    else:
        kind, seed, count = domain
        if kind != "random":
            raise UnsupportedDomainError(f"unknown domain {domain!r}")
        rng = random.Random(seed)
        inputs = (random_matrix(s, T.m, T.n, rng) for _ in range(count))
    checked = 0
    by_rank: dict = {}
    for A in inputs:
        r = factor_rank(A).k
        if r > k_max:
            continue
        checked += 1
        by_rank[r] = by_rank.get(r, 0) + 1
        r2 = factor_rank(apply(T, A)).k
        if r2 != r:
            return PreservationReport(checked, by_rank, (A, r, r2))
    return PreservationReport(checked, by_rank, None)


# -- separating witness -------------------------------------------------------

@dataclass(frozen=True)
class SeparationResult:
    C: Matrix
    case: str
    ranks: tuple
    used_fallback: bool


def _zeroed(A: Matrix, i0: int, j0: int) -> Matrix:
    rows = [list(r) for r in A.rows]
    rows[i0][j0] = A.semiring.zero
    return Matrix(A.semiring, tuple(map(tuple, rows)), validate=False)


def _single_row_construction(P, Q, i0, j0, sub):
    """C for the case where P + Q has a single nonzero row ``i0`` (0-based indices).

    ``sub`` is None for the support-differing case, "P" when P_{i0j0} is not
    below Q_{i0j0}, "Q" for the reverse.  The result is built so that the
    matrix that should end up with rank 1 gets two equal nonzero rows.
    """
    s = P.semiring
    m, n = P.shape
    S = mat_add(P, Q).rows
    i1 = min(r for r in range(m) if r != i0)
    rows = [[s.zero] * n for _ in range(m)]
    if sub is None:
        for j in range(n):
            if j != j0:
                rows[i0][j] = S[i0][j]
            rows[i1][j] = S[i0][j]
        return Matrix(s, tuple(map(tuple, rows)), validate=False)
    j1 = min(c for c in range(n) if c != j0)
    a, b = P.rows[i0][j0], Q.rows[i0][j0]
    rows[i0][j0] = b if sub == "P" else a
    for j in range(n):
        if j not in (j0, j1):
            rows[i0][j] = S[i0][j]
        if j != j1:
            rows[i1][j] = S[i0][j]
    shared = s.add(S[i0][j1], b)
    rows[i0][j1] = shared
    rows[i1][j1] = shared
    return Matrix(s, tuple(map(tuple, rows)), validate=False)


def _construct(P: Matrix, Q: Matrix, i0: int, j0: int, sub):
    """Build C from the case analysis; returns ``(C, label)``."""
    S = mat_add(P, Q)
    rows, cols = nonzero_rows(S), nonzero_cols(S)
    family = "i" if sub is None else "ii"
    if len(rows) >= 2 and len(cols) >= 2:
        base = P if sub in (None, "P") else Q
        return _zeroed(base, i0, j0), f"{family}.1"
    if len(rows) == 1:
        return _single_row_construction(P, Q, i0, j0, sub), f"{family}.2"
    Ct, _ = _construct(transpose(P), transpose(Q), j0, i0, sub)
    return transpose(Ct), f"{family}.3"


def _plan(A: Matrix, B: Matrix):
    """Return ``(C, label, rank1_side)`` where rank1_side in {"A", "B"}."""
    s = A.semiring
    if factor_rank(mat_add(A, B)).k == 2:
        return A, "sum-rank-2", "A"
    iz, leq = s.is_zero, s.leq
    cells = [(i, j) for i in range(A.m) for j in range(A.n)]
    if nonzero_count(A) == nonzero_count(B):
        for i, j in cells:
            a, b = A.rows[i][j], B.rows[i][j]
            if not iz(a) and not iz(b) and a != b:
                if not leq(a, b):
                    C, label = _construct(A, B, i, j, "P")
                    return C, label + ".sub1", "A"
                C, label = _construct(A, B, i, j, "Q")
                return C, label + ".sub2", "B"
    for i, j in cells:
        if not iz(A.rows[i][j]) and iz(B.rows[i][j]):
            C, label = _construct(A, B, i, j, None)
            return C, label, "A"
    for i, j in cells:
        if iz(A.rows[i][j]) and not iz(B.rows[i][j]):
            C, label = _construct(B, A, i, j, None)
            return C, label, "B"
    raise PreconditionError("A and B must be distinct")


def separating_construction(A: Matrix, B: Matrix) -> SeparationResult:
    """C with {r(A+C), r(B+C)} = {1, 2} for distinct rank-1 A, B.

    When A has more nonzero entries than B, r(A+C) = 1 and r(B+C) = 2.
    """
    if A.semiring is not B.semiring or A.shape != B.shape:
        raise PreconditionError("A and B must share shape and semiring")
    if A.m < 2 or A.n < 2:
        raise PreconditionError("needs m > 1 and n > 1")
    if A == B:
        raise PreconditionError("A and B must be distinct")
    if not (is_rank_one(A) and is_rank_one(B)):
        raise PreconditionError("A and B must both have rank 1")
    if nonzero_count(A) < nonzero_count(B):
        res = separating_construction(B, A)
        return SeparationResult(res.C, res.case, res.ranks[::-1], res.used_fallback)
    C, label, side = _plan(A, B)
    ranks = (factor_rank(mat_add(A, C)).k, factor_rank(mat_add(B, C)).k)
    want = (1, 2) if side == "A" else (2, 1)
    if ranks == want:
        return SeparationResult(C, label, ranks, False)
    C = _fallback_search(A, B)
    ranks = (factor_rank(mat_add(A, C)).k, factor_rank(mat_add(B, C)).k)
    return SeparationResult(C, label + ".fallback", ranks, True)


def _fallback_search(A: Matrix, B: Matrix) -> Matrix:
    s = A.semiring
    values = {s.zero}
    values |= {x for M in (A, B) for r in M.rows for x in r}
    values |= {s.add(x, y) for x in list(values) for y in list(values)}
    values = sorted(values, key=s.sort_key)
    total = len(values) ** (A.m * A.n)
    if total > SEPARATION_FALLBACK_BUDGET:
        raise SearchExhaustedError(
            f"construction failed and fallback space has {total} matrices (budget {SEPARATION_FALLBACK_BUDGET}) for A={A!r}, B={B!r}"
        )
    for cells in itertools.product(values, repeat=A.m * A.n):
        C = Matrix(s, tuple(tuple(cells[r * A.n:(r + 1) * A.n]) for r in range(A.m)), validate=False)
        if {factor_rank(mat_add(A, C)).k, factor_rank(mat_add(B, C)).k} == {1, 2}:
            return C
    raise SearchExhaustedError(f"no witness C found for A={A!r}, B={B!r}")


def separating_witness(A: Matrix, B: Matrix) -> Matrix:
    return separating_construction(A, B).C


# -- rank-1 collision witness --------------------------------------------------

def witness_rank2_collapse(T: LinearOperator, pool: Sequence[Matrix] = None, seed: int = 0):
    """Find rank-1 X != Y with T(X) == T(Y) and C with r(X+C) or r(Y+C) = 2.

    Returns ``(X, Y, C)`` with nonzero_count(X) >= nonzero_count(Y).
    Collisions whose sum already has rank 2 are preferred (then C = X).
    """
    if is_invertible_operator(T):
        raise PreconditionError("operator is invertible; no rank-1 collision exists")
    if pool is None:
        pool = rank_one_pool(T, seed=seed)
    buckets: dict = {}
    for P in pool:
        buckets.setdefault(apply(T, P), []).append(P)
    first = None
    for group in buckets.values():
        for P, Q in itertools.combinations(group, 2):
            X, Y = (P, Q) if nonzero_count(P) >= nonzero_count(Q) else (Q, P)
            if factor_rank(mat_add(X, Y)).k == 2:
                return X, Y, X
            if first is None:
                first = (X, Y)
    if first is None:
        raise SearchExhaustedError("no colliding rank-1 pair found in the search pool")
    X, Y = first
    return X, Y, separating_witness(X, Y)


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class ClassificationResult:
    verdict: str  # "RankPreserver" or "Violation"
    uv_form: Optional[UVForm] = None
    witness: Optional[Matrix] = None
    rank_before: Optional[int] = None
    rank_after: Optional[int] = None
    stage: str = ""

    @property
    def is_preserver(self) -> bool:
        return self.verdict == "RankPreserver"


def _violation(T, W, stage):
    r0 = factor_rank(W).k
    r1 = factor_rank(apply(T, W)).k
    if r0 == r1:
        raise AssertionError(f"witness {W!r} does not change rank")
    return ClassificationResult("Violation", witness=W, rank_before=r0, rank_after=r1, stage=stage)


def _gadgets(T: LinearOperator) -> list[Matrix]:
    """Two-cell and four-cell all-ones rank-1 matrices, smallest first."""
    s, m, n = T.semiring, T.m, T.n
    out = []
    z = s.zero
    for rows in [(i,) for i in range(m)] + list(itertools.combinations(range(m), 2)):
        for cols in [(j,) for j in range(n)] + list(itertools.combinations(range(n), 2)):
            if len(rows) == len(cols) == 1:
                continue
            b = [s.one if p in rows else z for p in range(m)]
            c = [s.one if q in cols else z for q in range(n)]
            out.append(outer(s, b, c))
    return sorted(out, key=_small_first)


def classify(T: LinearOperator, seed: int = 0) -> ClassificationResult:
    if T.m < 2 or T.n < 2:
        raise OutOfScopeError("classification needs m > 1 and n > 1")
    if not is_invertible_operator(T):
        pool = rank_one_pool(T, seed=seed)
        for X in pool:
            if factor_rank(apply(T, X)).k != 1:
                return _violation(T, X, "rank-1 input")
        X, Y, C = witness_rank2_collapse(T, pool=pool)
        XC, YC = mat_add(X, C), mat_add(Y, C)
        W = XC if factor_rank(XC).k == 2 else YC
        return _violation(T, W, "rank-1 collision")
    form = structural_form(T)
    if form is None or not cross_ratio_holds(form.alpha):
        for G in _gadgets(T):
            if factor_rank(apply(T, G)).k != 1:
                return _violation(T, G, "gadget")
        raise SearchExhaustedError("invertible non-(U,V) operator but no gadget changed rank")
    return ClassificationResult("RankPreserver", uv_form=to_uv_form(T), stage="uv-form")


# -- rank-1 subsemimodules ----------------------------------------------------

def rank1_subsemimodules(s: Semiring, m: int, n: int) -> list[tuple]:
    """Every nonzero finitely generated rank-1 subsemimodule over a finite semiring.

    Each entry is a tuple of its nonzero members (which also generate it).
    """
    if not s.finite:
        raise UnsupportedDomainError("rank-1 subsemimodules are only enumerated over finite semirings")
    ones = all_rank_one(s, m, n)
    vals = [v for v in s.elements() if not s.is_zero(v)]
    modules = set()
    for k in range(1, len(ones) + 1):
        for gens in itertools.combinations(ones, k):
            span = _finite_span(s, gens, vals)
            if span is not None:
                modules.add(span)
    return sorted((tuple(sorted(M, key=Matrix.sort_key)) for M in modules), key=lambda t: (len(t), [M.sort_key() for M in t]))


def _finite_span(s, gens, vals):
    members = set()
    frontier = {_scale(s, a, g) for g in gens for a in vals}
    while frontier:
        members |= frontier
        new = set()
        for X in frontier:
            for Y in list(members):
                Z = mat_add(X, Y)
                if Z not in members:
                    if not is_rank_one(Z):
                        return None
                    new.add(Z)
        frontier = new
    return frozenset(members)
