"""Factor rank over totally ordered, residuated idempotent semirings.

Because addition is the order maximum, ``A = b_1 c_1^T + ... + b_k c_k^T``
holds exactly when every summand is dominated by ``A`` and every nonzero
cell of ``A`` is attained ("tight") in at least one summand.  The search in
:func:`factor_rank` therefore looks for small tight covers drawn from
maximal dominated rank-1 matrices (Galois closures), by iterative deepening.

:func:`factor_rank_oracle` is an independent brute-force check that never
uses closures or masked-column seeds.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from semirank.errors import PreconditionError, ResourceLimitError, ShapeError, ZeroArgumentError
from semirank.matrix import BasisCell, Matrix
from semirank.semiring import B2, MAXTIMES_N, Semiring

MAX_DIM = 6
ORACLE_MAX_VECTORS = 200_000


@dataclass(frozen=True)
class RankCertificate:
    """``left @ right == matrix`` with inner dimension ``k``.

    For the zero matrix ``k == 0`` and both factors are ``None``.
    """

    k: int
    left: Optional[Matrix]
    right: Optional[Matrix]


@dataclass(frozen=True)
class Rank1Candidate:
    semiring: Semiring
    b: tuple
    c: tuple
    tight_cells: frozenset

    @property
    def product(self) -> Matrix:
        return outer(self.semiring, self.b, self.c)


def outer(semiring: Semiring, b: Sequence, c: Sequence) -> Matrix:
    mul = semiring.mul
    return Matrix(semiring, tuple(tuple(mul(x, y) for y in c) for x in b), validate=False)


def _column(A: Matrix, j: int) -> tuple:
    return tuple(r[j] for r in A.rows)


# -- rank one -----------------------------------------------------------------

def rank_one_factor(A: Matrix):
    """Return ``(b, c)`` payload vectors with ``A == b c^T``, or ``None``."""
    s = A.semiring
    iz = s.is_zero
    R = [i for i, r in enumerate(A.rows) if not all(iz(x) for x in r)]
    if not R:
        raise ZeroArgumentError("rank_one_factor of the zero matrix")
    C = [j for j in range(A.n) if not all(iz(r[j]) for r in A.rows)]
    for i in R:
        for j in C:
            if iz(A.rows[i][j]):
                return None
    i0, j0 = R[0], C[0]
    for d, q in s.divisor_pairs(A.rows[i0][j0]):
        b = [s.zero] * A.m
        c = [s.zero] * A.n
        ok = True
        for j in C:
            c[j] = s.exact_quotient(A.rows[i0][j], d)
            if c[j] is None:
                ok = False
                break
        if not ok:
            continue
        for i in R:
            b[i] = s.exact_quotient(A.rows[i][j0], q)
            if b[i] is None:
                ok = False
                break
        if ok and outer(s, b, c) == A:
            return tuple(b), tuple(c)
    return None


def is_rank_one(A: Matrix) -> bool:
    return not A.is_zero() and rank_one_factor(A) is not None


# -- Galois closure candidates ------------------------------------------------

def galois_closure(A: Matrix, seed_b: Sequence) -> Rank1Candidate:
    s = A.semiring
    s.require_ordered("galois_closure")
    seed_b = tuple(seed_b)
    if len(seed_b) != A.m:
        raise ShapeError(f"seed has length {len(seed_b)}, expected {A.m}")
    iz, res = s.is_zero, s.residual
    rows_b = [p for p in range(A.m) if not iz(seed_b[p])]
    if not rows_b:
        raise ZeroArgumentError("all-zero seed")
    c = tuple(
        s.meet_all((res(A.rows[p][q], seed_b[p]) for p in rows_b), default=s.zero) for q in range(A.n)
    )
    cols_c = [q for q in range(A.n) if not iz(c[q])]
    b = tuple(
        s.meet_all((res(A.rows[p][q], c[q]) for q in cols_c), default=s.zero) for p in range(A.m)
    )
    mul = s.mul
    tight = frozenset(
        BasisCell(p + 1, q + 1)
        for p in range(A.m)
        for q in range(A.n)
        if not iz(A.rows[p][q]) and mul(b[p], c[q]) == A.rows[p][q]
    )
    return Rank1Candidate(s, b, c, tight)


def _seed_scalings(s: Semiring, col: tuple, subset) -> list:
    """Common right factors ``q`` with ``q | A_pj`` for every row ``p`` in ``subset``.

    Unit-group instances return the single normalized choice ``one``.
    """
    qs = None
    for p in subset:
        opts = {q for _, q in s.divisor_pairs(col[p])}
        qs = opts if qs is None else qs & opts
    return sorted(q for q in qs if all(s.exact_quotient(col[p], q) is not None for p in subset))


def candidate_summands(A: Matrix) -> list[Rank1Candidate]:
    """Closures of every column of ``A`` masked to every nonempty row subset.

    Each masked column is also divided by every common divisor of its
    entries, which matters only where nonzero elements need not be units
    (maxtimes-n): there a floor-residual closure of the unscaled column can
    lose tight cells.
    """
    s = A.semiring
    iz = s.is_zero
    seen = {}
    for j in range(A.n):
        col = _column(A, j)
        rows = [p for p in range(A.m) if not iz(col[p])]
        for r in range(1, len(rows) + 1):
            for subset in itertools.combinations(rows, r):
                for q in _seed_scalings(s, col, subset):
                    seed = tuple(s.exact_quotient(col[p], q) if p in subset else s.zero for p in range(A.m))
                    cand = galois_closure(A, seed)
                    prod = cand.product
                    if prod not in seen and not prod.is_zero():
                        seen[prod] = cand
    return sorted(seen.values(), key=lambda c: c.product.sort_key(), reverse=True)


# -- exact search ---------------------------------------------------------------

def _cover(cells, cands, k):
    """Choose at most ``k`` candidates whose tight cells cover ``cells``."""
    covering = {cell: [idx for idx, c in enumerate(cands) if cell in c.tight_cells] for cell in cells}
    best = None

    def rec(uncovered, chosen):
        nonlocal best
        if not uncovered:
            best = list(chosen)
            return True
        if len(chosen) == k:
            return False
        cell = min(uncovered, key=lambda c: (len(covering[c]), c))
        for idx in covering[cell]:
            if idx in chosen:
                continue
            chosen.append(idx)
            if rec(uncovered - cands[idx].tight_cells, chosen):
                return True
            chosen.pop()
        return False

    rec(frozenset(cells), [])
    return best


@functools.lru_cache(maxsize=1 << 16)
def factor_rank(A: Matrix) -> RankCertificate:
    """Exact factor rank with a witnessing factorization."""
    cert = factor_rank_bounded(A, min(A.m, A.n))
    if cert is None:
        # Unreachable when the candidate family is complete: A = A * I always exists.
        raise RuntimeError(f"no cover of size <= min(m, n) found for {A!r}")
    return cert


def factor_rank_bounded(A: Matrix, max_k: int) -> Optional[RankCertificate]:
    """Like :func:`factor_rank`, but stop deepening after ``max_k``; None if r(A) > max_k."""
    s = A.semiring
    s.require_ordered("factor_rank")
    if A.m > MAX_DIM or A.n > MAX_DIM:
        raise ResourceLimitError(f"factor_rank is limited to {MAX_DIM}x{MAX_DIM}", bound=MAX_DIM)
    if A.is_zero():
        return RankCertificate(0, None, None)
    cells = [BasisCell(i + 1, j + 1) for i, r in enumerate(A.rows) for j, x in enumerate(r) if not s.is_zero(x)]
    if max_k < 1:
        return None
    one = rank_one_factor(A)
    if one is not None:
        return _certificate(s, [one])
    if max_k < 2:
        return None
    cands = candidate_summands(A)
    for k in range(2, min(A.m, A.n, max_k) + 1):
        chosen = _cover(cells, cands, k)
        if chosen is not None:
            chosen = sorted(chosen, key=lambda idx: cands[idx].product.sort_key(), reverse=True)
            return _certificate(s, [(cands[i].b, cands[i].c) for i in chosen])
    return None


def rank(A: Matrix) -> int:
    return factor_rank(A).k


def _certificate(s: Semiring, pairs) -> RankCertificate:
    k = len(pairs)
    left = Matrix(s, tuple(zip(*[b for b, _ in pairs])), validate=False)
    right = Matrix(s, tuple(tuple(c) for _, c in pairs), validate=False)
    return RankCertificate(k, left, right)


# -- brute-force oracle -------------------------------------------------------

def _oracle_left_vectors(A: Matrix):
    """Every left factor column worth trying.

    b2: all of {0,1}^m.  maxtimes-n: each nonzero b_p divides an entry of
    row p (a row with no tight cell can be zeroed).  Unit-group instances:
    b scaled so its first nonzero entry is one; the remaining entries are
    chains of at most m-1 quotients of entries of A, which is where the
    values of a connected tight pattern live.
    """
    s = A.semiring
    m = A.m
    if s is B2:
        yield from itertools.product((0, 1), repeat=m)
        return
    iz = s.is_zero
    entries = sorted({x for r in A.rows for x in r if not iz(x)}, key=s.sort_key)
    if s is MAXTIMES_N:
        per_row = []
        for r in A.rows:
            divs = {s.zero}
            for x in r:
                if not iz(x):
                    divs.update(d for d, _ in s.divisor_pairs(x))
            per_row.append(sorted(divs))
        yield from itertools.product(*per_row)
        return
    quotients = {s.residual(x, y) for x in entries for y in entries}
    values = {s.one}
    layer = {s.one}
    for _ in range(m - 1):
        layer = {s.mul(v, q) for v in layer for q in quotients}
        values |= layer
    values = sorted(values, key=s.sort_key)
    options = [s.zero] + values
    for p0 in range(m):
        for rest in itertools.product(options, repeat=m - p0 - 1):
            yield (s.zero,) * p0 + (s.one,) + rest


def _oracle_vector_count(A: Matrix) -> int:
    s = A.semiring
    if s is B2:
        return 2 ** A.m
    return sum(1 for _ in itertools.islice(_oracle_left_vectors(A), ORACLE_MAX_VECTORS + 1))


def _oracle_summands(A: Matrix) -> list[tuple[frozenset, Matrix]]:
    """Dominated rank-1 matrices, reduced to those with subset-maximal tight sets."""
    s = A.semiring
    iz, res, leq = s.is_zero, s.residual, s.leq
    if _oracle_vector_count(A) > ORACLE_MAX_VECTORS:
        raise ResourceLimitError(
            f"oracle candidate set exceeds {ORACLE_MAX_VECTORS} vectors", bound=ORACLE_MAX_VECTORS
        )
    found = {}

    def consider(b, c):
        P = outer(s, b, c)
        tight = []
        for p, (rp, ra) in enumerate(zip(P.rows, A.rows)):
            for q, (x, y) in enumerate(zip(rp, ra)):
                if not leq(x, y):
                    return
                if x == y and not iz(y):
                    tight.append((p, q))
        if tight:
            found.setdefault(frozenset(tight), P)

    if s is B2:
        for b in _oracle_left_vectors(A):
            for c in itertools.product((0, 1), repeat=A.n):
                consider(b, c)
    else:
        for b in _oracle_left_vectors(A):
            rows_b = [p for p in range(A.m) if not iz(b[p])]
            if not rows_b:
                continue
            c = []
            for q in range(A.n):
                best = None
                for p in rows_b:
                    r = res(A.rows[p][q], b[p])
                    best = r if best is None else s.meet(best, r)
                c.append(best)
            consider(b, c)
    sets = sorted(found, key=lambda t: (-len(t), sorted(t)))
    out = []
    for t in sets:
        if not any(t < u for u in sets):
            out.append((t, found[t]))
    return out


def factor_rank_oracle(A: Matrix, k_max: int) -> Optional[int]:
    """Smallest ``k <= k_max`` such that ``A`` is a sum of ``k`` rank-1 matrices."""
    s = A.semiring
    s.require_ordered("factor_rank_oracle")
    if k_max < 0:
        raise PreconditionError("k_max must be nonnegative")
    if A.is_zero():
        return 0
    summands = _oracle_summands(A)
    cells = frozenset((p, q) for p, r in enumerate(A.rows) for q, x in enumerate(r) if not s.is_zero(x))
    add = s.add
    for k in range(1, k_max + 1):
        for combo in itertools.combinations(summands, k):
            if frozenset().union(*(t for t, _ in combo)) != cells:
                continue
            rows = combo[0][1].rows
            for _, P in combo[1:]:
                rows = tuple(tuple(map(add, r1, r2)) for r1, r2 in zip(rows, P.rows))
            if rows == A.rows:
                return k
    return None
