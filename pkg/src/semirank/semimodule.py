"""Finitely generated subsemimodules of M_{m x n}(S).

Span membership is decided with the principal (residuated) solution: since
addition is the order maximum, any coefficient vector that reproduces ``x``
is dominated by the greatest coefficients ``lambda_g`` with
``lambda_g * g <= x``, so ``x`` is in the span exactly when those greatest
coefficients already sum to ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from semirank.errors import NoCorrespondenceError, ShapeError
from semirank.matrix import Matrix, scalar_mul
from semirank.semiring import SemiringValue


def principal_coefficient(x: Matrix, g: Matrix):
    """Greatest scalar ``lam`` with ``lam * g <= x``, as a payload.

    Returns ``None`` when ``g`` is the zero matrix.
    """
    if x.shape != g.shape:
        raise ShapeError(f"shape mismatch: {x.shape} vs {g.shape}")
    s = x.semiring
    s.require_ordered("principal_coefficient")
    iz, res = s.is_zero, s.residual
    lam = None
    for rx, rg in zip(x.rows, g.rows):
        for a, b in zip(rx, rg):
            if iz(b):
                continue
            r = res(a, b)
            lam = r if lam is None else s.meet(lam, r)
    return lam


def _principal_sum(x: Matrix, gens: Sequence[Matrix]):
    s = x.semiring
    coeffs = []
    rows = [[s.zero] * x.n for _ in range(x.m)]
    for g in gens:
        lam = principal_coefficient(x, g)
        coeffs.append(s.zero if lam is None else lam)
        if lam is None or s.is_zero(lam):
            continue
        for r_out, rg in zip(rows, g.rows):
            for j, b in enumerate(rg):
                r_out[j] = s.add(r_out[j], s.mul(lam, b))
    return coeffs, tuple(map(tuple, rows))


def in_span(x: Matrix, gens: Sequence[Matrix]):
    """Return ``(True, coefficients)`` if ``x`` lies in span(gens), else ``(False, None)``.

    Coefficients are payloads, one per generator.  The zero matrix is always
    in the span (empty sum).
    """
    gens = list(gens)
    for g in gens:
        if g.shape != x.shape or g.semiring is not x.semiring:
            raise ShapeError("generators must share the target's shape and semiring")
    coeffs, rows = _principal_sum(x, gens)
    if rows == x.rows:
        return True, coeffs
    return False, None


def unit_multiple(x: Matrix, y: Matrix):
    """Return a unit ``alpha`` (payload) with ``y == alpha * x``, or ``None``."""
    if x.shape != y.shape or x.semiring is not y.semiring:
        return None
    s = x.semiring
    for rx, ry in zip(x.rows, y.rows):
        for a, b in zip(rx, ry):
            if not s.is_zero(a):
                if s.is_zero(b):
                    return None
                alpha = s.residual(b, a)
                if s.is_unit(alpha) and scalar_mul(alpha, x) == y:
                    return alpha
                return None
    return None


def canonical_generators(gens: Sequence[Matrix]) -> list[Matrix]:
    """Drop zero matrices, duplicates and unit multiples of earlier members."""
    out: list[Matrix] = []
    for g in gens:
        if g.is_zero():
            continue
        if any(h == g or unit_multiple(h, g) is not None for h in out):
            continue
        out.append(g)
    return out


def is_independent(gens: Sequence[Matrix]) -> bool:
    """No member lies in the span of the others (zero members make it dependent)."""
    gens = list(gens)
    for k, g in enumerate(gens):
        if g.is_zero():
            return False
        if in_span(g, gens[:k] + gens[k + 1:])[0]:
            return False
    return True


def extract_basis(gens: Sequence[Matrix]) -> list[Matrix]:
    """Greedy basis: scan in input order, removing members spanned by the rest."""
    current = canonical_generators(gens)
    k = 0
    while k < len(current):
        others = current[:k] + current[k + 1:]
        if others and in_span(current[k], others)[0]:
            current = others
        else:
            k += 1
    return current


def dimension(gens: Sequence[Matrix]) -> int:
    return len(extract_basis(gens))


@dataclass(frozen=True)
class BasisCorrespondence:
    """Pairs ``(i, j, alpha)`` of 1-based positions with ``B2[j] == alpha * B1[i]``."""

    pairs: tuple

    def scalars(self) -> list[SemiringValue]:
        return [a for _, _, a in self.pairs]


def basis_correspondence(B1: Sequence[Matrix], B2: Sequence[Matrix]) -> BasisCorrespondence:
    B1, B2 = list(B1), list(B2)
    if len(B1) != len(B2):
        raise NoCorrespondenceError(f"bases have different sizes {len(B1)} and {len(B2)}")
    used = set()
    pairs = []
    for i, x in enumerate(B1, start=1):
        match = None
        for j, y in enumerate(B2, start=1):
            alpha = unit_multiple(x, y)
            if alpha is not None:
                if match is not None:
                    raise NoCorrespondenceError(f"member {i} of B1 has several unit multiples in B2")
                match = (j, alpha)
        if match is None:
            raise NoCorrespondenceError(f"member {i} of B1 has no unit multiple in B2")
        if match[0] in used:
            raise NoCorrespondenceError(f"member {match[0]} of B2 matched twice")
        used.add(match[0])
        pairs.append((i, match[0], SemiringValue(x.semiring, match[1])))
    return BasisCorrespondence(tuple(pairs))
