"""Desk-scale verification suites.

Each suite returns a :class:`SuiteReport`.  Reports are deterministic for a
given seed; wall time is kept out of :meth:`SuiteReport.text` so reruns
print identical reports.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from dataclasses import dataclass, field

from semirank import textio
from semirank.errors import NotUVError, SemirankError
from semirank.matrix import (
    Matrix,
    basis_matrix,
    is_invertible,
    mat_mul,
    permutation_matrix,
)
from semirank.operator import (
    LinearOperator,
    all_matrices,
    all_rank_one,
    apply,
    classify,
    cross_ratio_holds,
    is_invertible_operator,
    separating_construction,
    operator_from_uv,
    rank1_subsemimodules,
    structural_form,
    to_uv_form,
    uv_operator,
)
from semirank.rank import factor_rank, factor_rank_oracle
from semirank.sampling import (
    random_invertible,
    random_matrix,
    random_rank_one,
    random_unit_diagonal,
)
from semirank.semimodule import basis_correspondence, dimension, extract_basis, in_span, is_independent
from semirank.semiring import B2, MAXPLUS, MAXTIMES_N, MAXTIMES_Q, NEG_INF, by_tag, check_axioms

DEFAULT_SEED = 42

AXIOM_SAMPLES = {
    "b2": [0, 1],
    "maxplus": [NEG_INF, -2, 0, 1, 3],
    "maxtimes-q": [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 2)],
    "maxtimes-n": [0, 1, 2, 3, 4, 6],
}


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def text(self) -> str:
        out = [f"suite {self.name}", f"cases {self.cases}"]
        out += [f"{k} {v}" for k, v in self.details.items()]
        out.append(f"violations {len(self.violations)}")
        for v in self.violations:
            out.append("---")
            out.append(v.rstrip("\n"))
        out.append(f"result {'pass' if self.passed else 'FAIL'}")
        return "\n".join(out) + "\n"

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            **{k: v for k, v in self.details.items()},
            "violations": list(self.violations),
            "result": "pass" if self.passed else "FAIL",
        }


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - t0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- every operator on 2x2 Boolean matrices -----------------------------------

def b2_uv_operators(m: int = 2, n: int = 2) -> set:
    """Image tuples of every (U, V) operator built directly from monomial U, V."""
    s = B2
    Us = [permutation_matrix(p, s) for p in itertools.permutations(range(1, m + 1))]
    Vs = [permutation_matrix(p, s) for p in itertools.permutations(range(1, n + 1))]
    out = set()
    for U, V in itertools.product(Us, Vs):
        out.add(uv_operator(U, V, False).images)
        if m == n:
            out.add(uv_operator(U, V, True).images)
    return out


@_timed
def suite_b2_2x2_operators(seed: int = DEFAULT_SEED, with_classify: bool = True) -> SuiteReport:
    """All 65,536 linear operators on M_2x2(B2).

    For each operator computes (a) preserves ranks 1 and 2, (b) preserves
    all ranks, (c) admits a (U,V) form via the structural route, (d)
    invertible and rank-1 preserving, (e) (a) plus preservation of the
    dimension of every rank-1 subsemimodule; the five sets must coincide
    and match the directly constructed (U,V) operators.
    """
    s = B2
    report = SuiteReport("b2-2x2")
    mats = all_matrices(s, 2, 2)
    rank_of = {A: factor_rank(A).k for A in mats}
    rank1 = [A for A in mats if rank_of[A] == 1]
    rank12 = [A for A in mats if rank_of[A] in (1, 2)]
    modules = rank1_subsemimodules(s, 2, 2)
    module_dims = [dimension(list(M)) for M in modules]
    dim_cache: dict = {}

    def dim_of(images):
        key = frozenset(images)
        if key not in dim_cache:
            dim_cache[key] = dimension(list(key))
        return dim_cache[key]

    direct_uv = b2_uv_operators()
    counts = dict.fromkeys(["rank12", "all_ranks", "uv_form", "inv_rank1", "cond_ii", "invertible"], 0)
    for images in itertools.product(mats, repeat=4):
        T = LinearOperator(s, 2, 2, images)
        image_of = {A: apply(T, A) for A in mats}
        p_rank1 = all(rank_of[image_of[A]] == 1 for A in rank1)
        p12 = p_rank1 and all(rank_of[image_of[A]] == rank_of[A] for A in rank12)
        p_all = p12 and all(rank_of[image_of[A]] == rank_of[A] for A in mats)
        inv = is_invertible_operator(T)
        p_inv1 = inv and p_rank1
        p_uv = False
        if inv:
            try:
                to_uv_form(T)
                p_uv = True
            except NotUVError:
                pass
        p_dims = all(dim_of([image_of[X] for X in M]) == d for M, d in zip(modules, module_dims))
        p_ii = p12 and p_dims
        flags = (p12, p_all, p_uv, p_inv1, p_ii, images in direct_uv)
        for key, val in zip(counts, flags[:5] + (inv,)):
            counts[key] += val
        if len(set(flags)) != 1:
            report.violations.append(
                f"flags rank12={p12} all={p_all} uv={p_uv} inv_rank1={p_inv1} cond_ii={p_ii} direct_uv={flags[5]}\n"
                + textio.serialize(T)
            )
        if with_classify:
            verdict = classify(T, seed=seed)
            if verdict.is_preserver != p_all:
                report.violations.append(f"classify verdict {verdict.verdict} disagrees\n" + textio.serialize(T))
            elif not verdict.is_preserver and rank_of[verdict.witness] == rank_of[image_of[verdict.witness]]:
                report.violations.append("classify witness does not change rank\n" + textio.serialize(T))
        report.cases += 1
    report.details.update(
        operators=report.cases,
        rank_preservers=counts["all_ranks"],
        rank12_preservers=counts["rank12"],
        uv_operators=counts["uv_form"],
        direct_uv_operators=len(direct_uv),
        invertible=counts["invertible"],
        invertible_rank1_preservers=counts["inv_rank1"],
        condition_ii=counts["cond_ii"],
        rank1_subsemimodules=len(modules),
    )
    if counts["all_ranks"] != 8:
        report.violations.append(f"expected 8 rank preservers, found {counts['all_ranks']}")
    if counts["invertible"] != 24:
        report.violations.append(f"expected 24 invertible operators, found {counts['invertible']}")
    return report


# -- invertibility ------------------------------------------------------------

def _row_masks(rows) -> tuple:
    return tuple(sum(1 << j for j, x in enumerate(r) if x) for r in rows)


def _mask_product(A: tuple, B: tuple) -> tuple:
    """Boolean product with rows stored as bitmasks."""
    out = []
    for a in A:
        acc = 0
        for l, b in enumerate(B):
            if a >> l & 1:
                acc |= b
        out.append(acc)
    return tuple(out)


def brute_force_has_inverse(A: Matrix) -> bool:
    """Search all Boolean X for AX = XA = I."""
    k = A.m
    a = _row_masks(A.rows)
    ident = tuple(1 << i for i in range(k))
    for X in itertools.product(range(1 << k), repeat=k):
        if _mask_product(a, X) == ident and _mask_product(X, a) == ident:
            return True
    return False


@_timed
def suite_invertibility(seed: int = DEFAULT_SEED) -> SuiteReport:
    report = SuiteReport("invertibility")
    found = 0
    for k in (2, 3):
        for A in all_matrices(B2, k, k):
            report.cases += 1
            fast = is_invertible(A)
            found += fast
            if fast != brute_force_has_inverse(A):
                report.violations.append(f"is_invertible={fast} disagrees with brute force\n" + textio.serialize(A))
    report.details.update(invertible=found)
    return report


# -- factor rank oracle -------------------------------------------------------

RANDOM_RANK_SAMPLES = 500


@_timed
def suite_rank_oracle(seed: int = DEFAULT_SEED, samples: int = RANDOM_RANK_SAMPLES) -> SuiteReport:
    report = SuiteReport("rank-oracle")
    hist: dict = {}

    def check(A):
        report.cases += 1
        r = factor_rank(A).k
        cert = factor_rank(A)
        if r and mat_mul(cert.left, cert.right) != A:
            report.violations.append("certificate does not reproduce the matrix\n" + textio.serialize(A))
        o = factor_rank_oracle(A, min(A.m, A.n))
        if r != o:
            report.violations.append(f"factor_rank={r} oracle={o}\n" + textio.serialize(A))
        hist[r] = hist.get(r, 0) + 1

    exhaustive = 0
    for m in range(1, 4):
        for n in range(1, 4):
            for A in all_matrices(B2, m, n):
                check(A)
                exhaustive += 1
    for s in (MAXPLUS, MAXTIMES_N):
        rng = random.Random(f"{seed}-{s.tag}")
        for _ in range(samples):
            check(random_matrix(s, 3, 3, rng))
    report.details.update(
        b2_exhaustive=exhaustive,
        random_per_semiring=samples,
        rank_histogram=" ".join(f"{k}:{hist[k]}" for k in sorted(hist)),
    )
    return report


# -- separating witness -------------------------------------------------------

TROPICAL_PAIRS = 200


def _check_separation(report, A, B, tally):
    try:
        res = separating_construction(A, B)
    except SemirankError as e:
        report.violations.append(f"construction raised {type(e).__name__}: {e}\n" + textio.serialize([A, B]))
        return
    rA = factor_rank(A + res.C).k
    rB = factor_rank(B + res.C).k
    if {rA, rB} != {1, 2}:
        report.violations.append(f"ranks ({rA},{rB})\n" + textio.serialize([A, B, res.C]))
        return
    na, nb = sum(1 for r in A.rows for x in r if not A.semiring.is_zero(x)), sum(
        1 for r in B.rows for x in r if not B.semiring.is_zero(x)
    )
    if na != nb and ((na > nb) != (rA == 1)):
        report.violations.append("orientation differs from the larger-support rule\n" + textio.serialize([A, B, res.C]))
    family = "i" if na != nb else "ii"
    tally[f"fallback_{family}"] += res.used_fallback
    tally[res.case.split(".fallback")[0]] = tally.get(res.case.split(".fallback")[0], 0) + 1


@_timed
def suite_separating_witness(seed: int = DEFAULT_SEED, pairs: int = TROPICAL_PAIRS) -> SuiteReport:
    report = SuiteReport("separating-witness")
    tally = {"fallback_i": 0, "fallback_ii": 0}
    ones = all_rank_one(B2, 3, 3)
    for A, B in itertools.permutations(ones, 2):
        report.cases += 1
        _check_separation(report, A, B, tally)
    rng = random.Random(f"{seed}-separation")
    tropical = (MAXPLUS, MAXTIMES_N, MAXTIMES_Q)
    done = 0
    while done < pairs:
        s = tropical[done % len(tropical)]
        A = random_rank_one(s, 3, 3, rng)
        B = random_rank_one(s, 3, 3, rng)
        if A == B:
            continue
        done += 1
        report.cases += 1
        _check_separation(report, A, B, tally)
    report.details.update(
        b2_pairs=len(ones) * (len(ones) - 1),
        tropical_pairs=pairs,
        fallback_case_i=tally.pop("fallback_i"),
        fallback_case_ii=tally.pop("fallback_ii"),
        cases_by_construction=" ".join(f"{k}:{v}" for k, v in sorted(tally.items())),
    )
    if report.details["fallback_case_i"]:
        report.violations.append(f"case (i) needed the fallback {report.details['fallback_case_i']} times")
    return report


# -- structure of invertible operators -----------------------------------------

def b2_invertible_operators(m: int = 2, n: int = 2) -> list[LinearOperator]:
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    out = []
    for perm in itertools.permutations(cells):
        out.append(LinearOperator(B2, m, n, tuple(basis_matrix(c, m, n, B2) for c in perm)))
    return out


@_timed
def suite_invertible_structure(seed: int = DEFAULT_SEED) -> SuiteReport:
    report = SuiteReport("structure")
    ones = all_rank_one(B2, 2, 2)
    preservers = structured = 0
    for T in b2_invertible_operators():
        report.cases += 1
        keeps = all(factor_rank(apply(T, X)).k == 1 for X in ones)
        form = structural_form(T)
        preservers += keeps
        structured += form is not None
        if keeps != (form is not None):
            report.violations.append(f"rank-1 preserving={keeps} structural={form is not None}\n" + textio.serialize(T))
        elif form is not None and not cross_ratio_holds(form.alpha):
            report.violations.append("cross-ratio fails\n" + textio.serialize(T))
    report.details.update(invertible=report.cases, rank1_preservers=preservers, structural=structured)
    if preservers != 8:
        report.violations.append(f"expected 8 rank-1 preserving invertible operators, found {preservers}")
    return report


# -- (U,V) synthesis ------------------------------------------------------------

UV_TUPLES = 200
UV_MATRICES = 50


@_timed
def suite_uv_synthesis(seed: int = DEFAULT_SEED, tuples: int = UV_TUPLES, matrices: int = UV_MATRICES) -> SuiteReport:
    report = SuiteReport("uv-synthesis")
    s = MAXPLUS
    rng = random.Random(f"{seed}-uv")
    rank_checks = transposed = 0
    for _ in range(tuples):
        report.cases += 1
        U, V = random_invertible(s, 3, rng), random_invertible(s, 3, rng)
        C, D = random_unit_diagonal(s, 3, rng), random_unit_diagonal(s, 3, rng)
        t = rng.random() < 0.5
        transposed += t
        T = uv_operator(U, V, t, C, D)
        try:
            form = to_uv_form(T)
        except NotUVError as e:
            report.violations.append(f"to_uv_form failed: {e}\n" + textio.serialize(T))
            continue
        if operator_from_uv(form).images != T.images:
            report.violations.append("resynthesized operator differs\n" + textio.serialize(T))
        for _ in range(matrices):
            A = random_matrix(s, 3, 3, rng)
            rank_checks += 1
            r0, r1 = factor_rank(A).k, factor_rank(apply(T, A)).k
            if r0 != r1:
                report.violations.append(f"rank {r0} -> {r1}\n" + textio.serialize(T) + textio.serialize(A))
    report.details.update(transposed=transposed, rank_checks=rank_checks)
    return report


# -- semimodules and axioms ---------------------------------------------------

SPAN_SAMPLES = 100


def _unit_vector_basis(basis) -> bool:
    """Every member is a unit times a standard unit vector, all positions distinct."""
    positions = set()
    for v in basis:
        nz = [(j, x) for j, x in enumerate(v.rows[0]) if not v.semiring.is_zero(x)]
        if len(nz) != 1 or not v.semiring.is_unit(nz[0][1]):
            return False
        positions.add(nz[0][0])
    return len(positions) == len(basis) == basis[0].n


@_timed
def suite_semimodule_and_axioms(seed: int = DEFAULT_SEED, samples: int = SPAN_SAMPLES) -> SuiteReport:
    report = SuiteReport("semimodule-axioms")
    for tag, sample in AXIOM_SAMPLES.items():
        report.cases += 1
        ax = check_axioms(by_tag(tag), sample)
        report.details[f"axioms_{tag}"] = "pass" if ax.passed else "FAIL"
        if not ax.passed:
            report.violations.append(f"axioms {tag}: " + "; ".join(l for l in ax.lines() if "FAIL" in l))

    rng = random.Random(f"{seed}-span")
    nonzero = [A for A in all_matrices(B2, 2, 2) if not A.is_zero()]
    dims: dict = {}
    for _ in range(samples):
        report.cases += 1
        gens = [rng.choice(nonzero) for _ in range(rng.randint(1, 4))]
        order = gens[:]
        rng.shuffle(order)
        B1, B2_ = extract_basis(gens), extract_basis(order)
        ok = is_independent(B1) and is_independent(B2_)
        ok = ok and all(in_span(x, B2_)[0] for x in B1) and all(in_span(y, B1)[0] for y in B2_)
        try:
            corr = basis_correspondence(B1, B2_)
            ok = ok and all(s.semiring.is_unit(s.payload) for s in corr.scalars())
        except SemirankError:
            ok = False
        if not ok:
            report.violations.append("basis correspondence failed\n" + textio.serialize(gens))
        dims[len(B1)] = dims.get(len(B1), 0) + 1
    report.details["span_dimensions"] = " ".join(f"{k}:{dims[k]}" for k in sorted(dims))

    # every basis of B2^n, n <= 3, is the standard one
    bases = 0
    for n in (1, 2, 3):
        vectors = [v for v in all_matrices(B2, 1, n) if not v.is_zero()]
        units = [basis_matrix((1, j), 1, n, B2) for j in range(1, n + 1)]
        for k in range(1, len(vectors) + 1):
            for subset in itertools.combinations(vectors, k):
                subset = list(subset)
                if is_independent(subset) and all(in_span(e, subset)[0] for e in units):
                    bases += 1
                    report.cases += 1
                    if not _unit_vector_basis(subset):
                        report.violations.append("non-standard basis of B2^n\n" + textio.serialize(subset))
    report.details["b2_vector_bases"] = bases

    for _ in range(samples // 2):
        report.cases += 1
        n = rng.randint(1, 3)
        gens = [random_matrix(MAXPLUS, 1, n, rng) for _ in range(rng.randint(0, 3))]
        gens += [
            Matrix(MAXPLUS, (tuple(rng.randint(-3, 3) if q == j else NEG_INF for q in range(n)),), validate=False)
            for j in range(n)
        ]
        rng.shuffle(gens)
        basis = extract_basis(gens)
        if not _unit_vector_basis(basis):
            report.violations.append("maxplus basis of S^n is not scaled unit vectors\n" + textio.serialize(gens))
    return report


SUITES = {
    "b2-2x2": suite_b2_2x2_operators,
    "invertibility": suite_invertibility,
    "rank-oracle": suite_rank_oracle,
    "separating-witness": suite_separating_witness,
    "structure": suite_invertible_structure,
    "uv-synthesis": suite_uv_synthesis,
    "semimodule-axioms": suite_semimodule_and_axioms,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(seed=seed)
