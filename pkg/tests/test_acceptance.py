"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also when run as
``python tests/test_acceptance.py``).  Time limits are wall-clock seconds.
"""

import sys

import pytest

from semirank.suites import (
    DEFAULT_SEED,
    suite_b2_2x2_operators,
    suite_invertibility,
    suite_invertible_structure,
    suite_rank_oracle,
    suite_semimodule_and_axioms,
    suite_separating_witness,
    suite_uv_synthesis,
)

LIMIT_OPERATOR_ENUMERATION = 120.0
LIMIT_INVERTIBILITY = 10.0
LIMIT_RANK_ORACLE = 120.0
LIMIT_SEPARATING_WITNESS = 120.0

EXPECTED_PRESERVERS = 8
EXPECTED_INVERTIBLE_2X2 = 24
MIN_RANDOM_RANK_SAMPLES = 500
TROPICAL_PAIRS = 200
UV_TUPLES = 200
UV_MATRICES_EACH = 50
SPAN_SAMPLES = 100


def _report(number, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"


def _first_violation(report):
    return report.violations[0].splitlines()[0] if report.violations else "none"


def check_operator_enumeration():
    r = suite_b2_2x2_operators(seed=DEFAULT_SEED)
    d = r.details
    sets_agree = (
        d["rank_preservers"]
        == d["rank12_preservers"]
        == d["uv_operators"]
        == d["condition_ii"]
        == d["direct_uv_operators"]
        == EXPECTED_PRESERVERS
    )
    ok = r.passed and r.cases == 65536 and sets_agree and r.wall_time <= LIMIT_OPERATOR_ENUMERATION
    return ok, _report(
        1,
        "all 65536 operators on 2x2 Boolean matrices",
        ok,
        f"preservers={d['rank_preservers']} rank12={d['rank12_preservers']} uv={d['uv_operators']} "
        f"condition_ii={d['condition_ii']} direct={d['direct_uv_operators']} "
        f"violations={len(r.violations)} time={r.wall_time:.1f}s<= {LIMIT_OPERATOR_ENUMERATION:.0f}s",
    )


def check_invertibility():
    r = suite_invertibility(seed=DEFAULT_SEED)
    ok = r.passed and r.cases == 16 + 512 and r.wall_time <= LIMIT_INVERTIBILITY
    return ok, _report(
        2,
        "is_invertible agrees with brute-force inverse search",
        ok,
        f"cases={r.cases} disagreements={len(r.violations)} time={r.wall_time:.1f}s<= {LIMIT_INVERTIBILITY:.0f}s",
    )


def check_rank_oracle():
    r = suite_rank_oracle(seed=DEFAULT_SEED)
    ok = (
        r.passed
        and r.details["random_per_semiring"] >= MIN_RANDOM_RANK_SAMPLES
        and r.details["b2_exhaustive"] == sum(2 ** (m * n) for m in (1, 2, 3) for n in (1, 2, 3))
        and r.wall_time <= LIMIT_RANK_ORACLE
    )
    return ok, _report(
        3,
        "factor_rank equals the brute-force oracle",
        ok,
        f"cases={r.cases} disagreements={len(r.violations)} first={_first_violation(r)} "
        f"time={r.wall_time:.1f}s<= {LIMIT_RANK_ORACLE:.0f}s",
    )


def check_separating_witness():
    r = suite_separating_witness(seed=DEFAULT_SEED)
    d = r.details
    ok = (
        r.passed
        and d["b2_pairs"] == 49 * 48
        and d["tropical_pairs"] == TROPICAL_PAIRS
        and d["fallback_case_i"] == 0
        and r.wall_time <= LIMIT_SEPARATING_WITNESS
    )
    return ok, _report(
        4,
        "separating witness C for every pair of distinct rank-1 matrices",
        ok,
        f"pairs={r.cases} failures={len(r.violations)} fallback_i={d['fallback_case_i']} "
        f"fallback_ii={d['fallback_case_ii']} time={r.wall_time:.1f}s<= {LIMIT_SEPARATING_WITNESS:.0f}s",
    )


def check_structure():
    r = suite_invertible_structure(seed=DEFAULT_SEED)
    d = r.details
    ok = r.passed and d["invertible"] == EXPECTED_INVERTIBLE_2X2 and d["rank1_preservers"] == d["structural"] == 8
    return ok, _report(
        5,
        "structural form exactly for rank-1-preserving invertible operators",
        ok,
        f"invertible={d['invertible']} rank1_preserving={d['rank1_preservers']} structural={d['structural']} "
        f"violations={len(r.violations)}",
    )


def check_uv_synthesis():
    r = suite_uv_synthesis(seed=DEFAULT_SEED)
    ok = r.passed and r.cases == UV_TUPLES and r.details["rank_checks"] == UV_TUPLES * UV_MATRICES_EACH
    return ok, _report(
        6,
        "(U,V) synthesis reproduces operators and preserves rank",
        ok,
        f"tuples={r.cases} rank_checks={r.details['rank_checks']} violations={len(r.violations)}",
    )


def check_basis_uniqueness():
    r = suite_semimodule_and_axioms(seed=DEFAULT_SEED)
    spans = sum(int(x.split(":")[1]) for x in r.details["span_dimensions"].split())
    basis_failures = [v for v in r.violations if not v.startswith("axioms")]
    ok = spans == SPAN_SAMPLES and not basis_failures
    return ok, _report(
        7,
        "two independent basis extractions always correspond by units",
        ok,
        f"spans={spans} failures={len(basis_failures)}",
    )


def check_axioms():
    r = suite_semimodule_and_axioms(seed=DEFAULT_SEED)
    results = {k[len("axioms_"):]: v for k, v in r.details.items() if k.startswith("axioms_")}
    ok = set(results) == {"b2", "maxplus", "maxtimes-q", "maxtimes-n"} and all(v == "pass" for v in results.values())
    return ok, _report(
        8,
        "semiring axioms on every instance",
        ok,
        " ".join(f"{k}={v}" for k, v in results.items()),
    )


CHECKS = [
    check_operator_enumeration,
    check_invertibility,
    check_rank_oracle,
    check_separating_witness,
    check_structure,
    check_uv_synthesis,
    check_basis_uniqueness,
    check_axioms,
]


@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__[len("check_"):] for c in CHECKS])
def test_acceptance(check, capsys):
    ok, line = check()
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_reports_are_reproducible():
    a = suite_semimodule_and_axioms(seed=7).text()
    b = suite_semimodule_and_axioms(seed=7).text()
    assert a == b
    assert suite_uv_synthesis(seed=3, tuples=5).text() == suite_uv_synthesis(seed=3, tuples=5).text()


if __name__ == "__main__":
    results = []
    for check in CHECKS:
        ok, line = check()
        print(line, flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
