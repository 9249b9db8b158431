"""Command line entry point: ``semirank <command> ...``.

Exit codes: 0 success, 1 property violation or non-preserver verdict,
2 parse or usage error, 3 unsupported input (resource limit, out-of-scope
shape or domain).
"""

from __future__ import annotations

import argparse
import json
import sys

from semirank import textio
from semirank.errors import (
    CapabilityError,
    OutOfScopeError,
    ResourceLimitError,
    SearchExhaustedError,
    SemirankError,
    UnsupportedDomainError,
)
from semirank.operator import apply, classify, separating_construction
from semirank.rank import factor_rank_bounded, rank_one_factor
from semirank.semimodule import extract_basis, in_span
from semirank.semiring import by_tag, check_axioms
from semirank.suites import AXIOM_SAMPLES, DEFAULT_SEED, SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3
UNSUPPORTED = (ResourceLimitError, OutOfScopeError, UnsupportedDomainError, CapabilityError, SearchExhaustedError)


class _Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str):
        self.lines.append(text)

    def matrix(self, label: str, M):
        self.lines.append(label)
        self.lines.append(textio.serialize(M).rstrip("\n"))

    def emit(self):
        if not (self.lines or self.data):
            return
        if self.fmt == "json":
            sys.stdout.write(json.dumps(self.data, indent=2) + "\n")
        else:
            sys.stdout.write("\n".join(self.lines) + "\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _UsageError(f"{path}: {e.strerror}") from None


class _UsageError(Exception):
    pass


def _matrix_arg(path):
    try:
        return textio.parse_matrix(_read(path))
    except SemirankError as e:
        raise _UsageError(f"{path}: {e}") from None


def _generators_arg(path):
    try:
        return textio.parse_generators(_read(path))
    except SemirankError as e:
        raise _UsageError(f"{path}: {e}") from None


def _operator_arg(path):
    try:
        return textio.parse_operator(_read(path))
    except SemirankError as e:
        raise _UsageError(f"{path}: {e}") from None


# -- commands -----------------------------------------------------------------

def cmd_rank(args, out: _Output) -> int:
    A = _matrix_arg(args.file)
    max_k = min(A.m, A.n) if args.max_k is None else args.max_k
    cert = factor_rank_bounded(A, max_k)
    if cert is None:
        print(f"rank exceeds --max-k {max_k}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    out.line(f"rank {cert.k}")
    out.data["rank"] = cert.k
    if cert.k:
        out.matrix("left", cert.left)
        out.matrix("right", cert.right)
        out.data.update(left=textio.to_json(cert.left), right=textio.to_json(cert.right))
    else:
        out.data.update(left=None, right=None)
    return EXIT_OK


def cmd_rank1(args, out: _Output) -> int:
    A = _matrix_arg(args.file)
    fmt = A.semiring.format_token
    factor = None if A.is_zero() else rank_one_factor(A)
    out.data["rank_one"] = factor is not None
    if factor is None:
        out.line("rank1 no")
        return EXIT_OK
    b, c = factor
    out.line("rank1 yes")
    out.line("b " + " ".join(fmt(x) for x in b))
    out.line("c " + " ".join(fmt(x) for x in c))
    out.data.update(b=[fmt(x) for x in b], c=[fmt(x) for x in c])
    return EXIT_OK


def cmd_span(args, out: _Output) -> int:
    target = _matrix_arg(args.target)
    gens = [G for path in args.gens for G in _generators_arg(path)]
    ok, coeffs = in_span(target, gens)
    out.data["in_span"] = ok
    if not ok:
        out.line("in-span no")
        return EXIT_OK
    fmt = target.semiring.format_token
    out.line("in-span yes")
    out.line("coefficients " + " ".join(fmt(x) for x in coeffs))
    out.data["coefficients"] = [fmt(x) for x in coeffs]
    return EXIT_OK


def cmd_basis(args, out: _Output) -> int:
    basis = extract_basis(_generators_arg(args.file))
    out.line(f"dimension {len(basis)}")
    for k, B in enumerate(basis, start=1):
        out.matrix(f"basis {k}", B)
    out.data.update(dimension=len(basis), basis=textio.to_json(basis))
    return EXIT_OK


def cmd_classify(args, out: _Output) -> int:
    T = _operator_arg(args.file)
    res = classify(T, seed=args.seed)
    out.data.update(verdict=res.verdict, stage=res.stage)
    if res.is_preserver:
        f = res.uv_form
        out.line("verdict RankPreserver")
        out.line(f"transposed {'yes' if f.transposed else 'no'}")
        for label in ("U", "C", "D", "V"):
            out.matrix(label, getattr(f, label))
            out.data[label] = textio.to_json(getattr(f, label))
        out.data["transposed"] = f.transposed
        return EXIT_OK
    out.line("verdict Violation")
    out.line(f"rank {res.rank_before} -> {res.rank_after}")
    out.line(f"stage {res.stage}")
    out.matrix("witness", res.witness)
    out.data.update(rank_before=res.rank_before, rank_after=res.rank_after, witness=textio.to_json(res.witness))
    return EXIT_VIOLATION


def cmd_witness(args, out: _Output) -> int:
    A, B = _matrix_arg(args.file_a), _matrix_arg(args.file_b)
    res = separating_construction(A, B)
    out.line(f"ranks {res.ranks[0]} {res.ranks[1]}")
    out.line(f"case {res.case}")
    out.matrix("C", res.C)
    out.data.update(ranks=list(res.ranks), case=res.case, fallback=res.used_fallback, C=textio.to_json(res.C))
    return EXIT_OK


def cmd_apply(args, out: _Output) -> int:
    T, A = _operator_arg(args.operator), _matrix_arg(args.matrix)
    image = apply(T, A)
    out.line(textio.serialize(image).rstrip("\n"))
    out.data.update(textio.to_json(image))
    return EXIT_OK


def cmd_verify(args, out: _Output) -> int:
    if args.all == (args.suite is not None):
        raise _UsageError("give exactly one of --suite NAME or --all")
    names = list(SUITES) if args.all else [args.suite]
    status = EXIT_OK
    reports = []
    for name in names:
        report = run_suite(name, seed=args.seed)
        print(f"{name}: {report.wall_time:.2f}s", file=sys.stderr)
        reports.append(report.to_json())
        out.line(report.text().rstrip("\n"))
        if not report.passed:
            status = EXIT_VIOLATION
    out.data["reports"] = reports
    return status


def cmd_axioms(args, out: _Output) -> int:
    s = by_tag(args.semiring)
    sample = AXIOM_SAMPLES[s.tag]
    report = check_axioms(s, sample)
    out.line(f"semiring {s.tag}")
    out.line("sample " + " ".join(s.format_token(x) for x in sample))
    out.lines.extend(report.lines())
    out.data.update(semiring=s.tag, results=dict(report.results), passed=report.passed)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--max-k", type=int, default=argparse.SUPPRESS, help="largest rank to search for (rank)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="semirank", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    add("rank", cmd_rank, "factor rank with certificate").add_argument("file")
    add("rank1", cmd_rank1, "rank-1 test with factors").add_argument("file")
    sp = add("span", cmd_span, "membership of a matrix in a span")
    sp.add_argument("target")
    sp.add_argument("gens", nargs="+")
    add("basis", cmd_basis, "basis of a generated subsemimodule").add_argument("file")
    add("classify", cmd_classify, "rank-preserver classification").add_argument("file")
    sp = add("witness", cmd_witness, "C separating two rank-1 matrices")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp = add("apply", cmd_apply, "apply an operator to a matrix")
    sp.add_argument("operator")
    sp.add_argument("matrix")
    sp = add("verify", cmd_verify, "run verification suites")
    sp.add_argument("--suite", choices=list(SUITES))
    sp.add_argument("--all", action="store_true")
    add("axioms", cmd_axioms, "semiring axiom check on a fixed sample").add_argument(
        "--semiring", required=True, choices=list(AXIOM_SAMPLES)
    )
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.format = getattr(args, "format", "text")
    args.max_k = getattr(args, "max_k", None)
    args.seed = getattr(args, "seed", DEFAULT_SEED)
    out = _Output(args.format)
    try:
        code = args.func(args, out)
    except _UsageError as e:
        print(f"semirank: {e}", file=sys.stderr)
        return EXIT_USAGE
    except UNSUPPORTED as e:
        print(f"semirank: unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except SemirankError as e:
        print(f"semirank: {e}", file=sys.stderr)
        return EXIT_USAGE
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
