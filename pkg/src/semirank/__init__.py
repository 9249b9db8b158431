"""Linear algebra over additively idempotent, multiplicatively cancellative semirings."""

from semirank import errors
from semirank.semiring import (
    B2,
    MAXPLUS,
    MAXTIMES_N,
    MAXTIMES_Q,
    NEG_INF,
    Semiring,
    SemiringId,
    SemiringValue,
    by_tag,
    check_axioms,
)
from semirank.matrix import BasisCell, Matrix, basis_matrix, inverse, is_invertible, permutation_matrix
from semirank.rank import RankCertificate, factor_rank, factor_rank_oracle, is_rank_one, rank
from semirank.semimodule import basis_correspondence, dimension, extract_basis, in_span, is_independent
from semirank.operator import (
    LinearOperator,
    apply,
    classify,
    separating_witness,
    structural_form,
    to_uv_form,
    uv_operator,
    witness_rank2_collapse,
)
from semirank.textio import parse_generators, parse_matrix, parse_operator, serialize

__version__ = "0.1.0"

__all__ = [
    "BasisCell",
    "Matrix",
    "basis_matrix",
    "inverse",
    "is_invertible",
    "permutation_matrix",
    "RankCertificate",
    "factor_rank",
    "factor_rank_oracle",
    "is_rank_one",
    "rank",
    "basis_correspondence",
    "dimension",
    "extract_basis",
    "in_span",
    "is_independent",
    "parse_generators",
    "parse_matrix",
    "parse_operator",
    "serialize",
    "B2",
    "MAXPLUS",
    "MAXTIMES_N",
    "MAXTIMES_Q",
    "NEG_INF",
    "Semiring",
    "SemiringId",
    "SemiringValue",
    "by_tag",
    "check_axioms",
    "LinearOperator",
    "apply",
    "classify",
    "separating_witness",
    "structural_form",
    "to_uv_form",
    "uv_operator",
    "witness_rank2_collapse",
    "errors",
]
