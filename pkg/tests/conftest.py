from semirank.matrix import Matrix
from semirank.semiring import NEG_INF, by_tag

NI = NEG_INF


def mat(tag, rows):
    return Matrix(by_tag(tag), rows)
