"""Text formats for matrices, operators and generating sets.

Matrix::

    semiring <b2|maxplus|maxtimes-q|maxtimes-n>
    <m> <n>
    <m lines of n value tokens>

Operator: same two header lines, then for every cell in row-major order a
line ``E <i> <j>`` followed by the m rows of T(E_ij).

Generating set: matrix blocks separated by blank lines.
"""

from __future__ import annotations

from typing import Union

from semirank.errors import DomainError, ParseError
from semirank.matrix import Matrix
from semirank.operator import LinearOperator
from semirank.semiring import Semiring, by_tag


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self, what: str):
        while self.pos < len(self.lines) and not self.lines[self.pos].strip():
            self.pos += 1
        if self.pos >= len(self.lines):
            raise ParseError(f"unexpected end of input, expected {what}", line=len(self.lines) + 1)
        self.pos += 1
        return self.pos, self.lines[self.pos - 1]

    def next_raw(self, what: str):
        """Next line, which must not be blank (used inside a matrix body)."""
        if self.pos >= len(self.lines) or not self.lines[self.pos].strip():
            raise ParseError(f"expected {what}", line=self.pos + 1)
        self.pos += 1
        return self.pos, self.lines[self.pos - 1]

    def at_end(self) -> bool:
        return all(not l.strip() for l in self.lines[self.pos:])


def _tokens(line: str):
    """Yield ``(column, token)`` pairs with 1-based columns."""
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def _header(lines: _Lines) -> tuple[Semiring, int, int]:
    ln, line = lines.next("semiring header")
    toks = list(_tokens(line))
    if len(toks) != 2 or toks[0][1] != "semiring":
        raise ParseError("expected 'semiring <tag>'", line=ln, column=1)
    try:
        s = by_tag(toks[1][1])
    except ValueError as e:
        raise ParseError(str(e), line=ln, column=toks[1][0]) from None
    ln, line = lines.next("dimensions line")
    toks = list(_tokens(line))
    if len(toks) != 2:
        raise ParseError("expected '<m> <n>'", line=ln, column=1)
    dims = []
    for col, tok in toks:
        if not tok.isdigit() or int(tok) < 1:
            raise ParseError(f"dimension must be a positive integer, got {tok!r}", line=ln, column=col)
        dims.append(int(tok))
    return s, dims[0], dims[1]


def _body(lines: _Lines, s: Semiring, m: int, n: int, first_blank_ok: bool) -> Matrix:
    rows = []
    for r in range(m):
        getter = lines.next if (r == 0 and first_blank_ok) else lines.next_raw
        ln, line = getter(f"matrix row {r + 1} of {m}")
        toks = list(_tokens(line))
        if len(toks) != n:
            raise ParseError(f"expected {n} values, found {len(toks)}", line=ln, column=1)
        row = []
        for col, tok in toks:
            try:
                row.append(s.parse_token(tok))
            except DomainError as e:
                raise ParseError(str(e), line=ln, column=col) from None
        rows.append(tuple(row))
    return Matrix(s, tuple(rows), validate=False)


def _read_matrix(lines: _Lines) -> Matrix:
    s, m, n = _header(lines)
    return _body(lines, s, m, n, first_blank_ok=False)


def parse_matrix(text: str) -> Matrix:
    lines = _Lines(text)
    A = _read_matrix(lines)
    if not lines.at_end():
        raise ParseError("trailing content after matrix", line=lines.pos + 1)
    return A


def parse_generators(text: str) -> list[Matrix]:
    lines = _Lines(text)
    out = []
    while not lines.at_end():
        out.append(_read_matrix(lines))
    if not out:
        raise ParseError("no matrices found", line=1)
    ref = out[0]
    for k, M in enumerate(out[1:], start=2):
        if M.semiring is not ref.semiring or M.shape != ref.shape:
            raise ParseError(f"generator {k} differs in shape or semiring from generator 1")
    return out


def parse_operator(text: str) -> LinearOperator:
    lines = _Lines(text)
    s, m, n = _header(lines)
    images = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            ln, line = lines.next(f"'E {i} {j}'")
            toks = [t for _, t in _tokens(line)]
            if toks != ["E", str(i), str(j)]:
                raise ParseError(f"expected 'E {i} {j}', got {line.strip()!r}", line=ln, column=1)
            images.append(_body(lines, s, m, n, first_blank_ok=False))
    if not lines.at_end():
        raise ParseError("trailing content after operator", line=lines.pos + 1)
    return LinearOperator(s, m, n, tuple(images))


def _rows_text(A: Matrix) -> list[str]:
    fmt = A.semiring.format_token
    return [" ".join(fmt(x) for x in r) for r in A.rows]


def serialize(x: Union[Matrix, LinearOperator, list]) -> str:
    if isinstance(x, Matrix):
        return "\n".join([f"semiring {x.semiring.tag}", f"{x.m} {x.n}", *_rows_text(x)]) + "\n"
    if isinstance(x, LinearOperator):
        out = [f"semiring {x.semiring.tag}", f"{x.m} {x.n}"]
        for (i, j), img in zip(x.cells(), x.images):
            out.append(f"E {i} {j}")
            out.extend(_rows_text(img))
        return "\n".join(out) + "\n"
    if isinstance(x, (list, tuple)):
        return "\n".join(serialize(M) for M in x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def to_json(x) -> object:
    """JSON-ready structure mirroring the text format."""
    if isinstance(x, Matrix):
        fmt = x.semiring.format_token
        return {"semiring": x.semiring.tag, "m": x.m, "n": x.n, "rows": [[fmt(v) for v in r] for r in x.rows]}
    if isinstance(x, LinearOperator):
        return {
            "semiring": x.semiring.tag,
            "m": x.m,
            "n": x.n,
            "images": [{"cell": [i, j], "rows": to_json(img)["rows"]} for (i, j), img in zip(x.cells(), x.images)],
        }
    if isinstance(x, (list, tuple)):
        return [to_json(v) for v in x]
    raise TypeError(f"cannot convert {type(x).__name__}")
