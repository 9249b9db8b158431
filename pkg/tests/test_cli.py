import json

import pytest

from semirank.cli import main
from semirank.matrix import Matrix
from semirank.operator import collapse_operator, transpose_operator
from semirank.semiring import B2
from semirank.textio import parse_matrix, serialize


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else serialize(obj))
        return str(p)

    return write


def test_rank_identity(files, capsys):
    assert main(["rank", files("i3.txt", Matrix.identity(B2, 3))]) == 0
    out = capsys.readouterr().out
    assert out.startswith("rank 3\nleft\nsemiring b2\n3 3\n")
    body = out.split("right\n")[1]
    assert parse_matrix(body) == Matrix.identity(B2, 3)


def test_rank_json_and_max_k(files, capsys):
    path = files("a.txt", "semiring maxplus\n2 2\n0 1\n1 0\n")
    assert main(["rank", path, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["rank"] == 2
    assert main(["rank", path, "--max-k", "1"]) == 3
    captured = capsys.readouterr()
    assert captured.out == "" and "max-k" in captured.err


def test_classify_exit_codes(files, capsys):
    assert main(["classify", files("c.txt", collapse_operator(B2, 2, 2))]) == 1
    out = capsys.readouterr().out
    assert "verdict Violation\nrank 2 -> 1\n" in out
    assert "witness\nsemiring b2\n2 2\n1 0\n0 1" in out
    assert main(["classify", files("t.txt", transpose_operator(B2, 2))]) == 0
    assert "verdict RankPreserver\ntransposed yes" in capsys.readouterr().out


def test_parse_error_exit(files, capsys):
    assert main(["rank", files("bad.txt", "semiring maxtimes-n\n1 1\n-2\n")]) == 2
    assert "line 3, column 1" in capsys.readouterr().err


def test_missing_file_exit(capsys):
    assert main(["rank", "/nonexistent/file"]) == 2


def test_unsupported_exit(files, capsys):
    big = "semiring b2\n7 1\n" + "1\n" * 7
    assert main(["rank", files("big.txt", big)]) == 3
    op = serialize(transpose_operator(B2, 1))
    assert main(["classify", files("o.txt", op)]) == 3


def test_usage_error_exit():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_other_commands(files, capsys):
    a = files("a.txt", "semiring b2\n2 2\n1 1\n0 0\n")
    b = files("b.txt", "semiring b2\n2 2\n1 0\n0 0\n")
    gens = files("g.txt", "semiring b2\n2 2\n1 0\n0 0\n\nsemiring b2\n2 2\n0 1\n0 0\n\nsemiring b2\n2 2\n1 1\n0 0\n")
    assert main(["witness", a, b]) == 0
    assert capsys.readouterr().out.startswith("ranks 1 2\n")
    assert main(["span", a, gens]) == 0
    assert capsys.readouterr().out.startswith("in-span yes\n")
    assert main(["basis", gens]) == 0
    assert capsys.readouterr().out.startswith("dimension 2\n")
    assert main(["rank1", a]) == 0
    assert capsys.readouterr().out == "rank1 yes\nb 1 0\nc 1 1\n"
    assert main(["apply", files("t.txt", transpose_operator(B2, 2)), a]) == 0
    assert capsys.readouterr().out == "semiring b2\n2 2\n1 0\n1 0\n"
    assert main(["axioms", "--semiring", "maxtimes-n"]) == 0
    assert "unit_irreducibility: pass" in capsys.readouterr().out


def test_verify_is_deterministic(capsys):
    assert main(["verify", "--suite", "structure"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--suite", "structure", "--seed", "42"]) == 0
    assert capsys.readouterr().out == first
    assert "rank1_preservers 8" in first
