import json

import pytest

from tilewalks.cli import main
from tilewalks.oeis import parse_bfile


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_seq_v_all_routes(capsys):
    code, out = run(capsys, "seq", "v", "--upto", "3", "--route", "all",
                    "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,brute,closed,recurrence"
    assert lines[1:] == ["0,1,1,1", "1,2,2,2", "2,5,5,5", "3,10,10,10"]


def test_seq_w_recurrence(capsys):
    code, out = run(capsys, "seq", "w", "--upto", "8", "--route", "recurrence",
                    "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[-1] == "8,136663"


def test_seq_w_domino_all(capsys):
    code, out = run(capsys, "seq", "w-domino", "--upto", "5", "--route", "all",
                    "--format", "csv")
    assert code == 0
    values = [line.split(",")[1] for line in out.strip().splitlines()[1:]]
    assert values == ["1", "2", "6", "12", "26", "50"]


def test_seq_json_roundtrip(capsys):
    code, out = run(capsys, "seq", "r", "--upto", "6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["columns"]["recurrence"] == ["1", "2", "7", "22", "71", "228", "733"]
    assert json.loads(json.dumps(payload)) == payload


def test_seq_bfile_output_reparses(capsys):
    code, out = run(capsys, "seq", "fib", "--upto", "20", "--format", "bfile")
    assert code == 0
    bfile = parse_bfile("A000045", out)
    assert bfile.entries[:4] == ((0, 0), (1, 1), (2, 1), (3, 2))


def test_seq_unknown_name(capsys):
    code, _ = run(capsys, "seq", "nope")
    assert code == 2


def test_seq_unsupported_route(capsys):
    code, _ = run(capsys, "seq", "w", "--route", "closed")
    assert code == 2


def test_seq_budget_exceeded(capsys):
    code, _ = run(capsys, "seq", "w", "--upto", "8", "--route", "brute",
                  "--budget", "10")
    assert code == 2


def test_seq_w_by_line(capsys):
    code, out = run(capsys, "seq", "w-by-line", "--upto", "2", "--route", "all",
                    "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,brute:r,brute:r1,brute:r2,recurrence:r,recurrence:r1,recurrence:r2"
    assert lines[3] == "2,7,14,28,7,14,28"


@pytest.mark.parametrize("suite", ["theorems", "lemmas", "elimination",
                                   "closed-forms", "oeis"])
def test_verify_suites_pass(capsys, suite):
    code, out = run(capsys, "verify", suite)
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"]
    assert all(c["passed"] for c in payload["checks"])


def test_render_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    assert run(capsys, "render", "2x3", "0", "--out", str(out1))[0] == 0
    assert run(capsys, "render", "2x3", "0", "--out", str(out2))[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert b"<svg" in out1.read_bytes()


def test_render_index_out_of_range(tmp_path, capsys):
    code, _ = run(capsys, "render", "2x3", "22", "--out", str(tmp_path / "x.svg"))
    assert code == 2


def test_render_degenerate_board(tmp_path, capsys):
    out = tmp_path / "empty.svg"
    code, _ = run(capsys, "render", "2x0", "0", "--out", str(out))
    assert code == 0
    assert out.exists()


def test_bench(capsys):
    code, out = run(capsys, "bench", "--n-max", "8", "--shards", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"]
    names = [c["name"] for c in payload["checks"]]
    assert "shard-independence" in names


def test_bench_trivial(capsys):
    code, out = run(capsys, "bench", "--n-max", "0")
    assert code == 0
    assert json.loads(out)["ok"]
