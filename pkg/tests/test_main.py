import io
import json
import shlex

import pytest

from src.config import DATA_DIR, VERSION
from src.main import run

FIXTURES = sorted(p for p in DATA_DIR.iterdir() if (p / "command.txt").exists())


@pytest.mark.parametrize("folder", FIXTURES, ids=[p.name for p in FIXTURES])
def test_cli_fixture(folder, root_dir, monkeypatch, capsys):
    monkeypatch.chdir(root_dir)
    argv = shlex.split((folder / "command.txt").read_text(encoding="utf-8"))
    code = run(argv)
    out = capsys.readouterr().out
    assert out == (folder / "output.txt").read_text(encoding="utf-8")
    assert code == int((folder / "exit_code.txt").read_text(encoding="utf-8"))


def test_errors_go_to_stderr(capsys):
    assert run(["check", "4,0"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("Error: ")


def test_usage_errors_exit_with_two(capsys):
    assert run([]) == 2
    assert run(["check"]) == 2
    assert "usage" in capsys.readouterr().err


def test_version(capsys):
    assert run(["--version"]) == 0
    assert VERSION in capsys.readouterr().out


def test_realize_json(capsys):
    assert run(["realize", "--json", "4,4,1"]) == 0
    assert json.loads(capsys.readouterr().out) == {"facets": [[2, 3, 4], [1, 4]]}


def test_realize_pipes_into_recognize(monkeypatch, capsys):
    assert run(["realize", "5,6,2"]) == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(capsys.readouterr().out))
    assert run(["recognize", "-"]) == 0
    out = capsys.readouterr().out
    assert "forest: yes" in out.splitlines()
    assert "f-vector: 5,6,2" in out.splitlines()


def test_missing_file(tmp_path, capsys):
    assert run(["recognize", str(tmp_path / "absent.cmplx")]) == 2
    assert "Error:" in capsys.readouterr().err


def test_recognize_reads_stdin_without_an_argument(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("1 2 3\n"))
    assert run(["recognize"]) == 0
    assert "leaf-order:\n  1 2 3\n" in capsys.readouterr().out


def test_graph_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("n 4\n1 2\n2 3\n3 4\n1 4\n"))
    assert run(["graph", "-"]) == 1
    assert "chordless-cycle: 1 2 3 4" in capsys.readouterr().out.splitlines()


def test_undecodable_input_exits_with_two(tmp_path, capsys):
    garbled = tmp_path / "garbled.cmplx"
    garbled.write_bytes(b"1 2\n\xff\xfe 3\n")
    assert run(["recognize", str(garbled)]) == 2
    assert "not UTF-8" in capsys.readouterr().err


def test_resource_limits_exit_with_two(tmp_path, capsys):
    big = tmp_path / "big.graph"
    big.write_text("n 13\n", encoding="utf-8")
    assert run(["graph", str(big)]) == 2
    assert "cap" in capsys.readouterr().err


def test_enumerate_writes_a_report(tmp_path, capsys):
    report = tmp_path / "out" / "report.txt"
    assert run(["enumerate", "--vertices", "3", "--facets", "3", "--report", str(report)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert report.read_text(encoding="utf-8").splitlines() == lines
    assert any(line.startswith("quasi_forest_fvectors_match_condition ") for line in lines)
    assert all(line.split()[2] == "pass" for line in lines)


def test_enumerate_rejects_large_scopes(capsys):
    assert run(["enumerate", "--vertices", "8"]) == 2
    assert "max_vertices" in capsys.readouterr().err


def test_render_reports_on_stderr(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr("src.main.complex_to_dot", lambda c, name, out: (out / f"{name}.pdf", None))
    assert run(["realize", "4,4,1", "--render", str(tmp_path)]) == 0
    captured = capsys.readouterr()
    assert captured.out == "2 3 4\n1 4\n"
    assert "realize_4_4_1.pdf" in captured.err
