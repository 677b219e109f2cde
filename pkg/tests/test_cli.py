from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from cgrational import cli
from cgrational.report import Report
from cgrational.verify import SUITES

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["coeff", "3", "4", "1", "0", "3"], "9/70\n"),
        (["coeff", "1", "1", "1", "0", "1", "--normalized"], "+sqrt(1/2)\n"),
        (["coeff", "1", "1", "1", "0", "1", "--racah"], "+sqrt(1/2)\n"),
        (["coeff", "3", "4", "1", "9", "9"], "0\n"),
        (["coeff", "3", "4", "3", "3", "0"], "-1/10\n"),
        (["coeff", "3", "4", "1", "0", "3", "--float-digits", "6"], "9/70\n0.128571\n"),
        (["coeff", "1", "1", "1", "0", "1", "--normalized", "--float-digits", "4"], "+sqrt(1/2)\n0.7071\n"),
        (["coeff", "1", "1", "1", "0", "1", "--su2-labels"], "<1/2 1/2; 1/2 -1/2 | 0 0>\n1/2\n"),
    ],
)
def test_coeff(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_coeff_bad_k(capsys):
    code, out, err = run(capsys, "coeff", "3", "4", "5", "0", "0")
    assert code == 2
    assert out == ""
    assert "exceeds" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["coeff", "3", "4", "-1", "0", "0"],
        ["coeff", "3", "x", "1", "0", "0"],
        ["coeff", "1", "1", "1", "0", "1", "--normalized", "--racah"],
        ["table", "3", "4", "--format", "xml"],
        ["verify", "3"],
        ["frobnicate"],
    ],
)
def test_parse_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_table_pretty_golden(capsys):
    code, out, _ = run(capsys, "table", "3", "4")
    assert code == 0
    assert out == (GOLDEN / "table_3_4.txt").read_text()


def test_table_trivial_json(capsys):
    code, out, _ = run(capsys, "table", "0", "0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["blocks"] == [
        {"k": "0", "sign": "1", "normalizer": "1", "coordinates": [["1"]], "clebsch_gordan": [["1"]]}
    ]


def test_table_only_k_csv(capsys):
    code, out, _ = run(capsys, "table", "3", "4", "--only-k", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,n,k,i,j,c,C"
    assert {line.split(",")[2] for line in lines[1:]} == {"2"}


def test_table_bad_only_k(capsys):
    code, _, err = run(capsys, "table", "3", "4", "--only-k", "4")
    assert code == 2
    assert "k=4" in err


def test_table_out_file(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, out, err = run(capsys, "table", "2", "3", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert str(target) in err
    assert json.loads(target.read_text())["n"] == "3"
    code, _, err = run(capsys, "table", "2", "3", "--out", str(target), "--quiet")
    assert code == 0 and err == ""


def test_table_unwritable_path(capsys, tmp_path):
    target = tmp_path / "missing" / "t.json"
    code, _, err = run(capsys, "table", "1", "1", "--out", str(target))
    assert code == 2
    assert str(target) in err


def test_projector_pretty_golden(capsys):
    code, out, _ = run(capsys, "projector", "3", "4", "3")
    assert code == 0
    assert out == (GOLDEN / "projector_3_4_3.txt").read_text()


def test_projector_single_k(capsys):
    code, out, _ = run(capsys, "projector", "3", "4", "3", "--k", "1")
    assert code == 0
    assert "P_V(5) = 1/70 *" in out
    assert "P_V(7)" not in out and "P_V(3)" not in out


def test_projector_trivial_json(capsys):
    code, out, _ = run(capsys, "projector", "1", "0", "0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["projectors"][0]["matrix"] == [["1"]]


@pytest.mark.parametrize("argv", [["projector", "3", "4", "8"], ["projector", "3", "4", "1", "--k", "2"]])
def test_projector_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_degenerate(capsys, monkeypatch):
    monkeypatch.setenv("CG_EXACT_THREADS", "1")
    code, out, _ = run(capsys, "verify", "0", "0", "--suite", "all")
    assert code == 0
    assert out.splitlines()[-1].startswith("PASS")
    assert "FAIL" not in out


def test_verify_projectors_includes_worked_example(capsys, monkeypatch):
    monkeypatch.setenv("CG_EXACT_THREADS", "1")
    code, out, _ = run(capsys, "verify", "3", "4", "--suite", "projectors", "--m-min", "3", "--n-min", "4")
    assert code == 0
    assert "worked_example/projectors_3_4_3" in out
    assert "worked_example/tables_3_4" in out


def test_verify_reports_failure(capsys, monkeypatch):
    monkeypatch.setenv("CG_EXACT_THREADS", "1")

    def broken(m, n):
        report = Report()
        report.check("fake", "always_fails").record(False, (m, n))
        return report

    monkeypatch.setitem(SUITES, "orthogonality", broken)
    code, out, _ = run(capsys, "verify", "1", "1", "--suite", "orthogonality", "--fail-fast")
    assert code == 1
    assert "FAIL" in out
    assert "(0, 0)" in out


def test_verify_quiet(capsys, monkeypatch):
    monkeypatch.setenv("CG_EXACT_THREADS", "1")
    code, out, _ = run(capsys, "verify", "1", "1", "--suite", "orthogonality", "--quiet")
    assert code == 0
    assert out == ""


def test_verify_bad_bounds(capsys):
    code, _, _ = run(capsys, "verify", "2", "2", "--m-min", "3")
    assert code == 2


@pytest.mark.parametrize("value", ["0", "many"])
def test_verify_bad_thread_env(capsys, monkeypatch, value):
    monkeypatch.setenv("CG_EXACT_THREADS", value)
    code, _, err = run(capsys, "verify", "1", "1")
    assert code == 2
    assert "CG_EXACT_THREADS" in err


def test_verify_parallel_workers():
    env = {"CG_EXACT_THREADS": "2", "PATH": "/usr/bin:/bin"}
    proc = subprocess.run(
        [sys.executable, "-m", "cgrational", "verify", "3", "3", "--suite", "orthogonality"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.splitlines()[-1].startswith("PASS")


def test_module_entry_point_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "cgrational", "coeff", "3", "4", "1", "0", "3"], capture_output=True, text=True)
    assert (ok.returncode, ok.stdout) == (0, "9/70\n")
    bad = subprocess.run([sys.executable, "-m", "cgrational", "coeff", "3", "4", "5", "0", "0"], capture_output=True, text=True)
    assert bad.returncode == 2
