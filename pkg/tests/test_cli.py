import json
import subprocess
import sys

import pytest

from mzi.cli import main

REPORT_KEYS = {"suite", "params", "status", "source", "expected", "observed", "witnesses",
               "expected_witnesses", "class_size", "details", "runtime_ms"}


def test_compute_single(capsys):
    assert main(["compute", "--graph6", "Bw"]) == 0
    assert capsys.readouterr().out == "pi1=64 pi2=64\n"


def test_compute_json_extra(capsys):
    assert main(["compute", "--graph6", "Bg", "--extra", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)
    assert row["pi1"] == 4 and row["m1"] == 6 and row["m2"] == 4
    assert row["pi2_log"] == pytest.approx(2 * 0.6931471805599453)


def test_compute_file(tmp_path, capsys):
    src = tmp_path / "in.g6"
    src.write_text("Bw\n\nBg\n")
    assert main(["compute", "--file", str(src), "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == ["graph6,pi1,pi2", "Bw,64,64", "Bg,4,4"]


@pytest.mark.parametrize("argv", [
    ["compute", "--graph6", "@@"],
    ["compute", "--file", "/nonexistent/x.g6"],
    ["construct", "--family", "knk", "--n", "5", "--k", "5"],
    ["construct", "--family", "knk", "--n", "5"],
    ["construct", "--family", "a1", "--n", "7", "--p", "3", "--legs", "3,x"],
    ["extremal", "--class", "gnp", "--n", "4", "--p", "4"],
    ["extremal", "--class", "vnk", "--n", "5"],
    ["verify", "--suite", "bogus"],
    ["verify", "--n-max", "9"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_construct(capsys):
    assert main(["construct", "--family", "knk", "--n", "5", "--k", "2"]) == 0
    assert capsys.readouterr().out == "D~o\n"
    assert main(["construct", "--family", "a2", "--n", "6", "--p", "3", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert {r["pi2"] for r in rows} == {432}


def test_extremal_json(capsys):
    argv = ["extremal", "--class", "vnk", "--n", "5", "--k", "2", "--index", "pi1", "--direction", "max"]
    assert main(argv) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == "82944"
    assert data["witnesses"] == ["DN{"]
    assert data["class_size"] == 18


def test_extremal_g6_witnesses(capsys):
    argv = ["extremal", "--class", "gnp", "--n", "6", "--p", "3", "--index", "pi2",
            "--direction", "min", "--format", "g6"]
    assert main(argv) == 0
    assert capsys.readouterr().out.split() == ["E?NO", "E@QW"]


def test_verify_json_schema(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--suite", "pendant_min", "--n-max", "6", "--format", "json",
                 "--out", str(out)]) == 0
    reports = json.loads(out.read_text(encoding="utf-8"))
    assert reports
    for r in reports:
        assert set(r) == REPORT_KEYS
        assert r["status"] in ("verified", "skipped")


def test_verify_is_byte_reproducible(tmp_path, monkeypatch):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--suite", "connectivity_max", "--n-max", "5", "--format", "json", "--no-timing"]
    assert main(argv + ["--out", str(a)]) == 0
    monkeypatch.setenv("MZI_JOBS", "2")
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "runtime_ms" not in a.read_text()


def test_verify_failure_exits_1(capsys):
    # p = n-2 exposes the gap in the second-index pendant maximum
    assert main(["verify", "--suite", "pendant_max", "--n-max", "5"]) == 1
    out = capsys.readouterr().out
    assert "formula_mismatch" in out


def test_verify_csv(capsys):
    assert main(["verify", "--suite", "connectivity_min", "--n-max", "4", "--format", "csv"]) == 0
    header, *rows = capsys.readouterr().out.splitlines()
    assert header.split(",")[:6] == ["suite", "n", "kind", "k", "p", "status"]
    assert len(rows) == 6


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mzi", "compute", "--graph6", "Bw"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "pi1=64 pi2=64\n"
