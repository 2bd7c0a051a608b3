"""CLI exit codes, output formats, golden files, and byte determinism."""

import json
import pathlib
import subprocess
import sys

import pytest

from charcorr.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(args, tmp_path, name="out.txt"):
    out = tmp_path / name
    code = main(args + ["--out", str(out)])
    return code, out.read_text() if out.exists() else None


# -- table ---------------------------------------------------------------------------


def test_table_text(tmp_path):
    code, text = run_cli(["table", "--group", "corpus/s4", "--format", "text"], tmp_path)
    assert code == 0
    assert text == (GOLDEN / "s4_table.txt").read_text()


def test_table_c7_has_seventh_roots(tmp_path):
    code, text = run_cli(["table", "--group", "c7"], tmp_path)
    assert code == 0
    assert "z7" in text and text.count("chi.") == 7


def test_table_structured(tmp_path):
    code, text = run_cli(["table", "--group", "s4", "--format", "structured"], tmp_path)
    assert code == 0
    data = json.loads(text)
    assert data["degrees"] == [1, 1, 2, 3, 3]


def test_table_missing_file_exits_2(capsys):
    assert main(["table", "--group", "missing-file"]) == 2


def test_table_cap_too_small_exits_2(capsys):
    assert main(["table", "--group", "s4", "--cap", "10"]) == 2


# -- verify --------------------------------------------------------------------------


def test_verify_s4(tmp_path):
    code, text = run_cli(["verify", "--group", "s4", "-p", "2"], tmp_path)
    assert code == 0
    assert "verdict: TRUE" in text
    assert text.count("coincide=true") == 4


def test_verify_structured(tmp_path):
    code, text = run_cli(
        ["verify", "--group", "f21", "-p", "3", "--format", "structured"], tmp_path
    )
    assert code == 0
    rep = json.loads(text)
    assert rep["verdict"] is True and len(rep["pairs"]) == 3


def test_verify_hypothesis_failure_exits_2(capsys):
    assert main(["verify", "--group", "sl23", "-p", "3"]) == 2
    assert "self_normalizing" in capsys.readouterr().err


def test_verify_non_prime_exits_2(capsys):
    assert main(["verify", "--group", "s4", "-p", "6"]) == 2


def test_verify_all(tmp_path):
    code, text = run_cli(["verify", "--all"], tmp_path)
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 11  # one per corpus instance + the summary
    assert lines[-1] == "all ok: true"
    assert sum("verdict=true" in l for l in lines) == 7
    assert sum("SKIP descent" in l for l in lines) == 3


def test_verify_all_structured_golden(tmp_path):
    code, text = run_cli(["verify", "--all", "--format", "structured"], tmp_path)
    assert code == 0
    assert text == (GOLDEN / "verify_all.json").read_text()


# -- remark648 ------------------------------------------------------------------------


def test_remark_text(tmp_path):
    code, text = run_cli(["remark648"], tmp_path)
    assert code == 0
    assert "|G|=648" in text and "|N|=72" in text
    assert "1+2*z3" in text and "-1-2*z3" in text
    assert text.count("asserted 0") == 3


def test_remark_structured_golden(tmp_path):
    code, text = run_cli(["remark648", "--format", "structured"], tmp_path)
    assert code == 0
    assert text == (GOLDEN / "remark648.json").read_text()


def test_remark_cap_exits_2(capsys):
    assert main(["remark648", "--cap", "100"]) == 2


# -- determinism (fresh processes, serial vs parallel) ----------------------------------


def _run_subprocess(args, out_path):
    cmd = [sys.executable, "-m", "charcorr.cli"] + args + ["--out", str(out_path)]
    proc = subprocess.run(cmd, capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stderr
    return out_path.read_bytes()


@pytest.mark.slow
def test_verify_all_byte_identical_across_runs_and_jobs(tmp_path):
    a = _run_subprocess(["verify", "--all", "--format", "structured"], tmp_path / "a.json")
    b = _run_subprocess(["verify", "--all", "--format", "structured"], tmp_path / "b.json")
    c = _run_subprocess(
        ["verify", "--all", "--format", "structured", "--jobs", "4"], tmp_path / "c.json"
    )
    assert a == b == c
    assert a == (GOLDEN / "verify_all.json").read_bytes()


@pytest.mark.slow
def test_remark_byte_identical_across_runs(tmp_path):
    a = _run_subprocess(["remark648", "--format", "structured"], tmp_path / "a.json")
    b = _run_subprocess(["remark648", "--format", "structured"], tmp_path / "b.json")
    assert a == b == (GOLDEN / "remark648.json").read_bytes()
