import json
import subprocess
import sys

import pytest

from signedtiling.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def cli(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "signedtiling", *argv], capture_output=True,
                          text=True, env=env)


def test_decide_yes(capsys):
    code, out = run(capsys, "decide", "--n", "8", "--region", "rect:16x3", "--weights", "z", "--no-timestamp")
    doc = json.loads(out)
    assert code == 0
    assert doc["result"]["answer"] == "yes" and doc["result"]["agree"]
    assert doc["tool"] == "signedtiling" and "timestamp" not in doc


def test_timestamp_present_by_default(capsys):
    _, out = run(capsys, "decide", "--n", "6", "--region", "rect:6x2")
    assert "timestamp" in json.loads(out)


def test_verify_basis(capsys):
    code, out = run(capsys, "verify-basis", "--n", "8", "--no-timestamp")
    assert code == 0 and "0 failed" in out
    code, out = run(capsys, "verify-basis", "--n", "4", "--plus", "--no-timestamp")
    assert code == 0 and "0 failed" in out


@pytest.mark.parametrize("argv", [
    ["verify-basis", "--n", "7"],
    ["decide", "--n", "6", "--region", "rect:0x3"],
    ["decide", "--n", "6", "--region", "does-not-exist.txt"],
    ["rectcalc", "--n", "8", "--p", "9", "--q", "3"],
    ["rectcalc", "--n", "6", "--p", "3", "--q", "9"],
    ["frobnicate"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 64


def test_scan_summary(capsys):
    code, out = run(capsys, "scan", "--n", "6", "--weights", "z", "--max", "18", "--no-timestamp")
    assert code == 0
    assert "0 disagreements" in out
    assert out.splitlines()[0].split("\t")[:3] == ["p", "q", "groebner"]


def test_scan_json(capsys):
    code, out = run(capsys, "scan", "--n", "4", "--plus", "--max", "4", "--format", "json", "--no-timestamp")
    assert code == 0 and json.loads(out)["result"]["disagreements"] == 0


def test_oracle_and_certificate_check(capsys, tmp_path):
    cert = tmp_path / "c.txt"
    code, out = run(capsys, "oracle", "--n", "4", "--region", "rect:4x2", "--weights", "z",
                    "--emit-certificate", str(cert), "--no-timestamp")
    assert code == 0 and json.loads(out)["result"]["found"]
    assert cert.read_text().startswith("# tileset T4 ")
    code, out = run(capsys, "check-certificate", "--region", "rect:4x2", str(cert), "--no-timestamp")
    assert code == 0 and json.loads(out)["result"]["verified"]
    code, _ = run(capsys, "check-certificate", "--region", "rect:4x4", str(cert), "--no-timestamp")
    assert code != 0


def test_rectcalc(capsys):
    code, out = run(capsys, "rectcalc", "--n", "8", "--p", "8", "--q", "9", "--no-timestamp")
    res = json.loads(out)["result"]
    assert code == 0
    assert (res["b_count"], res["satisfiable"], res["case"]) == (-3, False, "A")


def test_rectcalc_scan(capsys):
    code, out = run(capsys, "rectcalc-scan", "--n", "8", "--max", "20", "--no-groebner", "--no-timestamp")
    assert code == 0 and "0 disagreements" in out


def test_step_cap_exit_code(monkeypatch, capsys):
    from signedtiling.decide import clear_basis_cache
    clear_basis_cache()
    code, _ = run(capsys, "decide", "--n", "10", "--region", "rect:3x3", "--step-cap", "1", "--no-timestamp")
    assert code == 3
    monkeypatch.setenv("SIGNTILING_STEP_CAP", "1")
    clear_basis_cache()
    code, _ = run(capsys, "decide", "--n", "12", "--region", "rect:3x3", "--no-timestamp")
    assert code == 3
    clear_basis_cache()


def test_byte_identical_runs():
    argv = ["decide", "--n", "8", "--region", "inflatedL:8:2", "--no-timestamp"]
    a, b = cli(*argv), cli(*argv)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout


def test_help_documents_tsv_columns():
    out = cli("scan", "--help").stdout
    for col in ("groebner", "closed_form", "agree", "test_monomial"):
        assert col in out
