from __future__ import annotations

import csv
import json
import subprocess
import sys
from pathlib import Path

import pytest

from qclifford.cli import RunConfig, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_passing_suite_exits_zero(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suites", "sl2q", "--m", "1,2", "--max-degree", "3", "--output-dir", str(tmp_path))
    assert code == 0
    assert "sl2q-m1" in out and "3/3 pass" in out
    body = json.loads((tmp_path / "sl2q-m2.json").read_text())
    assert body[0]["suite"] == "sl2q"
    assert all("wall_time" not in r for r in body[0]["relations"])


def test_verify_failing_relation_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "suq11-operators", "--m", "2", "--max-degree", "3")
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suites", "nosuch"],
        ["verify", "--q0", "1.5"],
        ["verify", "--max-degree", "11"],
        ["verify", "--m", "0"],
        ["verify", "--config", "/nonexistent/file.cfg"],
        ["table", "qlaguerre", "--alpha", "-1"],
        ["integrate", "jackson-moment", "--q0", "1.0"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["table", "nofamily"])
    assert exc.value.code == 2


def test_config_file_and_overrides(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nm = 1..3\nmax_degree = 4\nq0 = 0.3, 0.6\nsuites = sl2q\nformat = csv\n")
    values = RunConfig.from_file(str(cfg))
    assert values["m"] == [1, 2, 3] and values["q0"] == [0.3, 0.6]
    cfg.write_text("bogus = 1\n")
    with pytest.raises(ValueError):
        RunConfig.from_file(str(cfg))


def test_csv_report_and_determinism(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("m = 2\nmax_degree = 3\nsuites = sl2q, axioms\nformat = csv\n")
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "verify", "--config", str(cfg), "--output-dir", str(a))[0] == 0
    assert run(capsys, "verify", "--config", str(cfg), "--output-dir", str(b), "--jobs", "2")[0] == 0
    assert (a / "report.csv").read_bytes() == (b / "report.csv").read_bytes()
    assert (a / "summary.json").read_bytes() == (b / "summary.json").read_bytes()
    rows = list(csv.reader((a / "report.csv").open()))
    assert rows[0][:6] == ["task", "suite", "params", "relation", "anchor", "status"]
    assert {r[5] for r in rows[1:]} == {"pass"}


def test_timings_are_opt_in(capsys, tmp_path):
    run(capsys, "verify", "--suites", "sl2q", "--m", "1", "--max-degree", "2", "--output-dir", str(tmp_path), "--timings")
    body = json.loads((tmp_path / "sl2q-m1.json").read_text())
    assert all("wall_time" in r for r in body[0]["relations"])


def test_table_matches_golden_file(capsys):
    code, out, _ = run(capsys, "table", "qhermite", "--k", "0..5", "--q0", "0.5,0.9", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "qhermite_0_5.csv").read_text()


def test_table_rows_hand_checked(capsys):
    _, out, _ = run(capsys, "table", "qhermite", "--k", "2", "--q0", "0.5", "--format", "csv")
    rows = list(csv.reader(out.splitlines()))
    # H_2 = (q+1)^2 t^2 - q^2 (q+1)
    assert rows[1] == ["k=2", "0", "-q^3 - q^2", repr(-0.375)]
    assert rows[2] == ["k=2", "2", "q^2 + 2*q + 1", repr(2.25)]


def test_table_json_families(capsys, tmp_path):
    assert run(capsys, "table", "qch", "--m", "2", "--k", "1", "--j", "0..3", "--output-dir", str(tmp_path))[0] == 0
    rows = json.loads((tmp_path / "qch.json").read_text())
    assert rows[0]["index"] == {"j": 0, "k": 1, "m": 2} and rows[0]["coeff"] == "1"
    code, out, _ = run(capsys, "table", "qlaguerre", "--alpha", "1/2", "--t", "0..2")
    assert code == 0 and json.loads(out)[0]["coeff"] == "1"


def test_integrate_outputs(capsys):
    _, out, _ = run(capsys, "integrate", "jackson-moment", "--k", "1", "--q0", "0.5")
    data = json.loads(out)
    assert data["value"] == pytest.approx(2 / 3, abs=1e-12)
    _, out, _ = run(capsys, "integrate", "gamma-product", "--t", "1", "--q0", "0.5")
    assert json.loads(out)["value"] == pytest.approx(1.0, abs=1e-12)
    _, out, _ = run(capsys, "integrate", "gaussian_radial", "--nu", "4", "--q0", "0.6")
    data = json.loads(out)
    assert data["delta"] < 1e-9
    assert "g2" in data["symbolic"]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "qclifford", "verify", "--suites", "nosuch"], capture_output=True, text=True)
    assert res.returncode == 2
