# Path: tests/test_main.py
import csv
import json
import math

import pytest
from typer.testing import CliRunner

from src.core.config import settings
from src.main import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def log_to_tmp(tmp_path, monkeypatch):
    monkeypatch.setattr(settings, "LOG_DIR", tmp_path / "logs")


def _csv(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


def test_spectrum_command(tmp_path):
    out = tmp_path / "spectrum.csv"
    result = runner.invoke(
        app, ["spectrum", "--family", "whittaker", "--beta", "2", "--m", "0.5", "-n", "3", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    rows = _csv(out)
    assert [float(r["re"]) for r in rows] == pytest.approx([-1.0, -0.25, -1 / 9])


def test_eval_command(tmp_path):
    out = tmp_path / "eval.csv"
    result = runner.invoke(
        app, ["eval", "--fn", "macdonald_k2d", "--m", "0.5", "--at", "1", "--at", "2,1", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    rows = _csv(out)
    assert rows[0]["y"] == ""
    assert float(rows[0]["re"]) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-13)
    assert float(rows[1]["y"]) == 1.0


def test_kernel_command(tmp_path):
    out = tmp_path / "kernel.json"
    result = runner.invoke(
        app,
        ["kernel", "--family", "exponential", "--k", "0", "--z=-1,0",
         "--x", "-0.2", "--x", "0.3", "--y", "0.5", "-f", "json", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    rows = json.loads(out.read_text(encoding="utf-8"))
    assert rows[0]["re"] == pytest.approx(math.exp(-0.7) / 2, rel=1e-13)
    assert rows[1]["re"] == pytest.approx(math.exp(-0.2) / 2, rel=1e-13)


def test_transmute_command(tmp_path):
    out = tmp_path / "transmute.json"
    result = runner.invoke(
        app,
        ["transmute", "--pair", "exp-bessel", "--k", "1,0.2", "--m", "0.7",
         "--x", "0.3", "--y", "0.9", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert report["mismatch"] < 1e-9


def test_verify_command(tmp_path):
    out = tmp_path / "verify.json"
    result = runner.invoke(
        app, ["verify", "--family", "bessel", "--m", "0.7", "--z=-1,0", "--h", "0.01", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert report["rel_l2_error"] < 1e-3


def test_verify_suite_with_a_bad_point(tmp_path):
    suite = tmp_path / "acceptance.yaml"
    suite.write_text(
        "green:\n"
        "  - family: bessel\n"
        "    params: {m: \"0.5,0\"}\n"
        "    z: \"-1,0\"\n"
        "  - family: bessel\n"
        "    params: {m: \"-3,0\"}\n"
        "    z: \"-1,0\"\n",
        encoding="utf-8",
    )
    out = tmp_path / "suite.json"
    result = runner.invoke(
        app, ["verify", "--suite", "green", "--acceptance", str(suite), "--out", str(out)]
    )
    assert result.exit_code == 5, result.output
    summary = json.loads(out.read_text(encoding="utf-8"))
    assert summary["total"] == 2
    assert summary["passed"] == 1
    assert summary["reports"][0]["passed"] is True
    assert "ParameterError" in summary["reports"][1]["error"]


@pytest.mark.slow
def test_verify_command_refines(tmp_path):
    out = tmp_path / "verify.json"
    result = runner.invoke(
        app,
        ["verify", "--family", "bessel", "--m", "0.7", "--z=-1,0", "--h", "0.04",
         "--refine", "--double-window", "--out", str(out)],
    )
    report = json.loads(out.read_text(encoding="utf-8"))
    assert 1.7 < report["refinement_order"] < 2.3
    assert report["window_change"] < 0.1
    assert result.exit_code in (0, 5)


@pytest.mark.parametrize(
    "args, code",
    [
        (["spectrum", "--family", "nope"], 2),
        (["spectrum", "--family", "bessel", "--m=-3"], 2),
        (["verify", "--family", "bessel"], 2),
        (["kernel", "--family", "bessel", "--m", "0.5", "--z=2,0", "--x", "0.3", "--y", "0.6"], 3),
        (["transmute", "--pair", "exp-bessel", "--k", "1", "--m", "0.7",
          "--x", "0.3", "--y", "0.9", "--tolerance", "0"], 5),
    ],
)
def test_exit_codes(tmp_path, args, code):
    result = runner.invoke(app, [*args, "--out", str(tmp_path / "out.json")])
    assert result.exit_code == code, result.output


def test_run_job_file(tmp_path):
    job = tmp_path / "solvops.toml"
    job.write_text(
        '[job]\ncommand = "spectrum"\nname = "oscillator"\n\n'
        '[params]\nfamily = "harmonic"\nk = "1,0"\n\n'
        "[grid]\ncount = 4\n\n"
        '[output]\npath = "out/ladder.csv"\n',
        encoding="utf-8",
    )
    result = runner.invoke(app, ["run", str(job)])
    assert result.exit_code == 0, result.output
    rows = _csv(tmp_path / "out" / "ladder.csv")
    assert [float(r["re"]) for r in rows] == pytest.approx([1.0, 3.0, 5.0, 7.0])


def test_run_job_needs_its_params(tmp_path):
    job = tmp_path / "solvops.toml"
    job.write_text('[job]\ncommand = "kernel"\n\n[params]\nk = "1,0"\n', encoding="utf-8")
    result = runner.invoke(app, ["run", str(job)])
    assert result.exit_code == 2


def test_info_command():
    result = runner.invoke(app, ["info"])
    assert result.exit_code == 0
