# Path: tests/services/test_services.py
import json
import math

import pytest

from src.core.errors import ParameterError, SpectralPointError
from src.core.project_config import (
    CONFIG_FILENAME,
    Command,
    OutputFormat,
    find_project_config,
    load_job_config,
)
from src.models import CNumber, SpectrumRow, ValueRow, format_complex, parse_complex
from src.operators import OperatorSpec
from src.services.eval_service import EvalService
from src.services.exporter import format_float, render, to_csv, to_json, write_output
from src.services.kernel_service import KernelService
from src.services.scan_service import Plane, ScanService
from src.services.spectrum_service import SpectrumService
from src.services.transmute_service import TransmuteService
from src.services.verify_service import VerifyService, load_acceptance, to_report
from src.verify import Grid, green_residual
from src.verify.green_residual import default_window


# --- numbers and export ---


def test_parse_complex():
    assert parse_complex("1.5,-2") == complex(1.5, -2)
    assert parse_complex(" -0.3 ") == complex(-0.3, 0)
    assert math.isinf(parse_complex("inf").real)
    assert parse_complex(2) == 2 + 0j
    with pytest.raises(ParameterError):
        parse_complex("1,2,3")
    assert format_complex(complex(1, -0.5)) == "1,-0.5"


def test_float_formatting():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(-2.0) == "-2"
    assert format_float(math.inf) == "inf"
    assert format_float(math.nan) == "nan"


def test_csv_layout():
    rows = [ValueRow(x=1.0, re=0.5, im=0.0, path="Series"), ValueRow(x=2.0, y=0.5, re=1.0, im=-1.0)]
    text = to_csv(rows)
    assert text.splitlines() == [
        "x,y,re,im,err_est,path",
        "1,,0.5,0,0,Series",
        "2,0.5,1,-1,0,",
    ]
    assert "\r" not in text
    assert to_csv([]) == ""


def test_json_is_sorted_and_stable(tmp_path):
    row = SpectrumRow(n=0, re=-1.0, im=0.0)
    data = json.loads(to_json([row]))
    assert data == [{"im": 0.0, "n": 0, "re": -1.0}]
    assert render(row, OutputFormat.CSV) == "n,re,im\n0,-1,0\n"
    out = tmp_path / "sub" / "row.json"
    text = write_output(row, OutputFormat.JSON, out)
    assert out.read_text(encoding="utf-8") == text
    assert CNumber.of(1 - 2j).to_complex() == 1 - 2j


# --- services ---


def test_eval_service_rows():
    rows = EvalService().evaluate("macdonald_k2d", {"m": 0.5}, [1.0, 2 + 1j])
    assert rows[0].x == 1.0 and rows[0].y is None
    assert rows[0].re == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-13)
    assert rows[1].y == 1.0
    assert rows[0].path


def test_eval_service_unknown_function():
    with pytest.raises(ParameterError):
        EvalService().evaluate("nope", {}, [1.0])


def test_kernel_service_table():
    spec = OperatorSpec.bessel(0.5)
    k = 1.3
    rows = KernelService().table(spec, -k * k, [0.4, 1.1], [0.7])
    assert [(r.x, r.y) for r in rows] == [(0.4, 0.7), (1.1, 0.7)]
    assert rows[0].re == pytest.approx(math.sinh(k * 0.4) * math.exp(-k * 0.7) / k, rel=1e-12)
    assert rows[1].re == pytest.approx(math.sinh(k * 0.7) * math.exp(-k * 1.1) / k, rel=1e-12)
    with pytest.raises(ParameterError):
        KernelService().table(spec, -1.0, [-0.1], [0.5])
    with pytest.raises(SpectralPointError):
        KernelService().table(spec, 2.0, [0.3], [0.5])


def test_spectrum_service_caps_the_count():
    rows, descriptor = SpectrumService().eigenvalues(OperatorSpec.whittaker(2, 0.5), 3)
    assert [r.n for r in rows] == [0, 1, 2]
    assert [r.re for r in rows] == pytest.approx([-1.0, -0.25, -1 / 9])
    assert descriptor.truncated
    rows, _ = SpectrumService().eigenvalues(OperatorSpec.bessel(0.5))
    assert rows == []


def test_verify_service_single_point():
    report = VerifyService().check(OperatorSpec.bessel(0.7), -1.0, h=0.01)
    assert report.passed, report.failures
    assert report.family == "bessel"
    assert report.grid.clustering == "GeometricTowardLeft"
    assert report.params["m"].re == pytest.approx(0.7)


@pytest.mark.slow
def test_verify_suite_keeps_file_order(acceptance_file):
    summary = VerifyService().run_suite(acceptance_file, "green")
    assert summary.total == 2
    assert summary.ok
    assert [r.family for r in summary.reports] == ["bessel", "exponential"]


def test_verify_suite_reports_a_bad_point_and_goes_on(tmp_path):
    path = tmp_path / "acceptance.yaml"
    path.write_text(
        "green:\n"
        "  - family: bessel\n"
        "    params: {m: \"0.5,0\"}\n"
        "    z: \"-1,0\"\n"
        "  - family: bessel\n"
        "    params: {k: \"1,0\"}\n"
        "    z: \"-1,0\"\n"
        "  - family: nope\n"
        "    z: \"-1,0\"\n",
        encoding="utf-8",
    )
    summary = VerifyService().run_suite(path, "green")
    assert summary.total == 3
    assert summary.passed == 1
    assert not summary.ok
    good, extra, unknown = summary.reports
    assert good.passed and good.error is None
    assert not extra.passed
    assert "ParameterError" in extra.error
    assert extra.failures == [extra.error]
    assert extra.rel_l2_error is None
    assert unknown.family == "nope"
    assert unknown.z.re == pytest.approx(-1.0)


def test_order_and_window_change_are_judged():
    spec, z = OperatorSpec.bessel(0.7), -1.0
    a, b = default_window(spec, z)
    result = green_residual(spec, z, Grid.for_spec(spec, a, b, 0.01))
    assert to_report(result, 2.0, 0.01).passed
    report = to_report(result, 1.2, 0.3)
    assert not report.passed
    assert report.refinement_order == pytest.approx(1.2)
    assert [f.split()[0] for f in report.failures] == ["refinement_order", "window_change"]


@pytest.mark.slow
def test_verify_service_refines_and_doubles():
    report = VerifyService().check(
        OperatorSpec.bessel(0.7), -1.0, h=0.04, refine=True, double_window=True
    )
    assert 1.7 < report.refinement_order < 2.3
    assert report.window_change < 0.1


def test_missing_suite(acceptance_file):
    with pytest.raises(ParameterError):
        VerifyService().run_suite(acceptance_file, "nope")
    with pytest.raises(FileNotFoundError):
        load_acceptance(acceptance_file.parent / "missing.yaml")


def test_transmute_service(acceptance_file):
    reports = TransmuteService().run_suite(acceptance_file)
    assert len(reports) == 1
    assert reports[0].passed
    assert reports[0].pair == "exp-bessel"
    with pytest.raises(ParameterError, match="Known"):
        TransmuteService().check("nope", {}, 0.1, 0.2)
    strict = TransmuteService().check("exp-bessel", {"k": 1 + 0.2j, "m": 0.7}, 0.3, 0.9, tolerance=0.0)
    assert not strict.passed


def test_transmute_suite_keeps_going(tmp_path):
    path = tmp_path / "acceptance.yaml"
    path.write_text(
        "transmute:\n"
        "  - pair: nope\n"
        "    x: 0.3\n"
        "    y: 0.9\n"
        "  - pair: exp-bessel\n"
        "    params: {k: \"1,0.2\", m: \"0.7,0\"}\n"
        "    x: 0.3\n"
        "    y: 0.9\n",
        encoding="utf-8",
    )
    bad, good = TransmuteService().run_suite(path)
    assert not bad.passed
    assert bad.pair == "nope"
    assert "Unknown pair" in bad.error
    assert bad.mismatch is None
    assert good.passed and good.error is None


def test_scan_service_marks_inadmissible_cells():
    cells = ScanService().scan("bessel", "m", {}, (-1.5, 0.5), (-0.5, 0.5), 3)
    assert [c.index for c in cells] == list(range(9))
    assert cells[0].re == -1.5 and cells[0].im == -0.5
    assert not cells[0].admissible
    assert cells[1].admissible
    assert cells[1].point_count is not None
    assert cells[1].log_abs_kernel is not None


def test_scan_square_plane_takes_the_principal_root():
    cells = ScanService().scan("harmonic", "k", {}, (1.0, 4.0), (0.0, 0.0), 2, Plane.SQUARE)
    assert len(cells) == 4
    assert all(c.admissible for c in cells)
    assert cells[1].re == 4.0


def test_scan_argument_errors():
    with pytest.raises(ParameterError):
        ScanService().scan("bessel", "k", {}, (0, 1), (0, 1), 3)
    with pytest.raises(ParameterError):
        ScanService().scan("bessel", "m", {"m": 0.5}, (0, 1), (0, 1), 3)
    with pytest.raises(ParameterError):
        ScanService().scan("bessel", "m", {}, (0, 1), (0, 1), 0)


# --- job files ---


def test_job_file_round_trip(tmp_path):
    path = tmp_path / CONFIG_FILENAME
    path.write_text(
        '[job]\ncommand = "spectrum"\nname = "coulomb"\n\n'
        '[params]\nFamily = "whittaker"\nbeta = "2,0"\nm = 0.5\n\n'
        "[grid]\ncount = 3\n\n"
        '[output]\npath = "out/spectrum.csv"\n',
        encoding="utf-8",
    )
    config = load_job_config(path)
    assert config.job.command is Command.SPECTRUM
    assert config.params["family"] == "whittaker"
    assert config.grid.count == 3
    assert config.resolve_output() == (tmp_path / "out" / "spectrum.csv").resolve()

    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    assert find_project_config(nested) == path


def test_invalid_job_file(tmp_path):
    path = tmp_path / CONFIG_FILENAME
    path.write_text('[job]\ncommand = "sync"\n', encoding="utf-8")
    with pytest.raises(ValueError, match="Invalid job file"):
        load_job_config(path)
    with pytest.raises(FileNotFoundError):
        load_job_config(tmp_path / "nope.toml")
