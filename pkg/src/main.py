# Path: src/main.py
#!/usr/bin/env python3
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, List, Optional

import typer
from rich.console import Console
from rich.table import Table

from src.core.config import settings
from src.core.errors import SolvopsError, ThresholdExceededError
from src.core.logging_config import setup_logging
from src.core.project_config import (
    Command,
    JobConfig,
    OutputFormat,
    find_project_config,
    load_job_config,
)
from src.models import parse_complex

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="solvops",
    help="Resolvents, spectra and special functions of exactly solvable 1D Schrödinger operators",
    add_completion=False,
)
# status goes to stderr, stdout carries the CSV/JSON data
console = Console(stderr=True)

# --- Helpers ---


def _initialize_app(verbose: bool) -> None:
    """Common setup for all commands."""
    log_level = "DEBUG" if verbose else "INFO"
    setup_logging(log_level)
    logger.debug(f"App initialized with log level: {log_level}")


def _exit_code(e: Exception) -> int:
    if isinstance(e, SolvopsError):
        return e.exit_code
    if isinstance(e, (ValueError, FileNotFoundError, KeyError)):
        return 2
    return 1


@contextmanager
def _guard(what: str) -> Iterator[None]:
    """Map failures to exit codes: 2 validation, 3 spectral point, 4 numerics, 5 threshold."""
    try:
        yield
    except typer.Exit:
        raise
    except Exception as e:
        code = _exit_code(e)
        logger.exception(f"{what} failed")
        console.print(f"[bold red]❌ {what} failed:[/bold red] {e}")
        raise typer.Exit(code=code)


def _params(**raw: Optional[str]) -> dict[str, complex]:
    """Family / function parameters given as 're,im' strings."""
    return {name: parse_complex(value) for name, value in raw.items() if value is not None}


def _range(text: str) -> tuple[float, float]:
    lo, _, hi = text.partition(",")
    try:
        return float(lo), float(hi)
    except ValueError:
        raise ValueError(f"expected a range as 'lo,hi', got {text!r}") from None


def _emit(payload: Any, fmt: OutputFormat, out: Optional[Path]) -> None:
    from src.services.exporter import write_output

    text = write_output(payload, fmt, out)
    if out is None:
        typer.echo(text, nl=False)
    else:
        console.print(f"✅ Wrote [bold]{out}[/bold]")


def _green_line(index: int, report: Any) -> str:
    mark = "✅" if report.passed else "❌"
    head = f"{mark} [{index}] {report.family}"
    if report.error is not None:
        return f"{head} error: {report.error}"
    line = (
        f"{head} rel_l2={report.rel_l2_error:.2e} "
        f"jump={report.jump_error:.1e} W={report.wronskian_spread:.1e}"
    )
    if report.refinement_order is not None:
        line += f" order={report.refinement_order:.2f}"
    if report.window_change is not None:
        line += f" window={report.window_change:.1%}"
    return line


def _spec(family: str, params: dict[str, complex]) -> Any:
    from src.operators import OperatorSpec

    spec = OperatorSpec.from_params(family, params)
    logger.debug(f"Operator: {spec.label}")
    return spec


FORMAT_OPTION = typer.Option(OutputFormat.CSV, "--format", "-f", help="csv or json")
OUT_OPTION = typer.Option(None, "--out", "-o", help="Write to a file instead of stdout")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Enable debug logs")

# --- Commands ---


@app.command("eval")
def eval_cmd(
    fn: str = typer.Option(..., "--fn", help="Function name (see `solvops info`)"),
    at: List[str] = typer.Option(..., "--at", help="Argument 're,im' (repeatable)"),
    m: Optional[str] = typer.Option(None, "--m"),
    beta: Optional[str] = typer.Option(None, "--beta"),
    a: Optional[str] = typer.Option(None, "--a"),
    b: Optional[str] = typer.Option(None, "--b"),
    c: Optional[str] = typer.Option(None, "--c"),
    alpha: Optional[str] = typer.Option(None, "--alpha"),
    sign: Optional[str] = typer.Option(None, "--sign", help="+1 / -1 (hankel)"),
    parity: Optional[str] = typer.Option(None, "--parity", help="+1 / -1 (weber_i)"),
    deriv: bool = typer.Option(False, "--deriv", help="Evaluate the derivative"),
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Evaluate a special function at one or more points."""
    _initialize_app(verbose)
    from src.services.eval_service import EvalService

    with _guard("eval"):
        params = _params(m=m, beta=beta, a=a, b=b, c=c, alpha=alpha, sign=sign, parity=parity)
        rows = EvalService().evaluate(fn, params, [parse_complex(p) for p in at], deriv)
        _emit(rows, fmt, out)


@app.command()
def kernel(
    family: str = typer.Option(..., "--family", help="Operator family"),
    z: str = typer.Option(..., "--z", help="Spectral parameter 're,im'"),
    x: List[float] = typer.Option(..., "--x", help="x points (repeatable)"),
    y: List[float] = typer.Option(..., "--y", help="y points (repeatable)"),
    m: Optional[str] = typer.Option(None, "--m"),
    k: Optional[str] = typer.Option(None, "--k"),
    beta: Optional[str] = typer.Option(None, "--beta"),
    ell: Optional[str] = typer.Option(None, "--ell"),
    gamma: Optional[str] = typer.Option(None, "--gamma", help="'re,im' or 'inf'"),
    dx: bool = typer.Option(False, "--dx", help="Tabulate d/dx R instead of R"),
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Tabulate the resolvent kernel R(z; x, y)."""
    _initialize_app(verbose)
    from src.services.kernel_service import KernelService

    with _guard("kernel"):
        spec = _spec(family, _params(m=m, k=k, beta=beta, ell=ell, gamma=gamma))
        rows = KernelService().table(spec, parse_complex(z), x, y, dx)
        _emit(rows, fmt, out)


@app.command()
def spectrum(
    family: str = typer.Option(..., "--family", help="Operator family"),
    count: int = typer.Option(10, "--count", "-n", help="Number of eigenvalues"),
    m: Optional[str] = typer.Option(None, "--m"),
    k: Optional[str] = typer.Option(None, "--k"),
    beta: Optional[str] = typer.Option(None, "--beta"),
    ell: Optional[str] = typer.Option(None, "--ell"),
    gamma: Optional[str] = typer.Option(None, "--gamma", help="'re,im' or 'inf'"),
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """List eigenvalues and the continuous part of the spectrum."""
    _initialize_app(verbose)
    from src.services.spectrum_service import SpectrumService

    with _guard("spectrum"):
        spec = _spec(family, _params(m=m, k=k, beta=beta, ell=ell, gamma=gamma))
        rows, descriptor = SpectrumService().eigenvalues(spec, count)
        console.print(
            f"📐 {spec.label}: continuous part [bold]{descriptor.continuous.value}[/bold], "
            f"{len(rows)} eigenvalue(s){' (truncated)' if descriptor.truncated else ''}"
        )
        _emit(rows, fmt, out)


@app.command()
def verify(
    family: Optional[str] = typer.Option(None, "--family", help="Operator family"),
    z: Optional[str] = typer.Option(None, "--z", help="Spectral parameter 're,im'"),
    m: Optional[str] = typer.Option(None, "--m"),
    k: Optional[str] = typer.Option(None, "--k"),
    beta: Optional[str] = typer.Option(None, "--beta"),
    ell: Optional[str] = typer.Option(None, "--ell"),
    gamma: Optional[str] = typer.Option(None, "--gamma", help="'re,im' or 'inf'"),
    h: float = typer.Option(0.01, "--h", help="Grid spacing"),
    a: Optional[float] = typer.Option(None, "--a", help="Left window edge"),
    b: Optional[float] = typer.Option(None, "--b", help="Right window edge"),
    suite: Optional[str] = typer.Option(
        None, "--suite", help="Run a named suite of the acceptance file instead"
    ),
    refine: bool = typer.Option(
        False, "--refine", help="Also measure the refinement order on h, h/2, h/4"
    ),
    double_window: bool = typer.Option(
        False, "--double-window", help="Also measure the change on a doubled window"
    ),
    acceptance: Optional[Path] = typer.Option(None, "--acceptance", help="Acceptance YAML"),
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Check a closed-form kernel against the finite-difference oracle."""
    _initialize_app(verbose)
    from src.services.verify_service import VerifyService

    service = VerifyService()
    with _guard("verify"):
        if suite:
            summary = service.run_suite(acceptance, suite)
            _emit(summary, OutputFormat.JSON, out)
            for i, report in enumerate(summary.reports):
                console.print(_green_line(i, report))
            if not summary.ok:
                raise ThresholdExceededError(
                    f"{summary.total - summary.passed} of {summary.total} point(s) failed"
                )
            console.print(f"[bold green]✅ {summary.passed}/{summary.total} passed[/bold green]")
            return

        if family is None or z is None:
            raise ValueError("verify needs --family and --z (or --suite)")
        spec = _spec(family, _params(m=m, k=k, beta=beta, ell=ell, gamma=gamma))
        report = service.check(spec, parse_complex(z), h, a, b, refine, double_window)
        _emit(report, OutputFormat.JSON, out)
        console.print(_green_line(0, report))
        if not report.passed:
            raise ThresholdExceededError("; ".join(report.failures))
        console.print(f"[bold green]✅ {spec.label} passed[/bold green]")


@app.command()
def transmute(
    pair: Optional[str] = typer.Option(None, "--pair", help="e.g. exp-bessel"),
    x: Optional[float] = typer.Option(None, "--x"),
    y: Optional[float] = typer.Option(None, "--y"),
    m: Optional[str] = typer.Option(None, "--m"),
    k: Optional[str] = typer.Option(None, "--k"),
    beta: Optional[str] = typer.Option(None, "--beta"),
    ell: Optional[str] = typer.Option(None, "--ell"),
    gamma: Optional[str] = typer.Option(None, "--gamma", help="'re,im' or 'inf'"),
    tolerance: float = typer.Option(1e-9, "--tolerance"),
    suite: Optional[str] = typer.Option(None, "--suite", help="Run a named acceptance suite"),
    acceptance: Optional[Path] = typer.Option(None, "--acceptance", help="Acceptance YAML"),
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Evaluate both sides of a transmutation identity."""
    _initialize_app(verbose)
    from src.services.transmute_service import TransmuteService

    service = TransmuteService()
    with _guard("transmute"):
        if suite:
            reports = service.run_suite(acceptance, suite)
            _emit(reports, OutputFormat.JSON, out)
            failed = [r for r in reports if not r.passed]
            if failed:
                raise ThresholdExceededError(f"{len(failed)} of {len(reports)} point(s) failed")
            console.print(f"[bold green]✅ {len(reports)}/{len(reports)} passed[/bold green]")
            return

        if pair is None or x is None or y is None:
            raise ValueError("transmute needs --pair, --x and --y (or --suite)")
        params = _params(m=m, k=k, beta=beta, ell=ell, gamma=gamma)
        report = service.check(pair, params, x, y, tolerance)
        _emit(report, OutputFormat.JSON, out)
        if not report.passed:
            raise ThresholdExceededError(
                f"{report.pair}: mismatch {report.mismatch:.2e} >= {tolerance:g}"
            )
        console.print(f"[bold green]✅ {report.pair}: mismatch {report.mismatch:.2e}[/bold green]")


@app.command()
def scan(
    family: str = typer.Option(..., "--family", help="Operator family"),
    axis: str = typer.Option(..., "--axis", help="Scanned parameter, e.g. k"),
    re_range: str = typer.Option("-2,2", "--re", help="Real range 'lo,hi'"),
    im_range: str = typer.Option("-2,2", "--im", help="Imaginary range 'lo,hi'"),
    count: int = typer.Option(21, "--count", "-n", help="Cells per axis"),
    plane: str = typer.Option("direct", "--plane", help="direct, or square (c = p^2)"),
    at_z: str = typer.Option("-1,0", "--at-z", help="z of the kernel column"),
    at_x: Optional[float] = typer.Option(None, "--at-x", help="x = y of the kernel column"),
    m: Optional[str] = typer.Option(None, "--m"),
    k: Optional[str] = typer.Option(None, "--k"),
    beta: Optional[str] = typer.Option(None, "--beta"),
    ell: Optional[str] = typer.Option(None, "--ell"),
    gamma: Optional[str] = typer.Option(None, "--gamma", help="'re,im' or 'inf'"),
    fmt: OutputFormat = FORMAT_OPTION,
    out: Optional[Path] = OUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Heatmap data over a plane of one complex family parameter."""
    _initialize_app(verbose)
    from src.services.scan_service import Plane, ScanService

    with _guard("scan"):
        fixed = _params(m=m, k=k, beta=beta, ell=ell, gamma=gamma)
        cells = ScanService().scan(
            family,
            axis,
            fixed,
            _range(re_range),
            _range(im_range),
            count,
            Plane(plane),
            parse_complex(at_z),
            at_x,
        )
        _emit(cells, fmt, out)


@app.command()
def run(
    job: Optional[Path] = typer.Argument(None, help="Job file (default: nearest solvops.toml)"),
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Run the job described by a solvops.toml file."""
    _initialize_app(verbose)

    config_path = job or find_project_config()
    if config_path is None:
        console.print("[bold red]❌ No solvops.toml found here or in any parent directory.[/bold red]")
        raise typer.Exit(code=2)

    console.print(f"[bold cyan]📂 Job file: {config_path}[/bold cyan]")
    with _guard("run"):
        config = load_job_config(config_path)
        console.print(f"🚀 {config.job.command.value} [bold]{config.job.name}[/bold]")
        _run_job(config)


_WORD_KEYS = {"family", "fn", "pair", "axis", "plane", "re", "im", "suite"}
_FLOAT_KEYS = {"x", "y", "at_x", "tolerance"}


def _run_job(config: JobConfig) -> None:
    """Dispatch a validated job to its service."""
    raw = config.params
    words = {key: str(raw[key]) for key in _WORD_KEYS if key in raw}
    floats = {key: float(raw[key]) for key in _FLOAT_KEYS if key in raw}
    numbers = {
        key: parse_complex(value)
        for key, value in raw.items()
        if key not in _WORD_KEYS and key not in _FLOAT_KEYS
    }
    z = numbers.pop("z", None)
    at_z = numbers.pop("at_z", complex(-1.0))
    grid, fmt, out = config.grid, config.output.format, config.resolve_output()

    def need(*keys: str) -> None:
        missing = [key for key in keys if key not in words and key not in floats]
        if "z" in keys and z is not None:
            missing.remove("z")
        if missing:
            raise ValueError(f"{config.job.command.value} job needs params {missing}")

    command = config.job.command
    if command is Command.EVAL:
        from src.services.eval_service import EvalService

        need("fn")
        derivative = bool(numbers.pop("deriv", 0).real)
        rows = EvalService().evaluate(words["fn"], numbers, grid.points, derivative)
        _emit(rows, fmt, out)
    elif command is Command.KERNEL:
        from src.services.kernel_service import KernelService

        need("family", "z")
        spec = _spec(words["family"], numbers)
        ys = grid.points_y or grid.points
        _emit(KernelService().table(spec, z, grid.points, ys), fmt, out)
    elif command is Command.SPECTRUM:
        from src.services.spectrum_service import SpectrumService

        need("family")
        rows, _ = SpectrumService().eigenvalues(_spec(words["family"], numbers), grid.count)
        _emit(rows, fmt, out)
    elif command is Command.VERIFY:
        from src.services.verify_service import VerifyService

        need("family", "z")
        spec = _spec(words["family"], numbers)
        report = VerifyService().check(
            spec, z, grid.h, grid.a, grid.b, grid.refine, grid.double_window
        )
        _emit(report, OutputFormat.JSON, out)
        if not report.passed:
            raise ThresholdExceededError("; ".join(report.failures))
    elif command is Command.TRANSMUTE:
        from src.services.transmute_service import TOLERANCE, TransmuteService

        need("pair", "x", "y")
        report = TransmuteService().check(
            words["pair"], numbers, floats["x"], floats["y"], floats.get("tolerance", TOLERANCE)
        )
        _emit(report, OutputFormat.JSON, out)
        if not report.passed:
            raise ThresholdExceededError(f"{report.pair}: mismatch {report.mismatch:.2e}")
    elif command is Command.SCAN:
        from src.services.scan_service import Plane, ScanService

        need("family", "axis")
        cells = ScanService().scan(
            words["family"],
            words["axis"],
            numbers,
            _range(words.get("re", "-2,2")),
            _range(words.get("im", "-2,2")),
            grid.count,
            Plane(words.get("plane", "direct")),
            at_z,
            floats.get("at_x"),
        )
        _emit(cells, fmt, out)
    console.print(f"[bold green]✅ Job {config.job.name} completed[/bold green]")


@app.command()
def info(
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Show the effective settings, the function table and the families."""
    _initialize_app(verbose)
    from src.operators.operator_spec import FAMILY_PARAMS
    from src.special.registry import REGISTRY

    console.print(f"[bold]Project:[/bold] {settings.PROJECT_NAME}")
    table = Table(title="Settings")
    table.add_column("Name", style="cyan")
    table.add_column("Value")
    for name, value in settings.model_dump().items():
        table.add_row(name, str(value))
    console.print(table)

    console.print(f"[bold]Functions ({len(REGISTRY)}):[/bold]")
    for name, entry in sorted(REGISTRY.items()):
        console.print(f"  - {name}({', '.join(entry.params)}; at)  {entry.description}")

    console.print("[bold]Families:[/bold]")
    for family, names in FAMILY_PARAMS.items():
        console.print(f"  - {family.value}: {', '.join(names)}")

    config_path = find_project_config()
    if config_path:
        console.print(f"📂 Job file in scope: {config_path}")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
