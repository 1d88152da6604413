# Path: src/services/verify_service.py
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import Any, Optional

import yaml
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from src.core.config import settings
from src.core.errors import ParameterError, SolvopsError
from src.models import CheckSummary, CNumber, GreenReport, GridInfo, parse_complex
from src.operators import OperatorSpec
from src.verify import Grid, green_residual
from src.verify.green_residual import (
    GreenResidualReport,
    default_window,
    refinement_order,
    window_doubling,
)

logger = logging.getLogger(__name__)

REL_L2_MAX = 1e-3
JUMP_MAX = 1e-7
WRONSKIAN_SPREAD_MAX = 1e-8
ORDER_RANGE = (1.7, 2.3)
WINDOW_CHANGE_MAX = 0.1


def load_acceptance(path: Optional[Path] = None) -> dict[str, Any]:
    path = path or settings.ACCEPTANCE_FILE
    if not path.exists():
        raise FileNotFoundError(f"Acceptance file not found at: {path}")
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a mapping of suites")
    return data


def parse_params(raw: dict[str, Any]) -> dict[str, complex]:
    return {str(name).lower(): parse_complex(value) for name, value in raw.items()}


def to_report(
    result: GreenResidualReport,
    order: Optional[float] = None,
    window_change: Optional[float] = None,
) -> GreenReport:
    """GreenResidualReport -> JSON model, with the threshold verdict."""
    failures = []
    if not result.rel_l2_error < REL_L2_MAX:
        failures.append(f"rel_l2_error {result.rel_l2_error:.3e} >= {REL_L2_MAX:g}")
    if not result.jump_error < JUMP_MAX:
        failures.append(f"jump_error {result.jump_error:.3e} >= {JUMP_MAX:g}")
    if not result.wronskian_spread < WRONSKIAN_SPREAD_MAX:
        failures.append(
            f"wronskian_spread {result.wronskian_spread:.3e} >= {WRONSKIAN_SPREAD_MAX:g}"
        )
    if order is not None and not ORDER_RANGE[0] <= order <= ORDER_RANGE[1]:
        failures.append(f"refinement_order {order:.2f} outside {ORDER_RANGE}")
    if window_change is not None and not window_change < WINDOW_CHANGE_MAX:
        failures.append(f"window_change {window_change:.3f} >= {WINDOW_CHANGE_MAX:g}")
    grid = result.grid
    return GreenReport(
        family=result.spec.family.value,
        params={k: CNumber.of(v) for k, v in result.spec.params().items()},
        z=CNumber.of(result.z),
        z_used=CNumber.of(result.z_used),
        grid=GridInfo(a=grid.a, b=grid.b, h=grid.h, n=grid.n, clustering=grid.clustering.value),
        rel_l2_error=result.rel_l2_error,
        jump_error=result.jump_error,
        wronskian_spread=result.wronskian_spread,
        condition=result.condition,
        refinement_order=order,
        window_change=window_change,
        nudged=result.nudged,
        passed=not failures,
        failures=failures,
    )


def failed_report(point: dict[str, Any], error: Exception) -> GreenReport:
    """A suite point that raised: no metrics, the error as its failure."""
    try:
        z = CNumber.of(parse_complex(point.get("z", 0)))
        params = {k: CNumber.of(v) for k, v in parse_params(point.get("params") or {}).items()}
    except SolvopsError:
        z, params = CNumber.of(0j), {}
    message = f"{type(error).__name__}: {error}"
    return GreenReport(
        family=str(point.get("family", "?")),
        params=params,
        z=z,
        passed=False,
        failures=[message],
        error=message,
    )


class VerifyService:
    """Green's-function oracle checks: one point or the acceptance suite."""

    def __init__(self) -> None:
        self.console = Console(stderr=True)

    def check(
        self,
        spec: OperatorSpec,
        z: complex,
        h: float = 0.01,
        a: Optional[float] = None,
        b: Optional[float] = None,
        refine: bool = False,
        double_window: bool = False,
    ) -> GreenReport:
        """green_residual at one point; ``refine`` adds the order measured on
        h, h/2, h/4 and ``double_window`` the change on a doubled window."""
        # Window: caller overrides, else the family default
        lo, hi = default_window(spec, z)
        a = lo if a is None else a
        b = hi if b is None else b
        grid = Grid.for_spec(spec, a, b, h)
        logger.debug(f"{spec.label} z={z}: window [{grid.a:.4g}, {grid.b:.4g}], n={grid.n}")
        result = green_residual(spec, z, grid)

        # Optional refinement and window checks
        order = change = None
        if refine:
            refinement = refinement_order(spec, z, grid, levels=3)
            order = refinement.order
            logger.info(f"{spec.label}: refinement order {order:.2f}, h={refinement.spacings}")
        if double_window:
            change = window_doubling(spec, z, grid).change
            logger.info(f"{spec.label}: window doubling changes rel_l2 by {change:.1%}")

        report = to_report(result, order, change)
        if report.nudged:
            logger.warning(f"{spec.label}: z nudged to {result.z_used}")
        return report

    def run_suite(self, path: Optional[Path] = None, suite: str = "green") -> CheckSummary:
        """Every point of ``suite`` in the acceptance file, in parallel.

        Reports keep the file order regardless of completion order; a point
        that raises is reported as failed and the rest still run.
        """
        points = load_acceptance(path).get(suite) or []
        if not points:
            raise ParameterError(f"acceptance suite '{suite}' is empty or missing")

        results: dict[int, GreenReport] = {}
        # Submit all points; reports are keyed by file position
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("{task.percentage:>3.0f}%"),
            console=self.console,
        ) as progress:
            task = progress.add_task(f"Suite {suite}", total=len(points))
            with ThreadPoolExecutor(max_workers=settings.SOLVOPS_THREADS) as executor:
                future_to_index = {
                    executor.submit(self._run_point, point): i
                    for i, point in enumerate(points)
                }
                for future in as_completed(future_to_index):
                    index = future_to_index[future]
                    try:
                        results[index] = future.result()
                    except (SolvopsError, KeyError, ValueError) as e:
                        # keep going; the point shows up as failed
                        logger.error(f"Point {index} of '{suite}' failed: {e}")
                        results[index] = failed_report(points[index], e)
                    finally:
                        progress.advance(task)

        reports = [results[i] for i in sorted(results)]
        return CheckSummary(
            suite=suite,
            total=len(reports),
            passed=sum(r.passed for r in reports),
            reports=reports,
        )

    def _run_point(self, point: dict[str, Any]) -> GreenReport:
        params = parse_params(point.get("params", {}))
        spec = OperatorSpec.from_params(point["family"], params)
        return self.check(
            spec,
            parse_complex(point["z"]),
            float(point.get("h", 0.01)),
            point.get("a"),
            point.get("b"),
            bool(point.get("refine", False)),
            bool(point.get("double_window", False)),
        )
