# Path: src/services/transmute_service.py
import logging
import math
from pathlib import Path
from typing import Any, Mapping, Optional

from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from src.core.errors import ParameterError, SolvopsError
from src.models import CNumber, TransmuteReport
from src.operators.transmutation import Transmutation, TransmutationResult, transmute_pair
from src.services.verify_service import load_acceptance, parse_params

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9


def to_report(result: TransmutationResult, tolerance: float = TOLERANCE) -> TransmuteReport:
    return TransmuteReport(
        pair=result.pair.value,
        z=CNumber.of(result.z),
        x=result.x,
        y=result.y,
        lhs=CNumber.of(result.lhs),
        rhs=CNumber.of(result.rhs),
        mismatch=result.mismatch,
        tolerance=tolerance,
        passed=result.mismatch < tolerance,
    )


class TransmuteService:
    """Both sides of a transmutation identity at a point, or a whole suite."""

    def __init__(self) -> None:
        self.console = Console(stderr=True)

    def check(
        self,
        pair: str,
        params: Mapping[str, complex],
        x: float,
        y: float,
        tolerance: float = TOLERANCE,
    ) -> TransmuteReport:
        try:
            identity = Transmutation(pair)
        except ValueError:
            known = ", ".join(t.value for t in Transmutation)
            raise ParameterError(f"Unknown pair '{pair}'. Known: {known}") from None
        result = transmute_pair(identity, dict(params), x, y)
        return to_report(result, tolerance)

    def run_suite(
        self, path: Optional[Path] = None, suite: str = "transmute"
    ) -> list[TransmuteReport]:
        points: list[dict[str, Any]] = load_acceptance(path).get(suite) or []
        if not points:
            raise ParameterError(f"acceptance suite '{suite}' is empty or missing")

        # Points run in file order
        reports = []
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("{task.percentage:>3.0f}%"),
            console=self.console,
        ) as progress:
            task = progress.add_task(f"Suite {suite}", total=len(points))
            for i, point in enumerate(points):
                tolerance = float(point.get("tolerance", TOLERANCE))
                try:
                    report = self.check(
                        point["pair"],
                        parse_params(point.get("params", {})),
                        float(point["x"]),
                        float(point["y"]),
                        tolerance,
                    )
                except (SolvopsError, KeyError, ValueError) as e:
                    logger.error(f"Point {i} of '{suite}' failed: {e}")
                    report = TransmuteReport(
                        pair=str(point.get("pair", "?")),
                        x=float(point.get("x", math.nan)),
                        y=float(point.get("y", math.nan)),
                        tolerance=tolerance,
                        passed=False,
                        error=f"{type(e).__name__}: {e}",
                    )
                if report.error is None and not report.passed:
                    logger.warning(
                        f"{report.pair} at ({report.x}, {report.y}): "
                        f"mismatch {report.mismatch:.2e}"
                    )
                reports.append(report)
                progress.advance(task)
        return reports
