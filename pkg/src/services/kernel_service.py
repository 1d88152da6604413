# Path: src/services/kernel_service.py
import logging
from typing import Sequence

from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from src.core.errors import ParameterError
from src.models import ValueRow
from src.operators import OperatorSpec, kernel_factors

logger = logging.getLogger(__name__)


class KernelService:
    """Samples R(z; x, y) (or its x-derivative) on an x-by-y table."""

    def __init__(self) -> None:
        self.console = Console(stderr=True)

    def table(
        self,
        spec: OperatorSpec,
        z: complex,
        xs: Sequence[float],
        ys: Sequence[float],
        derivative: bool = False,
    ) -> list[ValueRow]:
        for p in (*xs, *ys):
            if not spec.contains(p):
                raise ParameterError(f"{spec.label}: point {p} is outside the interval")

        # Factors and W once per table
        factors = kernel_factors(spec, z)
        logger.debug(f"{spec.label} z={z}: W = {factors.wronskian}")

        rows: list[ValueRow] = []
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("{task.percentage:>3.0f}%"),
            console=self.console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"Kernel {spec.label}", total=len(xs) * len(ys))
            for x in xs:
                for y in ys:
                    sv = factors.kernel_dx(x, y) if derivative else factors.kernel(x, y)
                    rows.append(
                        ValueRow(
                            x=x,
                            y=y,
                            re=sv.value.real,
                            im=sv.value.imag,
                            err_est=sv.err_est,
                            path=sv.path.value,
                        )
                    )
                    progress.advance(task)
        return rows
