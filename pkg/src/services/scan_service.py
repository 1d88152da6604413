# Path: src/services/scan_service.py
"""Parameter-plane scans for heatmaps.

A rectangle of one complex family parameter is cut into cells. Each cell
records whether the family is defined there, its number of eigenvalues and
log|R(z; x0, x0)| at a fixed z. In the ``square`` plane the cell value is
c = p^2 and the parameter is its principal root.
"""
import cmath
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from enum import Enum
from typing import Mapping, Optional

import numpy as np
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from src.core.config import settings
from src.core.errors import ParameterError, SolvopsError
from src.models import ScanCell
from src.operators import OperatorSpec, resolvent_kernel, spectrum
from src.operators.operator_spec import FAMILY_PARAMS, Family, Interval

logger = logging.getLogger(__name__)


class Plane(str, Enum):
    DIRECT = "direct"
    SQUARE = "square"


class ScanService:
    def __init__(self) -> None:
        self.console = Console(stderr=True)

    def scan(
        self,
        family: str,
        axis: str,
        fixed: Mapping[str, complex],
        re_range: tuple[float, float],
        im_range: tuple[float, float],
        count: int,
        plane: Plane = Plane.DIRECT,
        at_z: complex = -1.0,
        at_x: Optional[float] = None,
    ) -> list[ScanCell]:
        """``count`` x ``count`` cells, row-major in (Im, Re), sorted by index."""
        fam = Family(family)
        if axis not in FAMILY_PARAMS[fam]:
            raise ParameterError(
                f"{fam.value} has no parameter '{axis}' (takes {', '.join(FAMILY_PARAMS[fam])})"
            )
        if axis in fixed:
            raise ParameterError(f"'{axis}' is the scanned parameter; do not fix it")
        if count < 1:
            raise ParameterError("scan needs count >= 1")
        plane = Plane(plane)

        # Cell values, row-major in (Im, Re)
        res = np.linspace(re_range[0], re_range[1], count)
        ims = np.linspace(im_range[0], im_range[1], count)
        values = [complex(r, i) for i in ims for r in res]
        # Kernel column: x = y inside the interval
        x0 = at_x
        if x0 is None:
            half = fam in (Family.BESSEL, Family.WHITTAKER, Family.ISOTONIC)
            x0 = 1.0 if half else 0.0

        cells: dict[int, ScanCell] = {}
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("{task.percentage:>3.0f}%"),
            console=self.console,
        ) as progress:
            task = progress.add_task(f"Scan {fam.value}.{axis} ({plane.value})", total=len(values))
            with ThreadPoolExecutor(max_workers=settings.SOLVOPS_THREADS) as executor:
                future_to_index = {
                    executor.submit(
                        self._cell, i, fam, axis, dict(fixed), v, plane, complex(at_z), x0
                    ): i
                    for i, v in enumerate(values)
                }
                for future in as_completed(future_to_index):
                    cells[future_to_index[future]] = future.result()
                    progress.advance(task)

        admissible = sum(c.admissible for c in cells.values())
        logger.info(f"Scanned {len(cells)} cells, {admissible} admissible")
        return [cells[i] for i in sorted(cells)]

    @staticmethod
    def _cell(
        index: int,
        family: Family,
        axis: str,
        fixed: dict[str, complex],
        value: complex,
        plane: Plane,
        at_z: complex,
        at_x: float,
    ) -> ScanCell:
        param = cmath.sqrt(value) if plane is Plane.SQUARE else value
        try:
            spec = OperatorSpec.from_params(family.value, {**fixed, axis: param})
        except ParameterError as e:
            return ScanCell(index=index, re=value.real, im=value.imag, admissible=False, note=str(e))

        descriptor = spectrum(spec, max_count=settings.MAX_EIGENVALUES)
        log_abs: Optional[float] = None
        note = ""
        if spec.interval is Interval.HALF_LINE and not at_x > 0:
            note = f"x={at_x} outside (0, inf)"
        else:
            try:
                k = resolvent_kernel(spec, at_z, at_x, at_x).value
                log_abs = math.log(abs(k)) if k != 0 else None
            except SolvopsError as e:
                note = str(e)
        return ScanCell(
            index=index,
            re=value.real,
            im=value.imag,
            admissible=True,
            point_count=len(descriptor),
            truncated=descriptor.truncated,
            log_abs_kernel=log_abs,
            note=note,
        )
