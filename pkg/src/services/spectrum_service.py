# Path: src/services/spectrum_service.py
import logging
from typing import Optional

from rich.console import Console

from src.core.config import settings
from src.models import SpectrumRow
from src.operators import OperatorSpec, SpectrumDescriptor, spectrum

logger = logging.getLogger(__name__)


class SpectrumService:
    def __init__(self) -> None:
        self.console = Console(stderr=True)

    def eigenvalues(
        self, spec: OperatorSpec, count: Optional[int] = None
    ) -> tuple[list[SpectrumRow], SpectrumDescriptor]:
        """The first ``count`` eigenvalues (capped by MAX_EIGENVALUES)."""
        cap = settings.MAX_EIGENVALUES if count is None else min(count, settings.MAX_EIGENVALUES)
        descriptor = spectrum(spec, max_count=cap)
        if descriptor.truncated:
            logger.warning(
                f"{spec.label}: point spectrum truncated at {len(descriptor)} eigenvalues"
            )
        rows = [
            SpectrumRow(n=n, re=ev.real, im=ev.imag)
            for n, ev in zip(descriptor.indices, descriptor.eigenvalues)
        ]
        return rows, descriptor
