# Path: src/services/eval_service.py
import logging
from typing import Mapping, Sequence

from rich.console import Console

from src.core.config import settings
from src.models import ValueRow
from src.special import SeriesPolicy, evaluate_named
from src.special.registry import lookup

logger = logging.getLogger(__name__)


def default_policy() -> SeriesPolicy:
    return SeriesPolicy(
        settings.SERIES_TOL, settings.SERIES_MAX_TERMS, settings.SERIES_CONSECUTIVE_SMALL
    )


class EvalService:
    """Tabulates one named special function at a list of arguments."""

    def __init__(self) -> None:
        self.console = Console(stderr=True)
        self.policy = default_policy()

    def evaluate(
        self,
        name: str,
        params: Mapping[str, complex],
        points: Sequence[complex],
        derivative: bool = False,
    ) -> list[ValueRow]:
        """One row per argument; a complex argument puts its imaginary part in y."""
        entry = lookup(name)
        logger.debug(f"eval {entry.name}{'_deriv' if derivative else ''} with {dict(params)}")

        rows = []
        for at in points:
            at = complex(at)
            sv = evaluate_named(name, params, at, derivative, self.policy)
            rows.append(
                ValueRow(
                    x=at.real,
                    y=at.imag if at.imag != 0 else None,
                    re=sv.value.real,
                    im=sv.value.imag,
                    err_est=sv.err_est,
                    path=sv.path.value,
                )
            )
        return rows
