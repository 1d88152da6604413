# Path: src/verify/grid.py
"""Truncation windows for the finite-difference oracle.

A grid stores its nodes *including* the two window edges; the unknowns of
the discrete problem live on ``grid.interior``. Geometric grids use the map

    x(s) = x_c exp(h s / x_c)   (s <= 0),      x(s) = x_c + h s   (s >= 0)

on integer s, which is C^1 at x_c and nested under h -> h/2.
"""
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from src.core.errors import ParameterError
from src.operators.operator_spec import Interval, OperatorSpec

__all__ = ["Clustering", "Grid", "MIN_POINTS", "FIRST_POINT_MIN"]

MIN_POINTS = 16
# smallest admissible left edge of a geometric window
FIRST_POINT_MIN = 1e-6
# where the geometric part hands over to uniform spacing
CLUSTER_SWITCH = 0.1


class Clustering(str, Enum):
    UNIFORM = "Uniform"
    GEOMETRIC_TOWARD_LEFT = "GeometricTowardLeft"


@dataclass(frozen=True)
class Grid:
    a: float
    b: float
    h: float
    clustering: Clustering
    nodes: np.ndarray = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.nodes) - 2

    @property
    def interior(self) -> np.ndarray:
        return self.nodes[1:-1]

    @property
    def spacings(self) -> np.ndarray:
        return np.diff(self.nodes)

    # --- constructors ---

    @classmethod
    def uniform(cls, a: float, b: float, n: int) -> "Grid":
        """n interior points, spacing (b - a)/(n + 1)."""
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ParameterError(f"grid window must be finite with a < b, got [{a}, {b}]")
        if n < MIN_POINTS:
            raise ParameterError(f"grid needs n >= {MIN_POINTS}, got {n}")
        nodes = np.linspace(a, b, n + 2)
        return cls(a, b, (b - a) / (n + 1), Clustering.UNIFORM, nodes)

    @classmethod
    def geometric(
        cls, a: float, b: float, h: float, switch: float = CLUSTER_SWITCH
    ) -> "Grid":
        """Spacing h above ``switch``, shrinking like h x / switch toward a."""
        if not a >= FIRST_POINT_MIN:
            raise ParameterError(
                f"geometric grid needs a >= {FIRST_POINT_MIN:g}, got a={a}"
            )
        if not (a < switch < b):
            raise ParameterError(f"need a < {switch} < b for a geometric grid")
        if not h > 0:
            raise ParameterError(f"grid spacing must be > 0, got h={h}")
        # the slack keeps refinements of an existing grid on its own edges
        s_lo = math.ceil(switch / h * math.log(a / switch) - 1e-9)
        s_hi = math.floor((b - switch) / h + 1e-9)
        low = switch * np.exp(h * np.arange(s_lo, 0) / switch)
        high = switch + h * np.arange(0, s_hi + 1)
        nodes = np.concatenate([low, high])
        if len(nodes) - 2 < MIN_POINTS:
            raise ParameterError(f"grid needs n >= {MIN_POINTS}; decrease h")
        return cls(
            float(nodes[0]),
            float(nodes[-1]),
            h,
            Clustering.GEOMETRIC_TOWARD_LEFT,
            nodes,
        )

    @classmethod
    def with_spacing(
        cls, a: float, b: float, h: float, clustering: Clustering = Clustering.UNIFORM
    ) -> "Grid":
        if clustering is Clustering.GEOMETRIC_TOWARD_LEFT:
            return cls.geometric(a, b, h)
        if not h > 0:
            raise ParameterError(f"grid spacing must be > 0, got h={h}")
        return cls.uniform(a, b, max(MIN_POINTS, round((b - a) / h) - 1))

    @classmethod
    def for_spec(cls, spec: OperatorSpec, a: float, b: float, h: float) -> "Grid":
        """Geometric toward 0 on the half-line families, uniform elsewhere."""
        if spec.interval is Interval.HALF_LINE:
            return cls.geometric(a, b, h)
        return cls.with_spacing(a, b, h)

    # --- derived grids ---

    def refined(self, factor: int = 2) -> "Grid":
        if self.clustering is Clustering.GEOMETRIC_TOWARD_LEFT:
            return Grid.geometric(self.a, self.b, self.h / factor)
        return Grid.uniform(self.a, self.b, (self.n + 1) * factor - 1)

    def widened(self, left: float, right: float) -> "Grid":
        """Same spacing on [left, right]."""
        if self.clustering is Clustering.GEOMETRIC_TOWARD_LEFT:
            return Grid.geometric(left, right, self.h)
        return Grid.with_spacing(left, right, self.h)

    def check_inside(self, spec: OperatorSpec) -> None:
        if spec.interval is Interval.HALF_LINE:
            if not self.a > 0:
                raise ParameterError(f"{spec.label}: window must start at a > 0")
            if self.clustering is not Clustering.GEOMETRIC_TOWARD_LEFT:
                raise ParameterError(
                    f"{spec.label}: the singular endpoint 0 needs a geometric grid"
                )
