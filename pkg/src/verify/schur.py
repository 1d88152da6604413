# Path: src/verify/schur.py
"""Schur-test bounds and Hilbert-Schmidt norms of resolvent kernels on a
finite window.

For a block X x Y of the window,

    c1 = sup_x int_Y |K(x, y)| dy,   c2 = sup_y int_X |K(x, y)| dx,   ||K|| <= sqrt(c1 c2)

The window is cut at ``split`` into four blocks; the operator bound is the
sum of the four block bounds. Integrals use the trapezoid rule on a common
node set that contains the split, so the diagonal kink sits on nodes.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Protocol, Sequence, Union

import numpy as np
from scipy.integrate import trapezoid

from src.core.errors import ParameterError
from src.operators.kernels import KernelFactors
from src.special.bessel import (
    bessel_i2d,
    bessel_i2d_scaled,
    macdonald_k2d,
    macdonald_k2d_scaled,
)
from src.special.complexmath import Polar

__all__ = [
    "SeparableKernel",
    "BlockBound",
    "SchurBound",
    "SchurGrowth",
    "schur_bound",
    "schur_growth",
    "hilbert_schmidt_norm",
    "exponential_separable",
    "GROWTH_RATIO",
]

logger = logging.getLogger(__name__)

# consecutive bound ratio above which a window scan counts as divergent
GROWTH_RATIO = 2.0


class _MatrixKernel(Protocol):
    def matrix(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray: ...


PointKernel = Callable[[float, float], complex]
Kernel = Union[PointKernel, _MatrixKernel]


@dataclass(frozen=True)
class SeparableKernel:
    """K(x, y) = left(x<) right(x>) e^{exponent(x<) - exponent(x>)} / scale.

    ``exponent`` carries the growth that was divided out of the two factors,
    so that the product stays finite where each factor alone would not.
    """

    left: Callable[[float], complex]
    right: Callable[[float], complex]
    scale: complex = 1 + 0j
    exponent: Optional[Callable[[float], complex]] = None

    @classmethod
    def from_factors(cls, factors: KernelFactors) -> "SeparableKernel":
        return cls(
            lambda x: factors.left(x)[0].value,
            lambda x: factors.right(x)[0].value,
            factors.wronskian,
        )

    def __call__(self, x: float, y: float) -> complex:
        lo, hi = (x, y) if x <= y else (y, x)
        value = self.left(lo) * self.right(hi) / self.scale
        if self.exponent is not None:
            value *= cmath.exp(self.exponent(lo) - self.exponent(hi))
        return value

    def matrix(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        la = np.array([self.left(x) for x in xs], dtype=complex)
        ra = np.array([self.right(x) for x in xs], dtype=complex)
        lb = np.array([self.left(y) for y in ys], dtype=complex)
        rb = np.array([self.right(y) for y in ys], dtype=complex)
        below = xs[:, None] <= ys[None, :]
        out = np.where(below, np.outer(la, rb), np.outer(ra, lb)) / self.scale
        if self.exponent is not None:
            ex = np.array([self.exponent(x) for x in xs], dtype=complex)
            ey = np.array([self.exponent(y) for y in ys], dtype=complex)
            diff = ex[:, None] - ey[None, :]
            out *= np.exp(np.where(below, diff, -diff))
        return out


def exponential_separable(k: complex, m: complex) -> SeparableKernel:
    """I_m(k e^{x<}) K_m(k e^{x>}) for any k != 0, also Re k < 0 where it
    no longer bounds an operator. For Re k > 0 the factors are carried
    exponentially scaled."""
    k = complex(k)
    if k == 0:
        raise ParameterError("exponential_separable needs k != 0")
    kp = Polar.from_complex(k)
    if k.real > 0:
        return SeparableKernel(
            lambda x: bessel_i2d_scaled(m, kp.scale(math.exp(x))).value,
            lambda x: macdonald_k2d_scaled(m, kp.scale(math.exp(x))).value,
            exponent=lambda x: k * math.exp(x),
        )
    return SeparableKernel(
        lambda x: bessel_i2d(m, kp.scale(math.exp(x))).value,
        lambda x: macdonald_k2d(m, kp.scale(math.exp(x))).value,
    )


def _matrix(kernel: Kernel, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    if hasattr(kernel, "matrix"):
        return np.asarray(kernel.matrix(xs, ys), dtype=complex)
    return np.array([[kernel(x, y) for y in ys] for x in xs], dtype=complex)


@dataclass(frozen=True)
class BlockBound:
    rows: tuple[float, float]
    cols: tuple[float, float]
    c1: float
    c2: float

    @property
    def bound(self) -> float:
        return math.sqrt(self.c1 * self.c2)


@dataclass(frozen=True)
class SchurBound:
    c1: float
    c2: float
    bound: float
    blocks: tuple[BlockBound, ...] = field(default=(), repr=False)

    @property
    def finite(self) -> bool:
        return math.isfinite(self.bound)


def _nodes(a: float, b: float, split: Optional[float], n: int) -> np.ndarray:
    if split is None:
        return np.linspace(a, b, n)
    left = max(3, round(n * (split - a) / (b - a)))
    right = max(3, n - left + 1)
    return np.concatenate(
        [np.linspace(a, split, left), np.linspace(split, b, right)[1:]]
    )


def _block(mat: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> tuple[float, float]:
    absm = np.abs(mat)
    if not np.all(np.isfinite(absm)):
        return math.inf, math.inf
    rows = trapezoid(absm, ys, axis=1)
    cols = trapezoid(absm, xs, axis=0)
    return float(rows.max()), float(cols.max())


def schur_bound(
    kernel: Kernel,
    a: float,
    b: float,
    split: Optional[float] = None,
    n: int = 201,
) -> SchurBound:
    """Schur constants on [a, b]^2, blockwise when ``split`` is given."""
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise ParameterError(f"schur_bound needs a finite window a < b, got [{a}, {b}]")
    if split is not None and not a < split < b:
        raise ParameterError(f"split {split} must lie inside ({a}, {b})")
    if n < 8:
        raise ParameterError("schur_bound needs n >= 8 nodes")
    nodes = _nodes(a, b, split, n)
    full = _matrix(kernel, nodes, nodes)

    if split is None:
        c1, c2 = _block(full, nodes, nodes)
        block = BlockBound((a, b), (a, b), c1, c2)
        return SchurBound(c1, c2, block.bound, (block,))

    cut = int(np.searchsorted(nodes, split))
    pieces = ((slice(0, cut + 1), (a, split)), (slice(cut, len(nodes)), (split, b)))
    blocks = []
    for rs, rspan in pieces:
        for cs, cspan in pieces:
            c1, c2 = _block(full[rs, cs], nodes[rs], nodes[cs])
            blocks.append(BlockBound(rspan, cspan, c1, c2))
    return SchurBound(
        max(bl.c1 for bl in blocks),
        max(bl.c2 for bl in blocks),
        math.fsum(bl.bound for bl in blocks),
        tuple(blocks),
    )


@dataclass(frozen=True)
class SchurGrowth:
    windows: tuple[tuple[float, float], ...]
    bounds: tuple[float, ...]

    @property
    def growing(self) -> bool:
        """Monotone growth by at least GROWTH_RATIO per window step."""
        pairs = zip(self.bounds, self.bounds[1:])
        return all(not math.isfinite(hi) or hi > GROWTH_RATIO * lo for lo, hi in pairs)

    @property
    def saturated(self) -> bool:
        return all(
            math.isfinite(hi) and abs(hi - lo) <= 1e-3 * abs(hi)
            for lo, hi in zip(self.bounds[-2:], self.bounds[-1:])
        )


def schur_growth(
    kernel: Kernel,
    windows: Sequence[tuple[float, float]],
    split: Optional[float] = None,
    spacing: float = 0.05,
) -> SchurGrowth:
    """schur_bound over a sequence of growing windows at fixed node spacing."""
    bounds = []
    for a, b in windows:
        n = max(8, int(round((b - a) / spacing)) + 1)
        result = schur_bound(kernel, a, b, split, n)
        logger.debug(f"schur window [{a}, {b}]: bound {result.bound:.4e}")
        bounds.append(result.bound)
    return SchurGrowth(tuple(windows), tuple(bounds))


def hilbert_schmidt_norm(
    kernel: Kernel,
    rows: tuple[float, float],
    cols: tuple[float, float],
    n: int = 201,
) -> float:
    """(int int |K|^2)^{1/2} over rows x cols by the 2-d trapezoid rule."""
    xs = np.linspace(rows[0], rows[1], n)
    ys = np.linspace(cols[0], cols[1], n)
    absm2 = np.abs(_matrix(kernel, xs, ys)) ** 2
    return math.sqrt(float(trapezoid(trapezoid(absm2, ys, axis=1), xs)))
