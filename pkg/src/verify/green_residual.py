# Path: src/verify/green_residual.py
"""Oracle checks of the closed-form resolvent kernels.

``green_residual`` solves (L_h - z) u = f on a grid and compares u with the
closed form applied to the same f,

    u(x) = [psi_b(x) int_a^x psi_a f + psi_a(x) int_x^b psi_b f] / W

for three bump functions on disjoint sub-windows. The remaining checks
(refinement order, window doubling, pole and residue scans, the
Exponential -> negexponential boundary limit) build on it.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.integrate import cumulative_simpson
from scipy.optimize import newton

from src.core.errors import NonConvergenceError, ParameterError
from src.operators.kernels import (
    KernelFactors,
    exponential_kernel,
    kernel_factors,
    kernel_wronskian,
    resolvent_kernel,
)
from src.operators.operator_spec import (
    GAMMA_INF,
    Family,
    Interval,
    OperatorSpec,
    is_gamma_inf,
)
from src.operators.spectrum import eigenfunction, neg_exponential_alpha, spectrum
from src.verify.fd_solver import oracle_solve
from src.verify.grid import Grid
from src.verify.quadrature import j_norm_squared, quadrature
from src.verify.wronskian import factor_wronskian_scan

__all__ = [
    "GreenResidualReport",
    "RefinementReport",
    "WindowDoubling",
    "PoleMatch",
    "ResidueCheck",
    "BoundaryLimitReport",
    "bump",
    "bump_supports",
    "default_window",
    "kernel_apply",
    "green_residual",
    "refinement_order",
    "window_doubling",
    "pole_scan",
    "residue_scan",
    "boundary_limit",
]

logger = logging.getLogger(__name__)

# decay lengths kept between the test functions and the window edges
_DECAY_LENGTHS = 25.0
_HALF_LINE_START = 1e-4
_WRONSKIAN_SAMPLES = 24


@dataclass(frozen=True)
class GreenResidualReport:
    spec: OperatorSpec
    z: complex
    grid: Grid
    rel_l2_error: float
    jump_error: float
    wronskian_spread: float
    z_used: complex = 0j
    condition: float = 0.0
    nudged: bool = False


# --- test functions and windows ---


def bump(x: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """exp(-1/(1-s^2)) on (lo, hi), s the affine image in (-1, 1); 0 outside."""
    x = np.asarray(x, dtype=float)
    s = (2 * x - lo - hi) / (hi - lo)
    inside = np.abs(s) < 1
    out = np.zeros_like(x)
    out[inside] = np.exp(-1.0 / (1.0 - s[inside] ** 2))
    return out


def bump_supports(a: float, b: float, count: int = 3) -> tuple[tuple[float, float], ...]:
    """``count`` disjoint supports tiling the middle half of [a, b]."""
    lo, hi = a + 0.25 * (b - a), b - 0.25 * (b - a)
    width = (hi - lo) / count
    return tuple(
        (lo + (j + 0.05) * width, lo + (j + 0.95) * width) for j in range(count)
    )


def default_window(spec: OperatorSpec, z: complex) -> tuple[float, float]:
    """A window whose edges sit many decay lengths from its middle half."""
    z = complex(z)
    f = spec.family
    decay = cmath.sqrt(-z).real
    if f in (Family.ISOTONIC, Family.HARMONIC) and spec.k.real > 0:
        b = math.sqrt(4 * _DECAY_LENGTHS / spec.k.real)
        return (_HALF_LINE_START, b) if f is Family.ISOTONIC else (-b, b)
    if f in (Family.ISOTONIC, Family.HARMONIC) and spec.k != 0:
        # outgoing edges; the window only has to resolve the oscillation
        return (_HALF_LINE_START, 4.0) if f is Family.ISOTONIC else (-4.0, 4.0)
    if not decay > 0:
        raise ParameterError(f"{spec.label}: z={z} has no decaying solutions")
    length = _DECAY_LENGTHS / decay
    if spec.interval is Interval.HALF_LINE:
        return _HALF_LINE_START, 1.0 + length
    if f in (Family.EXPONENTIAL, Family.MORSE):
        if spec.k == 0:
            return -length, length
        right = math.log(4 * _DECAY_LENGTHS / abs(spec.k)) + 1.0
        return right - 1.0 - 2 * length, right
    if f is Family.NEG_EXPONENTIAL:
        right = math.log(1.5 / spec.ell) + 1.0
        return right - 1.0 - 2 * length, right
    return -length, length


# --- closed-form application ---


def _factor_values(factors: KernelFactors, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    left = np.array([factors.left(x)[0].value for x in xs], dtype=complex)
    right = np.array([factors.right(x)[0].value for x in xs], dtype=complex)
    return left, right


def _cumulative(values: np.ndarray, xs: np.ndarray) -> np.ndarray:
    re = cumulative_simpson(values.real, x=xs, initial=0.0)
    im = cumulative_simpson(values.imag, x=xs, initial=0.0)
    return re + 1j * im


def kernel_apply(factors: KernelFactors, xs: np.ndarray, f: np.ndarray) -> np.ndarray:
    """int R(z; x, y) f(y) dy at every node of ``xs``, f given on ``xs``.

    The two one-sided integrals run from opposite ends, so each is exactly
    zero on the side of the support where it multiplies the growing factor.
    """
    xs = np.asarray(xs, dtype=float)
    f = np.asarray(f, dtype=complex)
    psi_a, psi_b = _factor_values(factors, xs)
    from_left = _cumulative(psi_a * f, xs)
    from_right = _cumulative((psi_b * f)[::-1], -xs[::-1])[::-1]
    return (psi_b * from_left + psi_a * from_right) / factors.wronskian


def _weighted_l2(values: np.ndarray, grid: Grid) -> float:
    x = grid.nodes
    weights = 0.5 * (x[2:] - x[:-2])
    return math.sqrt(float(np.sum(weights * np.abs(values) ** 2)))


# --- green_residual ---


def green_residual(
    spec: OperatorSpec,
    z: complex,
    grid: Grid,
    supports: Optional[Sequence[tuple[float, float]]] = None,
) -> GreenResidualReport:
    """Oracle solve vs closed-form kernel for bump data on ``grid``.

    rel_l2_error is the worst of the three bumps; jump_error is
    max |[d_x R]_{x=y} + 1| at the bump centres; wronskian_spread is the
    positional spread of W(psi_b, psi_a) relative to |W| over the window.
    """
    z = complex(z)
    grid.check_inside(spec)
    supports = tuple(supports) if supports is not None else bump_supports(grid.a, grid.b)
    for lo, hi in supports:
        if not grid.a < lo < hi < grid.b:
            raise ParameterError(f"support [{lo}, {hi}] is not inside the grid window")

    xs = grid.nodes
    errors: list[float] = []
    z_used, condition, nudged = z, 0.0, False
    factors: Optional[KernelFactors] = None
    for lo, hi in supports:
        f_nodes = bump(xs, lo, hi)
        solve = oracle_solve(spec, z, grid, f_nodes[1:-1])
        if factors is None or solve.z_used != factors.z:
            factors = kernel_factors(spec, solve.z_used)
        closed = kernel_apply(factors, xs, f_nodes)[1:-1]
        rel = _weighted_l2(solve.u - closed, grid) / _weighted_l2(closed, grid)
        errors.append(rel)
        z_used, nudged = solve.z_used, nudged or solve.nudged
        condition = max(condition, solve.condition)
    assert factors is not None

    jump_error = 0.0
    for lo, hi in supports:
        y = 0.5 * (lo + hi)
        jump = factors.kernel_dx(y, y, 1).value - factors.kernel_dx(y, y, -1).value
        jump_error = max(jump_error, abs(jump + 1))

    points = np.linspace(supports[0][0], supports[-1][1], _WRONSKIAN_SAMPLES)
    mean, spread = factor_wronskian_scan(factors, points)

    report = GreenResidualReport(
        spec,
        z,
        grid,
        float(max(errors)),
        float(jump_error),
        float(spread / abs(mean)),
        z_used,
        condition,
        nudged,
    )
    logger.debug(
        f"{spec.label} z={z}: rel_l2 {report.rel_l2_error:.3e}, "
        f"jump {report.jump_error:.1e}, W spread {report.wronskian_spread:.1e}"
    )
    return report


# --- refinement and window doubling ---


@dataclass(frozen=True)
class RefinementReport:
    spacings: tuple[float, ...]
    errors: tuple[float, ...]

    @property
    def orders(self) -> tuple[float, ...]:
        """log2 of successive error ratios (h halves at every step)."""
        return tuple(
            math.log2(e0 / e1) for e0, e1 in zip(self.errors, self.errors[1:])
        )

    @property
    def order(self) -> float:
        return float(np.mean(self.orders))


def refinement_order(
    spec: OperatorSpec, z: complex, grid: Grid, levels: int = 3
) -> RefinementReport:
    """rel_l2_error on grid, grid/2, grid/4, ... with fixed bump supports."""
    if levels < 2:
        raise ParameterError("refinement_order needs at least two levels")
    supports = bump_supports(grid.a, grid.b)
    spacings, errors = [], []
    for _ in range(levels):
        spacings.append(grid.h)
        errors.append(green_residual(spec, z, grid, supports).rel_l2_error)
        grid = grid.refined()
    return RefinementReport(tuple(spacings), tuple(errors))


@dataclass(frozen=True)
class WindowDoubling:
    narrow: GreenResidualReport
    wide: GreenResidualReport

    @property
    def change(self) -> float:
        """Relative change of rel_l2_error between the two windows."""
        return abs(self.wide.rel_l2_error - self.narrow.rel_l2_error) / self.narrow.rel_l2_error


def window_doubling(spec: OperatorSpec, z: complex, grid: Grid) -> WindowDoubling:
    """Same spacing and test functions on a window of twice the length.

    Half-line windows grow to the right only.
    """
    supports = bump_supports(grid.a, grid.b)
    length = grid.b - grid.a
    if spec.interval is Interval.HALF_LINE:
        wide = grid.widened(grid.a, grid.b + length)
    else:
        wide = grid.widened(grid.a - 0.5 * length, grid.b + 0.5 * length)
    return WindowDoubling(
        green_residual(spec, z, grid, supports),
        green_residual(spec, z, wide, supports),
    )


# --- poles and residues ---


@dataclass(frozen=True)
class PoleMatch:
    n: int
    expected: complex
    found: complex

    @property
    def mismatch(self) -> float:
        return abs(self.found - self.expected)


def pole_scan(spec: OperatorSpec, count: int = 5, tol: float = 1e-13) -> list[PoleMatch]:
    """Zeros of W(z) located by a secant search started off each listed
    eigenvalue, paired with that eigenvalue."""
    desc = spectrum(spec, max_count=count)
    out = []
    for n, z_n in zip(desc.indices, desc.eigenvalues):
        step = 1e-3 * max(1e-2, abs(z_n))
        try:
            found = newton(
                lambda z: kernel_wronskian(spec, z),
                z_n + step,
                x1=z_n - step * (1 - 0.5j),
                tol=tol * max(1.0, abs(z_n)),
                maxiter=100,
            )
        except RuntimeError as exc:
            raise NonConvergenceError(
                f"{spec.label}: no Wronskian zero near z={z_n}"
            ) from exc
        out.append(PoleMatch(n, z_n, complex(found)))
        logger.debug(f"{spec.label}: eigenvalue {z_n} vs W zero {complex(found)}")
    return out


@dataclass(frozen=True)
class ResidueCheck:
    n: int
    eigenvalue: complex
    residue: complex
    expected: complex

    @property
    def mismatch(self) -> float:
        return abs(self.residue - self.expected) / abs(self.expected)


def _bilinear_norm(spec: OperatorSpec, n: int, z_n: complex) -> complex:
    if spec.family is Family.NEG_EXPONENTIAL:
        value, _ = j_norm_squared(neg_exponential_alpha(spec.gamma) + n, spec.ell)
        return value
    phi = eigenfunction(spec, n)
    a, b = default_window(spec, z_n)
    lo = 0.0 if spec.interval is Interval.HALF_LINE else a
    value, _ = quadrature(lambda x: phi(x) ** 2, lo, b, tol=1e-11)
    return value


def residue_scan(
    spec: OperatorSpec,
    n: int,
    x: float,
    y: float,
    radius: float = 1e-3,
    points: int = 64,
) -> ResidueCheck:
    """(1/2 pi i) of the kernel integrated around the n-th eigenvalue.

    Near an isolated eigenvalue R(z) ~ P/(z_n - z), so the residue is
    -phi_n(x) phi_n(y) / int phi_n^2 (bilinear).
    """
    desc = spectrum(spec, max_count=n + 2)
    if n not in desc.indices:
        raise ParameterError(f"{spec.label}: n={n} is not an eigenvalue index")
    z_n = desc.eigenvalues[desc.indices.index(n)]
    rho = radius * max(1.0, abs(z_n))
    theta = 2 * math.pi * np.arange(points) / points
    shifts = rho * np.exp(1j * theta)
    values = np.array(
        [resolvent_kernel(spec, z_n + s, x, y).value for s in shifts], dtype=complex
    )
    residue = complex(np.mean(values * shifts))

    phi = eigenfunction(spec, n)
    expected = -phi(x) * phi(y) / _bilinear_norm(spec, n, z_n)
    return ResidueCheck(n, z_n, residue, complex(expected))


# --- boundary limit of the Exponential family ---


@dataclass(frozen=True)
class BoundaryLimitReport:
    sign: int
    limit: complex
    epsilons: tuple[float, ...]
    differences: tuple[float, ...] = field(repr=False)

    @property
    def orders(self) -> tuple[float, ...]:
        """log10 of successive difference ratios (eps shrinks tenfold)."""
        pairs = zip(self.epsilons, self.epsilons[1:])
        diffs = zip(self.differences, self.differences[1:])
        return tuple(
            math.log(d0 / d1) / math.log(e0 / e1)
            for (e0, e1), (d0, d1) in zip(pairs, diffs)
        )


def boundary_limit(
    m: complex,
    ell: float,
    x: float,
    y: float,
    sign: int,
    epsilons: Sequence[float] = (1e-2, 1e-3, 1e-4),
) -> BoundaryLimitReport:
    """Exponential(eps + sign i ell) kernels at z = -m^2 against their limit.

    sign = +1 tends to negexponential(ell, gamma=inf), sign = -1 to
    negexponential(ell, gamma=0).
    """
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    m = complex(m)
    if not m.real > 0:
        raise ParameterError(f"boundary limit needs Re m > 0, got m={m}")
    gamma = GAMMA_INF if sign > 0 else 0j
    target = OperatorSpec.neg_exponential(ell, gamma)
    limit = resolvent_kernel(target, -m * m, x, y).value
    diffs = []
    for eps in epsilons:
        value = exponential_kernel(complex(eps, sign * ell), m, x, y).value
        diffs.append(abs(value - limit))
        logger.debug(f"eps={eps:g}: |R_eps - R_lim| = {diffs[-1]:.3e}")
    label = "inf" if is_gamma_inf(gamma) else "0"
    logger.debug(f"boundary limit toward gamma={label}: {limit}")
    return BoundaryLimitReport(sign, limit, tuple(epsilons), tuple(diffs))
