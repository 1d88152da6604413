# Path: src/verify/quadrature.py
"""Adaptive Gauss-Kronrod (7/15) quadrature for complex integrands, plus the
norm integrals used by the eigenfunction checks.

Infinite ends are mapped onto [0, 1):

    exponential   x = a - log(1 - t)      for exponentially decaying tails
    rational      x = a + t / (1 - t)     for algebraic tails
"""
import heapq
import logging
import math
from typing import Callable, Optional, Sequence

import numpy as np

from src.core.config import settings
from src.core.errors import NonConvergenceError, ParameterError
from src.special.bessel import bessel_j2d, hankel2d

__all__ = [
    "quadrature",
    "gauss_kronrod",
    "j_norm_squared",
    "eigenfunction_norm",
    "TRANSFORMS",
]

logger = logging.getLogger(__name__)

Integrand = Callable[[float], complex]

TRANSFORMS = ("exponential", "rational")

# Kronrod abscissae on [0, 1]; odd positions are the Gauss-7 nodes
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15-point node set on [-1, 1] and matching weight vectors
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_K15 = np.concatenate([_WGK[:-1], _WGK[::-1]])
_G7 = np.zeros(15)
for _i, _w in enumerate(_WG[:-1]):
    _G7[2 * _i + 1] = _w
    _G7[13 - 2 * _i] = _w
_G7[7] = _WG[-1]


def gauss_kronrod(f: Integrand, a: float, b: float) -> tuple[complex, float]:
    """One G7/K15 panel on [a, b]: (K15 value, |K15 - G7|)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    values = np.array([complex(f(mid + half * s)) for s in _NODES])
    if not np.all(np.isfinite(values)):
        raise NonConvergenceError(
            f"integrand is not finite on [{a:.6g}, {b:.6g}]"
        )
    k15 = complex(half * np.dot(_K15, values))
    g7 = complex(half * np.dot(_G7, values))
    return k15, abs(k15 - g7)


def _mapped(f: Integrand, a: float, direction: int, transform: str) -> Integrand:
    # [0, 1) -> [a, +inf) for direction=1, (-inf, a] for direction=-1
    if transform == "exponential":
        def g(t: float) -> complex:
            return f(a - direction * math.log1p(-t)) / (1.0 - t)
    else:
        def g(t: float) -> complex:
            u = 1.0 - t
            return f(a + direction * t / u) / (u * u)
    return g


def _adaptive(
    f: Integrand,
    a: float,
    b: float,
    tol: float,
    max_intervals: int,
    points: Sequence[float] = (),
) -> tuple[complex, float, int]:
    cuts = [a] + sorted(p for p in points if a < p < b) + [b]
    heap: list[tuple[float, int, float, float, complex]] = []
    counter = 0
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        v, e = gauss_kronrod(f, lo, hi)
        heapq.heappush(heap, (-e, counter, lo, hi, v))
        counter += 1

    def totals() -> tuple[complex, float]:
        re = math.fsum(item[4].real for item in heap)
        im = math.fsum(item[4].imag for item in heap)
        return complex(re, im), math.fsum(-item[0] for item in heap)

    value, err = totals()
    while err > tol * max(1.0, abs(value)):
        if len(heap) >= max_intervals:
            raise NonConvergenceError(
                f"quadrature on [{a:.6g}, {b:.6g}] stopped at {len(heap)} intervals "
                f"(err {err:.2e})",
                partial=value,
            )
        neg_e, _, lo, hi, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # panel collapsed to adjacent floats; keep it and stop refining
            heapq.heappush(heap, (neg_e, counter, lo, hi, _))
            logger.debug(f"quadrature: panel at {lo:.6g} cannot be split further")
            break
        for x0, x1 in ((lo, mid), (mid, hi)):
            v, e = gauss_kronrod(f, x0, x1)
            heapq.heappush(heap, (-e, counter, x0, x1, v))
            counter += 1
        value, err = totals()
    return value, err, len(heap)


def quadrature(
    f: Integrand,
    a: float,
    b: float,
    tol: Optional[float] = None,
    max_intervals: Optional[int] = None,
    transform: str = "exponential",
    points: Sequence[float] = (),
) -> tuple[complex, float]:
    """int_a^b f(x) dx for complex-valued f; ends may be infinite.

    Returns (value, err) with err the summed |K15 - G7| over the final panels.
    ``points`` are interior breakpoints (kinks, jumps) on finite intervals.
    """
    tol = settings.QUAD_TOL if tol is None else tol
    max_intervals = settings.QUAD_MAX_INTERVALS if max_intervals is None else max_intervals
    if not tol > 0:
        raise ParameterError(f"quadrature tol must be > 0, got {tol}")
    if transform not in TRANSFORMS:
        raise ParameterError(f"transform must be one of {TRANSFORMS}, got {transform!r}")
    if math.isnan(a) or math.isnan(b):
        raise ParameterError("quadrature limits must not be NaN")
    if a == b:
        return 0j, 0.0
    if a > b:
        value, err = quadrature(f, b, a, tol, max_intervals, transform, points)
        return -value, err

    if math.isinf(a) and math.isinf(b):
        right, e1 = quadrature(f, 0.0, math.inf, tol, max_intervals, transform)
        left, e0 = quadrature(f, -math.inf, 0.0, tol, max_intervals, transform)
        return left + right, e0 + e1
    if math.isinf(b):
        value, err, n = _adaptive(_mapped(f, a, 1, transform), 0.0, 1.0, tol, max_intervals)
    elif math.isinf(a):
        value, err, n = _adaptive(_mapped(f, b, -1, transform), 0.0, 1.0, tol, max_intervals)
    else:
        value, err, n = _adaptive(f, a, b, tol, max_intervals, points)
    logger.debug(f"quadrature [{a:.4g}, {b:.4g}]: {n} panels, err {err:.2e}")
    return value, err


# --- norm integrals ---


def j_norm_squared(
    m: complex, ell: float = 1.0, split: float = 40.0, tol: float = 1e-12
) -> tuple[complex, float]:
    """int_R J_m(ell e^x)^2 dx (bilinear), expected 1/(2m) for Re m > 0.

    In r = ell e^x this is int_0^inf J_m(r)^2 dr / r. The part r > split uses
    J = (H^+ + H^-)/2: the H^+^2 and H^-^2 pieces are integrated along
    r = split +- i s, the non-oscillating H^+ H^- piece on the real ray.
    """
    m = complex(m)
    if not m.real > 0:
        raise ParameterError(f"J-norm needs Re m > 0, got m={m}")
    if not ell > 0:
        raise ParameterError(f"J-norm needs ell > 0, got ell={ell}")

    head, e_head = quadrature(
        lambda x: bessel_j2d(m, ell * math.exp(x)).value ** 2,
        -math.inf,
        math.log(split / ell),
        tol,
    )

    def rotated(sign: int) -> Callable[[float], complex]:
        def g(s: float) -> complex:
            r = complex(split, sign * s)
            return sign * 1j * hankel2d(sign, m, r).value ** 2 / r
        return g

    plus, e_plus = quadrature(rotated(1), 0.0, math.inf, tol)
    minus, e_minus = quadrature(rotated(-1), 0.0, math.inf, tol)
    cross, e_cross = quadrature(
        lambda r: hankel2d(1, m, r).value * hankel2d(-1, m, r).value / r,
        split,
        math.inf,
        tol,
        transform="rational",
    )
    value = head + 0.25 * (plus + minus + 2 * cross)
    err = e_head + 0.25 * (e_plus + e_minus + 2 * e_cross)
    return value, err


def eigenfunction_norm(
    eigfun: Integrand, window: tuple[float, float], tol: Optional[float] = None
) -> tuple[float, float]:
    """int |phi|^2 over the window (ends may be infinite if phi is safe there)."""
    value, err = quadrature(lambda x: abs(eigfun(x)) ** 2, window[0], window[1], tol)
    return value.real, err
