# Path: src/verify/wronskian.py
"""Wronskian checks: constancy along the interval and boundary-condition
limits at index-2 endpoints.

W(f, g) = f g' - f' g. A b.c. at an endpoint e is set by a function Phi_e;
a solution Xi satisfies it when W(Phi_e, Xi)(x) -> 0 as x -> e.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

import numpy as np

from src.core.errors import NonConvergenceError, ParameterError
from src.operators.kernels import KernelFactors
from src.operators.operator_spec import (
    Family,
    Interval,
    OperatorSpec,
    endpoint_indices,
    is_gamma_inf,
)
from src.special.bessel import hankel2d, hankel2d_deriv

__all__ = [
    "BoundaryLimit",
    "wronskian_scan",
    "factor_wronskian_scan",
    "boundary_function",
    "bc_wronskian_limit",
]

logger = logging.getLogger(__name__)

Fn = Callable[[float], complex]
Solution = Callable[[float], tuple[complex, complex]]
Endpoint = Literal["left", "right"]


def wronskian_scan(
    f: Fn, fp: Fn, g: Fn, gp: Fn, points: Iterable[float]
) -> tuple[complex, float]:
    """Mean of W(f, g) over the points and the max deviation from it."""
    values = np.array([f(x) * gp(x) - fp(x) * g(x) for x in points], dtype=complex)
    if values.size == 0:
        raise ParameterError("wronskian_scan needs at least one point")
    mean = complex(values.mean())
    return mean, float(np.max(np.abs(values - mean)))


def factor_wronskian_scan(
    factors: KernelFactors, points: Iterable[float]
) -> tuple[complex, float]:
    """W(psi_b, psi_a) of a kernel's two factors along the points."""
    pts = list(points)
    left = {x: factors.left(x) for x in pts}
    right = {x: factors.right(x) for x in pts}
    return wronskian_scan(
        lambda x: right[x][0].value,
        lambda x: right[x][1].value,
        lambda x: left[x][0].value,
        lambda x: left[x][1].value,
        pts,
    )


# --- boundary conditions ---


@dataclass(frozen=True)
class BoundaryLimit:
    value: complex
    applicable: bool = True
    samples: tuple[complex, ...] = field(default=(), repr=False)


def boundary_function(spec: OperatorSpec, endpoint: Endpoint) -> Solution:
    """Phi_e with its derivative: x^{1/2+m} at 0 on the half-line, and the
    H^+_{1/2} - i gamma H^-_{1/2} combination of ell e^x at +inf for
    negexponential (H^-_{1/2} alone for gamma = inf)."""
    if endpoint == "left" and spec.interval is Interval.HALF_LINE:
        a = 0.5 + spec.m

        def power(x: float) -> tuple[complex, complex]:
            return complex(x**a), complex(a * x ** (a - 1))

        return power
    if endpoint == "right" and spec.family is Family.NEG_EXPONENTIAL:
        ell, gamma = spec.ell, spec.gamma
        if is_gamma_inf(gamma):
            coefs = ((-1, 1 + 0j),)
        else:
            coefs = ((1, 1 + 0j), (-1, -1j * gamma))

        def hankel_mix(x: float) -> tuple[complex, complex]:
            r = ell * math.exp(x)
            value = sum(c * hankel2d(s, 0.5, r).value for s, c in coefs)
            deriv = sum(c * r * hankel2d_deriv(s, 0.5, r).value for s, c in coefs)
            return value, deriv

        return hankel_mix
    raise ParameterError(f"{spec.label}: no boundary function at the {endpoint} end")


def _aitken(seq: list[complex]) -> list[complex]:
    out = []
    for a, b, c in zip(seq, seq[1:], seq[2:]):
        d2 = c - 2 * b + a
        if abs(d2) <= 1e-14 * max(abs(a), abs(b), abs(c), 1e-300):
            out.append(c)
        else:
            out.append(c - (c - b) ** 2 / d2)
    return out


def bc_wronskian_limit(
    spec: OperatorSpec,
    xi: Solution,
    endpoint: Endpoint,
    start: float | None = None,
    count: int = 14,
    tol: float = 1e-6,
) -> BoundaryLimit:
    """lim W(Phi_e, Xi)(x) as x -> e, by Aitken extrapolation along x_j.

    x_j = start 2^{-j} toward 0, x_j = start + 3j/2 toward +inf. Endpoints
    of index 0 need no b.c.: the result is 0 with ``applicable=False``.
    """
    index = endpoint_indices(spec)
    if (index.at_left if endpoint == "left" else index.at_right) != 2:
        return BoundaryLimit(0j, applicable=False)
    phi = boundary_function(spec, endpoint)
    if endpoint == "left":
        x0 = 0.1 if start is None else start
        xs = [x0 * 0.5**j for j in range(count)]
    else:
        x0 = 1.0 if start is None else start
        xs = [x0 + 1.5 * j for j in range(count)]

    samples = []
    for x in xs:
        p, dp = phi(x)
        v, dv = xi(x)
        samples.append(p * dv - dp * v)
    accel = _aitken(samples)
    tail = accel[-3:]
    spread = max(abs(u - tail[-1]) for u in tail)
    scale = max(1.0, max(abs(w) for w in samples))
    if spread > tol * scale:
        raise NonConvergenceError(
            f"{spec.label}: W(Phi, Xi) at the {endpoint} end does not settle "
            f"(spread {spread:.2e})",
            partial=tail[-1],
        )
    logger.debug(f"{spec.label}: b.c. limit at {endpoint} = {tail[-1]:.3e}")
    return BoundaryLimit(tail[-1], True, tuple(samples))
