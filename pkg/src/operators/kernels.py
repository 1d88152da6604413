# Path: src/operators/kernels.py
"""Closed-form resolvent kernels.

For every family the kernel of (L - z)^{-1} is

    R(z; x, y) = psi_a(x_<) psi_b(x_>) / W,    W = W(psi_b, psi_a) = psi_b psi_a' - psi_b' psi_a

with psi_a square-integrable (or b.c.-selected) at the left end and psi_b at
the right end, so that d/dx R jumps by -1 across x = y. The factors are
built once per (spec, z) in :class:`KernelFactors` and reused by the grid
oracle and the Wronskian checks.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from typing import Callable

from src.core.errors import ParameterError, SpectralPointError
from src.operators.operator_spec import Family, OperatorSpec, is_gamma_inf
from src.special.bessel import (
    bessel_i1d,
    bessel_i1d_deriv,
    bessel_i2d,
    bessel_i2d_deriv,
    bessel_j1d,
    bessel_j2d,
    bessel_j2d_deriv,
    hankel1d,
    hankel2d,
    hankel2d_deriv,
    macdonald_k1d,
    macdonald_k1d_deriv,
    macdonald_k2d,
    macdonald_k2d_deriv,
)
from src.special.complexmath import EPS, Polar, reciprocal_gamma
from src.special.hypergeom import EvalPath, SpecialValue, combine
from src.special.whittaker import (
    WhittakerParams,
    isotonic_i,
    isotonic_i_deriv,
    isotonic_k,
    isotonic_k_deriv,
    weber_k,
    weber_k_deriv,
    whit_i1d,
    whit_i1d_deriv,
    whit_i2d,
    whit_i2d_deriv,
    whit_k1d,
    whit_k1d_deriv,
    whit_k2d,
    whit_k2d_deriv,
)

__all__ = [
    "KernelEval",
    "KernelFactors",
    "kernel_factors",
    "kernel_wronskian",
    "resolvent_kernel",
    "resolvent_kernel_dx",
    "bessel_boundary_kernel",
    "exponential_kernel",
    "effective_k",
]

logger = logging.getLogger(__name__)

Pair = tuple[SpecialValue, SpecialValue]
Factor = Callable[[float], Pair]

# |W| below this (relative to the factor scale) is treated as a zero
_WRONSKIAN_ZERO = 1e-14


@dataclass(frozen=True)
class KernelEval:
    z: complex
    x: float
    y: float
    value: complex
    wronskian_used: complex
    err_est: float = 0.0
    path: EvalPath = EvalPath.SERIES_AT_0


@dataclass(frozen=True)
class KernelFactors:
    """psi_a, psi_b (with x-derivatives) and W(psi_b, psi_a) for one (spec, z)."""

    spec: OperatorSpec
    z: complex
    wronskian: complex
    left: Factor
    right: Factor
    scale: float = 1.0

    def kernel(self, x: float, y: float) -> SpecialValue:
        lo, hi = (x, y) if x <= y else (y, x)
        a = self.left(lo)[0]
        b = self.right(hi)[0]
        return _product(a, b, self.wronskian)

    def kernel_dx(self, x: float, y: float, side: int = 1) -> SpecialValue:
        """d/dx R(z; x, y); at x == y ``side`` picks the one-sided limit."""
        if x < y or (x == y and side < 0):
            return _product(self.left(x)[1], self.right(y)[0], self.wronskian)
        return _product(self.left(y)[0], self.right(x)[1], self.wronskian)


def _product(a: SpecialValue, b: SpecialValue, w: complex) -> SpecialValue:
    value = a.value * b.value / w
    err = abs(value) * (a.rel_err + b.rel_err + EPS)
    return SpecialValue(value, b.path, err, max(a.cancellation, b.cancellation))


def _exact(value: complex) -> SpecialValue:
    return SpecialValue(value, EvalPath.SERIES_AT_0, EPS * abs(value))


def _sqrt_off_ray(spec: OperatorSpec, z: complex) -> complex:
    """sqrt(-z) with Re > 0; z on [0, inf) is in the continuous spectrum."""
    if z.imag == 0 and z.real >= 0:
        raise SpectralPointError(
            f"{spec.label}: z={z} lies in the continuous spectrum [0, inf)", z=z
        )
    return cmath.sqrt(-z)


def effective_k(spec: OperatorSpec, z: complex) -> complex:
    """k itself for Re k > 0; for Re k = 0 the root -i|k| sgn(Im z)."""
    k = spec.k
    if k.real > 0:
        return k
    if z.imag == 0:
        raise SpectralPointError(
            f"{spec.label}: real z={z} lies in the continuous spectrum R", z=z
        )
    return -1j * abs(k) * math.copysign(1.0, z.imag)


# --- family builders ---


def _free(spec: OperatorSpec, z: complex) -> KernelFactors:
    p = _sqrt_off_ray(spec, z)

    def left(x: float) -> Pair:
        e = cmath.exp(p * x)
        return _exact(e), _exact(p * e)

    def right(x: float) -> Pair:
        e = cmath.exp(-p * x)
        return _exact(e), _exact(-p * e)

    return KernelFactors(spec, z, 2 * p, left, right, abs(p))


def _bessel(spec: OperatorSpec, z: complex) -> KernelFactors:
    m = spec.m
    k = _sqrt_off_ray(spec, z)
    kp = Polar.from_complex(k)

    def left(x: float) -> Pair:
        r = kp.scale(x)
        return bessel_i1d(m, r), bessel_i1d_deriv(m, r).scaled(k)

    def right(x: float) -> Pair:
        r = kp.scale(x)
        return macdonald_k1d(m, r), macdonald_k1d_deriv(m, r).scaled(k)

    return KernelFactors(spec, z, k, left, right, abs(k))


def _exponential(spec: OperatorSpec, z: complex) -> KernelFactors:
    if spec.k == 0:
        return _free(spec, z)
    m = _sqrt_off_ray(spec, z)
    kp = Polar.from_complex(spec.k)

    def left(x: float) -> Pair:
        r = kp.scale(math.exp(x))
        return bessel_i2d(m, r), bessel_i2d_deriv(m, r).scaled(r.value)

    def right(x: float) -> Pair:
        r = kp.scale(math.exp(x))
        return macdonald_k2d(m, r), macdonald_k2d_deriv(m, r).scaled(r.value)

    return KernelFactors(spec, z, 1 + 0j, left, right)


def _neg_exponential(spec: OperatorSpec, z: complex) -> KernelFactors:
    m = _sqrt_off_ray(spec, z)
    ell, gamma = spec.ell, spec.gamma
    phase = cmath.exp(1j * math.pi * m)

    def left(x: float) -> Pair:
        r = ell * math.exp(x)
        return bessel_j2d(m, r), bessel_j2d_deriv(m, r).scaled(r)

    if is_gamma_inf(gamma):
        w = 2j / math.pi
        scale = 2 / math.pi

        def right(x: float) -> Pair:
            r = ell * math.exp(x)
            return hankel2d(-1, m, r), hankel2d_deriv(-1, m, r).scaled(r)

    else:
        w = -2j / math.pi * (phase - gamma)
        # W vanishes when e^{i pi m} = gamma; compare against both terms
        scale = 2 / math.pi * max(1.0, abs(phase) + abs(gamma))

        def right(x: float) -> Pair:
            r = ell * math.exp(x)
            plus, minus = hankel2d(1, m, r), hankel2d(-1, m, r)
            dplus, dminus = hankel2d_deriv(1, m, r), hankel2d_deriv(-1, m, r)
            value = combine([(phase, plus), (gamma, minus)], plus.path)
            deriv = combine([(phase * r, dplus), (gamma * r, dminus)], plus.path)
            return value, deriv

    return KernelFactors(spec, z, w, left, right, scale)


def _whittaker(spec: OperatorSpec, z: complex) -> KernelFactors:
    k = _sqrt_off_ray(spec, z)
    p = WhittakerParams(spec.beta / (2 * k), spec.m)
    base = Polar.from_complex(2 * k)

    def left(x: float) -> Pair:
        r = base.scale(x)
        return whit_i1d(p, r), whit_i1d_deriv(p, r).scaled(2 * k)

    def right(x: float) -> Pair:
        r = base.scale(x)
        return whit_k1d(p, r), whit_k1d_deriv(p, r).scaled(2 * k)

    w = 2 * k * reciprocal_gamma(0.5 + p.m - p.beta)
    return KernelFactors(spec, z, w, left, right, abs(2 * k))


def _morse(spec: OperatorSpec, z: complex) -> KernelFactors:
    m = _sqrt_off_ray(spec, z)
    p = WhittakerParams(spec.beta / (2 * spec.k), m)
    base = Polar.from_complex(2 * spec.k)

    def left(x: float) -> Pair:
        r = base.scale(math.exp(x))
        return whit_i2d(p, r), whit_i2d_deriv(p, r).scaled(r.value)

    def right(x: float) -> Pair:
        r = base.scale(math.exp(x))
        return whit_k2d(p, r), whit_k2d_deriv(p, r).scaled(r.value)

    return KernelFactors(spec, z, reciprocal_gamma(0.5 + m - p.beta), left, right)


def _isotonic(spec: OperatorSpec, z: complex) -> KernelFactors:
    if spec.k == 0:
        return _bessel(OperatorSpec.bessel(spec.m), z)
    beta = z / 2
    kk = effective_k(spec, z)
    p = WhittakerParams(beta / kk, spec.m)
    sk = Polar.from_complex(kk).sqrt()
    s = sk.value

    def left(u: float) -> Pair:
        v = sk.scale(u)
        return isotonic_i(p, v), isotonic_i_deriv(p, v).scaled(s)

    def right(u: float) -> Pair:
        v = sk.scale(u)
        return isotonic_k(p, v), isotonic_k_deriv(p, v).scaled(s)

    w = 2 * s * reciprocal_gamma(0.5 + p.m / 2 - p.beta / 2)
    return KernelFactors(spec, z, w, left, right, 2 * abs(s))


def _harmonic(spec: OperatorSpec, z: complex) -> KernelFactors:
    if spec.k == 0:
        return _free(spec, z)
    beta = z / 2
    kk = effective_k(spec, z)
    kappa = beta / kk
    s = Polar.from_complex(kk).sqrt().value

    def left(u: float) -> Pair:
        v = -s * u
        return weber_k(kappa, v), weber_k_deriv(kappa, v).scaled(-s)

    def right(u: float) -> Pair:
        v = s * u
        return weber_k(kappa, v), weber_k_deriv(kappa, v).scaled(s)

    w = (
        4
        * math.pi
        * s
        * reciprocal_gamma(0.25 - kappa / 2)
        * reciprocal_gamma(0.75 - kappa / 2)
    )
    return KernelFactors(spec, z, w, left, right, 4 * math.pi * abs(s))


_BUILDERS: dict[Family, Callable[[OperatorSpec, complex], KernelFactors]] = {
    Family.BESSEL: _bessel,
    Family.EXPONENTIAL: _exponential,
    Family.NEG_EXPONENTIAL: _neg_exponential,
    Family.WHITTAKER: _whittaker,
    Family.MORSE: _morse,
    Family.ISOTONIC: _isotonic,
    Family.HARMONIC: _harmonic,
}


def kernel_wronskian(spec: OperatorSpec, z: complex) -> complex:
    """W(psi_b, psi_a) at z, zero at eigenvalues (no spectral check)."""
    return _BUILDERS[spec.family](spec, complex(z)).wronskian


def kernel_factors(spec: OperatorSpec, z: complex) -> KernelFactors:
    z = complex(z)
    factors = _BUILDERS[spec.family](spec, z)
    if abs(factors.wronskian) <= _WRONSKIAN_ZERO * factors.scale:
        raise SpectralPointError(
            f"{spec.label}: z={z} is an eigenvalue (W(psi_b, psi_a) = 0)", z=z
        )
    return factors


def _check_points(spec: OperatorSpec, *points: float) -> None:
    for p in points:
        if not spec.contains(p):
            raise ParameterError(f"{spec.label}: point {p} is outside the interval")


def resolvent_kernel(spec: OperatorSpec, z: complex, x: float, y: float) -> KernelEval:
    _check_points(spec, x, y)
    factors = kernel_factors(spec, z)
    sv = factors.kernel(x, y)
    return KernelEval(
        complex(z), x, y, sv.value, factors.wronskian, sv.err_est, sv.path
    )


def resolvent_kernel_dx(
    spec: OperatorSpec, z: complex, x: float, y: float, side: int = 1
) -> KernelEval:
    _check_points(spec, x, y)
    factors = kernel_factors(spec, z)
    sv = factors.kernel_dx(x, y, side)
    return KernelEval(
        complex(z), x, y, sv.value, factors.wronskian, sv.err_est, sv.path
    )


# --- kernels outside the validated families ---


def bessel_boundary_kernel(
    m: complex, ell: float, sign: int, x: float, y: float
) -> SpecialValue:
    """(H_m - (l^2 + sign i0))^{-1}(x, y) = sign (i/l) calJ_m(l x_<) calH^sign_m(l x_>)."""
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    if not (ell > 0 and x > 0 and y > 0):
        raise ParameterError("boundary-value kernel needs ell, x, y > 0")
    lo, hi = min(x, y), max(x, y)
    a = bessel_j1d(m, ell * lo)
    b = hankel1d(sign, m, ell * hi)
    return _product(a, b, sign * ell / 1j)


def exponential_kernel(k: complex, m: complex, x: float, y: float) -> SpecialValue:
    """I_m(k e^{x_<}) K_m(k e^{x_>}) for any k != 0, including Re k < 0
    where it no longer is a resolvent."""
    k = complex(k)
    if k == 0:
        raise ParameterError("exponential_kernel needs k != 0")
    kp = Polar.from_complex(k)
    lo, hi = min(x, y), max(x, y)
    a = bessel_i2d(m, kp.scale(math.exp(lo)))
    b = macdonald_k2d(m, kp.scale(math.exp(hi)))
    return _product(a, b, 1 + 0j)
