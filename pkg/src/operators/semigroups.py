# Path: src/operators/semigroups.py
"""Heat kernel and propagators of H_m, the Mehler kernel of the harmonic
oscillator, and the Hankel transform that diagonalizes H_m.

    e^{-t H_m / 2}(x, y)  = sqrt(2/(pi t)) calI_m(xy/t) e^{-(x^2+y^2)/(2t)},  Re t >= 0
    e^{+- i t H_m / 2}    = the same at t -> -+i t
    e^{-i t N / 2}(u, v)  = Mehler, rho = e^{-it}
    F_m(x, y)             = sqrt(2/pi) calJ_m(xy),    F_m H_m = y^2 F_m
"""
import cmath
import logging
import math
from typing import Callable

from src.core.errors import ParameterError, SingularTimeError
from src.special.bessel import bessel_i1d, bessel_j1d
from src.special.complexmath import Polar, gamma_ratio
from src.verify.quadrature import quadrature

__all__ = [
    "heat_kernel_bessel",
    "propagator_bessel",
    "heat_compose",
    "mehler_kernel",
    "mehler_apply",
    "mehler_compose",
    "hankel_transform_kernel",
    "hankel_transform",
    "xi_multiplier",
    "MEHLER_CROSS_TERMS",
]

logger = logging.getLogger(__name__)

# cross-term coefficient c in exp(-((1+rho^2)(u^2+v^2) - c rho u v) / (2(1-rho^2)))
MEHLER_CROSS_TERMS = {"classical": 4.0, "halved": 2.0}

_LN2 = math.log(2.0)


def _check_bessel_order(m: complex) -> complex:
    m = complex(m)
    if not m.real > -1:
        raise ParameterError(f"needs Re m > -1, got m={m}")
    return m


def _check_points(*points: float) -> None:
    for p in points:
        if not p > 0:
            raise ParameterError(f"points must lie in (0, inf), got {p}")


def _heat(m: complex, tp: Polar, x: float, y: float) -> complex:
    # sqrt(2/(pi t)) calI_m(xy/t) e^{-(x^2+y^2)/(2t)} with powers of t along tp
    arg = Polar(x * y, 0.0).mul(tp.inverse())
    pref = math.sqrt(2 / math.pi) * tp.sqrt().inverse().value
    gauss = cmath.exp(-(x * x + y * y) / (2 * tp.value))
    return pref * bessel_i1d(m, arg).value * gauss


def heat_kernel_bessel(m: complex, t: complex, x: float, y: float) -> complex:
    """Kernel of e^{-t H_m / 2}; t may be complex with Re t >= 0, t != 0."""
    m = _check_bessel_order(m)
    _check_points(x, y)
    t = complex(t)
    if t == 0 or t.real < 0:
        raise ParameterError(f"heat kernel needs Re t >= 0, t != 0; got t={t}")
    return _heat(m, Polar.from_complex(t), x, y)


def propagator_bessel(m: complex, t: float, sign: int, x: float, y: float) -> complex:
    """Kernel of e^{sign i t H_m / 2} for real t != 0, the heat kernel at
    time -sign i t.

    For t > 0 this is e^{sign i pi (m+1)/2} sqrt(2/(pi t)) calJ_m(xy/t)
    e^{-sign i (x^2+y^2)/(2t)}; for t < 0 it is the heat kernel at the
    rotated time.
    """
    m = _check_bessel_order(m)
    _check_points(x, y)
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    t = float(t)
    if t == 0:
        raise ParameterError("propagator needs t != 0")
    if t < 0:
        return _heat(m, Polar(-t, sign * 0.5 * math.pi), x, y)
    phase = cmath.exp(sign * 0.5j * math.pi * (m + 1))
    return (
        phase
        * math.sqrt(2 / (math.pi * t))
        * bessel_j1d(m, x * y / t).value
        * cmath.exp(-sign * 1j * (x * x + y * y) / (2 * t))
    )


def heat_compose(
    m: complex, t: complex, s: complex, x: float, y: float, tol: float = 1e-10
) -> tuple[complex, float]:
    """int_0^inf K_t(x, u) K_s(u, y) du by quadrature.

    The integrand decays like exp(-Re(1/t) u^2 / 2); the range is cut where
    that factor drops below e^{-40}.
    """
    decay = min((1 / complex(t)).real, (1 / complex(s)).real)
    if not decay > 0:
        raise ParameterError("heat_compose needs Re(1/t) > 0 and Re(1/s) > 0")
    upper = max(x, y) + math.sqrt(80.0 / decay)
    return quadrature(
        lambda u: heat_kernel_bessel(m, t, x, u) * heat_kernel_bessel(m, s, u, y)
        if u > 0
        else 0j,
        0.0,
        upper,
        tol=tol,
    )


# --- Mehler ---


def _mehler_time(t: float) -> int:
    if t == 0 or abs(math.sin(t)) < 1e-12 * max(1.0, abs(t)):
        raise SingularTimeError(f"Mehler kernel is singular at t={t} (t in pi Z)")
    return math.floor(t / math.pi)


def mehler_kernel(
    t: float, u: complex, v: complex, cross_term: str = "classical"
) -> complex:
    """Kernel of e^{-i t N / 2}, N = -d^2/du^2 + u^2; continuous across pi Z
    via the Maslov phase e^{-i j pi/2} on (j pi, (j+1) pi)."""
    if cross_term not in MEHLER_CROSS_TERMS:
        raise ParameterError(
            f"cross_term must be one of {sorted(MEHLER_CROSS_TERMS)}, got {cross_term!r}"
        )
    t = float(t)
    j = _mehler_time(t)
    c = MEHLER_CROSS_TERMS[cross_term]
    u, v = complex(u), complex(v)
    sin_t, cot_t = math.sin(t), math.cos(t) / math.sin(t)
    # (1+rho^2)/(1-rho^2) = -i cot t,   rho/(1-rho^2) = -i/(2 sin t)
    exponent = 0.5j * cot_t * (u * u + v * v) - 0.5j * c * u * v / (2 * sin_t)
    pref = cmath.exp(-0.25j * math.pi - 0.5j * math.pi * j) / math.sqrt(
        2 * math.pi * abs(sin_t)
    )
    return pref * cmath.exp(exponent)


def _steepest(a: float) -> tuple[complex, float]:
    # direction e^{+-i pi/4} along which e^{(i/2) a w^2} decays, and the
    # half-width where it has dropped below e^{-40}
    return cmath.exp(0.25j * math.pi * math.copysign(1.0, a)), math.sqrt(80.0 / abs(a))


def mehler_apply(
    t: float,
    u: complex,
    f: Callable[[complex], complex],
    cross_term: str = "classical",
    tol: float = 1e-10,
) -> tuple[complex, float]:
    """int K_t(u, v) f(v) dv for f entire; the contour through v0 = u/cos t is
    rotated onto the steepest-descent direction."""
    _mehler_time(t)
    cot_t = math.cos(t) / math.sin(t)
    if abs(cot_t) < 1e-12:
        raise ParameterError("mehler_apply needs cos t != 0")
    v0 = complex(u) / math.cos(t)
    d, half = _steepest(cot_t)
    value, err = quadrature(
        lambda r: mehler_kernel(t, u, v0 + d * r, cross_term) * f(v0 + d * r),
        -half,
        half,
        tol=tol,
    )
    return d * value, abs(d) * err


def mehler_compose(
    t: float,
    s: float,
    u: complex,
    v: complex,
    cross_term: str = "classical",
    tol: float = 1e-10,
) -> tuple[complex, float]:
    """int K_t(u, w) K_s(w, v) dw along the rotated contour."""
    _mehler_time(t)
    _mehler_time(s)
    cot_sum = math.cos(t) / math.sin(t) + math.cos(s) / math.sin(s)
    if abs(cot_sum) < 1e-12:
        raise ParameterError("mehler_compose needs cot t + cot s != 0")
    w0 = (complex(u) / math.sin(t) + complex(v) / math.sin(s)) / cot_sum
    d, half = _steepest(cot_sum)
    value, err = quadrature(
        lambda r: mehler_kernel(t, u, w0 + d * r, cross_term)
        * mehler_kernel(s, w0 + d * r, v, cross_term),
        -half,
        half,
        tol=tol,
    )
    return d * value, err


# --- Hankel transform ---


def hankel_transform_kernel(m: complex, x: float, y: float) -> complex:
    m = _check_bessel_order(m)
    _check_points(x, y)
    return math.sqrt(2 / math.pi) * bessel_j1d(m, x * y).value


def hankel_transform(
    m: complex, f: Callable[[float], complex], y: float, tol: float = 1e-10
) -> tuple[complex, float]:
    """(F_m f)(y) = int_0^inf sqrt(2/pi) calJ_m(xy) f(x) dx."""
    return quadrature(
        lambda x: hankel_transform_kernel(m, x, y) * f(x) if x > 0 else 0j,
        0.0,
        math.inf,
        tol=tol,
    )


def xi_multiplier(m: complex, t: float) -> complex:
    """Xi_m(t) = e^{i ln2 t} Gamma((m+1+it)/2) / Gamma((m+1-it)/2)."""
    m = _check_bessel_order(m)
    return cmath.exp(1j * _LN2 * t) * gamma_ratio(
        (m + 1 + 1j * t) / 2, (m + 1 - 1j * t) / 2
    )
