# Path: src/special/bessel.py
"""Bessel-type functions in the 0F1 / U_alpha normalization.

2d (usual) and 1d (gauged) forms:

    I_m(r) = (r/2)^m 0F1reg(m+1; r^2/4)        calI_m(r) = sqrt(pi r/2) I_m(r)
    K_m(r) = (sqrt(pi)/2) (r/2)^m U_m(r^2/4)    calK_m(r) = sqrt(2r/pi) K_m(r)
    J_m(r) = e^{+-i pi m/2} I_m(e^{-+i pi/2} r)  calJ_m(r) = sqrt(pi r/2) J_m(r)
    H^+-_m(r) = (2/pi) e^{-+i pi(m+1)/2} K_m(e^{-+i pi/2} r)

Arguments may be complex or :class:`Polar`; powers follow the tracked angle.
Each function has a ``*_deriv`` companion (derivative in r) built from the
order recurrences, never from numerical differencing.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Union

from src.core.errors import ParameterError
from src.special.complexmath import Polar, as_polar
from src.special.hypergeom import (
    SeriesPolicy,
    SpecialValue,
    combine,
    f01_reg,
    f20_asymptotic,
    u_alpha_s,
)

__all__ = [
    "BesselDim",
    "BesselFlavor",
    "BesselKind",
    "bessel_i2d",
    "bessel_i2d_deriv",
    "macdonald_k2d",
    "macdonald_k2d_deriv",
    "bessel_i2d_scaled",
    "macdonald_k2d_scaled",
    "bessel_i1d",
    "bessel_i1d_deriv",
    "macdonald_k1d",
    "macdonald_k1d_deriv",
    "bessel_j2d",
    "bessel_j2d_deriv",
    "hankel2d",
    "hankel2d_deriv",
    "bessel_j1d",
    "bessel_j1d_deriv",
    "hankel1d",
    "hankel1d_deriv",
]

logger = logging.getLogger(__name__)

Arg = Union[complex, float, Polar]

# |r| - |Re r| above which I_m is rebuilt from K_m (the 0F1 series would
# cancel like e^{|Im r|})
_OSCILLATORY_SWITCH = 12.0
# Re r - |m|^2 beyond which the exponentially scaled forms use the
# large-argument sums
_SCALED_SWITCH = 40.0
_ROOT_PI = math.sqrt(math.pi)


def _polar(r: Arg) -> Polar:
    p = as_polar(r)
    if p.modulus == 0:
        raise ParameterError("Bessel functions are evaluated at r != 0")
    return p


def _sign(sign: int) -> int:
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    return sign


# --- hyperbolic 2d ---


def _i_series(m: complex, r: Polar, policy: Optional[SeriesPolicy]) -> SpecialValue:
    s = r.scale(0.5)
    return f01_reg(m + 1, s.square().value, policy).scaled(s.pow(m))


def bessel_i2d(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    m = complex(m)
    rp = _polar(r)
    value = rp.value
    if rp.modulus - abs(value.real) <= _OSCILLATORY_SWITCH:
        return _i_series(m, rp, policy)
    # I from K on both sides of the ray:
    #   arg r > 0:  I = (K(r e^{-i pi}) - e^{i pi m} K(r)) / (pi i)
    #   else:       I = (e^{-i pi m} K(r) - K(r e^{i pi})) / (pi i)
    k_here = macdonald_k2d(m, rp, policy)
    if rp.angle > 0:
        k_turn = macdonald_k2d(m, rp.rotate(-math.pi), policy)
        parts = [
            (1 / (math.pi * 1j), k_turn),
            (-cmath.exp(1j * math.pi * m) / (math.pi * 1j), k_here),
        ]
    else:
        k_turn = macdonald_k2d(m, rp.rotate(math.pi), policy)
        parts = [
            (cmath.exp(-1j * math.pi * m) / (math.pi * 1j), k_here),
            (-1 / (math.pi * 1j), k_turn),
        ]
    logger.debug(f"I_{m}({value}): rebuilt from K")
    return combine(parts, k_here.path)


def bessel_i2d_deriv(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    """I_m' = (m/r) I_m + I_{m+1}."""
    m = complex(m)
    rp = _polar(r)
    here = bessel_i2d(m, rp, policy)
    up = bessel_i2d(m + 1, rp, policy)
    return combine([(m / rp.value, here), (1, up)], here.path)


def macdonald_k2d(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    m = complex(m)
    rp = _polar(r)
    s = rp.scale(0.5)
    return u_alpha_s(m, s, policy).scaled(0.5 * _ROOT_PI * s.pow(m))


def macdonald_k2d_deriv(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    """K_m' = (m/r) K_m - K_{m+1}."""
    m = complex(m)
    rp = _polar(r)
    here = macdonald_k2d(m, rp, policy)
    up = macdonald_k2d(m + 1, rp, policy)
    return combine([(m / rp.value, here), (-1, up)], here.path)


# --- exponentially scaled 2d, Re r > 0 ---


def _right_half_plane(r: Arg, what: str) -> Polar:
    rp = _polar(r)
    if not rp.value.real > 0:
        raise ParameterError(f"{what} is defined here for Re r > 0, got r={rp.value}")
    return rp


def bessel_i2d_scaled(
    m: complex, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """e^{-r} I_m(r); finite where I_m itself overflows."""
    m = complex(m)
    rp = _right_half_plane(r, "e^{-r} I_m(r)")
    value = rp.value
    if value.real <= _SCALED_SWITCH + abs(m) ** 2:
        return bessel_i2d(m, rp, policy).scaled(cmath.exp(-value))
    # the recessive e^{-2r} companion is below rounding here
    series = f20_asymptotic(0.5 + m, 0.5 - m, 1 / (2 * value), policy)
    return series.scaled(1 / cmath.sqrt(2 * math.pi * value))


def macdonald_k2d_scaled(
    m: complex, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """e^{r} K_m(r); finite where K_m itself underflows."""
    m = complex(m)
    rp = _right_half_plane(r, "e^{r} K_m(r)")
    value = rp.value
    if value.real <= _SCALED_SWITCH + abs(m) ** 2:
        return macdonald_k2d(m, rp, policy).scaled(cmath.exp(value))
    series = f20_asymptotic(0.5 + m, 0.5 - m, -1 / (2 * value), policy)
    return series.scaled(cmath.sqrt(math.pi / (2 * value)))


# --- trigonometric 2d ---


def bessel_j2d(
    m: complex, r: Arg, policy: Optional[SeriesPolicy] = None, sign: int = 1
) -> SpecialValue:
    """J_m(r) = e^{sign i pi m/2} I_m(e^{-sign i pi/2} r); both signs agree."""
    m = complex(m)
    sign = _sign(sign)
    rp = _polar(r)
    phase = cmath.exp(sign * 0.5j * math.pi * m)
    return bessel_i2d(m, rp.rotate(-sign * 0.5 * math.pi), policy).scaled(phase)


def bessel_j2d_deriv(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    """J_m' = (m/r) J_m - J_{m+1}."""
    m = complex(m)
    rp = _polar(r)
    here = bessel_j2d(m, rp, policy)
    up = bessel_j2d(m + 1, rp, policy)
    return combine([(m / rp.value, here), (-1, up)], here.path)


def hankel2d(
    sign: int, m: complex, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """H^{sign}_m(r) = (2/pi) e^{-sign i pi (m+1)/2} K_m(e^{-sign i pi/2} r)."""
    m = complex(m)
    sign = _sign(sign)
    rp = _polar(r)
    phase = (2 / math.pi) * cmath.exp(-sign * 0.5j * math.pi * (m + 1))
    return macdonald_k2d(m, rp.rotate(-sign * 0.5 * math.pi), policy).scaled(phase)


def hankel2d_deriv(
    sign: int, m: complex, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    m = complex(m)
    rp = _polar(r)
    here = hankel2d(sign, m, rp, policy)
    up = hankel2d(sign, m + 1, rp, policy)
    return combine([(m / rp.value, here), (-1, up)], here.path)


# --- 1d gauge: c sqrt(r) f(r) ---


def _gauged(f: SpecialValue, rp: Polar, c: float) -> SpecialValue:
    return f.scaled(c * rp.sqrt().value)


def _gauged_deriv(f: SpecialValue, df: SpecialValue, rp: Polar, c: float) -> SpecialValue:
    # (c sqrt(r) f)' = c (f / (2 sqrt r) + sqrt(r) f')
    root = rp.sqrt().value
    return combine([(c / (2 * root), f), (c * root, df)], f.path)


_C_I = math.sqrt(math.pi / 2)
_C_K = math.sqrt(2 / math.pi)


def bessel_i1d(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    rp = _polar(r)
    return _gauged(bessel_i2d(m, rp, policy), rp, _C_I)


def bessel_i1d_deriv(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    rp = _polar(r)
    return _gauged_deriv(
        bessel_i2d(m, rp, policy), bessel_i2d_deriv(m, rp, policy), rp, _C_I
    )


def macdonald_k1d(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    rp = _polar(r)
    return _gauged(macdonald_k2d(m, rp, policy), rp, _C_K)


def macdonald_k1d_deriv(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    rp = _polar(r)
    return _gauged_deriv(
        macdonald_k2d(m, rp, policy), macdonald_k2d_deriv(m, rp, policy), rp, _C_K
    )


def bessel_j1d(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    rp = _polar(r)
    return _gauged(bessel_j2d(m, rp, policy), rp, _C_I)


def bessel_j1d_deriv(m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    rp = _polar(r)
    return _gauged_deriv(
        bessel_j2d(m, rp, policy), bessel_j2d_deriv(m, rp, policy), rp, _C_I
    )


def hankel1d(sign: int, m: complex, r: Arg, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    rp = _polar(r)
    return _gauged(hankel2d(sign, m, rp, policy), rp, _C_I)


def hankel1d_deriv(
    sign: int, m: complex, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    rp = _polar(r)
    return _gauged_deriv(
        hankel2d(sign, m, rp, policy), hankel2d_deriv(sign, m, rp, policy), rp, _C_I
    )


# --- kind table ---


class BesselDim(str, Enum):
    ONE_D = "OneD"
    TWO_D = "TwoD"


class BesselFlavor(str, Enum):
    HYPERBOLIC_I = "HyperbolicI"
    MACDONALD_K = "MacdonaldK"
    TRIG_J = "TrigJ"
    HANKEL_PLUS = "HankelPlus"
    HANKEL_MINUS = "HankelMinus"


Fn = Callable[[complex, Arg, Optional[SeriesPolicy]], SpecialValue]


def _hankel(sign: int, fn: Callable[..., SpecialValue]) -> Fn:
    return lambda m, r, policy=None: fn(sign, m, r, policy)


_TABLE: dict[tuple[BesselDim, BesselFlavor], tuple[Fn, Fn]] = {
    (BesselDim.TWO_D, BesselFlavor.HYPERBOLIC_I): (bessel_i2d, bessel_i2d_deriv),
    (BesselDim.TWO_D, BesselFlavor.MACDONALD_K): (macdonald_k2d, macdonald_k2d_deriv),
    (BesselDim.TWO_D, BesselFlavor.TRIG_J): (bessel_j2d, bessel_j2d_deriv),
    (BesselDim.TWO_D, BesselFlavor.HANKEL_PLUS): (
        _hankel(1, hankel2d),
        _hankel(1, hankel2d_deriv),
    ),
    (BesselDim.TWO_D, BesselFlavor.HANKEL_MINUS): (
        _hankel(-1, hankel2d),
        _hankel(-1, hankel2d_deriv),
    ),
    (BesselDim.ONE_D, BesselFlavor.HYPERBOLIC_I): (bessel_i1d, bessel_i1d_deriv),
    (BesselDim.ONE_D, BesselFlavor.MACDONALD_K): (macdonald_k1d, macdonald_k1d_deriv),
    (BesselDim.ONE_D, BesselFlavor.TRIG_J): (bessel_j1d, bessel_j1d_deriv),
    (BesselDim.ONE_D, BesselFlavor.HANKEL_PLUS): (
        _hankel(1, hankel1d),
        _hankel(1, hankel1d_deriv),
    ),
    (BesselDim.ONE_D, BesselFlavor.HANKEL_MINUS): (
        _hankel(-1, hankel1d),
        _hankel(-1, hankel1d_deriv),
    ),
}


@dataclass(frozen=True)
class BesselKind:
    """One of the ten (dim, flavor) Bessel-type functions."""

    dim: BesselDim
    flavor: BesselFlavor

    def evaluate(
        self, m: complex, r: Arg, policy: Optional[SeriesPolicy] = None
    ) -> SpecialValue:
        return _TABLE[(self.dim, self.flavor)][0](m, r, policy)

    def derivative(
        self, m: complex, r: Arg, policy: Optional[SeriesPolicy] = None
    ) -> SpecialValue:
        return _TABLE[(self.dim, self.flavor)][1](m, r, policy)

    @classmethod
    def all(cls) -> list["BesselKind"]:
        return [cls(d, f) for d, f in _TABLE]
