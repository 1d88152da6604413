# Path: src/special/complexmath.py
"""Complex scalars with pinned branch conventions.

All powers and logarithms use arg z in (-pi, pi]. Rotations e^{+-i pi/2} r and
e^{+-i pi} r are done on :class:`Polar`, which carries an unrestricted angle,
so that a function evaluated at a rotated point lands on the intended sheet.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Union

from src.core.errors import DomainError

__all__ = [
    "GammaValue",
    "Polar",
    "as_polar",
    "principal_arg",
    "principal_log",
    "principal_pow",
    "rotate",
    "gamma",
    "log_gamma",
    "reciprocal_gamma",
    "gamma_ratio",
    "pochhammer",
    "is_nonpositive_integer",
    "dist_to_integer",
    "EPS",
    "COMPLEX_INF",
]

EPS = 2.220446049250313e-16
COMPLEX_INF = complex(math.inf, 0.0)

# Lanczos, g = 671/128, 14 terms + constant (double precision over Re z >= 1/2)
_LANCZOS_G = 5.24218750000000000
_LANCZOS_SER0 = 0.999999999999997092
_LANCZOS_COF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005


def principal_arg(z: complex) -> float:
    """arg z in (-pi, pi]; the lower lip of the cut is mapped to +pi."""
    a = cmath.phase(z)
    return math.pi if a == -math.pi else a


def principal_log(z: complex) -> complex:
    if z == 0:
        raise DomainError("log(0) is undefined")
    return complex(math.log(abs(z)), principal_arg(z))


def principal_pow(z: complex, a: complex) -> complex:
    """z**a = exp(a (ln|z| + i arg z)) on the principal branch."""
    z = complex(z)
    a = complex(a)
    if z == 0:
        if a.real > 0:
            return 0j
        raise DomainError(f"0**{a} is undefined (Re a <= 0)")
    if a == 0:
        return 1 + 0j
    if z.imag == 0 and z.real > 0 and a.imag == 0:
        return complex(z.real ** a.real, 0.0)
    return cmath.exp(a * principal_log(z))


@dataclass(frozen=True)
class Polar:
    """A point modulus * e^{i angle} whose angle is not reduced mod 2 pi."""

    modulus: float
    angle: float

    @classmethod
    def from_complex(cls, z: complex) -> "Polar":
        return cls(abs(z), principal_arg(complex(z)))

    @property
    def value(self) -> complex:
        return cmath.rect(self.modulus, self.angle)

    def rotate(self, theta: float) -> "Polar":
        return Polar(self.modulus, self.angle + theta)

    def scale(self, factor: float) -> "Polar":
        if factor <= 0:
            raise DomainError("Polar.scale needs a positive real factor")
        return Polar(self.modulus * factor, self.angle)

    def mul(self, other: "Polar") -> "Polar":
        return Polar(self.modulus * other.modulus, self.angle + other.angle)

    def log(self) -> complex:
        if self.modulus == 0:
            raise DomainError("log(0) is undefined")
        return complex(math.log(self.modulus), self.angle)

    def pow(self, a: complex) -> complex:
        """Power along the tracked angle (differs from principal_pow off-sheet)."""
        a = complex(a)
        if self.modulus == 0:
            if a.real > 0:
                return 0j
            if a == 0:
                return 1 + 0j
            raise DomainError(f"0**{a} is undefined (Re a <= 0)")
        return cmath.exp(a * self.log())

    def sqrt(self) -> "Polar":
        return Polar(math.sqrt(self.modulus), 0.5 * self.angle)

    def square(self) -> "Polar":
        return Polar(self.modulus * self.modulus, 2.0 * self.angle)

    def inverse(self) -> "Polar":
        if self.modulus == 0:
            raise DomainError("1/0")
        return Polar(1.0 / self.modulus, -self.angle)


def as_polar(z: Union[complex, float, Polar]) -> Polar:
    return z if isinstance(z, Polar) else Polar.from_complex(complex(z))


def rotate(z: Union[complex, float, Polar], theta: float) -> Polar:
    """e^{i theta} z with the winding kept."""
    return as_polar(z).rotate(theta)


@dataclass(frozen=True)
class GammaValue:
    value: complex
    is_pole: bool = False
    pole_order: int = 0


def is_nonpositive_integer(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def dist_to_integer(z: complex) -> float:
    z = complex(z)
    return abs(z - round(z.real))


def _log_gamma_right(z: complex) -> complex:
    """ln Gamma(z) for Re z >= 1/2, up to a multiple of 2 pi i."""
    y = z
    tmp = z + _LANCZOS_G
    tmp = (z + 0.5) * cmath.log(tmp) - tmp
    ser = _LANCZOS_SER0
    for c in _LANCZOS_COF:
        y += 1
        ser += c / y
    return tmp + cmath.log(_SQRT_2PI * ser / z)


def log_gamma(z: complex) -> complex:
    """A logarithm of Gamma(z); exp(log_gamma(z)) == Gamma(z) off the poles."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise DomainError(f"log Gamma has a pole at {z}")
    if z.real >= 0.5:
        return _log_gamma_right(z)
    return (
        math.log(math.pi)
        - cmath.log(cmath.sin(math.pi * z))
        - _log_gamma_right(1 - z)
    )


def gamma(z: complex) -> GammaValue:
    z = complex(z)
    if is_nonpositive_integer(z):
        return GammaValue(COMPLEX_INF, is_pole=True, pole_order=1)
    if z.real >= 0.5:
        return GammaValue(cmath.exp(_log_gamma_right(z)))
    # reflection
    s = cmath.sin(math.pi * z)
    return GammaValue(math.pi / (s * cmath.exp(_log_gamma_right(1 - z))))


def reciprocal_gamma(z: complex) -> complex:
    """1/Gamma(z), entire; exactly 0 at the nonpositive integers."""
    z = complex(z)
    if is_nonpositive_integer(z):
        return 0j
    if z.real >= 0.5:
        return cmath.exp(-_log_gamma_right(z))
    return cmath.sin(math.pi * z) * cmath.exp(_log_gamma_right(1 - z)) / math.pi


def gamma_ratio(a: complex, b: complex) -> complex:
    """Gamma(a)/Gamma(b) without overflowing the separate factors."""
    a, b = complex(a), complex(b)
    if is_nonpositive_integer(b):
        return 0j if not is_nonpositive_integer(a) else _pole_ratio(a, b)
    if is_nonpositive_integer(a):
        return COMPLEX_INF
    if a.real >= 0.5 and b.real >= 0.5:
        return cmath.exp(_log_gamma_right(a) - _log_gamma_right(b))
    return gamma(a).value * reciprocal_gamma(b)


def _pole_ratio(a: complex, b: complex) -> complex:
    # Gamma(-n)/Gamma(-k) as a limit: (-1)^{k-n} k!/n!
    n, k = int(-a.real), int(-b.real)
    return complex((-1) ** (k - n) * math.factorial(k) / math.factorial(n))


def pochhammer(c: complex, k: int) -> complex:
    """(c)_k = c (c+1) ... (c+k-1) by direct product."""
    if k < 0:
        raise DomainError("pochhammer needs k >= 0")
    out = 1 + 0j
    c = complex(c)
    for j in range(k):
        out *= c + j
    return out
