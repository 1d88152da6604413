# Path: src/operators/operator_spec.py
"""Operator families, their parameters and endpoint metadata.

Every family is a formal operator L = -d^2/dx^2 + V(x) on an interval, with
the resolvent (L - z)^{-1} taken in the *true* spectral parameter z. Each
family also has a natural parameter used by its closed forms; see
:func:`spectral_parameter` / :func:`natural_parameter`.

    family          V(x)                              interval   natural
    bessel          (m^2 - 1/4)/x^2                   (0, inf)   k,  z = -k^2
    exponential     k^2 e^{2x}                        R          m,  z = -m^2
    negexponential  -l^2 e^{2x}  (b.c. gamma at +inf) R          m,  z = -m^2
    whittaker       (m^2 - 1/4)/x^2 - beta/x          (0, inf)   k,  z = -k^2
    morse           k^2 e^{2x} - beta e^x             R          m,  z = -m^2
    isotonic        (m^2 - 1/4)/x^2 + k^2 x^2         (0, inf)   beta, z = 2 beta
    harmonic        k^2 x^2                           R          beta, z = 2 beta
"""
import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from src.core.errors import ParameterError, UnsupportedRegimeError
from src.special.complexmath import COMPLEX_INF

__all__ = [
    "Family",
    "Interval",
    "EndpointIndex",
    "OperatorSpec",
    "GAMMA_INF",
    "endpoint_indices",
    "spectral_parameter",
    "natural_parameter",
    "is_gamma_inf",
    "FAMILY_PARAMS",
]

GAMMA_INF = COMPLEX_INF


def is_gamma_inf(gamma: complex) -> bool:
    return cmath.isinf(complex(gamma))


class Family(str, Enum):
    BESSEL = "bessel"
    EXPONENTIAL = "exponential"
    NEG_EXPONENTIAL = "negexponential"
    WHITTAKER = "whittaker"
    MORSE = "morse"
    ISOTONIC = "isotonic"
    HARMONIC = "harmonic"


class Interval(str, Enum):
    HALF_LINE = "HalfLine"
    FULL_LINE = "FullLine"


_HALF_LINE = {Family.BESSEL, Family.WHITTAKER, Family.ISOTONIC}

# parameters each family reads; everything else must stay at its default
FAMILY_PARAMS: dict[Family, tuple[str, ...]] = {
    Family.BESSEL: ("m",),
    Family.EXPONENTIAL: ("k",),
    Family.NEG_EXPONENTIAL: ("ell", "gamma"),
    Family.WHITTAKER: ("beta", "m"),
    Family.MORSE: ("beta", "k"),
    Family.ISOTONIC: ("k", "m"),
    Family.HARMONIC: ("k",),
}


@dataclass(frozen=True)
class EndpointIndex:
    at_left: int
    at_right: int


@dataclass(frozen=True)
class OperatorSpec:
    family: Family
    m: complex = 0j
    k: complex = 0j
    beta: complex = 0j
    ell: float = 1.0
    gamma: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        for name in ("m", "k", "beta", "gamma"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        object.__setattr__(self, "ell", float(self.ell))
        self._validate()

    # --- constructors ---

    @classmethod
    def bessel(cls, m: complex) -> "OperatorSpec":
        return cls(Family.BESSEL, m=m)

    @classmethod
    def exponential(cls, k: complex) -> "OperatorSpec":
        return cls(Family.EXPONENTIAL, k=k)

    @classmethod
    def neg_exponential(cls, ell: float, gamma: complex) -> "OperatorSpec":
        return cls(Family.NEG_EXPONENTIAL, ell=ell, gamma=gamma)

    @classmethod
    def whittaker(cls, beta: complex, m: complex) -> "OperatorSpec":
        return cls(Family.WHITTAKER, beta=beta, m=m)

    @classmethod
    def morse(cls, beta: complex, k: complex) -> "OperatorSpec":
        return cls(Family.MORSE, beta=beta, k=k)

    @classmethod
    def isotonic(cls, k: complex, m: complex) -> "OperatorSpec":
        return cls(Family.ISOTONIC, k=k, m=m)

    @classmethod
    def harmonic(cls, k: complex) -> "OperatorSpec":
        return cls(Family.HARMONIC, k=k)

    @classmethod
    def from_params(cls, family: str, params: dict[str, complex]) -> "OperatorSpec":
        fam = Family(family)
        allowed = FAMILY_PARAMS[fam]
        extra = sorted(set(params) - set(allowed))
        if extra:
            raise ParameterError(
                f"{fam.value} takes ({', '.join(allowed)}), got extra {extra}"
            )
        kwargs: dict[str, Any] = dict(params)
        if "ell" in kwargs:
            ell = complex(kwargs["ell"])
            if ell.imag != 0:
                raise ParameterError(f"ell must be real, got {ell}")
            kwargs["ell"] = ell.real
        return cls(fam, **kwargs)

    # --- validation ---

    def _validate(self) -> None:
        f = self.family
        if f in (Family.BESSEL, Family.WHITTAKER, Family.ISOTONIC):
            if not self.m.real > -1:
                raise ParameterError(f"{f.value}: needs Re m > -1, got m={self.m}")
        if f is Family.EXPONENTIAL:
            if not (self.k.real > 0 or self.k == 0):
                raise ParameterError(
                    f"exponential: needs Re k > 0 or k = 0, got k={self.k}"
                )
        elif f is Family.NEG_EXPONENTIAL:
            if not (self.ell > 0 and math.isfinite(self.ell)):
                raise ParameterError(f"negexponential: needs ell > 0, got {self.ell}")
        elif f is Family.WHITTAKER:
            if self.beta == 0 and self.m == -0.5:
                raise ParameterError("whittaker: (beta, m) = (0, -1/2) is excluded")
        elif f is Family.MORSE:
            if self.k.real == 0 and self.k != 0:
                raise UnsupportedRegimeError(
                    f"morse: Re k = 0, k != 0 is not covered (k={self.k})"
                )
            if not self.k.real > 0:
                raise ParameterError(f"morse: needs Re k > 0, got k={self.k}")
        elif f in (Family.ISOTONIC, Family.HARMONIC):
            if self.k.real < 0:
                raise ParameterError(f"{f.value}: needs Re k >= 0, got k={self.k}")

    # --- metadata ---

    @property
    def interval(self) -> Interval:
        return Interval.HALF_LINE if self.family in _HALF_LINE else Interval.FULL_LINE

    @property
    def left_edge(self) -> float:
        return 0.0 if self.interval is Interval.HALF_LINE else -math.inf

    def params(self) -> dict[str, complex]:
        return {name: complex(getattr(self, name)) for name in FAMILY_PARAMS[self.family]}

    @property
    def label(self) -> str:
        inner = ", ".join(
            f"{name}={'inf' if name == 'gamma' and is_gamma_inf(v) else _fmt(v)}"
            for name, v in self.params().items()
        )
        return f"{self.family.value}({inner})"

    def contains(self, x: float) -> bool:
        if not math.isfinite(x):
            return False
        return x > 0 if self.interval is Interval.HALF_LINE else True

    def potential(self, x: np.ndarray) -> np.ndarray:
        """V(x), vectorized; complex dtype."""
        x = np.asarray(x, dtype=float)
        f = self.family
        if f is Family.BESSEL:
            return (self.m**2 - 0.25) / x**2 + 0j
        if f is Family.EXPONENTIAL:
            return self.k**2 * np.exp(2 * x) + 0j
        if f is Family.NEG_EXPONENTIAL:
            return -(self.ell**2) * np.exp(2 * x) + 0j
        if f is Family.WHITTAKER:
            return (self.m**2 - 0.25) / x**2 - self.beta / x
        if f is Family.MORSE:
            return self.k**2 * np.exp(2 * x) - self.beta * np.exp(x)
        if f is Family.ISOTONIC:
            return (self.m**2 - 0.25) / x**2 + self.k**2 * x**2
        return self.k**2 * x**2 + 0j


def _fmt(v: complex) -> str:
    return f"{v.real:g}" if v.imag == 0 else f"{v.real:g}{v.imag:+g}i"


def endpoint_indices(spec: OperatorSpec) -> EndpointIndex:
    f = spec.family
    if f in (Family.BESSEL, Family.WHITTAKER, Family.ISOTONIC):
        return EndpointIndex(2 if abs(spec.m.real) < 1 else 0, 0)
    if f is Family.NEG_EXPONENTIAL:
        return EndpointIndex(0, 2)
    return EndpointIndex(0, 0)


_MINUS_SQUARE = {
    Family.BESSEL,
    Family.WHITTAKER,
    Family.EXPONENTIAL,
    Family.NEG_EXPONENTIAL,
    Family.MORSE,
}


def spectral_parameter(spec: OperatorSpec, natural: complex) -> complex:
    """Natural parameter -> z: -k^2 / -m^2, or 2 beta for isotonic/harmonic."""
    natural = complex(natural)
    if spec.family in _MINUS_SQUARE:
        return -natural * natural
    return 2 * natural


def natural_parameter(spec: OperatorSpec, z: complex) -> complex:
    """Inverse of :func:`spectral_parameter`; the square root has Re >= 0."""
    z = complex(z)
    if spec.family in _MINUS_SQUARE:
        return cmath.sqrt(-z)
    return z / 2

