# Path: src/operators/spectrum.py
"""Spectra of the operator families and their closed-form eigenfunctions.

Eigenvalues are reported in the true spectral parameter z of (L - z)^{-1}.
Infinite point spectra (hydrogen-type accumulation, isotonic/harmonic
ladders, the M^gamma sequence) are cut at ``MAX_EIGENVALUES`` and flagged
``truncated``.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Optional

from src.core.config import settings
from src.core.errors import ParameterError
from src.operators.operator_spec import Family, OperatorSpec, is_gamma_inf
from src.special.bessel import bessel_j2d
from src.special.whittaker import (
    WhittakerParams,
    isotonic_i,
    weber_k,
    whit_i1d,
    whit_i2d,
)

__all__ = [
    "ContinuousPart",
    "Eigenpair",
    "SpectrumDescriptor",
    "spectrum",
    "eigenfunction",
    "neg_exponential_alpha",
]

logger = logging.getLogger(__name__)

Eigfun = Callable[[float], complex]


class ContinuousPart(str, Enum):
    RAY_FROM_ZERO = "RayFromZero"
    FULL_REAL_LINE = "FullRealLine"
    EMPTY = "Empty"


@dataclass(frozen=True)
class Eigenpair:
    eigenvalue: complex
    n: int
    eigfun: Eigfun


@dataclass(frozen=True)
class SpectrumDescriptor:
    spec: OperatorSpec
    continuous: ContinuousPart
    eigenvalues: tuple[complex, ...] = ()
    indices: tuple[int, ...] = ()
    truncated: bool = False

    def point(self) -> Iterator[Eigenpair]:
        for n, ev in zip(self.indices, self.eigenvalues):
            yield Eigenpair(ev, n, eigenfunction(self.spec, n))

    def __len__(self) -> int:
        return len(self.eigenvalues)


def neg_exponential_alpha(gamma: complex) -> complex:
    """alpha with gamma = e^{i pi alpha}, Re alpha in (-1, 1]."""
    gamma = complex(gamma)
    if gamma == 0 or is_gamma_inf(gamma):
        raise ParameterError("gamma = 0 and gamma = inf have no point spectrum")
    return cmath.log(gamma) / (1j * math.pi)


# --- enumerators: (n, z) pairs in increasing n ---


Points = tuple[list[tuple[int, complex]], bool]


def _whittaker_points(spec: OperatorSpec, cap: int) -> Points:
    # -beta^2 / (4 (n+m+1/2)^2) with Re(beta / (n+m+1/2)) > 0
    beta, c = spec.beta, spec.m + 0.5
    # Re(beta conj(n+c)) = Re(beta) n + Re(beta conj c): linear in n
    slope = beta.real
    infinite = slope > 0 or (slope == 0 and (beta * c.conjugate()).real > 0)
    limit = cap
    if slope < 0:
        limit = min(cap, max(0, math.ceil(-(beta * c.conjugate()).real / slope) + 1))
    out = []
    for n in range(limit):
        d = n + c
        if d == 0 or not (beta / d).real > 0:
            continue
        out.append((n, -(beta**2) / (4 * d * d)))
    return out, infinite and len(out) >= cap


def _morse_points(spec: OperatorSpec, cap: int) -> Points:
    # m = beta/(2k) - n - 1/2 with Re m > 0, z = -m^2; finite
    top = spec.beta / (2 * spec.k)
    out = []
    n = 0
    while (top - n - 0.5).real > 0 and n < cap:
        m = top - n - 0.5
        out.append((n, -m * m))
        n += 1
    return out, (top - n - 0.5).real > 0


def _neg_exponential_points(spec: OperatorSpec, cap: int) -> Points:
    # -(alpha+n)^2, n in 2Z, Re(alpha+n) > 0
    alpha = neg_exponential_alpha(spec.gamma)
    out = []
    n = 0 if alpha.real > 0 else 2
    while len(out) < cap:
        out.append((n, -((alpha + n) ** 2)))
        n += 2
    return out, True


def _ladder(step: complex, offset: complex, cap: int) -> list[tuple[int, complex]]:
    return [(n, step * n + offset) for n in range(cap)]


def spectrum(spec: OperatorSpec, max_count: Optional[int] = None) -> SpectrumDescriptor:
    cap = max_count if max_count is not None else settings.MAX_EIGENVALUES
    if cap < 0:
        raise ParameterError("max_count must be >= 0")
    f = spec.family
    ray = ContinuousPart.RAY_FROM_ZERO
    points: list[tuple[int, complex]] = []
    truncated = False

    if f in (Family.BESSEL, Family.EXPONENTIAL):
        return SpectrumDescriptor(spec, ray)
    if f is Family.NEG_EXPONENTIAL:
        if spec.gamma == 0 or is_gamma_inf(spec.gamma):
            return SpectrumDescriptor(spec, ray)
        points, truncated = _neg_exponential_points(spec, cap)
    elif f is Family.WHITTAKER:
        points, truncated = _whittaker_points(spec, cap)
    elif f is Family.MORSE:
        points, truncated = _morse_points(spec, cap)
    elif f in (Family.ISOTONIC, Family.HARMONIC):
        if spec.k == 0:
            return SpectrumDescriptor(spec, ray)
        if spec.k.real == 0:
            return SpectrumDescriptor(spec, ContinuousPart.FULL_REAL_LINE)
        if f is Family.ISOTONIC:
            # 2 beta = 2k (2n + m + 1)
            points = _ladder(4 * spec.k, 2 * spec.k * (spec.m + 1), cap)
        else:
            points = _ladder(2 * spec.k, spec.k, cap)
        truncated = cap > 0
        return SpectrumDescriptor(
            spec,
            ContinuousPart.EMPTY,
            tuple(z for _, z in points),
            tuple(n for n, _ in points),
            truncated,
        )

    if truncated:
        logger.debug(f"{spec.label}: point spectrum truncated at {cap}")
    return SpectrumDescriptor(
        spec,
        ray,
        tuple(z for _, z in points),
        tuple(n for n, _ in points),
        truncated,
    )


def eigenfunction(spec: OperatorSpec, n: int) -> Eigfun:
    """Unnormalized closed-form eigenfunction for the eigenvalue with index n."""
    f = spec.family
    if f is Family.WHITTAKER:
        d = n + spec.m + 0.5
        if n < 0 or d == 0 or not (spec.beta / d).real > 0:
            raise ParameterError(f"{spec.label}: n={n} is not an eigenvalue index")
        k = spec.beta / (2 * d)
        p = WhittakerParams(d, spec.m)
        return lambda x: whit_i1d(p, 2 * k * x).value
    if f is Family.MORSE:
        top = spec.beta / (2 * spec.k)
        m = top - n - 0.5
        if n < 0 or not m.real > 0:
            raise ParameterError(f"{spec.label}: n={n} is not an eigenvalue index")
        p = WhittakerParams(top, m)
        k2 = 2 * spec.k
        return lambda x: whit_i2d(p, k2 * math.exp(x)).value
    if f is Family.NEG_EXPONENTIAL:
        if spec.gamma == 0 or is_gamma_inf(spec.gamma):
            raise ParameterError(f"{spec.label}: no point spectrum")
        alpha = neg_exponential_alpha(spec.gamma)
        if n % 2 or not (alpha + n).real > 0:
            raise ParameterError(f"{spec.label}: n={n} is not an eigenvalue index")
        order, ell = alpha + n, spec.ell
        return lambda x: bessel_j2d(order, ell * math.exp(x)).value
    if f in (Family.ISOTONIC, Family.HARMONIC) and spec.k.real > 0:
        if n < 0:
            raise ParameterError(f"{spec.label}: n={n} is not an eigenvalue index")
        root = cmath.sqrt(spec.k)
        if f is Family.ISOTONIC:
            p = WhittakerParams(2 * n + spec.m + 1, spec.m)
            return lambda u: isotonic_i(p, root * u).value
        kappa = n + 0.5
        return lambda u: weber_k(kappa, root * u).value
    raise ParameterError(f"{spec.label} has no point spectrum")
