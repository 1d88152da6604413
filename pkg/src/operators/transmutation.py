# Path: src/operators/transmutation.py
"""Transmutation identities between resolvent kernels.

Each identity equates the kernel of one family (the *target*, left side)
with a kernel of another family (the *source*, right side) after a change
of variables, exchanging spectral parameter and coupling constant:

    exp-bessel           (M_k + m^2)^{-1}(x, y)
                           = e^{-(x+y)/2} (H_m + k^2)^{-1}(e^x, e^y)
    isotonic-whittaker   (N_{k,m} - 2 beta)^{-1}(u, v)
                           = (uv)^{-1/2} (H_{beta,m/2} + k^2)^{-1}(u^2/2, v^2/2)
    morse-whittaker      (M_{beta,k} + m^2)^{-1}(x, y)
                           = e^{-(x+y)/2} (H_{beta,m} + k^2)^{-1}(e^x, e^y)
    isotonic-morse       (N_{k,m} - 2 beta)^{-1}(u, v)
                           = (uv)^{1/2}/2 (M_{beta,k} + m^2/4)^{-1}(log(u^2/2), log(v^2/2))
    negexp-bessel        (M^gamma_{i ell} + m^2)^{-1}(x, y)
                           = e^{-(x+y)/2} [e^{i pi m} R^+ - gamma R^-] / (e^{i pi m} - gamma)

with R^+- = (H_m - (ell^2 +- i0))^{-1}(e^x, e^y). The weights follow from
the Liouville substitution r = g(u): G(u, v) = (g'(u) g'(v))^{-1/2} G_r(g(u), g(v)).
"""
import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum

from src.core.errors import ParameterError, UnsupportedPairError
from src.operators.kernels import bessel_boundary_kernel, resolvent_kernel
from src.operators.operator_spec import (
    Family,
    OperatorSpec,
    is_gamma_inf,
)

__all__ = [
    "Transmutation",
    "TransmutationResult",
    "ParitySplit",
    "transmute",
    "transmute_pair",
    "pair_specs",
    "parity_split",
]

logger = logging.getLogger(__name__)

# two complex numbers count as the same parameter within this relative gap
_SAME = 1e-12


class Transmutation(str, Enum):
    EXP_BESSEL = "exp-bessel"
    ISOTONIC_WHITTAKER = "isotonic-whittaker"
    MORSE_WHITTAKER = "morse-whittaker"
    ISOTONIC_MORSE = "isotonic-morse"
    NEGEXP_BESSEL = "negexp-bessel"


# (target family, source family) -> identity
_PAIRS = {
    (Family.EXPONENTIAL, Family.BESSEL): Transmutation.EXP_BESSEL,
    (Family.ISOTONIC, Family.WHITTAKER): Transmutation.ISOTONIC_WHITTAKER,
    (Family.MORSE, Family.WHITTAKER): Transmutation.MORSE_WHITTAKER,
    (Family.ISOTONIC, Family.MORSE): Transmutation.ISOTONIC_MORSE,
    (Family.NEG_EXPONENTIAL, Family.BESSEL): Transmutation.NEGEXP_BESSEL,
}


@dataclass(frozen=True)
class TransmutationResult:
    pair: Transmutation
    z: complex
    x: float
    y: float
    lhs: complex
    rhs: complex

    @property
    def mismatch(self) -> float:
        """|lhs - rhs| / |lhs|."""
        return abs(self.lhs - self.rhs) / max(abs(self.lhs), 1e-300)


def _same(a: complex, b: complex) -> bool:
    return abs(a - b) <= _SAME * max(1.0, abs(a), abs(b))


def _require(cond: bool, pair: Transmutation, what: str) -> None:
    if not cond:
        raise ParameterError(f"{pair.value}: {what}")


def _m_of(z: complex) -> complex:
    # the order recovered from z = -m^2, principal root
    return cmath.sqrt(-z)


def _rhs(pair: Transmutation, source: OperatorSpec, target: OperatorSpec,
         z: complex, x: float, y: float) -> complex:
    if pair is Transmutation.EXP_BESSEL:
        m = _m_of(z)
        _require(_same(source.m, m), pair, f"Bessel order must be sqrt(-z) = {m}")
        r = resolvent_kernel(source, -target.k * target.k, math.exp(x), math.exp(y))
        return math.exp(-(x + y) / 2) * r.value

    if pair is Transmutation.MORSE_WHITTAKER:
        m = _m_of(z)
        _require(_same(source.m, m), pair, f"Whittaker m must be sqrt(-z) = {m}")
        _require(_same(source.beta, target.beta), pair, "beta must agree")
        r = resolvent_kernel(source, -target.k * target.k, math.exp(x), math.exp(y))
        return math.exp(-(x + y) / 2) * r.value

    if pair is Transmutation.ISOTONIC_WHITTAKER:
        _require(target.k.real > 0, pair, "needs Re k > 0")
        _require(_same(source.m, target.m / 2), pair, "Whittaker m must be isotonic m/2")
        _require(_same(2 * source.beta, z), pair, "z must be 2 beta")
        r = resolvent_kernel(source, -target.k * target.k, x * x / 2, y * y / 2)
        return r.value / math.sqrt(x * y)

    if pair is Transmutation.ISOTONIC_MORSE:
        _require(target.m.real > 0, pair, "needs Re m > 0")
        _require(_same(source.k, target.k), pair, "k must agree")
        _require(_same(2 * source.beta, z), pair, "z must be 2 beta")
        half = target.m / 2
        r = resolvent_kernel(
            source, -half * half, math.log(x * x / 2), math.log(y * y / 2)
        )
        return 0.5 * math.sqrt(x * y) * r.value

    # negexp-bessel
    m = _m_of(z)
    _require(_same(source.m, m), pair, f"Bessel order must be sqrt(-z) = {m}")
    ell, gamma = target.ell, target.gamma
    ex, ey = math.exp(x), math.exp(y)
    weight = math.exp(-(x + y) / 2)
    outgoing = weight * bessel_boundary_kernel(m, ell, 1, ex, ey).value
    incoming = weight * bessel_boundary_kernel(m, ell, -1, ex, ey).value
    if is_gamma_inf(gamma):
        return incoming
    phase = cmath.exp(1j * math.pi * m)
    return (phase * outgoing - gamma * incoming) / (phase - gamma)


def transmute(
    source: OperatorSpec, target: OperatorSpec, z: complex, x: float, y: float
) -> TransmutationResult:
    """Both sides of the identity linking ``target`` (lhs, at its own z)
    with ``source`` (rhs, at the exchanged parameters)."""
    pair = _PAIRS.get((target.family, source.family))
    if pair is None:
        raise UnsupportedPairError(
            f"no transmutation identity from {source.family.value} to {target.family.value}"
        )
    z = complex(z)
    if pair in (Transmutation.EXP_BESSEL, Transmutation.MORSE_WHITTAKER,
                Transmutation.NEGEXP_BESSEL):
        _require(_m_of(z).real > 0, pair, f"needs Re sqrt(-z) > 0, got z={z}")
    lhs = resolvent_kernel(target, z, x, y).value
    rhs = _rhs(pair, source, target, z, x, y)
    result = TransmutationResult(pair, z, x, y, lhs, rhs)
    logger.debug(f"{pair.value} at z={z}, ({x}, {y}): mismatch {result.mismatch:.2e}")
    return result


def pair_specs(
    pair: Transmutation, params: dict[str, complex]
) -> tuple[OperatorSpec, OperatorSpec, complex]:
    """(source, target, z) for one identity from its shared parameters.

    exp-bessel (k, m); isotonic-whittaker (k, m, beta); morse-whittaker
    (beta, k, m); isotonic-morse (k, m, beta); negexp-bessel (ell, gamma, m).
    """
    pair = Transmutation(pair)
    needed = {
        Transmutation.EXP_BESSEL: ("k", "m"),
        Transmutation.ISOTONIC_WHITTAKER: ("k", "m", "beta"),
        Transmutation.MORSE_WHITTAKER: ("beta", "k", "m"),
        Transmutation.ISOTONIC_MORSE: ("k", "m", "beta"),
        Transmutation.NEGEXP_BESSEL: ("ell", "gamma", "m"),
    }[pair]
    missing = [name for name in needed if name not in params]
    if missing:
        raise ParameterError(f"{pair.value} needs parameters {needed}, missing {missing}")
    p = {name: complex(params[name]) for name in needed}

    if pair is Transmutation.EXP_BESSEL:
        return OperatorSpec.bessel(p["m"]), OperatorSpec.exponential(p["k"]), -p["m"] ** 2
    if pair is Transmutation.ISOTONIC_WHITTAKER:
        return (
            OperatorSpec.whittaker(p["beta"], p["m"] / 2),
            OperatorSpec.isotonic(p["k"], p["m"]),
            2 * p["beta"],
        )
    if pair is Transmutation.MORSE_WHITTAKER:
        return (
            OperatorSpec.whittaker(p["beta"], p["m"]),
            OperatorSpec.morse(p["beta"], p["k"]),
            -p["m"] ** 2,
        )
    if pair is Transmutation.ISOTONIC_MORSE:
        return (
            OperatorSpec.morse(p["beta"], p["k"]),
            OperatorSpec.isotonic(p["k"], p["m"]),
            2 * p["beta"],
        )
    if p["ell"].imag != 0:
        raise ParameterError(f"ell must be real, got {p['ell']}")
    return (
        OperatorSpec.bessel(p["m"]),
        OperatorSpec.neg_exponential(p["ell"].real, p["gamma"]),
        -p["m"] ** 2,
    )


def transmute_pair(
    pair: Transmutation, params: dict[str, complex], x: float, y: float
) -> TransmutationResult:
    source, target, z = pair_specs(pair, params)
    return transmute(source, target, z, x, y)


# --- harmonic oscillator = Neumann + Dirichlet isotonic oscillators ---


@dataclass(frozen=True)
class ParitySplit:
    even: complex
    neumann: complex
    odd: complex
    dirichlet: complex

    @property
    def mismatch(self) -> float:
        scale = max(abs(self.neumann), abs(self.dirichlet), 1e-300)
        return max(abs(self.even - self.neumann), abs(self.odd - self.dirichlet)) / scale


def parity_split(k: complex, z: complex, u: float, v: float) -> ParitySplit:
    """K(u, v) +- K(u, -v) for the harmonic oscillator against the isotonic
    kernels with m = -1/2 (Neumann) and m = 1/2 (Dirichlet)."""
    if u == 0 or v == 0:
        raise ParameterError("parity split needs u, v != 0")
    harmonic = OperatorSpec.harmonic(k)
    direct = resolvent_kernel(harmonic, z, u, v).value
    mirrored = resolvent_kernel(harmonic, z, u, -v).value
    au, av = abs(u), abs(v)
    neumann = resolvent_kernel(OperatorSpec.isotonic(k, -0.5), z, au, av).value
    dirichlet = resolvent_kernel(OperatorSpec.isotonic(k, 0.5), z, au, av).value
    sign = math.copysign(1.0, u * v)
    return ParitySplit(direct + mirrored, neumann, direct - mirrored, sign * dirichlet)
