# Path: src/operators/krein.py
"""Krein formula for the negexponential realizations M^kappa_{i ell}.

At +inf the b.c. functionals are phi^0 = W(H^+_{1/2}(ell e^x), .) and
phi^1 = W(-i H^-_{1/2}(ell e^x), .); the realization with
phi^0 + kappa phi^1 = 0 is negexponential(ell, gamma=kappa). With

    Psi^0 = e^{i pi m} H^+_m(ell e^x),   Psi^1 = H^-_m(ell e^x),   Psi_b = 2 J_m(ell e^x)
    W^0 = W(Psi^0, Psi_b) = -(4i/pi) e^{i pi m},   W^1 = W(Psi^1, Psi_b) = 4i/pi

the resolvent at z = -m^2 is

    R_kappa(x, y) = R_0(x, y) + Psi_b(x) Psi_b(y) / (W^0/kappa + W^1)
"""
import cmath
import logging
import math
from dataclasses import dataclass

from src.core.errors import MixedEigenvalueError, SpectralPointError
from src.operators.kernels import resolvent_kernel
from src.operators.operator_spec import OperatorSpec, is_gamma_inf
from src.special.bessel import bessel_j2d

__all__ = ["KreinWronskians", "krein_wronskians", "krein_resolvent"]

logger = logging.getLogger(__name__)

# relative size of the Krein denominator treated as zero
_DENOMINATOR_ZERO = 1e-12


@dataclass(frozen=True)
class KreinWronskians:
    m: complex
    w0: complex
    w1: complex

    def denominator(self, kappa: complex) -> complex:
        if is_gamma_inf(kappa):
            return self.w1
        return self.w0 / kappa + self.w1


def krein_wronskians(z: complex) -> KreinWronskians:
    z = complex(z)
    if z.imag == 0 and z.real >= 0:
        raise SpectralPointError(f"z={z} lies in the continuous spectrum [0, inf)", z=z)
    m = cmath.sqrt(-z)
    return KreinWronskians(m, -4j / math.pi * cmath.exp(1j * math.pi * m), 4j / math.pi)


def krein_resolvent(ell: float, kappa: complex, z: complex, x: float, y: float) -> complex:
    """R_kappa(z; x, y) for negexponential(ell, .) from the gamma = 0 kernel."""
    base = OperatorSpec.neg_exponential(ell, 0)
    r0 = resolvent_kernel(base, z, x, y).value
    kappa = complex(kappa)
    if kappa == 0:
        return r0
    w = krein_wronskians(z)
    denominator = w.denominator(kappa)
    scale = abs(w.w1) if is_gamma_inf(kappa) else abs(w.w0 / kappa) + abs(w.w1)
    if abs(denominator) <= _DENOMINATOR_ZERO * scale:
        raise MixedEigenvalueError(
            f"z={z} is an eigenvalue of the kappa={kappa} realization "
            f"(W^0/kappa + W^1 = 0)",
            z=complex(z),
        )
    psi_x = 2 * bessel_j2d(w.m, ell * math.exp(x)).value
    psi_y = 2 * bessel_j2d(w.m, ell * math.exp(y)).value
    logger.debug(f"krein kappa={kappa}, z={z}: denominator {denominator:.6e}")
    return r0 + psi_x * psi_y / denominator
