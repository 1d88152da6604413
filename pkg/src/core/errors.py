# Path: src/core/errors.py
"""Exception hierarchy shared by the numerical core and the CLI.

Every class carries the process exit code the CLI uses when it escapes a
command: 2 validation, 3 spectral point, 4 unreliable numerics, 5 a check
exceeded its threshold.
"""
from typing import Optional

__all__ = [
    "SolvopsError",
    "ParameterError",
    "DomainError",
    "UnsupportedRegimeError",
    "UnsupportedPairError",
    "SingularTimeError",
    "SpectralPointError",
    "MixedEigenvalueError",
    "NonConvergenceError",
    "AsymptoticRegimeError",
    "NoValidPathError",
    "OracleUnreliableError",
    "ThresholdExceededError",
]


class SolvopsError(Exception):
    """Base class for every failure raised by solvops."""
    exit_code: int = 1


class ParameterError(SolvopsError, ValueError):
    """Parameters violate a family invariant or an operation precondition."""
    exit_code = 2


class DomainError(ParameterError):
    """Argument outside the domain of an elementary function (e.g. 0**a, Re a <= 0)."""


class UnsupportedRegimeError(ParameterError):
    """Parameters sit on a boundary the closed forms do not cover."""


class UnsupportedPairError(ParameterError):
    """No transmutation identity links the two requested families."""


class SingularTimeError(ParameterError):
    """Mehler kernel requested at t in pi*Z."""


class SpectralPointError(SolvopsError):
    """The spectral parameter lies in the spectrum; the resolvent does not exist."""
    exit_code = 3

    def __init__(self, message: str, z: Optional[complex] = None):
        super().__init__(message)
        self.z = z


class MixedEigenvalueError(SpectralPointError):
    """Krein denominator vanishes: z is an eigenvalue of the mixed realization."""


class NonConvergenceError(SolvopsError):
    """A series, extrapolation or quadrature did not converge."""
    exit_code = 4

    def __init__(self, message: str, partial: Optional[complex] = None):
        super().__init__(message)
        self.partial = partial


class AsymptoticRegimeError(NonConvergenceError):
    """The divergent 2F0 sum has no decreasing initial segment at this argument."""


class NoValidPathError(NonConvergenceError):
    """Neither the asymptotic nor the connection-formula path is trustworthy."""


class OracleUnreliableError(SolvopsError):
    """The discretized resolvent is singular or too ill-conditioned to trust."""
    exit_code = 4


class ThresholdExceededError(SolvopsError):
    """A verification metric exceeded its acceptance threshold."""
    exit_code = 5
