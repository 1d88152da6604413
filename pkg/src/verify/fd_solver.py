# Path: src/verify/fd_solver.py
"""Second-order finite differences for L = -d^2/dx^2 + V and the brute-force
resolvent oracle (L_h - z) u = f.

Edges of the window enter through u_edge = rho * u_next:

    fd_apply                 rho = 0 (Dirichlet)
    oracle_resolve, left     x^{1/2+m} on the half-line, else the decaying
                             mode of the recursion with V frozen at the edge
    oracle_resolve, right    the decaying mode where the right factor decays;
                             the outgoing b.c.-selected solution where nothing
                             decays (negexponential, Re k = 0 oscillators)

The frozen-V mode solves rho + 1/rho = 2 + h^2 (V - z), so a window edge in
a region of slowly varying V reflects almost nothing back into the window.
"""
import cmath
import logging
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import LinearOperator, onenormest, splu
from scipy.sparse.linalg import norm as sparse_norm

from src.core.config import settings
from src.core.errors import OracleUnreliableError, ParameterError
from src.operators.kernels import kernel_factors
from src.operators.operator_spec import Family, Interval, OperatorSpec
from src.verify.grid import Grid

__all__ = [
    "OracleSolve",
    "fd_matrix",
    "fd_apply",
    "edge_ratios",
    "oracle_solve",
    "oracle_resolve",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleSolve:
    u: np.ndarray
    z_used: complex
    condition: float
    nudged: bool = False


def _stencil(grid: Grid) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(lower, diag, upper) coefficients of -d^2/dx^2 at every interior node;
    lower[0] and upper[-1] multiply the edge values."""
    x = grid.nodes
    hm = x[1:-1] - x[:-2]
    hp = x[2:] - x[1:-1]
    lower = -2.0 / (hm * (hm + hp))
    diag = 2.0 / (hm * hp)
    upper = -2.0 / (hp * (hm + hp))
    return lower, diag, upper


def fd_matrix(spec: OperatorSpec, grid: Grid) -> sp.csc_matrix:
    """-D2 + V on the interior nodes with Dirichlet edges."""
    grid.check_inside(spec)
    lower, diag, upper = _stencil(grid)
    v = spec.potential(grid.interior)
    return sp.diags(
        [lower[1:] + 0j, diag + v, upper[:-1] + 0j], [-1, 0, 1], format="csc"
    )


def fd_apply(spec: OperatorSpec, grid: Grid, u: np.ndarray) -> np.ndarray:
    u = np.asarray(u)
    if u.shape != (grid.n,):
        raise ParameterError(f"u must have {grid.n} entries, got shape {u.shape}")
    return fd_matrix(spec, grid) @ u


def _decaying_ratio(kappa2: complex, h: float) -> complex:
    """Root of rho^2 - (2 + h^2 kappa^2) rho + 1 = 0 with |rho| <= 1: the
    outward-decaying mode of the three-point recursion at constant V."""
    t = 1 + 0.5 * h * h * kappa2
    root = cmath.sqrt(t * t - 1)
    rho = t - root
    return rho if abs(rho) <= 1 else t + root


def edge_ratios(spec: OperatorSpec, z: complex, grid: Grid) -> tuple[complex, complex]:
    """rho_left = u(x_0)/u(x_1), rho_right = u(x_{n+1})/u(x_n)."""
    x = grid.nodes
    f = spec.family
    v_left, v_right = (complex(v) for v in spec.potential(x[[1, -2]]))
    rho_left = _decaying_ratio(v_left - z, x[1] - x[0])
    rho_right = _decaying_ratio(v_right - z, x[-1] - x[-2])
    if spec.interval is Interval.HALF_LINE:
        rho_left = complex((x[0] / x[1]) ** (0.5 + spec.m))

    outgoing_right = f is Family.NEG_EXPONENTIAL or (
        f in (Family.ISOTONIC, Family.HARMONIC) and spec.k.real == 0 and spec.k != 0
    )
    outgoing_left = f is Family.HARMONIC and spec.k.real == 0 and spec.k != 0
    if outgoing_right or outgoing_left:
        factors = kernel_factors(spec, z)
        if outgoing_right:
            rho_right = factors.right(x[-1])[0].value / factors.right(x[-2])[0].value
        if outgoing_left:
            rho_left = factors.left(x[0])[0].value / factors.left(x[1])[0].value
    return rho_left, rho_right


def _assemble(spec: OperatorSpec, z: complex, grid: Grid) -> sp.csc_matrix:
    lower, diag, upper = _stencil(grid)
    rho_left, rho_right = edge_ratios(spec, z, grid)
    d = diag + spec.potential(grid.interior) - z
    d[0] += lower[0] * rho_left
    d[-1] += upper[-1] * rho_right
    return sp.diags([lower[1:] + 0j, d, upper[:-1] + 0j], [-1, 0, 1], format="csc")


def _solve(a: sp.csc_matrix, f: np.ndarray) -> tuple[np.ndarray, float]:
    # row equilibration, then LU in natural order
    scale = 1.0 / abs(a).max(axis=1).toarray().ravel()
    d = sp.csc_matrix(sp.diags(scale) @ a)
    try:
        lu = splu(d, permc_spec="NATURAL")
    except RuntimeError:
        return np.full(a.shape[0], np.nan + 0j), float("inf")
    inverse = LinearOperator(
        d.shape,
        matvec=lambda v: lu.solve(np.asarray(v, dtype=complex).ravel()),
        rmatvec=lambda v: lu.solve(np.asarray(v, dtype=complex).ravel(), trans="H"),
        dtype=complex,
    )
    condition = float(sparse_norm(d, 1) * onenormest(inverse))
    return lu.solve(scale * f), condition


def oracle_solve(spec: OperatorSpec, z: complex, grid: Grid, f: np.ndarray) -> OracleSolve:
    z = complex(z)
    grid.check_inside(spec)
    f = np.asarray(f, dtype=complex)
    if f.shape != (grid.n,):
        raise ParameterError(f"f must have {grid.n} entries, got shape {f.shape}")

    u, condition = _solve(_assemble(spec, z, grid), f)
    if condition <= settings.CONDITION_LIMIT:
        return OracleSolve(u, z, condition)

    nudged = z + 1j * settings.SPURIOUS_NUDGE * (1 + abs(z))
    logger.warning(
        f"{spec.label}: condition {condition:.2e} at z={z}; nudging to z={nudged}"
    )
    u, condition = _solve(_assemble(spec, nudged, grid), f)
    if condition <= settings.CONDITION_LIMIT:
        return OracleSolve(u, nudged, condition, nudged=True)
    raise OracleUnreliableError(
        f"{spec.label}: discretized resolvent is ill-conditioned at z={z} "
        f"(estimate {condition:.2e} > {settings.CONDITION_LIMIT:.0e})"
    )


def oracle_resolve(spec: OperatorSpec, z: complex, grid: Grid, f: np.ndarray) -> np.ndarray:
    """u = (L_h - z)^{-1} f on ``grid.interior``."""
    return oracle_solve(spec, z, grid, f).u
