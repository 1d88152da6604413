# Path: src/verify/__init__.py
from .fd_solver import fd_apply, oracle_resolve
from .green_residual import GreenResidualReport, green_residual
from .grid import Clustering, Grid
from .quadrature import quadrature
from .schur import schur_bound
from .wronskian import bc_wronskian_limit, wronskian_scan

__all__ = [
    "fd_apply",
    "oracle_resolve",
    "GreenResidualReport",
    "green_residual",
    "Clustering",
    "Grid",
    "quadrature",
    "schur_bound",
    "bc_wronskian_limit",
    "wronskian_scan",
]
