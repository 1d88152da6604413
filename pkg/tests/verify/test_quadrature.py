# Path: tests/verify/test_quadrature.py
import cmath
import math

import pytest

from src.core.errors import NonConvergenceError, ParameterError
from src.verify.quadrature import (
    eigenfunction_norm,
    gauss_kronrod,
    j_norm_squared,
    quadrature,
)


def test_single_panel_is_exact_for_polynomials():
    value, err = gauss_kronrod(lambda x: x**10, 0.0, 1.0)
    assert value == pytest.approx(1 / 11, rel=1e-14)
    assert err < 1e-6


def test_finite_and_reversed_limits():
    value, _ = quadrature(math.sin, 0.0, math.pi)
    assert value == pytest.approx(2.0, rel=1e-12)
    reverse, _ = quadrature(math.sin, math.pi, 0.0)
    assert reverse == pytest.approx(-2.0, rel=1e-12)
    assert quadrature(math.sin, 1.0, 1.0) == (0j, 0.0)


def test_infinite_ranges():
    value, _ = quadrature(lambda x: math.exp(-x), 0.0, math.inf)
    assert value == pytest.approx(1.0, rel=1e-10)
    value, _ = quadrature(lambda x: math.exp(-x * x), -math.inf, math.inf)
    assert value == pytest.approx(math.sqrt(math.pi), rel=1e-10)
    value, _ = quadrature(lambda x: 1 / (1 + x * x), 0.0, math.inf, transform="rational")
    assert value == pytest.approx(math.pi / 2, rel=1e-10)


def test_complex_integrand():
    value, _ = quadrature(lambda x: cmath.exp(1j * x), 0.0, math.pi / 2)
    assert value == pytest.approx(1 + 1j, rel=1e-12)


def test_breakpoints_resolve_a_kink():
    value, _ = quadrature(lambda x: abs(x - 0.3), 0.0, 1.0, points=[0.3])
    assert value == pytest.approx(0.29, rel=1e-13)


def test_arguments_are_validated():
    with pytest.raises(ParameterError):
        quadrature(math.sin, 0.0, 1.0, tol=0)
    with pytest.raises(ParameterError):
        quadrature(math.sin, 0.0, 1.0, transform="other")
    with pytest.raises(ParameterError):
        quadrature(math.sin, math.nan, 1.0)


def test_budget_exhaustion_raises():
    with pytest.raises(NonConvergenceError):
        quadrature(lambda x: math.sin(1 / x) if x > 0 else 0.0, 0.0, 1.0, tol=1e-14, max_intervals=8)


def test_non_finite_integrand():
    with pytest.raises(NonConvergenceError):
        quadrature(lambda x: math.inf, 0.0, 1.0)


@pytest.mark.parametrize("m, ell", [(0.6, 1.0), (1.0, 0.5), (2.0 + 0.3j, 1.0)])
def test_j_norm(m, ell):
    value, _ = j_norm_squared(m, ell)
    assert abs(value - 1 / (2 * m)) < 1e-6


def test_j_norm_needs_positive_order():
    with pytest.raises(ParameterError):
        j_norm_squared(-0.2)


def test_eigenfunction_norm():
    value, _ = eigenfunction_norm(lambda x: math.exp(-x * x / 2), (-math.inf, math.inf))
    assert value == pytest.approx(math.sqrt(math.pi), rel=1e-10)
