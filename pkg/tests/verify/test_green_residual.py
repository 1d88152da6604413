# Path: tests/verify/test_green_residual.py
import cmath
import math

import numpy as np
import pytest

from src.core.errors import ParameterError
from src.operators.kernels import kernel_factors
from src.operators.operator_spec import OperatorSpec
from src.verify.green_residual import (
    boundary_limit,
    bump,
    bump_supports,
    default_window,
    green_residual,
    kernel_apply,
    pole_scan,
    refinement_order,
    residue_scan,
    window_doubling,
)
from src.verify.grid import Grid
from src.verify.quadrature import quadrature


def _grid(spec, z, h):
    a, b = default_window(spec, z)
    return Grid.for_spec(spec, a, b, h)


def test_bump_is_compactly_supported():
    xs = np.array([-2.0, -1.0, 0.0, 0.5, 1.0])
    values = bump(xs, -1.0, 1.0)
    assert values[0] == 0 and values[1] == 0 and values[-1] == 0
    assert values[2] == pytest.approx(math.exp(-1))
    supports = bump_supports(0.0, 8.0)
    assert len(supports) == 3
    assert supports[0][0] > 2.0 and supports[-1][1] < 6.0
    assert all(hi <= lo2 for (_, hi), (lo2, _) in zip(supports, supports[1:]))


def test_default_windows():
    assert default_window(OperatorSpec.bessel(0.7), -1.0) == (1e-4, 26.0)
    assert default_window(OperatorSpec.harmonic(1), 2 + 0.5j) == (-10.0, 10.0)
    with pytest.raises(ParameterError):
        default_window(OperatorSpec.bessel(0.7), 1.0)


def test_kernel_apply_against_quadrature():
    factors = kernel_factors(OperatorSpec.exponential(0), -1.0)
    xs = np.linspace(-10.0, 10.0, 2001)
    applied = kernel_apply(factors, xs, bump(xs, -1.0, 1.0))
    i = int(np.argmin(np.abs(xs - 0.5)))
    x = xs[i]
    expected, _ = quadrature(
        lambda y: math.exp(-abs(x - y)) / 2 * bump(np.array([y]), -1.0, 1.0)[0],
        -1.0,
        1.0,
        points=[x],
    )
    assert abs(applied[i] - expected) < 1e-7 * abs(expected)


def test_bessel_oracle_agrees_with_the_closed_form():
    spec, z = OperatorSpec.bessel(0.7), -1.0
    report = green_residual(spec, z, _grid(spec, z, 0.01))
    assert report.rel_l2_error < 1e-3
    assert report.jump_error < 1e-7
    assert report.wronskian_spread < 1e-8
    assert not report.nudged


@pytest.mark.slow
@pytest.mark.parametrize(
    "spec, z",
    [
        (OperatorSpec.whittaker(1, 0.5), -1.3),
        (OperatorSpec.exponential(1), -0.49),
        (OperatorSpec.harmonic(1), 2 + 0.5j),
    ],
)
def test_oracle_agreement_across_families(spec, z):
    report = green_residual(spec, z, _grid(spec, z, 0.01))
    assert report.rel_l2_error < 1e-3
    assert report.jump_error < 1e-7
    assert report.wronskian_spread < 1e-8


def test_supports_must_fit_the_window():
    spec = OperatorSpec.bessel(0.7)
    grid = Grid.geometric(1e-3, 5.0, 0.05)
    with pytest.raises(ParameterError):
        green_residual(spec, -1.0, grid, supports=[(4.0, 6.0)])


@pytest.mark.slow
def test_second_order_convergence():
    spec, z = OperatorSpec.bessel(0.7), -1.0
    report = refinement_order(spec, z, _grid(spec, z, 0.04), levels=3)
    assert len(report.orders) == 2
    assert 1.7 < report.order < 2.3


@pytest.mark.slow
def test_window_doubling_leaves_the_error_alone():
    spec, z = OperatorSpec.bessel(0.7), -1.0
    result = window_doubling(spec, z, _grid(spec, z, 0.02))
    assert result.change < 0.05


@pytest.mark.parametrize(
    "spec",
    [OperatorSpec.whittaker(2, 0.5), OperatorSpec.harmonic(1), OperatorSpec.neg_exponential(1, 0.5)],
    ids=lambda s: s.label,
)
def test_wronskian_zeros_are_the_eigenvalues(spec):
    matches = pole_scan(spec, count=3)
    assert len(matches) == 3
    for match in matches:
        assert match.mismatch < 1e-8 * max(1.0, abs(match.expected))


@pytest.mark.parametrize(
    "spec, n, x, y",
    [
        (OperatorSpec.whittaker(2, 0.5), 0, 0.7, 1.2),
        (OperatorSpec.harmonic(1), 1, 0.3, -0.4),
        (OperatorSpec.neg_exponential(1, cmath.exp(0.6j * math.pi)), 0, -0.2, 0.4),
    ],
    ids=["whittaker", "harmonic", "negexp"],
)
def test_residues_are_eigenprojections(spec, n, x, y):
    check = residue_scan(spec, n, x, y)
    assert check.mismatch < 1e-6


def test_residue_needs_an_eigenvalue_index():
    with pytest.raises(ParameterError):
        residue_scan(OperatorSpec.whittaker(-1, 0.5), 0, 0.3, 0.6)


@pytest.mark.parametrize("sign", [1, -1])
def test_exponential_kernels_tend_to_the_boundary_realizations(sign):
    report = boundary_limit(0.7, 1.0, 0.2, 0.5, sign)
    assert report.differences[0] > report.differences[1] > report.differences[2]
    assert report.differences[-1] < 1e-3 * abs(report.limit)
    for order in report.orders:
        assert 0.8 < order < 1.2


def test_boundary_limit_arguments():
    with pytest.raises(ParameterError):
        boundary_limit(0.7, 1.0, 0.2, 0.5, 0)
    with pytest.raises(ParameterError):
        boundary_limit(-0.7, 1.0, 0.2, 0.5, 1)
