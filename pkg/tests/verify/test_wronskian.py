# Path: tests/verify/test_wronskian.py
import math

import numpy as np
import pytest

from src.core.errors import ParameterError
from src.operators.kernels import kernel_factors
from src.operators.operator_spec import OperatorSpec
from src.verify.wronskian import (
    bc_wronskian_limit,
    boundary_function,
    factor_wronskian_scan,
    wronskian_scan,
)


def test_constant_wronskian():
    mean, spread = wronskian_scan(math.sin, math.cos, math.cos, lambda x: -math.sin(x), [0.1, 0.7, 2.3])
    assert mean == pytest.approx(-1.0)
    assert spread < 1e-15
    with pytest.raises(ParameterError):
        wronskian_scan(math.sin, math.cos, math.cos, math.sin, [])


@pytest.mark.parametrize(
    "spec, z, points",
    [
        (OperatorSpec.bessel(0.7), -1.0, np.linspace(0.2, 4.0, 9)),
        (OperatorSpec.whittaker(1, 0.5), -1.3, np.linspace(0.3, 3.0, 7)),
        (OperatorSpec.harmonic(1), 2 + 0.5j, np.linspace(-2.0, 2.0, 7)),
    ],
)
def test_factor_wronskian_is_the_stored_one(spec, z, points):
    factors = kernel_factors(spec, z)
    mean, spread = factor_wronskian_scan(factors, points)
    assert abs(mean - factors.wronskian) < 1e-9 * abs(factors.wronskian)
    assert spread < 1e-9 * abs(factors.wronskian)


def test_boundary_function_is_a_power_at_zero():
    phi = boundary_function(OperatorSpec.bessel(0.3), "left")
    value, deriv = phi(0.25)
    assert value == pytest.approx(0.25**0.8)
    assert deriv == pytest.approx(0.8 * 0.25**-0.2)


def test_boundary_function_only_where_defined():
    with pytest.raises(ParameterError):
        boundary_function(OperatorSpec.harmonic(1), "left")
    with pytest.raises(ParameterError):
        boundary_function(OperatorSpec.bessel(0.3), "right")


def test_left_factor_satisfies_the_condition_at_zero():
    spec = OperatorSpec.bessel(0.3)
    factors = kernel_factors(spec, -1.0)

    def xi(x):
        value, deriv = factors.left(x)
        return value.value, deriv.value

    result = bc_wronskian_limit(spec, xi, "left")
    assert result.applicable
    assert abs(result.value) < 1e-6
    assert len(result.samples) == 14


def test_limit_point_endpoint_needs_no_condition():
    spec = OperatorSpec.bessel(1.5)
    result = bc_wronskian_limit(spec, lambda x: (0j, 0j), "left")
    assert not result.applicable
    assert result.value == 0
