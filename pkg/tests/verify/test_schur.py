# Path: tests/verify/test_schur.py
import math

import mpmath
import numpy as np
import pytest

from src.core.errors import ParameterError
from src.operators.kernels import kernel_factors
from src.operators.operator_spec import OperatorSpec
from src.verify.schur import (
    SchurGrowth,
    SeparableKernel,
    exponential_separable,
    hilbert_schmidt_norm,
    schur_bound,
    schur_growth,
)

FREE = SeparableKernel(math.exp, lambda x: math.exp(-x), 2)


def test_free_kernel_is_bounded_by_one_over_p_squared():
    result = schur_bound(FREE, -20.0, 20.0, n=401)
    assert result.finite
    assert result.c1 == pytest.approx(1.0, abs=5e-3)
    assert result.c2 == pytest.approx(result.c1, rel=1e-12)
    assert result.bound == pytest.approx(1.0, abs=5e-3)


def test_split_window_has_four_blocks():
    result = schur_bound(FREE, -10.0, 10.0, split=0.0, n=201)
    assert len(result.blocks) == 4
    assert result.bound >= max(bl.bound for bl in result.blocks)
    assert result.c1 <= 1.0 + 5e-3


def test_separable_kernel_from_factors():
    kernel = SeparableKernel.from_factors(kernel_factors(OperatorSpec.exponential(0), -1.0))
    for x, y in ((-0.3, 0.8), (1.2, 0.1)):
        assert kernel(x, y) == pytest.approx(FREE(x, y), rel=1e-12)


def test_wrong_sign_exponential_kernel_grows_with_the_window():
    kernel = exponential_separable(-1, 0.7)
    growth = schur_growth(kernel, [(-5.0, 1.0), (-5.0, 2.0), (-5.0, 3.0)], spacing=0.05)
    assert growth.growing
    assert not growth.saturated


def test_decaying_exponential_kernel_saturates():
    kernel = exponential_separable(1, 0.7)
    growth = schur_growth(kernel, [(-40.0, 6.0), (-45.0, 7.0)], spacing=0.05)
    assert not growth.growing
    assert all(math.isfinite(b) for b in growth.bounds)


def test_scaled_exponential_kernel_far_out():
    kernel = exponential_separable(1, 0.7)
    x, y = 6.5, 7.0
    expected = mpmath.besseli(0.7, mpmath.exp(x)) * mpmath.besselk(0.7, mpmath.exp(y))
    assert kernel(x, y) == pytest.approx(complex(expected), rel=1e-9)
    assert kernel(y, x) == kernel(x, y)
    block = kernel.matrix(np.array([x, y]), np.array([x, y]))
    assert block[0, 1] == pytest.approx(complex(expected), rel=1e-9)


def test_growth_flags():
    assert SchurGrowth(((0, 1), (0, 2)), (1.0, math.inf)).growing
    assert SchurGrowth(((0, 1), (0, 2)), (1.0, 1.0000001)).saturated


def test_hilbert_schmidt_off_diagonal_block():
    value = hilbert_schmidt_norm(FREE, (0.0, 1.0), (2.0, 3.0), n=201)
    expected = math.sqrt(0.25 * (math.e**2 - 1) / 2 * (math.exp(-4) - math.exp(-6)) / 2)
    assert value == pytest.approx(expected, rel=1e-4)


def test_argument_errors():
    with pytest.raises(ParameterError):
        schur_bound(FREE, 1.0, 0.0)
    with pytest.raises(ParameterError):
        schur_bound(FREE, 0.0, 1.0, split=2.0)
    with pytest.raises(ParameterError):
        schur_bound(FREE, 0.0, 1.0, n=4)
    with pytest.raises(ParameterError):
        exponential_separable(0, 0.5)
