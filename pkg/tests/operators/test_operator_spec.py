# Path: tests/operators/test_operator_spec.py
import math

import numpy as np
import pytest

from src.core.errors import ParameterError, UnsupportedRegimeError
from src.operators.operator_spec import (
    GAMMA_INF,
    EndpointIndex,
    Family,
    Interval,
    OperatorSpec,
    endpoint_indices,
    natural_parameter,
    spectral_parameter,
)


def test_constructors_fill_the_family():
    spec = OperatorSpec.whittaker(1, 0.5)
    assert spec.family is Family.WHITTAKER
    assert spec.beta == 1 and spec.m == 0.5
    assert spec.interval is Interval.HALF_LINE
    assert OperatorSpec.morse(0.5, 1).interval is Interval.FULL_LINE
    assert OperatorSpec.morse(0.5, 1).left_edge == -math.inf


def test_from_params_rejects_foreign_parameters():
    spec = OperatorSpec.from_params("isotonic", {"k": 1, "m": 0.5})
    assert spec.params() == {"k": 1, "m": 0.5}
    with pytest.raises(ParameterError, match="extra"):
        OperatorSpec.from_params("bessel", {"m": 0.5, "k": 1})
    with pytest.raises(ParameterError):
        OperatorSpec.from_params("negexponential", {"ell": 1 + 1j, "gamma": 0})
    with pytest.raises(ValueError):
        OperatorSpec.from_params("nosuch", {})


@pytest.mark.parametrize(
    "build",
    [
        lambda: OperatorSpec.bessel(-1.0),
        lambda: OperatorSpec.exponential(-0.5),
        lambda: OperatorSpec.neg_exponential(0.0, 0.5),
        lambda: OperatorSpec.whittaker(0, -0.5),
        lambda: OperatorSpec.morse(1, -1),
        lambda: OperatorSpec.isotonic(-1, 0.5),
        lambda: OperatorSpec.harmonic(-0.1 + 1j),
    ],
)
def test_invalid_parameters(build):
    with pytest.raises(ParameterError):
        build()


def test_morse_on_the_imaginary_axis_is_unsupported():
    with pytest.raises(UnsupportedRegimeError):
        OperatorSpec.morse(1, 2j)


def test_exponential_accepts_zero_and_complex_k():
    assert OperatorSpec.exponential(0).k == 0
    assert OperatorSpec.exponential(1 + 5j).k == 1 + 5j


def test_label_and_gamma_inf():
    assert OperatorSpec.neg_exponential(1, GAMMA_INF).label == "negexponential(ell=1, gamma=inf)"
    assert OperatorSpec.morse(0.5, 1 + 0.3j).label == "morse(beta=0.5, k=1+0.3i)"


def test_contains():
    half = OperatorSpec.bessel(0.5)
    full = OperatorSpec.harmonic(1)
    assert not half.contains(0.0)
    assert half.contains(1e-9)
    assert full.contains(-3.0)
    assert not full.contains(math.inf)


def test_potential_is_vectorized():
    x = np.array([0.5, 1.0, 2.0])
    assert np.allclose(OperatorSpec.bessel(0.5).potential(x), 0)
    assert np.allclose(OperatorSpec.harmonic(2).potential(x), 4 * x**2)
    whit = OperatorSpec.whittaker(1, 1.5).potential(x)
    assert np.allclose(whit, 2 / x**2 - 1 / x)
    assert np.allclose(OperatorSpec.neg_exponential(2, 0).potential(x), -4 * np.exp(2 * x))


def test_endpoint_indices():
    assert endpoint_indices(OperatorSpec.bessel(0.5)) == EndpointIndex(2, 0)
    assert endpoint_indices(OperatorSpec.bessel(1.5)) == EndpointIndex(0, 0)
    assert endpoint_indices(OperatorSpec.neg_exponential(1, 0.5)) == EndpointIndex(0, 2)
    assert endpoint_indices(OperatorSpec.harmonic(1)) == EndpointIndex(0, 0)


def test_parameter_maps_invert():
    bessel, harmonic = OperatorSpec.bessel(0.5), OperatorSpec.harmonic(1)
    assert spectral_parameter(bessel, 1.5) == -2.25
    assert natural_parameter(bessel, -2.25) == 1.5
    assert spectral_parameter(harmonic, 1.5) == 3
    assert natural_parameter(harmonic, 3) == 1.5
    k = 0.7 + 0.4j
    assert natural_parameter(bessel, spectral_parameter(bessel, k)) == pytest.approx(k)
