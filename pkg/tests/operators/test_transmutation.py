# Path: tests/operators/test_transmutation.py
import pytest

from src.core.errors import ParameterError, UnsupportedPairError
from src.operators.operator_spec import GAMMA_INF, OperatorSpec
from src.operators.transmutation import (
    Transmutation,
    pair_specs,
    parity_split,
    transmute,
    transmute_pair,
)

POINTS = [
    ("exp-bessel", {"k": 1 + 0.2j, "m": 0.7}, 0.3, 0.9),
    ("exp-bessel", {"k": 0.6 - 0.4j, "m": 1.3 + 0.2j}, -0.5, 0.2),
    ("isotonic-whittaker", {"k": 1, "m": 1.2, "beta": 0.3 + 0.2j}, 0.7, 1.3),
    ("isotonic-whittaker", {"k": 0.8 + 0.1j, "m": 0.6, "beta": -0.4 + 0.5j}, 1.1, 0.4),
    ("morse-whittaker", {"beta": 0.8, "k": 1.1, "m": 0.9}, -0.2, 0.5),
    ("morse-whittaker", {"beta": -0.5 + 0.3j, "k": 0.7 + 0.2j, "m": 1.4}, 0.6, 0.1),
    ("isotonic-morse", {"k": 0.9, "m": 1.4, "beta": 0.4}, 0.8, 1.5),
    ("isotonic-morse", {"k": 1.2 + 0.3j, "m": 0.8 + 0.1j, "beta": 0.2 - 0.6j}, 1.7, 0.6),
    ("negexp-bessel", {"ell": 1, "gamma": 0.5, "m": 0.8}, -0.3, 0.4),
    ("negexp-bessel", {"ell": 0.7, "gamma": GAMMA_INF, "m": 1.1 + 0.2j}, 0.2, -0.6),
]


@pytest.mark.parametrize("pair, params, x, y", POINTS)
def test_identity_holds(pair, params, x, y):
    result = transmute_pair(Transmutation(pair), params, x, y)
    assert result.mismatch < 1e-9


def test_pair_specs_exchange_parameters():
    source, target, z = pair_specs(Transmutation.ISOTONIC_WHITTAKER, {"k": 1, "m": 1.2, "beta": 0.3})
    assert source == OperatorSpec.whittaker(0.3, 0.6)
    assert target == OperatorSpec.isotonic(1, 1.2)
    assert z == 0.6
    with pytest.raises(ParameterError, match="missing"):
        pair_specs(Transmutation.EXP_BESSEL, {"k": 1})


def test_mismatched_parameters_are_refused():
    with pytest.raises(ParameterError):
        transmute(OperatorSpec.bessel(0.5), OperatorSpec.exponential(1), -0.49, 0.1, 0.2)
    with pytest.raises(ParameterError):
        # z on the continuous spectrum: Re sqrt(-z) = 0
        transmute(OperatorSpec.bessel(0.5), OperatorSpec.exponential(1), 0.25, 0.1, 0.2)


def test_unknown_pair():
    with pytest.raises(UnsupportedPairError):
        transmute(OperatorSpec.harmonic(1), OperatorSpec.bessel(0.5), -1.0, 0.3, 0.4)


@pytest.mark.parametrize("z", [2 + 0.5j, -1.0])
@pytest.mark.parametrize("u, v", [(0.4, 0.9), (0.5, -0.7)])
def test_oscillator_splits_into_neumann_and_dirichlet(z, u, v):
    split = parity_split(1.0, z, u, v)
    assert split.mismatch < 1e-9


def test_parity_split_needs_nonzero_points():
    with pytest.raises(ParameterError):
        parity_split(1.0, -1.0, 0.0, 0.5)
