# Path: tests/special/test_registry.py
import math

import pytest

from src.core.errors import ParameterError
from src.special.hypergeom import EvalPath
from src.special.registry import REGISTRY, evaluate_named, function_names, lookup


def test_every_function_is_listed():
    names = function_names()
    assert names == sorted(names)
    for expected in (
        "f01_reg",
        "f11_reg",
        "f20_asymptotic",
        "u_alpha",
        "bessel_i2d",
        "macdonald_k2d",
        "bessel_j2d",
        "hankel2d",
        "bessel_i1d",
        "macdonald_k1d",
        "bessel_j1d",
        "hankel1d",
        "whit_i1d",
        "whit_k1d",
        "whit_i2d",
        "whit_k2d",
        "isotonic_i",
        "isotonic_k",
        "weber_i",
        "weber_k",
    ):
        assert expected in REGISTRY
    assert all(entry.derivative is not None for entry in REGISTRY.values())


def test_evaluate_named_matches_direct_call():
    out = evaluate_named("macdonald_k2d", {"m": 0.5}, 1.0)
    assert out.value == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-13)
    deriv = evaluate_named("macdonald_k1d", {"m": 0.5}, 2.0, derivative=True)
    assert deriv.value == pytest.approx(-math.exp(-2), rel=1e-12)


def test_unknown_name_lists_the_known_ones():
    with pytest.raises(ParameterError, match="macdonald_k2d"):
        lookup("nope")


def test_parameter_set_must_match():
    with pytest.raises(ParameterError, match="missing"):
        evaluate_named("f11_reg", {"a": 1}, 0.5)
    with pytest.raises(ParameterError, match="unexpected"):
        evaluate_named("f01_reg", {"c": 1, "m": 2}, 0.5)


def test_sign_and_parity_are_checked():
    with pytest.raises(ParameterError):
        evaluate_named("hankel1d", {"sign": 2, "m": 0.5}, 1.0)
    with pytest.raises(ParameterError):
        evaluate_named("weber_i", {"beta": 0.3, "parity": 0.5j}, 1.0)
    out = evaluate_named("hankel1d", {"sign": -1, "m": 0.5}, 1.0)
    assert out.value == pytest.approx(1j * complex(math.cos(1), -math.sin(1)))


def test_weber_k_left_of_the_origin_uses_the_connection_formula():
    out = evaluate_named("weber_k", {"beta": 0.37}, -1.2)
    assert math.isfinite(abs(out.value))
    assert out.path is EvalPath.CONNECTION_FORMULA
