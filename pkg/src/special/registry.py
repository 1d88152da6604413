# Path: src/special/registry.py
"""Name -> special function table behind the ``eval`` command."""
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from src.core.errors import ParameterError
from src.special import bessel, hypergeom, whittaker
from src.special.hypergeom import SeriesPolicy, SpecialValue
from src.special.whittaker import WhittakerParams

__all__ = ["FunctionEntry", "REGISTRY", "lookup", "evaluate_named", "function_names"]

Params = Mapping[str, complex]
Evaluator = Callable[[Params, complex, Optional[SeriesPolicy]], SpecialValue]


@dataclass(frozen=True)
class FunctionEntry:
    name: str
    params: tuple[str, ...]
    value: Evaluator
    derivative: Optional[Evaluator] = None
    description: str = ""


def _unit(params: Params, key: str) -> int:
    raw = complex(params[key])
    if raw.imag != 0 or raw.real not in (1.0, -1.0):
        raise ParameterError(f"{key} must be +1 or -1, got {raw}")
    return int(raw.real)


def _wp(params: Params) -> WhittakerParams:
    return WhittakerParams(params["beta"], params["m"])


def _order(fn: Callable[..., SpecialValue]) -> Evaluator:
    return lambda p, x, pol: fn(p["m"], x, pol)


def _signed(fn: Callable[..., SpecialValue]) -> Evaluator:
    return lambda p, x, pol: fn(_unit(p, "sign"), p["m"], x, pol)


def _whit(fn: Callable[..., SpecialValue]) -> Evaluator:
    return lambda p, x, pol: fn(_wp(p), x, pol)


def _weber_i(fn: Callable[..., SpecialValue]) -> Evaluator:
    return lambda p, x, pol: fn(p["beta"], _unit(p, "parity"), x, pol)


def _weber_k(fn: Callable[..., SpecialValue]) -> Evaluator:
    return lambda p, x, pol: fn(p["beta"], x, pol)


def _entries() -> list[FunctionEntry]:
    out = [
        FunctionEntry(
            "f01_reg",
            ("c",),
            lambda p, x, pol: hypergeom.f01_reg(p["c"], x, pol),
            lambda p, x, pol: hypergeom.f01_reg_deriv(p["c"], x, pol),
            "0F1reg(c; w)",
        ),
        FunctionEntry(
            "f11_reg",
            ("a", "c"),
            lambda p, x, pol: hypergeom.f11_reg(p["a"], p["c"], x, pol),
            lambda p, x, pol: hypergeom.f11_reg_deriv(p["a"], p["c"], x, pol),
            "1F1reg(a; c; r)",
        ),
        FunctionEntry(
            "f20_asymptotic",
            ("a", "b"),
            lambda p, x, pol: hypergeom.f20_asymptotic(p["a"], p["b"], x, pol),
            lambda p, x, pol: hypergeom.f20_asymptotic_deriv(p["a"], p["b"], x, pol),
            "2F0(a, b; -; w), optimal truncation",
        ),
        FunctionEntry(
            "u_alpha",
            ("alpha",),
            lambda p, x, pol: hypergeom.u_alpha(p["alpha"], x, pol),
            lambda p, x, pol: hypergeom.u_alpha_deriv(p["alpha"], x, pol),
            "U_alpha(z)",
        ),
    ]
    for name in ("bessel_i2d", "macdonald_k2d", "bessel_j2d",
                 "bessel_i1d", "macdonald_k1d", "bessel_j1d"):
        out.append(
            FunctionEntry(
                name,
                ("m",),
                _order(getattr(bessel, name)),
                _order(getattr(bessel, f"{name}_deriv")),
                (getattr(bessel, name).__doc__ or name).strip().splitlines()[0],
            )
        )
    for name in ("hankel2d", "hankel1d"):
        out.append(
            FunctionEntry(
                name,
                ("sign", "m"),
                _signed(getattr(bessel, name)),
                _signed(getattr(bessel, f"{name}_deriv")),
                f"{name}: sign = +1 / -1",
            )
        )
    for name in ("whit_i1d", "whit_k1d", "whit_i2d", "whit_k2d",
                 "isotonic_i", "isotonic_k"):
        out.append(
            FunctionEntry(
                name,
                ("beta", "m"),
                _whit(getattr(whittaker, name)),
                _whit(getattr(whittaker, f"{name}_deriv")),
                name,
            )
        )
    out.append(
        FunctionEntry(
            "weber_i",
            ("beta", "parity"),
            _weber_i(whittaker.weber_i),
            _weber_i(whittaker.weber_i_deriv),
            "Weber II_{beta,+-}: parity = +1 (even) / -1 (odd)",
        )
    )
    out.append(
        FunctionEntry(
            "weber_k",
            ("beta",),
            _weber_k(whittaker.weber_k),
            _weber_k(whittaker.weber_k_deriv),
            "Weber KK_beta",
        )
    )
    return out


REGISTRY: dict[str, FunctionEntry] = {e.name: e for e in _entries()}


def function_names() -> list[str]:
    return sorted(REGISTRY)


def lookup(name: str) -> FunctionEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise ParameterError(
            f"Unknown function '{name}'. Known: {', '.join(function_names())}"
        ) from None


def evaluate_named(
    name: str,
    params: Params,
    at: complex,
    derivative: bool = False,
    policy: Optional[SeriesPolicy] = None,
) -> SpecialValue:
    entry = lookup(name)
    missing = [k for k in entry.params if k not in params]
    extra = [k for k in params if k not in entry.params]
    if missing:
        raise ParameterError(f"{name}: missing parameter(s) {', '.join(missing)}")
    if extra:
        raise ParameterError(f"{name}: unexpected parameter(s) {', '.join(extra)}")
    fn = entry.derivative if derivative else entry.value
    if fn is None:
        raise ParameterError(f"{name} has no derivative")
    return fn(params, complex(at), policy)
