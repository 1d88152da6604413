# Path: src/special/whittaker.py
"""Whittaker-type functions and their isotonic / Weber specializations.

    calI_{b,m}(r) = r^{1/2+m} e^{-r/2} 1F1reg(1/2+m-b; 1+2m; r)
    calK_{b,m}(r) ~ r^b e^{-r/2} 2F0(1/2+m-b, 1/2-m-b; -; -1/r)
    I_{b,m}(r)    = sqrt(2/(pi r)) calI_{b,m}(r)
    K_{b,m}(r)    = sqrt(pi/(2r)) calK_{b,m}(r)
    II_{b,m}(v)   = v^{-1/2} calI_{b/2,m/2}(v^2)
    KK_{b,m}(v)   = v^{-1/2} calK_{b/2,m/2}(v^2)
    II_{b,+-}(v)  = II_{b,-+1/2}(v)           (entire, even / odd)
    KK_b(v)       = KK_{b,1/2}(v) for Re v > 1, connection formula elsewhere

calK picks between the asymptotic sum and the connection formula the same
way U_alpha does (see :mod:`src.special.hypergeom`).
"""
import cmath
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from src.core.errors import ParameterError
from src.special.complexmath import (
    Polar,
    as_polar,
    dist_to_integer,
    reciprocal_gamma,
)
from src.special.hypergeom import (
    ASYMPTOTIC_SECTOR,
    EPSILON_LIMIT_WINDOW,
    EvalPath,
    SeriesPolicy,
    SpecialValue,
    epsilon_limit,
    select_path,
    combine,
    default_policy,
    f11_reg,
    f11_reg_deriv,
    f20_asymptotic,
    f20_asymptotic_deriv,
)

__all__ = [
    "WhittakerParams",
    "whit_i1d",
    "whit_i1d_deriv",
    "whit_k1d",
    "whit_k1d_deriv",
    "whit_i2d",
    "whit_i2d_deriv",
    "whit_k2d",
    "whit_k2d_deriv",
    "isotonic_i",
    "isotonic_i_deriv",
    "isotonic_k",
    "isotonic_k_deriv",
    "weber_i",
    "weber_i_deriv",
    "weber_k",
    "weber_k_deriv",
]

logger = logging.getLogger(__name__)

Arg = Union[complex, float, Polar]
Fn1d = Callable[["WhittakerParams", Polar, Optional[SeriesPolicy]], SpecialValue]

# |r| - |Re r| above which calI is rebuilt from calK
_OSCILLATORY_SWITCH = 12.0
# Re v above which KK_b comes from calK; near v = 0 the composed derivative
# cancels like 1/v
_WEBER_COMPOSED_FROM = 1.0
_FORMS = ("composed", "direct")


@dataclass(frozen=True)
class WhittakerParams:
    beta: complex
    m: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "m", complex(self.m))


def _polar(r: Arg, what: str) -> Polar:
    p = as_polar(r)
    if p.modulus == 0:
        raise ParameterError(f"{what} is evaluated at a nonzero argument")
    return p


def _form(form: str) -> str:
    if form not in _FORMS:
        raise ParameterError(f"form must be one of {_FORMS}, got {form!r}")
    return form


# --- calI_{b,m}: series on the two Kummer branches ---


def _branch_for(rp: Polar) -> int:
    return 1 if rp.value.real >= 0 else -1


def _i_series(
    beta: complex, m: complex, rp: Polar, branch: int, policy: SeriesPolicy
) -> SpecialValue:
    r = rp.value
    power = rp.pow(0.5 + m)
    if branch == 1:
        f = f11_reg(0.5 + m - beta, 1 + 2 * m, r, policy, allow_kummer=False)
        return f.scaled(power * cmath.exp(-0.5 * r))
    f = f11_reg(0.5 + m + beta, 1 + 2 * m, -r, policy, allow_kummer=False)
    return f.scaled(power * cmath.exp(0.5 * r))


def _i_series_deriv(
    beta: complex, m: complex, rp: Polar, branch: int, policy: SeriesPolicy
) -> SpecialValue:
    r = rp.value
    power = rp.pow(0.5 + m)
    here = _i_series(beta, m, rp, branch, policy)
    if branch == 1:
        df = f11_reg_deriv(0.5 + m - beta, 1 + 2 * m, r, policy)
        return combine(
            [((0.5 + m) / r - 0.5, here), (power * cmath.exp(-0.5 * r), df)],
            here.path,
        )
    df = f11_reg_deriv(0.5 + m + beta, 1 + 2 * m, -r, policy)
    return combine(
        [((0.5 + m) / r + 0.5, here), (-power * cmath.exp(0.5 * r), df)], here.path
    )


def _i_rebuilt(
    beta: complex, m: complex, rp: Polar, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    # calI_{b,m}(r) = e^{-+i pi a} calK_{b,m}(r) / Gamma(1/2+m+b)
    #               + e^{+-i pi b} calK_{-b,m}(e^{+-i pi} r) / Gamma(1/2+m-b),
    # a = 1/2+m-b, rotating toward the positive axis
    sign = -1 if rp.angle > 0 else 1
    turned = rp.rotate(sign * math.pi)
    a = 0.5 + m - beta
    c_here = cmath.exp(-sign * 1j * math.pi * a) * reciprocal_gamma(0.5 + m + beta)
    c_turn = cmath.exp(sign * 1j * math.pi * beta) * reciprocal_gamma(a)
    if deriv:
        here = _k_eval(beta, m, rp, policy, deriv=True)
        # d/dr calK(e^{+-i pi} r) = -calK'(e^{+-i pi} r)
        turn = _k_eval(-beta, m, turned, policy, deriv=True)
        c_turn = -c_turn
    else:
        here = _k_eval(beta, m, rp, policy, deriv=False)
        turn = _k_eval(-beta, m, turned, policy, deriv=False)
    logger.debug(f"calI_{beta},{m}({rp.value}): rebuilt from calK")
    return combine([(c_here, here), (c_turn, turn)], here.path)


def _needs_rebuild(rp: Polar) -> bool:
    return rp.modulus - abs(rp.value.real) > _OSCILLATORY_SWITCH


def whit_i1d(
    p: WhittakerParams,
    r: Arg,
    policy: Optional[SeriesPolicy] = None,
    branch: Optional[int] = None,
) -> SpecialValue:
    """calI_{b,m}(r). ``branch`` forces one side of Kummer's identity
    (+1: e^{-r/2}, argument r; -1: e^{+r/2}, argument -r)."""
    policy = policy or default_policy()
    rp = _polar(r, "calI")
    if branch is None:
        if _needs_rebuild(rp):
            return _i_rebuilt(p.beta, p.m, rp, policy, deriv=False)
        branch = _branch_for(rp)
    elif branch not in (1, -1):
        raise ParameterError(f"branch must be +1 or -1, got {branch}")
    return _i_series(p.beta, p.m, rp, branch, policy)


def whit_i1d_deriv(
    p: WhittakerParams,
    r: Arg,
    policy: Optional[SeriesPolicy] = None,
    branch: Optional[int] = None,
) -> SpecialValue:
    policy = policy or default_policy()
    rp = _polar(r, "calI'")
    if branch is None:
        if _needs_rebuild(rp):
            return _i_rebuilt(p.beta, p.m, rp, policy, deriv=True)
        branch = _branch_for(rp)
    elif branch not in (1, -1):
        raise ParameterError(f"branch must be +1 or -1, got {branch}")
    return _i_series_deriv(p.beta, p.m, rp, branch, policy)


# --- calK_{b,m} ---


def _k_asymptotic(
    beta: complex, m: complex, rp: Polar, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    r = rp.value
    a, b = 0.5 + m - beta, 0.5 - m - beta
    pref = rp.pow(beta) * cmath.exp(-0.5 * r)
    f = f20_asymptotic(a, b, -1.0 / r, policy).scaled(pref)
    if not deriv:
        return f
    df = f20_asymptotic_deriv(a, b, -1.0 / r, policy).scaled(pref / (r * r))
    return combine([(beta / r - 0.5, f), (1, df)], EvalPath.ASYMPTOTIC_AT_INF)


def _k_connection_at(
    beta: complex, m: complex, rp: Polar, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    # calK = pi/sin(2 pi m) (-calI_{b,m}/Gamma(1/2-m-b) + calI_{b,-m}/Gamma(1/2+m-b))
    branch = _branch_for(rp)
    evaluate = _i_series_deriv if deriv else _i_series
    plus = evaluate(beta, m, rp, branch, policy)
    minus = evaluate(beta, -m, rp, branch, policy)
    c = math.pi / cmath.sin(2 * math.pi * m)
    return combine(
        [
            (-c * reciprocal_gamma(0.5 - m - beta), plus),
            (c * reciprocal_gamma(0.5 + m - beta), minus),
        ],
        EvalPath.CONNECTION_FORMULA,
    )


def _k_eval(
    beta: complex, m: complex, rp: Polar, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    what = "calK'" if deriv else "calK"

    def connection() -> SpecialValue:
        if dist_to_integer(2 * m) < EPSILON_LIMIT_WINDOW:
            return epsilon_limit(
                lambda mm: _k_connection_at(beta, mm, rp, policy, deriv),
                m,
                what,
                scale=2.0,
            )
        return _k_connection_at(beta, m, rp, policy, deriv)

    return select_path(
        lambda: _k_asymptotic(beta, m, rp, policy, deriv),
        connection,
        abs(rp.angle) <= ASYMPTOTIC_SECTOR and rp.modulus > 1.0,
        what,
    )


def whit_k1d(
    p: WhittakerParams, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    return _k_eval(p.beta, p.m, _polar(r, "calK"), policy or default_policy(), False)


def whit_k1d_deriv(
    p: WhittakerParams, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    return _k_eval(p.beta, p.m, _polar(r, "calK'"), policy or default_policy(), True)


# --- 2d forms ---


def _gauged(f: SpecialValue, c: complex) -> SpecialValue:
    return f.scaled(c)


def _gauged_deriv(
    f: SpecialValue, df: SpecialValue, c: complex, r: complex
) -> SpecialValue:
    # (c r^{-1/2} f)' = c r^{-1/2} (f' - f/(2r))
    return combine([(c, df), (-c / (2 * r), f)], f.path)


def _c_i(rp: Polar) -> complex:
    return math.sqrt(2 / math.pi) * rp.sqrt().inverse().value


def _c_k(rp: Polar) -> complex:
    return math.sqrt(math.pi / 2) * rp.sqrt().inverse().value


def whit_i2d(
    p: WhittakerParams, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    rp = _polar(r, "I_{b,m}")
    return _gauged(whit_i1d(p, rp, policy), _c_i(rp))


def whit_i2d_deriv(
    p: WhittakerParams, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    rp = _polar(r, "I_{b,m}'")
    return _gauged_deriv(
        whit_i1d(p, rp, policy), whit_i1d_deriv(p, rp, policy), _c_i(rp), rp.value
    )


def whit_k2d(
    p: WhittakerParams, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    rp = _polar(r, "K_{b,m}")
    return _gauged(whit_k1d(p, rp, policy), _c_k(rp))


def whit_k2d_deriv(
    p: WhittakerParams, r: Arg, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    rp = _polar(r, "K_{b,m}'")
    return _gauged_deriv(
        whit_k1d(p, rp, policy), whit_k1d_deriv(p, rp, policy), _c_k(rp), rp.value
    )


# --- isotonic functions ---


def _halved(p: WhittakerParams) -> WhittakerParams:
    return WhittakerParams(p.beta / 2, p.m / 2)


def _composed(
    f1d: Fn1d,
    df1d: Fn1d,
    p: WhittakerParams,
    vp: Polar,
    policy: SeriesPolicy,
    deriv: bool,
) -> SpecialValue:
    # v^{-1/2} f(v^2);  derivative v^{-1/2} (2v f'(v^2) - f(v^2)/(2v))
    sq = vp.square()
    half = _halved(p)
    inv_root = vp.sqrt().inverse().value
    f = f1d(half, sq, policy)
    if not deriv:
        return f.scaled(inv_root)
    v = vp.value
    df = df1d(half, sq, policy)
    return combine([(2 * v * inv_root, df), (-inv_root / (2 * v), f)], f.path)


def _power_gauss(
    vp: Polar,
    power: complex,
    f: SpecialValue,
    df: Optional[SpecialValue],
) -> SpecialValue:
    # g(v) = v^p e^{-v^2/2} F(v^2);
    # g' = e^{-v^2/2} [(p v^{p-1} - v^{p+1}) F + 2 v^{p+1} F'(v^2)]
    v = vp.value
    gauss = cmath.exp(-0.5 * v * v)
    vp_p = vp.pow(power)
    if df is None:
        return f.scaled(vp_p * gauss)
    coef = -vp_p * v
    if power != 0:
        coef += power * vp.pow(power - 1)
    return combine([(gauss * coef, f), (2 * gauss * vp_p * v, df)], f.path)


def _isotonic_i_direct(
    p: WhittakerParams, vp: Polar, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    a, c = (1 + p.m - p.beta) / 2, 1 + p.m
    w = vp.square().value
    f = f11_reg(a, c, w, policy)
    df = f11_reg_deriv(a, c, w, policy) if deriv else None
    return _power_gauss(vp, 0.5 + p.m, f, df)


def _isotonic_k_direct(
    p: WhittakerParams, vp: Polar, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    a, b = (1 + p.m - p.beta) / 2, (1 - p.m - p.beta) / 2
    v2 = vp.square().value
    f = f20_asymptotic(a, b, -1.0 / v2, policy)
    df = None
    if deriv:
        # d/d(v^2) 2F0(-1/v^2) = 2F0'(-1/v^2) / v^4
        df = f20_asymptotic_deriv(a, b, -1.0 / v2, policy).scaled(1.0 / (v2 * v2))
    return _power_gauss(vp, p.beta - 0.5, f, df)


def isotonic_i(
    p: WhittakerParams,
    v: Arg,
    policy: Optional[SeriesPolicy] = None,
    form: str = "composed",
) -> SpecialValue:
    policy = policy or default_policy()
    vp = _polar(v, "II_{b,m}")
    if _form(form) == "direct":
        return _isotonic_i_direct(p, vp, policy, deriv=False)
    return _composed(whit_i1d, whit_i1d_deriv, p, vp, policy, deriv=False)


def isotonic_i_deriv(
    p: WhittakerParams,
    v: Arg,
    policy: Optional[SeriesPolicy] = None,
    form: str = "composed",
) -> SpecialValue:
    policy = policy or default_policy()
    vp = _polar(v, "II_{b,m}'")
    if _form(form) == "direct":
        return _isotonic_i_direct(p, vp, policy, deriv=True)
    return _composed(whit_i1d, whit_i1d_deriv, p, vp, policy, deriv=True)


def isotonic_k(
    p: WhittakerParams,
    v: Arg,
    policy: Optional[SeriesPolicy] = None,
    form: str = "composed",
) -> SpecialValue:
    """KK_{b,m}(v). The direct form is the bare asymptotic sum (large |v| only)."""
    policy = policy or default_policy()
    vp = _polar(v, "KK_{b,m}")
    if _form(form) == "direct":
        return _isotonic_k_direct(p, vp, policy, deriv=False)
    return _composed(whit_k1d, whit_k1d_deriv, p, vp, policy, deriv=False)


def isotonic_k_deriv(
    p: WhittakerParams,
    v: Arg,
    policy: Optional[SeriesPolicy] = None,
    form: str = "composed",
) -> SpecialValue:
    policy = policy or default_policy()
    vp = _polar(v, "KK_{b,m}'")
    if _form(form) == "direct":
        return _isotonic_k_direct(p, vp, policy, deriv=True)
    return _composed(whit_k1d, whit_k1d_deriv, p, vp, policy, deriv=True)


# --- Weber functions ---


def _parity(parity: int) -> int:
    if parity not in (1, -1):
        raise ParameterError(f"parity must be +1 or -1, got {parity}")
    return parity


def _weber_i_eval(
    beta: complex, parity: int, v: complex, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    # even: e^{-v^2/2} 1F1reg(1/4-b/2; 1/2; v^2)
    # odd:  v e^{-v^2/2} 1F1reg(3/4-b/2; 3/2; v^2)
    power = 0 if parity == 1 else 1
    a = (0.5 + power) / 2 - beta / 2
    c = 0.5 + power
    w = v * v
    f = f11_reg(a, c, w, policy)
    gauss = cmath.exp(-0.5 * w)
    v_p = v if power else 1
    if not deriv:
        return f.scaled(v_p * gauss)
    df = f11_reg_deriv(a, c, w, policy)
    coef = power - v_p * v
    return combine([(gauss * coef, f), (2 * gauss * v_p * v, df)], f.path)


def weber_i(
    beta: complex, parity: int, v: complex, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """II_{b,+} (even) or II_{b,-} (odd); entire in v."""
    return _weber_i_eval(
        complex(beta), _parity(parity), complex(v), policy or default_policy(), False
    )


def weber_i_deriv(
    beta: complex, parity: int, v: complex, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    return _weber_i_eval(
        complex(beta), _parity(parity), complex(v), policy or default_policy(), True
    )


def _weber_k_connection(
    beta: complex, v: complex, policy: SeriesPolicy, deriv: bool
) -> SpecialValue:
    # KK_b(v) = pi (II_{b,+}(v)/Gamma(3/4-b/2) - II_{b,-}(v)/Gamma(1/4-b/2))
    even = _weber_i_eval(beta, 1, v, policy, deriv)
    odd = _weber_i_eval(beta, -1, v, policy, deriv)
    return combine(
        [
            (math.pi * reciprocal_gamma(0.75 - beta / 2), even),
            (-math.pi * reciprocal_gamma(0.25 - beta / 2), odd),
        ],
        EvalPath.CONNECTION_FORMULA,
    )


def weber_k(
    beta: complex, v: complex, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    policy = policy or default_policy()
    beta, v = complex(beta), complex(v)
    if v.real > _WEBER_COMPOSED_FROM:
        return isotonic_k(WhittakerParams(beta, 0.5), v, policy)
    return _weber_k_connection(beta, v, policy, deriv=False)


def weber_k_deriv(
    beta: complex, v: complex, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    policy = policy or default_policy()
    beta, v = complex(beta), complex(v)
    if v.real > _WEBER_COMPOSED_FROM:
        return isotonic_k_deriv(WhittakerParams(beta, 0.5), v, policy)
    return _weber_k_connection(beta, v, policy, deriv=True)
