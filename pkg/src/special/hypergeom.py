# Path: src/special/hypergeom.py
"""Regularized confluent hypergeometric kernels.

    0F1reg(c; w)     = sum w^n / (n! Gamma(c+n))
    1F1reg(a; c; r)  = sum (a)_k r^k / (k! Gamma(c+k))
    2F0(a, b; -; w)  ~ sum (a)_n (b)_n w^n / n!         (optimal truncation)
    U_alpha(z)       recessive solution of (z d^2 + (alpha+1) d - 1) v = 0

Every evaluation returns a :class:`SpecialValue` carrying the path it took and
a heuristic forward error. U_alpha is evaluated internally in terms of
s = sqrt(z) given as a :class:`Polar`, so that the Bessel and Whittaker layers
can feed rotated arguments without losing the sheet.

Where the connection formula for U_alpha cancels badly, the large-argument
expansion is resummed by its continued fraction (Steed's algorithm for K).
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Union

from src.core.config import settings
from src.core.errors import (
    AsymptoticRegimeError,
    NonConvergenceError,
    NoValidPathError,
    ParameterError,
)
from src.special.complexmath import (
    EPS,
    Polar,
    as_polar,
    dist_to_integer,
    is_nonpositive_integer,
    pochhammer,
    reciprocal_gamma,
)

__all__ = [
    "EvalPath",
    "SpecialValue",
    "SeriesPolicy",
    "default_policy",
    "combine",
    "f01_reg",
    "f01_reg_deriv",
    "f11_reg",
    "f11_reg_deriv",
    "f20_asymptotic",
    "f20_asymptotic_deriv",
    "u_alpha",
    "u_alpha_deriv",
    "u_alpha_s",
    "EPSILON_LIMIT_WINDOW",
    "ASYMPTOTIC_ACCEPT",
    "MAX_CANCELLATION",
    "RESUM_CANCELLATION",
    "epsilon_limit",
    "select_path",
]

logger = logging.getLogger(__name__)

# dist(parameter, Z) below which the connection formula is replaced by the
# two-sided epsilon evaluation
EPSILON_LIMIT_WINDOW = 1e-3
# relative error under which the asymptotic sum is taken without trying series
ASYMPTOTIC_ACCEPT = 1e-13
# max partial-sum magnitude / result magnitude before a path is rejected
MAX_CANCELLATION = 1e8
# connection-formula cancellation above which a resummed large-argument
# evaluation is tried as well
RESUM_CANCELLATION = 1e4
# |arg| of the large variable beyond which 2F0 sums are not attempted
ASYMPTOTIC_SECTOR = 0.75 * math.pi


class EvalPath(str, Enum):
    SERIES_AT_0 = "SeriesAt0"
    ASYMPTOTIC_AT_INF = "AsymptoticAtInf"
    CONNECTION_FORMULA = "ConnectionFormula"
    EPSILON_LIMIT = "EpsilonLimit"


@dataclass(frozen=True)
class SpecialValue:
    value: complex
    path: EvalPath
    err_est: float
    # max |partial term| / |value|; 1 when no cancellation happened
    cancellation: float = field(default=1.0, compare=False)

    def scaled(self, factor: complex) -> "SpecialValue":
        return SpecialValue(
            self.value * factor, self.path, self.err_est * abs(factor), self.cancellation
        )

    @property
    def rel_err(self) -> float:
        mag = abs(self.value)
        return self.err_est / mag if mag > 0 else self.err_est


@dataclass(frozen=True)
class SeriesPolicy:
    tol: float = 1e-16
    max_terms: int = 10_000
    consecutive_small: int = 3

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ParameterError(f"SeriesPolicy.tol must be > 0, got {self.tol}")
        if self.max_terms < 1:
            raise ParameterError("SeriesPolicy.max_terms must be >= 1")
        if self.consecutive_small < 1:
            raise ParameterError("SeriesPolicy.consecutive_small must be >= 1")


def default_policy() -> SeriesPolicy:
    return SeriesPolicy(
        tol=settings.SERIES_TOL,
        max_terms=settings.SERIES_MAX_TERMS,
        consecutive_small=settings.SERIES_CONSECUTIVE_SMALL,
    )


Number = Union[complex, float, int]


def combine(
    parts: list[tuple[complex, SpecialValue]], path: EvalPath
) -> SpecialValue:
    """sum c_i v_i with naive error accumulation."""
    total = 0j
    err = 0.0
    biggest = 0.0
    for coef, sv in parts:
        term = coef * sv.value
        total += term
        err += abs(coef) * sv.err_est
        biggest = max(biggest, abs(term), abs(coef) * abs(sv.value) * sv.cancellation)
    err += EPS * biggest
    cancel = biggest / abs(total) if total != 0 else math.inf
    return SpecialValue(total, path, err, max(1.0, cancel))


# --- Convergent series ---


def _sum_series(
    first: complex,
    ratio: Callable[[int], complex],
    n0: int,
    policy: SeriesPolicy,
    what: str,
) -> SpecialValue:
    """Sum first + first*ratio(n0) + ... until `consecutive_small` small terms."""
    total = first
    term = first
    biggest = abs(first)
    small_run = 0
    n = n0
    for _ in range(policy.max_terms):
        term = term * ratio(n)
        n += 1
        total += term
        mag = abs(term)
        if not (math.isfinite(mag) and cmath.isfinite(total)):
            raise NonConvergenceError(
                f"{what}: partial sums overflow after {n - n0} terms", partial=total
            )
        biggest = max(biggest, mag)
        scale = abs(total) or biggest
        if mag <= policy.tol * scale:
            small_run += 1
            if small_run >= policy.consecutive_small:
                err = mag + EPS * biggest * 2
                cancel = biggest / abs(total) if total != 0 else math.inf
                return SpecialValue(total, EvalPath.SERIES_AT_0, err, max(1.0, cancel))
        else:
            small_run = 0
    raise NonConvergenceError(
        f"{what}: no convergence after {policy.max_terms} terms", partial=total
    )


def f01_reg(c: Number, w: Number, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    """0F1reg(c; w) = sum_n w^n / (n! Gamma(c+n)); entire in c and w."""
    policy = policy or default_policy()
    c, w = complex(c), complex(w)
    if w == 0:
        return SpecialValue(reciprocal_gamma(c), EvalPath.SERIES_AT_0, 0.0)
    n0 = 0
    first = reciprocal_gamma(c)
    if is_nonpositive_integer(c):
        # 1/Gamma(c+n) vanishes for n < 1-c: start at n0 where Gamma(c+n0) = 1
        n0 = int(1 - c.real)
        first = w**n0 / math.factorial(n0)

    def ratio(n: int) -> complex:
        return w / ((n + 1) * (c + n))

    return _sum_series(first, ratio, n0, policy, "0F1")


def f01_reg_deriv(c: Number, w: Number, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    """d/dw 0F1reg(c; w) = 0F1reg(c+1; w)."""
    return f01_reg(complex(c) + 1, w, policy)


def _f11_series(a: complex, c: complex, r: complex, policy: SeriesPolicy) -> SpecialValue:
    if r == 0:
        return SpecialValue(reciprocal_gamma(c), EvalPath.SERIES_AT_0, 0.0)
    k0 = 0
    first = reciprocal_gamma(c)
    if is_nonpositive_integer(c):
        k0 = int(1 - c.real)
        first = pochhammer(a, k0) * r**k0 / math.factorial(k0)
    if first == 0:
        return SpecialValue(0j, EvalPath.SERIES_AT_0, 0.0)

    def ratio(k: int) -> complex:
        return (a + k) * r / ((k + 1) * (c + k))

    return _sum_series(first, ratio, k0, policy, "1F1")


def f11_reg(
    a: Number,
    c: Number,
    r: Number,
    policy: Optional[SeriesPolicy] = None,
    allow_kummer: bool = True,
) -> SpecialValue:
    """1F1reg(a; c; r) = sum (a)_k r^k / (k! Gamma(c+k)).

    With ``allow_kummer`` the series is summed on the side Re r >= 0 through
    1F1reg(a; c; r) = e^r 1F1reg(c-a; c; -r).
    """
    policy = policy or default_policy()
    a, c, r = complex(a), complex(c), complex(r)
    if allow_kummer and r.real < 0:
        inner = _f11_series(c - a, c, -r, policy)
        return inner.scaled(cmath.exp(r))
    return _f11_series(a, c, r, policy)


def f11_reg_deriv(
    a: Number, c: Number, r: Number, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """d/dr 1F1reg(a; c; r) = a 1F1reg(a+1; c+1; r)."""
    a = complex(a)
    return f11_reg(a + 1, complex(c) + 1, r, policy).scaled(a)


# --- Asymptotic 2F0 ---


def f20_asymptotic(
    a: Number, b: Number, w: Number, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """sum (a)_n (b)_n w^n / n!, truncated before its smallest term."""
    policy = policy or default_policy()
    a, b, w = complex(a), complex(b), complex(w)
    if w == 0:
        return SpecialValue(1 + 0j, EvalPath.ASYMPTOTIC_AT_INF, 0.0)
    total = 0j
    term = 1 + 0j
    biggest = 1.0
    for n in range(policy.max_terms):
        nxt = term * (a + n) * (b + n) * w / (n + 1)
        if nxt == 0:
            # terminating (polynomial) case: exact up to rounding
            total += term
            biggest = max(biggest, abs(term))
            return SpecialValue(total, EvalPath.ASYMPTOTIC_AT_INF, EPS * biggest * 2)
        if abs(nxt) >= abs(term):
            # `term` is the smallest; it is the first omitted one
            if n <= 1 and abs(term) > policy.tol:
                raise AsymptoticRegimeError(
                    f"2F0({a}, {b}; {w}): terms grow from n={n}", partial=total
                )
            return SpecialValue(
                total, EvalPath.ASYMPTOTIC_AT_INF, abs(term) + EPS * biggest
            )
        total += term
        biggest = max(biggest, abs(term))
        if abs(nxt) <= policy.tol * abs(total):
            return SpecialValue(
                total, EvalPath.ASYMPTOTIC_AT_INF, abs(nxt) + EPS * biggest
            )
        term = nxt
    raise NonConvergenceError("2F0: term budget exhausted", partial=total)


def f20_asymptotic_deriv(
    a: Number, b: Number, w: Number, policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """d/dw 2F0(a, b; w) = a b 2F0(a+1, b+1; w)."""
    a, b = complex(a), complex(b)
    return f20_asymptotic(a + 1, b + 1, w, policy).scaled(a * b)


# --- U_alpha ---


def _u_connection_at(alpha: complex, s: Polar, policy: SeriesPolicy) -> SpecialValue:
    # U = sqrt(pi)/sin(-pi a) F_a(z) + sqrt(pi)/sin(pi a) z^{-a} F_{-a}(z),
    # F_a(z) = 0F1reg(1+a; z), z^{-a} taken along s
    z = s.square().value
    sin_pa = cmath.sin(math.pi * alpha)
    root_pi = math.sqrt(math.pi)
    plus = f01_reg(1 + alpha, z, policy)
    minus = f01_reg(1 - alpha, z, policy)
    z_pow = s.pow(-2 * alpha)
    return combine(
        [(-root_pi / sin_pa, plus), (root_pi / sin_pa * z_pow, minus)],
        EvalPath.CONNECTION_FORMULA,
    )


def epsilon_limit(
    evaluate: Callable[[complex], SpecialValue],
    centre: complex,
    what: str,
    scale: float = 1.0,
) -> SpecialValue:
    """Average of evaluate(centre +- eps); `scale * parameter` is the quantity
    whose integer values are the poles."""
    eps = 1e-5 * (1 + abs(centre))
    while min(
        dist_to_integer(scale * (centre - eps)), dist_to_integer(scale * (centre + eps))
    ) < 1e-3 * eps:
        eps *= 1.37
    lo = evaluate(centre - eps)
    hi = evaluate(centre + eps)
    value = 0.5 * (lo.value + hi.value)
    # first-order pole parts cancel; the O(eps^2) bias is charged to err_est
    err = 0.5 * (lo.err_est + hi.err_est) + abs(hi.value - lo.value) * eps
    logger.debug(f"{what}: epsilon-limit at {centre} (eps={eps:.1e})")
    return SpecialValue(
        value, EvalPath.EPSILON_LIMIT, err, max(lo.cancellation, hi.cancellation)
    )


def _u_asymptotic(alpha: complex, s: Polar, policy: SeriesPolicy) -> SpecialValue:
    # U ~ e^{-2s} s^{-alpha-1/2} 2F0(1/2+alpha, 1/2-alpha; -; -1/(4s))
    w = -1.0 / (4.0 * s.value)
    series = f20_asymptotic(0.5 + alpha, 0.5 - alpha, w, policy)
    return series.scaled(cmath.exp(-2.0 * s.value) * s.pow(-alpha - 0.5))


def _k_continued_fraction(nu: complex, x: complex, policy: SeriesPolicy) -> tuple[complex, float]:
    """K_nu(x), Re x > 0, from Steed's evaluation of the continued fraction
    that sums the large-x expansion at an order mu with |Re mu| <= 1/2,
    followed by the upward order recurrence. Returns (value, rel error)."""
    if nu.real < 0:
        nu = -nu
    steps = math.floor(nu.real + 0.5)
    mu = nu - steps
    a1 = 0.25 - mu * mu
    b = 2 * (1 + x)
    d = 1 / b
    h = delh = d
    q1, q2 = 0j, 1 + 0j
    q = c = a1
    a = -a1
    s = 1 + q * delh
    for i in range(2, policy.max_terms + 2):
        a -= 2 * (i - 1)
        c = -a * c / i
        q1, q2 = q2, (q1 - b * q2) / a
        q += c * q2
        b += 2
        d = 1 / (b + a * d)
        delh = (b * d - 1) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels) <= policy.tol * abs(s):
            break
    else:
        raise NonConvergenceError(
            f"K_{nu}({x}): continued fraction did not settle in {policy.max_terms} steps"
        )
    k_mu = cmath.sqrt(math.pi / (2 * x)) * cmath.exp(-x) / s
    k_up = k_mu * (mu + x + 0.5 - a1 * h) / x
    for j in range(1, steps):
        k_mu, k_up = k_up, k_mu + 2 * (mu + j) / x * k_up
    value = k_up if steps else k_mu
    return value, policy.tol + 16 * EPS * (1 + steps)


def _u_resummed(alpha: complex, s: Polar, policy: SeriesPolicy) -> SpecialValue:
    # U_alpha(s^2) = 2 K_alpha(2s) / (sqrt(pi) s^alpha)
    k, rel = _k_continued_fraction(alpha, 2 * s.value, policy)
    value = 2 * k / (math.sqrt(math.pi) * s.pow(alpha))
    return SpecialValue(value, EvalPath.ASYMPTOTIC_AT_INF, rel * abs(value))


def select_path(
    asymptotic: Callable[[], SpecialValue],
    connection: Callable[[], SpecialValue],
    asymptotic_allowed: bool,
    what: str,
    resummed: Optional[Callable[[], SpecialValue]] = None,
) -> SpecialValue:
    """Take the asymptotic sum when it is accurate, else the smaller error.

    When the connection formula cancelled by more than RESUM_CANCELLATION
    and a ``resummed`` evaluation is given, it competes as well.
    """
    alternatives: list[SpecialValue] = []
    if asymptotic_allowed:
        try:
            asym = asymptotic()
        except NonConvergenceError:
            asym = None
        if asym is not None:
            if asym.rel_err < ASYMPTOTIC_ACCEPT:
                return asym
            alternatives.append(asym)
    conn = connection()
    if resummed is not None and conn.cancellation > RESUM_CANCELLATION:
        try:
            alternatives.append(resummed())
        except NonConvergenceError as exc:
            logger.debug(f"{what}: resummation failed ({exc})")
    best = min(alternatives + [conn], key=lambda sv: sv.rel_err)
    if best is not conn:
        logger.debug(
            f"{what}: {best.path.value} path (rel err {best.rel_err:.1e}, "
            f"connection cancelled {conn.cancellation:.1e})"
        )
        return best
    if conn.cancellation > MAX_CANCELLATION and not alternatives:
        raise NoValidPathError(
            f"{what}: connection formula lost {math.log10(conn.cancellation):.1f} "
            "digits and the asymptotic regime is not reached",
            partial=conn.value,
        )
    return conn


def u_alpha_s(
    alpha: Number, s: Union[Polar, complex], policy: Optional[SeriesPolicy] = None
) -> SpecialValue:
    """U_alpha(s^2), with every power of z taken along the angle of s."""
    policy = policy or default_policy()
    alpha = complex(alpha)
    s = as_polar(s)
    if s.modulus == 0:
        raise ParameterError("U_alpha is singular at z = 0")

    def connection() -> SpecialValue:
        if dist_to_integer(alpha) < EPSILON_LIMIT_WINDOW:
            return epsilon_limit(
                lambda a: _u_connection_at(a, s, policy), alpha, "U_alpha"
            )
        return _u_connection_at(alpha, s, policy)

    def resummed() -> SpecialValue:
        return _u_resummed(alpha, s, policy)

    return select_path(
        lambda: _u_asymptotic(alpha, s, policy),
        connection,
        abs(s.angle) <= ASYMPTOTIC_SECTOR and s.modulus > 1.0,
        "U_alpha",
        resummed=resummed if abs(s.angle) < 0.5 * math.pi else None,
    )


def u_alpha(alpha: Number, z: Number, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    """U_alpha(z) on the principal sheet (z != 0)."""
    z = complex(z)
    if z == 0:
        raise ParameterError("u_alpha requires z != 0")
    return u_alpha_s(alpha, Polar.from_complex(z).sqrt(), policy)


def u_alpha_deriv(alpha: Number, z: Number, policy: Optional[SeriesPolicy] = None) -> SpecialValue:
    """U_alpha'(z) = -U_{alpha+1}(z)."""
    return u_alpha(complex(alpha) + 1, z, policy).scaled(-1)
