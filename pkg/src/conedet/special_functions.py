"""Gamma / zeta special functions used by the cone determinant formulas.

Everything here is self-contained double-precision scalar code:

* log-gamma (real, and the imaginary part along vertical lines) from the
  Stirling series after shifting the argument to Re z >= 10,
* digamma the same way,
* Hurwitz zeta and its s-derivative from Euler-Maclaurin summation with
  analytically differentiated terms,
* the derivative at 0 of the two-variable Barnes zeta
  sum_{m,n>=0} (a m + b n + x)^(-s), evaluated through an integral
  representation whose integrand decays like exp(-2 pi y).

All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .quadrature import QuadratureConfig, adaptive_quadrature

__all__ = [
    "EULER_GAMMA",
    "LOG_2PI",
    "BarnesArgs",
    "EvalResult",
    "log_gamma",
    "im_log_gamma",
    "digamma",
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv",
    "riemann_zeta_prime_minus1",
    "barnes_zeta_prime0",
    "barnes_zeta_prime0_orbifold",
]

EULER_GAMMA = 0.5772156649015328606065121
LOG_2PI = math.log(2.0 * math.pi)

# zeta_R'(-1) = 1/12 - log(Glaisher constant)
_ZETA_PRIME_MINUS_ONE = -0.1654211437004509292139197

_DEFAULT_QUAD = QuadratureConfig()

# Stirling series coefficients B_{2j} / (2j (2j-1)) for log Gamma.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
)

# B_{2j} / (2j) for the digamma asymptotic series.
_DIGAMMA = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)

# B_{2j} / (2j)! for Euler-Maclaurin correction terms.
_EM_COEFF = (
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
)

# The Stirling tail reaches double precision once Re z is past this line.
_STIRLING_EDGE = 10.0


def _require_positive(name: str, value: float) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValueError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be positive and finite, got {value!r}")
    return value


@dataclass(frozen=True)
class BarnesArgs:
    """Parameters (a, b, x) of the double zeta sum_{m,n>=0}(am+bn+x)^(-s)."""

    a: float
    b: float
    x: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "x"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ValueError(f"{name} must be a real number, got {v!r}")
            v = float(v)
            if not math.isfinite(v) or v < 1e-300:
                raise ValueError(f"{name} must be >= 1e-300 and finite, got {v!r}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class EvalResult:
    """A value together with an absolute error estimate and a tag naming
    the formula that produced it."""

    value: float
    abs_err: float
    formula_tag: str

    def __post_init__(self) -> None:
        if not (isinstance(self.abs_err, float) and self.abs_err >= 0.0):
            raise ValueError(f"abs_err must be a nonnegative float, got {self.abs_err!r}")
        if not self.formula_tag:
            raise ValueError("formula_tag must be a nonempty string")


def _stirling_real(x: float) -> float:
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    p = inv
    for c in _STIRLING:
        series += c * p
        p *= inv2
    return (x - 0.5) * math.log(x) - x + 0.5 * LOG_2PI + series


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    x = _require_positive("x", x)
    shift = 0.0
    while x < _STIRLING_EDGE:
        shift += math.log(x)
        x += 1.0
    return _stirling_real(x) - shift


def im_log_gamma(p: float, q: float) -> float:
    """Imaginary part of the principal log Gamma(p + i q), p > 0.

    Odd in q by construction: the q < 0 branch returns the negated
    reflection, so im_log_gamma(p, -q) == -im_log_gamma(p, q) exactly.
    """
    p = _require_positive("p", p)
    if not isinstance(q, (int, float)) or isinstance(q, bool) or not math.isfinite(float(q)):
        raise ValueError(f"q must be a finite real number, got {q!r}")
    q = float(q)
    if q == 0.0:
        return 0.0
    if q < 0.0:
        return -im_log_gamma(p, -q)

    acc = 0.0
    while p < _STIRLING_EDGE:
        acc += math.atan2(q, p)
        p += 1.0
    arg = math.atan2(q, p)
    im = (p - 0.5) * arg + q * math.log(math.hypot(p, q)) - q
    z = complex(p, q)
    inv = 1.0 / z
    inv2 = inv * inv
    series = 0j
    w = inv
    for c in _STIRLING:
        series += c * w
        w *= inv2
    return im + series.imag - acc


def digamma(x: float) -> float:
    """Logarithmic derivative of Gamma at x > 0."""
    x = _require_positive("x", x)
    acc = 0.0
    while x < 12.0:
        acc += 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    p = inv2
    for c in _DIGAMMA:
        series += c * p
        p *= inv2
    return math.log(x) - 0.5 * inv - series - acc


def _euler_maclaurin(s: float, x: float, edge: float) -> tuple[float, float, bool]:
    """Hurwitz zeta(s, x) and its s-derivative by Euler-Maclaurin with the
    expansion point pushed to x + N >= edge.  Returns (value, derivative,
    converged)."""
    n_terms = int(max(0.0, math.ceil(edge - x)))
    ssum = 0.0
    dsum = 0.0
    for k in range(n_terms):
        base = x + k
        t = base ** (-s)
        ssum += t
        dsum -= math.log(base) * t

    q = x + n_terms
    lq = math.log(q)
    qs = q ** (-s)
    tail = qs * q / (s - 1.0)
    value = ssum + tail + 0.5 * qs
    deriv = dsum + tail * (-lq - 1.0 / (s - 1.0)) - 0.5 * lq * qs

    # Correction terms C_j * P_j(s) * q^{-s-2j+1} with the rising factorial
    # P_j(s) = s (s+1) ... (s+2j-2) and its derivative carried together.
    poch = s
    dpoch = 1.0
    qpow = qs / q
    inv_q2 = 1.0 / (q * q)
    prev = math.inf
    converged = False
    for j, c in enumerate(_EM_COEFF, start=1):
        if j > 1:
            f1 = s + (2 * j - 3)
            f2 = s + (2 * j - 2)
            dpoch = dpoch * f1 * f2 + poch * (f1 + f2)
            poch = poch * f1 * f2
            qpow *= inv_q2
        term = c * poch * qpow
        dterm = c * qpow * (dpoch - poch * lq)
        size = max(abs(term), abs(dterm))
        if j > 2 and size >= prev:
            break
        value += term
        deriv += dterm
        if size <= 1e-17 * (1.0 + abs(value) + abs(deriv)):
            converged = True
            break
        prev = size
    return value, deriv, converged


def _negative_integer_value(s: float, x: float) -> float:
    """Hurwitz zeta at a negative integer s.  The Bernoulli correction
    series terminates and the remainder vanishes identically, so the
    expansion point can stay at x itself and no cancellation builds up."""
    q = x
    qs = q ** (-s)
    value = qs * q / (s - 1.0) + 0.5 * qs
    poch = s
    qpow = qs / q
    inv_q2 = 1.0 / (q * q)
    for j, c in enumerate(_EM_COEFF, start=1):
        if j > 1:
            poch *= (s + (2 * j - 3)) * (s + (2 * j - 2))
            qpow *= inv_q2
        if poch == 0.0:
            break
        value += c * poch * qpow
    return value


def _hurwitz_pair(s: float, x: float) -> tuple[float, float]:
    if not isinstance(s, (int, float)) or isinstance(s, bool) or not math.isfinite(float(s)):
        raise ValueError(f"s must be a finite real number, got {s!r}")
    s = float(s)
    x = _require_positive("x", x)
    if s == 1.0:
        raise ValueError("s = 1 is the pole of the Hurwitz zeta function")
    edge = max(18.0, abs(s) + 8.0) if s >= -1.5 else max(10.0, abs(s) + 5.0)
    value = deriv = 0.0
    for _ in range(4):
        value, deriv, converged = _euler_maclaurin(s, x, edge)
        if converged:
            break
        edge *= 2.0
    if s <= -1.0 and s.is_integer():
        value = _negative_integer_value(s, x)
    return value, deriv


def hurwitz_zeta(s: float, x: float) -> float:
    """Hurwitz zeta(s, x) = sum_{k>=0} (k+x)^(-s), continued in s."""
    return _hurwitz_pair(s, x)[0]


def hurwitz_zeta_sderiv(s: float, x: float) -> float:
    """d/ds of the Hurwitz zeta at (s, x), from the same Euler-Maclaurin
    expansion with every term differentiated analytically in s."""
    return _hurwitz_pair(s, x)[1]


def riemann_zeta_prime_minus1() -> float:
    """zeta_R'(-1), stored as a high-precision constant."""
    return _ZETA_PRIME_MINUS_ONE


def _barnes_integrand(a: float, b: float, x: float) -> Callable[[float], float]:
    p = x / a
    scale = b / a
    limit = -(scale / math.pi) * digamma(p)

    def f(y: float) -> float:
        if y < 1e-10:
            return limit
        return -2.0 * im_log_gamma(p, scale * y) / math.expm1(2.0 * math.pi * y)

    return f


def _truncation_point(a: float, b: float, x: float, abs_tol: float) -> float:
    """Smallest Y such that a crude bound on the integrand times exp(-2 pi Y)
    is below abs_tol / 10, found by a short fixed-point iteration."""
    p = x / a
    scale = b / a
    log_target = math.log(abs_tol) - math.log(10.0)
    y = 1.0
    for _ in range(4):
        qy = scale * y
        crude = 2.0 * ((qy + 1.0) * math.log(2.0 + qy + p) + math.pi * (p + 1.0)) + 1.0
        y = max(0.5, (math.log(crude) - log_target) / (2.0 * math.pi))
    return 1.05 * y + 0.5


def barnes_zeta_prime0(args: BarnesArgs, quad: QuadratureConfig | None = None) -> EvalResult:
    """d/ds at s=0 of the double zeta sum_{m,n>=0} (a m + b n + x)^(-s).

    Closed Hurwitz/log-gamma terms plus one exponentially damped integral
    over [0, y_max]; y_max is the decay-bound estimate truncated at the
    configured cap.
    """
    if not isinstance(args, BarnesArgs):
        args = BarnesArgs(*args)
    quad = _DEFAULT_QUAD if quad is None else quad
    a, b, x = args.a, args.b, args.x
    p = x / a

    y_end = min(quad.y_max_cap, _truncation_point(a, b, x, quad.abs_tol))
    seeds = [t for t in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0) if t < y_end]
    seeds.append(y_end)
    integral, quad_err = adaptive_quadrature(
        _barnes_integrand(a, b, x), seeds, quad.abs_tol, quad.max_subdivisions
    )

    r = a / b
    zh_m1 = hurwitz_zeta(-1.0, p)
    terms = (
        (-0.5 * hurwitz_zeta(0.0, p) + r * zh_m1 - (b / a) / 12.0) * math.log(a),
        0.5 * log_gamma(p),
        -0.25 * LOG_2PI,
        -r * zh_m1,
        -r * hurwitz_zeta_sderiv(-1.0, p),
        integral,
    )
    value = math.fsum(terms)
    noise = 2e-14 * (1.0 + math.fsum(abs(t) for t in terms))
    abs_err = quad_err + quad.abs_tol / 10.0 + noise
    return EvalResult(value, abs_err, "barnes-integral")


def barnes_zeta_prime0_orbifold(w: int) -> float:
    """The same derivative at parameters (1/w, 1, 1) for integer w, from a
    finite closed form in log-gamma values; no quadrature involved."""
    if not isinstance(w, int) or isinstance(w, bool):
        raise ValueError(f"w must be an integer, got {w!r}")
    if not 1 <= w <= 200:
        raise ValueError(f"w must be in [1, 200], got {w}")
    ww = float(w)
    gsum = math.fsum(j * log_gamma(j / ww) for j in range(1, w))
    return (
        _ZETA_PRIME_MINUS_ONE / ww
        - math.log(ww) / (12.0 * ww)
        - gsum / ww
        + (ww - 1.0) / 4.0 * LOG_2PI
    )
