"""Adaptive Gauss-Kronrod quadrature on a finite interval.

A 7-point Gauss rule embedded in a 15-point Kronrod rule gives a value
and a per-interval error estimate; the interval with the worst estimate
is bisected until the summed estimate drops below the requested absolute
tolerance.  Everything is plain float arithmetic, so a given integrand
and configuration always produce bitwise identical results.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

__all__ = ["QuadratureConfig", "QuadratureError", "adaptive_quadrature"]


class QuadratureError(RuntimeError):
    """Raised when the subdivision limit is hit before the tolerance."""


@dataclass(frozen=True)
class QuadratureConfig:
    """Knobs for the adaptive integrator.

    abs_tol          target absolute error of the integral
    y_max_cap        hard truncation of a semi-infinite integration variable
    max_subdivisions bisection budget before giving up
    """

    abs_tol: float = 1e-12
    y_max_cap: float = 60.0
    max_subdivisions: int = 400

    def __post_init__(self) -> None:
        if not (isinstance(self.abs_tol, float) and self.abs_tol > 0.0 and math.isfinite(self.abs_tol)):
            raise ValueError(f"abs_tol must be a positive finite float, got {self.abs_tol!r}")
        if not (isinstance(self.y_max_cap, float) and self.y_max_cap > 0.0 and math.isfinite(self.y_max_cap)):
            raise ValueError(f"y_max_cap must be a positive finite float, got {self.y_max_cap!r}")
        if not (isinstance(self.max_subdivisions, int) and self.max_subdivisions >= 1):
            raise ValueError(f"max_subdivisions must be an integer >= 1, got {self.max_subdivisions!r}")


# Kronrod-15 abscissae on [-1, 1] (positive half) and weights; the odd
# entries are the embedded Gauss-7 nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    fc = f(c)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        dx = h * _XGK[i]
        f1 = f(c - dx)
        f2 = f(c + dx)
        kron += _WGK[i] * (f1 + f2)
        if i % 2 == 1:
            gauss += _WG[i // 2] * (f1 + f2)
    kron *= h
    gauss *= h
    return kron, abs(kron - gauss)


def adaptive_quadrature(
    f: Callable[[float], float],
    points: Sequence[float],
    abs_tol: float,
    max_subdivisions: int,
) -> tuple[float, float]:
    """Integrate f over [points[0], points[-1]] seeded at the given breakpoints.

    Returns (value, error_estimate).  Raises QuadratureError if the
    estimate cannot be brought below abs_tol within the bisection budget,
    or if the integrand produces non-finite values.
    """
    if len(points) < 2:
        raise ValueError("need at least two breakpoints")
    pts = list(points)
    for lo, hi in zip(pts, pts[1:]):
        if not hi > lo:
            raise ValueError("breakpoints must be strictly increasing")

    heap: list[tuple[float, float, float, float]] = []
    total_err = 0.0
    for lo, hi in zip(pts, pts[1:]):
        val, err = _gk15(f, lo, hi)
        heapq.heappush(heap, (-err, lo, hi, val))
        total_err += err

    splits = 0
    while total_err > abs_tol:
        if not math.isfinite(total_err):
            raise QuadratureError("integrand produced a non-finite value")
        if splits >= max_subdivisions:
            raise QuadratureError(
                f"error estimate {total_err:.3e} above abs_tol {abs_tol:.3e} "
                f"after {splits} subdivisions"
            )
        neg_err, lo, hi, _val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            raise QuadratureError("interval too narrow to bisect further")
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        total_err += e1 + e2 + neg_err
        splits += 1

    segments = sorted(heap, key=lambda t: t[1])
    value = math.fsum(seg[3] for seg in segments)
    err = math.fsum(-seg[0] for seg in segments)
    if not (math.isfinite(value) and math.isfinite(err)):
        raise QuadratureError("integrand produced a non-finite value")
    return value, err
