"""Conformal-anomaly route to the determinant ratios, computed from the
conformal factor by direct quadrature.

For metrics e^{2 psi} |dz|^2 on a plane domain the log-determinant ratio
between the curved and flat metrics is a local functional of psi: an area
integral of |grad psi|^2 plus boundary integrals of psi and its normal
derivative.  This module evaluates that functional numerically for the
two domains where the package also has closed forms (the cone-metric
annulus and the smooth curvature -1 disk), giving an independent oracle
for the analytic results in determinants.py.  Only the area term needs
quadrature; the boundary circles contribute in closed form because psi
is radial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadrature import QuadratureConfig, adaptive_quadrature

__all__ = [
    "ConformalFactor",
    "PAIntegralBreakdown",
    "grad_psi_sq",
    "pa_annulus_numeric",
    "pa_disk_numeric",
]

_DEFAULT_QUAD = QuadratureConfig()


def _positive(name: str, value: float, minimum: float = 1e-300) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValueError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value < minimum:
        raise ValueError(f"{name} must be finite and >= {minimum:g}, got {value!r}")
    return value


@dataclass(frozen=True)
class ConformalFactor:
    """Radial conformal factor of the angle 2*pi*a, curvature K cone metric
    on the unit disk: e^{2 psi(r)} |dz|^2 with
    psi(r) = (a-1) log r + log(2a) - log(1 + K r^{2a})."""

    a: float
    K: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _positive("a", self.a))
        if not isinstance(self.K, (int, float)) or isinstance(self.K, bool):
            raise ValueError(f"K must be a real number, got {self.K!r}")
        K = float(self.K)
        if not math.isfinite(K) or K + 1.0 < 1e-300:
            raise ValueError(f"K must be finite with K > -1, got {K!r}")
        object.__setattr__(self, "K", K)

    def _denominator(self, r: float) -> float:
        d = 1.0 + self.K * r ** (2.0 * self.a)
        if d < 1e-300:
            raise ValueError(f"metric degenerates at r = {r!r}: 1 + K r^2a = {d!r}")
        return d

    def psi(self, r: float) -> float:
        r = _positive("r", r)
        if r > 1.0:
            raise ValueError(f"r must lie in (0, 1], got {r!r}")
        return (self.a - 1.0) * math.log(r) + math.log(2.0 * self.a) - math.log(self._denominator(r))

    def dpsi(self, r: float) -> float:
        r = _positive("r", r)
        if r > 1.0:
            raise ValueError(f"r must lie in (0, 1], got {r!r}")
        a, K = self.a, self.K
        return (a - 1.0) / r - 2.0 * a * K * r ** (2.0 * a - 1.0) / self._denominator(r)


@dataclass(frozen=True)
class PAIntegralBreakdown:
    """The three pieces of the anomaly functional and their sum.  total is
    redundant but stored so a report can be serialized as-is."""

    area_term: float
    boundary_curvature_terms: float
    boundary_normal_terms: float
    total: float

    def __post_init__(self) -> None:
        expected = math.fsum(
            (self.area_term, self.boundary_curvature_terms, self.boundary_normal_terms)
        )
        if self.total != expected:
            raise ValueError("total must be the exact sum of the three terms")

    @classmethod
    def create(cls, area: float, curvature: float, normal: float) -> "PAIntegralBreakdown":
        return cls(area, curvature, normal, math.fsum((area, curvature, normal)))


def grad_psi_sq(a: float, K: float, r: float) -> float:
    """|grad psi|^2 = psi'(r)^2 for the radial cone conformal factor."""
    d = ConformalFactor(a, K).dpsi(r)
    return d * d


def _area_term_closed_form(a: float, K: float) -> float:
    # -(1/6) * integral of psi'(r)^2 r dr from K^(-1/2a) to 1, by hand
    return math.fsum(
        (
            -((a - 1.0) ** 2) / (12.0 * a) * math.log(K),
            -math.log1p(K) / 3.0,
            -a / (3.0 * (K + 1.0)),
            a / 6.0,
            math.log(2.0) / 3.0,
        )
    )


def pa_annulus_numeric(a: float, K: float, quad: QuadratureConfig | None = None) -> PAIntegralBreakdown:
    """Anomaly functional for the cone-metric annulus K^(-1/2a) <= |z| <= 1
    with the area term done by quadrature.  Needs K > 1 so the inner circle
    sits strictly inside the disk.  The total equals
    annulus_ratio_closed_form(a, K) up to quadrature error."""
    a = _positive("a", a)
    if not isinstance(K, (int, float)) or isinstance(K, bool):
        raise ValueError(f"K must be a real number, got {K!r}")
    K = float(K)
    if not math.isfinite(K) or K <= 1.0:
        raise ValueError(f"K must be finite and > 1, got {K!r}")
    quad = _DEFAULT_QUAD if quad is None else quad

    cf = ConformalFactor(a, K)
    rho = K ** (-1.0 / (2.0 * a))

    def integrand(r: float) -> float:
        d = cf.dpsi(r)
        return d * d * r

    n_seed = 8
    seeds = tuple(rho ** (1.0 - k / n_seed) for k in range(n_seed + 1))
    raw, _ = adaptive_quadrature(integrand, seeds, quad.abs_tol, quad.max_subdivisions)

    curvature = math.fsum(
        (
            -(math.log(2.0 * a) - math.log1p(K)) / 3.0,
            (math.log(2.0 * a) - (a - 1.0) / (2.0 * a) * math.log(K) - math.log(2.0)) / 3.0,
        )
    )
    normal = math.fsum((-0.5, 0.5 + 0.5 * a - a / (K + 1.0)))
    return PAIntegralBreakdown.create(-raw / 6.0, curvature, normal)


def pa_disk_numeric(eta: float, quad: QuadratureConfig | None = None) -> PAIntegralBreakdown:
    """Anomaly functional for the smooth curvature -1 cap of geodesic
    radius eta, realized on the flat disk of radius tanh(eta/2).  The total
    equals logdet_poincare_cap(eta) - logdet_flat_disk(tanh(eta/2)) up to
    quadrature error."""
    eta = _positive("eta", eta)
    if eta > 700.0:
        raise ValueError(f"eta must be <= 700 (cosh overflow), got {eta!r}")
    quad = _DEFAULT_QUAD if quad is None else quad

    T = math.tanh(0.5 * eta)

    def integrand(r: float) -> float:
        u = 1.0 - r * r
        return 4.0 * r ** 3 / (u * u)

    seeds = (0.0, 0.25 * T, 0.5 * T, 0.75 * T, T)
    raw, _ = adaptive_quadrature(integrand, seeds, quad.abs_tol, quad.max_subdivisions)

    # 1 - T^2 = 2/(1 + cosh eta), stable for all eta
    s2 = 2.0 / (1.0 + math.cosh(eta))
    curvature = -(math.log(2.0) - math.log(s2)) / 3.0
    normal = -0.5 * (math.cosh(eta) - 1.0)
    return PAIntegralBreakdown.create(-raw / 6.0, curvature, normal)
