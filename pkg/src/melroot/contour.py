"""Root-minus-pole counting on circular contours.

Two routes to N_roots - N_poles = (1/2*pi*i) * contour integral of f'/f:

* the direct route, evaluating f'/f from reference callables; and
* the approximated route, where 1/f is replaced by the exponential-sum
  approximation, the exponential expanded as a power series, and the
  resulting powers of Z written as Mellin convolutions of z(t) alone.

Stage-by-stage integrand access is exposed so each approximation step can be
inspected separately at any contour angle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import DomainError, NonConvergenceError, PoleError, UnsupportedOrderError
from .expsum import ExpSumTable, inv_approx, inv_approx_truncated
from .mellin import MellinIntegrand, deriv_times_power, power_transform
from .numerics import csgn, csgn_smooth
from .quadrature import QuadratureConfig, integrate_periodic

__all__ = [
    "CircularContour",
    "FactoredFunction",
    "PipelineConfig",
    "CountResult",
    "count_direct",
    "count_pipeline",
    "integrand_direct",
    "integrand_stage1",
    "integrand_stage2",
    "kernel_mellin",
]

_TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class CircularContour:
    """Circle s(phi) = center + radius * e**(i*phi), traversed once
    counterclockwise, discretized with ``nodes`` uniform angles."""

    center: complex
    radius: float
    nodes: int = 64

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if self.nodes < 1:
            raise ValueError(f"nodes must be positive, got {self.nodes}")

    def point(self, phi: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * phi)

    def velocity(self, phi: float) -> complex:
        """ds/dphi = i * radius * e**(i*phi)."""
        return 1j * self.radius * cmath.exp(1j * phi)


@dataclass(frozen=True)
class FactoredFunction:
    """f(s) = K(s) * Z(s) with Z the Mellin transform of ``zf.z``.

    ``f_reference`` / ``fprime_reference``, when supplied, are independent
    oracles for f and f' used by the direct route and by the sign factor of
    the approximated route.
    """

    zf: MellinIntegrand
    K: Callable[[complex], complex]
    Kprime: Callable[[complex], complex]
    f_reference: Optional[Callable[[complex], complex]] = None
    fprime_reference: Optional[Callable[[complex], complex]] = None


@dataclass(frozen=True)
class PipelineConfig:
    """Approximation orders and tolerances for the convolution route.

    ``series_order`` is capped at 1: each additional order needs the
    Z'(s) * Z(s)**k convolution for k >= 2, which has no supported
    representation here.
    """

    table: ExpSumTable
    series_order: int = 1
    quad: QuadratureConfig = field(default_factory=QuadratureConfig)
    csgn_mode: str = "reference"
    eps: float | None = None

    def __post_init__(self):
        if self.series_order < 0:
            raise ValueError(f"series_order must be non-negative, got {self.series_order}")
        if self.series_order > 1:
            raise UnsupportedOrderError(
                f"series_order is capped at 1, got {self.series_order}"
            )
        if self.csgn_mode not in ("reference", "smooth"):
            raise ValueError(f"csgn_mode must be 'reference' or 'smooth', got {self.csgn_mode!r}")
        if self.csgn_mode == "smooth" and (self.eps is None or self.eps <= 0.0):
            raise ValueError("smooth csgn mode requires eps > 0")


@dataclass(frozen=True)
class CountResult:
    """Raw contour integral, its nearest integer, and the distance between
    them (the winding residual -- a quality measure for the count)."""

    value: complex
    rounded: int
    residual: float

    @classmethod
    def from_value(cls, value: complex) -> "CountResult":
        rounded = int(round(value.real))
        return cls(value=value, rounded=rounded, residual=abs(value - rounded))

    @property
    def reliable(self) -> bool:
        """False when the integral sits suspiciously far from an integer
        (contour too close to a root/pole, or too few nodes)."""
        return self.residual < 0.25


def _require_references(ff: FactoredFunction) -> None:
    if ff.f_reference is None or ff.fprime_reference is None:
        raise ValueError(
            "direct evaluation needs both f_reference and fprime_reference"
        )


def integrand_direct(ff: FactoredFunction, c: CircularContour, phi: float) -> complex:
    """(1/2*pi*i) * f'(s)/f(s) * ds/dphi at s = s(phi), from the references."""
    _require_references(ff)
    s = c.point(phi)
    f = ff.f_reference(s)
    if f == 0:
        raise PoleError(f"f vanishes on the contour at phi = {phi}")
    return ff.fprime_reference(s) / f * c.velocity(phi) / _TWO_PI_I


def integrand_stage1(ff: FactoredFunction, c: CircularContour, phi: float, table: ExpSumTable) -> complex:
    """Direct integrand with 1/f replaced by the exponential-sum
    approximation of the reciprocal."""
    _require_references(ff)
    s = c.point(phi)
    f = ff.f_reference(s)
    return ff.fprime_reference(s) * inv_approx(f, table) * c.velocity(phi) / _TWO_PI_I


def integrand_stage2(
    ff: FactoredFunction, c: CircularContour, phi: float, table: ExpSumTable, n: int
) -> complex:
    """As stage 1, with each exponential truncated to its degree-``n``
    Taylor polynomial."""
    _require_references(ff)
    s = c.point(phi)
    f = ff.f_reference(s)
    return (
        ff.fprime_reference(s)
        * inv_approx_truncated(f, table, n)
        * c.velocity(phi)
        / _TWO_PI_I
    )


def _sign_factor(ff: FactoredFunction, s: complex, cfg: PipelineConfig) -> complex:
    if cfg.csgn_mode == "reference":
        if ff.f_reference is None:
            raise ValueError("csgn_mode 'reference' needs f_reference; use 'smooth' otherwise")
        return complex(csgn(ff.f_reference(s)))
    from .mellin import transform  # local import keeps module deps one-way

    f_val = ff.K(s) * transform(ff.zf, s, cfg.quad).value
    return csgn_smooth(f_val, cfg.eps)


def kernel_mellin(ff: FactoredFunction, c: CircularContour, phi: float, cfg: PipelineConfig) -> complex:
    """Fully expanded counting-integrand at contour angle phi.

    Every Z-quantity is computed from z(t) through the convolution
    representations (never from the reference oracle); the reference enters
    only through the sign factor, matching the construction of the
    expansion. The double sum over exponential terms j and series orders k
    collapses over j because the csgn factor does not depend on j.
    """
    s = c.point(phi)
    sgn = _sign_factor(ff, s, cfg)
    Ks = ff.K(s)
    Kp = ff.Kprime(s)
    total = 0j
    for k in range(cfg.series_order + 1):
        try:
            z_pow = power_transform(ff.zf, k + 1, s, cfg.quad).value
            zp_zk = deriv_times_power(ff.zf, k, s, cfg.quad).value
        except NonConvergenceError as exc:
            raise NonConvergenceError(
                f"Mellin quadrature failed in series term k={k} at phi={phi}: {exc}",
                best_estimate=exc.best_estimate,
                error_estimate=exc.error_estimate,
                dimension=exc.dimension,
            ) from exc
        weight = sum(a * cj**k for a, cj in zip(cfg.table.alpha, cfg.table.c))
        body = Kp * Ks**k * z_pow + Ks ** (k + 1) * zp_zk
        total += sgn ** (k + 1) * ((-1) ** k / math.factorial(k)) * weight * body
    return total * c.velocity(phi) / _TWO_PI_I


def count_direct(ff: FactoredFunction, c: CircularContour) -> CountResult:
    """Roots minus poles inside the contour, from the reference f'/f.

    Exact up to trapezoid error, which decays spectrally with the node
    count for contours staying clear of all roots and poles.
    """
    _require_references(ff)
    value = integrate_periodic(lambda phi: integrand_direct(ff, c, phi), c.nodes)
    return CountResult.from_value(value)


def count_pipeline(ff: FactoredFunction, c: CircularContour, cfg: PipelineConfig) -> CountResult:
    """Roots minus poles through the approximated convolution kernel.

    The result carries the exponential-sum and series-truncation error; the
    integer rounding is only meaningful when the residual is small.

    The whole contour must lie in the convergence strip of ``ff.zf``; that is
    checked up front so a partially out-of-strip contour fails cleanly
    instead of after integrating the in-strip arc.
    """
    lo, hi = ff.zf.convergence_strip
    re_min = c.center.real - c.radius
    re_max = c.center.real + c.radius
    if not (lo < re_min and re_max < hi):
        raise DomainError(
            f"contour spans Re(s) in [{re_min}, {re_max}], outside the "
            f"convergence strip ({lo}, {hi})"
        )
    value = integrate_periodic(lambda phi: kernel_mellin(ff, c, phi, cfg), c.nodes)
    return CountResult.from_value(value)
