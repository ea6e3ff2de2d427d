"""Riemann zeta instantiation.

zeta(s) is represented as K(s) * Z(s) with z(t) = t / cosh(t)**2 and the
closed-form prefactor K(s) = 2**(s-1) / ((1 - 2**(1-s)) * Gamma(s+1)),
valid for Re(s) > -1. An independent reference oracle evaluates zeta and
zeta' through the alternating (Dirichlet eta) series with binomial
convergence acceleration, so the Mellin route can be checked against it.
"""

from __future__ import annotations

import cmath
import math
import warnings
from fractions import Fraction

import numpy as np

from .contour import FactoredFunction
from .errors import PoleError
from .mellin import MellinIntegrand
from .numerics import digamma, log_gamma

__all__ = [
    "z_integrand",
    "prefactor",
    "prefactor_derivative",
    "zeta_reference",
    "zeta_prime_reference",
    "build_zeta_factored",
]

_LN2 = math.log(2.0)

# Binomial-weighted acceleration of the alternating series
# eta(s) = sum (-1)**(k+1) k**-s; with 50 terms the truncation error is
# below 1e-20 * exp(pi |Im s| / 2), i.e. >10 significant digits for
# |Im s| <= 20.  Weights are computed in exact rational arithmetic once.
_ETA_TERMS = 50


def _eta_weights(n: int) -> list[float]:
    d: list[Fraction] = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    return [float((d[k] - dn) / dn) for k in range(n)]


_ETA_W = _eta_weights(_ETA_TERMS)
_ETA_SIGNED = [((-1) ** k) * w for k, w in enumerate(_ETA_W)]
_ETA_LOGS = [math.log(k + 1) for k in range(_ETA_TERMS)]

_CONDITIONING_CUTOFF = 1e-6


def _eta_factor(s: complex) -> complex:
    """1 - 2**(1-s), the factor relating eta and zeta; validated for poles
    and conditioning."""
    lam = 1.0 - cmath.exp((1.0 - s) * _LN2)
    if lam == 0:
        raise PoleError(f"zeta representation is singular at s = {s}")
    if abs(lam) < _CONDITIONING_CUTOFF:
        warnings.warn(
            f"1 - 2**(1-s) = {lam:.2e} at s = {s}: eta-series evaluation is "
            f"ill-conditioned this close to the Re(s) = 1 resonance line",
            RuntimeWarning,
            stacklevel=3,
        )
    return lam


def zeta_reference(s: complex) -> complex:
    """zeta(s) via the accelerated eta series; >=10 significant digits for
    Re(s) > -1, |Im(s)| <= 20. Pole at s = 1."""
    s = complex(s)
    lam = _eta_factor(s)
    acc = 0j
    for w, ln in zip(_ETA_SIGNED, _ETA_LOGS):
        acc += w * cmath.exp(-s * ln)
    return -acc / lam


def zeta_prime_reference(s: complex) -> complex:
    """d/ds zeta(s), term-wise differentiated accelerated eta series."""
    s = complex(s)
    lam = _eta_factor(s)
    lam_prime = cmath.exp((1.0 - s) * _LN2) * _LN2
    acc = 0j
    acc_prime = 0j
    for w, ln in zip(_ETA_SIGNED, _ETA_LOGS):
        term = w * cmath.exp(-s * ln)
        acc += term
        acc_prime -= ln * term
    return -acc_prime / lam + acc * lam_prime / lam**2


def z_integrand(t):
    """z(t) = t / cosh(t)**2, the function whose Mellin transform carries
    zeta; accepts scalars or numpy arrays."""
    return t / np.cosh(t) ** 2


def prefactor(s: complex) -> complex:
    """K(s) = 2**(s-1) / ((1 - 2**(1-s)) * Gamma(s+1))."""
    s = complex(s)
    lam = _eta_factor(s)
    return cmath.exp((s - 1.0) * _LN2 - log_gamma(s + 1.0)) / lam


def prefactor_derivative(s: complex) -> complex:
    """K'(s) = K(s) * (ln 2 - 2**(1-s) ln 2 / (1 - 2**(1-s)) - psi(s+1))."""
    s = complex(s)
    lam = _eta_factor(s)
    log_deriv = _LN2 - cmath.exp((1.0 - s) * _LN2) * _LN2 / lam - digamma(s + 1.0)
    return prefactor(s) * log_deriv


def build_zeta_factored() -> FactoredFunction:
    """The zeta function wired as a factored Mellin representation, with the
    eta-series oracle attached as the reference for f and f'."""
    zf = MellinIntegrand(z=z_integrand, convergence_strip=(-1.0, math.inf))
    return FactoredFunction(
        zf=zf,
        K=prefactor,
        Kprime=prefactor_derivative,
        f_reference=zeta_reference,
        fprime_reference=zeta_prime_reference,
    )
