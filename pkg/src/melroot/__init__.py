"""melroot: argument-principle root counting for functions expressed as
Mellin transforms of simpler functions."""

from .contour import (
    CircularContour,
    CountResult,
    FactoredFunction,
    PipelineConfig,
    count_direct,
    count_pipeline,
    integrand_direct,
    integrand_stage1,
    integrand_stage2,
    kernel_mellin,
)
from .errors import (
    DomainError,
    MelrootError,
    NonConvergenceError,
    PoleError,
    UnsupportedOrderError,
)
from .expsum import PRESETS, ExpSumTable, error_grid, inv_approx, inv_approx_truncated
from .mellin import (
    MellinIntegrand,
    deriv_times_power,
    power_transform,
    transform,
    transform_derivative,
)
from .numerics import csgn, csgn_smooth, digamma, log_gamma, tanh_integral_rep
from .quadrature import (
    QuadratureConfig,
    QuadratureResult,
    integrate_iterated,
    integrate_periodic,
    integrate_semi_infinite,
)
from .zeta import (
    build_zeta_factored,
    prefactor,
    prefactor_derivative,
    z_integrand,
    zeta_prime_reference,
    zeta_reference,
)

__version__ = "0.1.0"
