"""Fundamental trigonometric splines from convergence-factor series.

Periodic interpolation basis on uniform odd-size grids, with two damping
families (signed power law, powered sinc), exact Parseval functionals,
variation / arc-length quadrature, rate-parameter sweeps, and the special
coincidence structure at alpha = k*pi/N.
"""

__version__ = "0.1.0"

from .errors import (
    ArityMismatch,
    DerivativeOrderTooHigh,
    InvalidFrequency,
    InvalidGrid,
    InvalidResolution,
    NearSingularDenominator,
    NumericError,
    SplineError,
    TruncationNotConverged,
    UnsupportedForDegree,
    UseDPartitionVariation,
    ValidationError,
)
from .kernel import (
    DenominatorInfo,
    FactorKind,
    FactorSpec,
    GammaVector,
    GridSpec,
    HarmonicSeries,
    SplineSpec,
    TruncationMode,
    TruncationPolicy,
    denominator,
    eval_interpolant,
    eval_series,
    eval_series_uniform,
    factor_value,
    harmonic_series,
    interpolant_series,
)
from .functionals import (
    FunctionalKind,
    FunctionalValue,
    Method,
    arc_length,
    arc_quadrature,
    norm_parseval,
    norm_quadrature,
    norm_squared_closed_form,
    seminorm,
    seminorm_order,
    series_mass,
    spline_norm,
    total_variation_derivative,
    total_variation_partition,
    variation_partition,
    variation_quadrature,
)
from .analysis import (
    CoincidenceReport,
    LimitReport,
    NormTable,
    SweepCurve,
    SweepMinimum,
    coincidence_check,
    default_alpha_grid,
    limit_check,
    reproduce_norm_table,
    sweep_alpha,
)

__all__ = [name for name in dir() if not name.startswith("_")]
