"""Integral functionals of spline series: L2 norms, half-degree seminorms,
total variation, arc length.

Norm-type quantities ride on Parseval (omitted harmonics are orthogonal, so
the truncation error bound is exactly the omitted mass); variation and arc
length integrate |f'| resp. sqrt(1 + f'^2) with a periodic trapezoid rule,
plus one midpoint-split pass at the sign changes of f' where |f'| has kinks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidResolution,
    UnsupportedForDegree,
    UseDPartitionVariation,
    ValidationError,
)
from .kernel import (
    TWO_PI,
    FactorKind,
    HarmonicSeries,
    SplineSpec,
    TruncationMode,
    TruncationPolicy,
    _hurwitz_band_sums,
    denominator,
    eval_series_uniform,
    harmonic_series,
)


class FunctionalKind(str, enum.Enum):
    NORM_L2_SQUARED = "norm_l2_squared"
    NORM_L2 = "norm_l2"
    SEMINORM = "seminorm"
    VARIATION = "variation"
    ARC_LENGTH = "arc_length"


class Method(str, enum.Enum):
    PARSEVAL = "parseval"
    QUADRATURE = "quadrature"
    PARTITION = "partition"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class FunctionalValue:
    """One computed functional with an honest error estimate attached.

    ``order`` is set for seminorms (the derivative order that was squared
    and integrated); None otherwise.
    """

    kind: FunctionalKind
    value: float
    method: Method
    error_estimate: float
    order: int | None = None


def series_mass(series: HarmonicSeries) -> float:
    """Integral of f^2 over one period, straight from the coefficients."""
    return TWO_PI * series.c0**2 + math.pi * float(
        np.sum(series.cos_coef**2 + series.sin_coef**2)
    )


def norm_parseval(series: HarmonicSeries) -> tuple[FunctionalValue, FunctionalValue]:
    """(squared norm, norm) from the coefficient mass.

    The error estimate on the squared value is the omitted-mass bound; it is
    a true bound because dropped harmonics are orthogonal to the kept ones.
    """
    sq = series_mass(series)
    err_sq = math.pi * series.tail_sq_bound
    root = math.sqrt(sq)
    err_root = err_sq / (2.0 * root) if root > 0.0 else math.sqrt(err_sq)
    return (
        FunctionalValue(FunctionalKind.NORM_L2_SQUARED, sq, Method.PARSEVAL, err_sq),
        FunctionalValue(FunctionalKind.NORM_L2, root, Method.PARSEVAL, err_root),
    )


def norm_quadrature(series: HarmonicSeries, samples: int = 4096) -> tuple[FunctionalValue, FunctionalValue]:
    """Same pair via S-point periodic trapezoid of f^2; error from doubling S."""
    if not isinstance(samples, (int, np.integer)) or samples < 2:
        raise InvalidResolution(f"need at least 2 quadrature samples, got {samples!r}")
    sq = TWO_PI * float(np.mean(eval_series_uniform(series, samples) ** 2))
    sq2 = TWO_PI * float(np.mean(eval_series_uniform(series, 2 * samples) ** 2))
    err_sq = abs(sq2 - sq)
    root = math.sqrt(max(sq, 0.0))
    err_root = err_sq / (2.0 * root) if root > 0.0 else math.sqrt(err_sq)
    return (
        FunctionalValue(FunctionalKind.NORM_L2_SQUARED, sq, Method.QUADRATURE, err_sq),
        FunctionalValue(FunctionalKind.NORM_L2, root, Method.QUADRATURE, err_root),
    )


def spline_norm(
    spec: SplineSpec,
    k: int = 1,
    method: Method = Method.PARSEVAL,
    samples: int = 4096,
) -> tuple[FunctionalValue, FunctionalValue]:
    """Norm of the fundamental spline anchored at node k, by either route."""
    if method is Method.PARSEVAL:
        return norm_parseval(harmonic_series(spec, k=k, purpose="parseval"))
    if method is Method.QUADRATURE:
        return norm_quadrature(harmonic_series(spec, k=k), samples)
    if method is Method.CLOSED_FORM:
        sq = norm_squared_closed_form(spec)
        root = math.sqrt(sq.value)
        err_root = sq.error_estimate / (2.0 * root) if root > 0.0 else 0.0
        return (sq, FunctionalValue(FunctionalKind.NORM_L2, root, Method.CLOSED_FORM, err_root))
    raise ValidationError(f"unsupported norm method {method!r}")


def norm_squared_closed_form(spec: SplineSpec, q: int = 0) -> FunctionalValue:
    """Exact Parseval mass of a power-factor spline (or its q-th derivative)
    through Hurwitz zeta sums; the alternating signs square away so only
    plain zeta values appear.  Cross-check / reference for the adaptive path.
    """
    if spec.factor.kind is not FactorKind.POWER_SIGN_CONSTANT:
        raise ValidationError("closed-form mass exists only for the power factor")
    r = spec.factor.degree
    if q > 0 and q > r - 1:
        from .errors import DerivativeOrderTooHigh

        raise DerivativeOrderTooHigh(f"derivative order {q} exceeds degree-1 = {r - 1}")
    s2 = 2.0 * (r + 1 - q)
    if s2 <= 1.0:
        raise UnsupportedForDegree("mass sum diverges at this degree/order")
    N = spec.grid_size
    g = spec.gamma
    alpha = spec.factor.alpha
    zeta_policy = TruncationPolicy(mode=TruncationMode.CLOSED_FORM_ZETA)
    total = TWO_PI / N**2 if q == 0 else 0.0
    for j in range(1, (N - 1) // 2 + 1):
        h = denominator(spec, j, policy=zeta_policy)
        down, up = _hurwitz_band_sums(s2, j / N, alternating=False)
        band = (
            g.low**2 * float(j) ** (-s2)
            + N ** (-s2) * (g.mid**2 * down + g.high**2 * up)
        )
        total += math.pi * (2.0 * alpha / (N * h.value)) ** 2 * band
    return FunctionalValue(
        FunctionalKind.NORM_L2_SQUARED if q == 0 else FunctionalKind.SEMINORM,
        total,
        Method.CLOSED_FORM,
        1e-14 * abs(total),
        order=q if q else None,
    )


def seminorm_order(degree: int) -> int:
    """Default derivative order for the half-degree seminorm: (r+1)/2, odd r only."""
    if degree < 1 or degree % 2 == 0:
        raise UnsupportedForDegree(
            f"half-degree seminorm needs an odd degree >= 1, got {degree}"
        )
    return (degree + 1) // 2


def seminorm(spec: SplineSpec, k: int = 1, order: int | None = None) -> FunctionalValue:
    """sqrt of the integral of (f^(order))^2, default order (r+1)/2.

    Parseval route on the differentiated series; the derivative kills c0 so
    the value is translation-invariant across anchor nodes.
    """
    q = seminorm_order(spec.factor.degree) if order is None else order
    if not isinstance(q, (int, np.integer)) or q < 1:
        raise ValidationError(f"seminorm order must be an integer >= 1, got {order!r}")
    series = harmonic_series(spec, k=k, q=q, purpose="parseval")
    sq = series_mass(series)
    val = math.sqrt(sq)
    err = math.pi * series.tail_sq_bound
    err_root = err / (2.0 * val) if val > 0.0 else math.sqrt(err)
    return FunctionalValue(FunctionalKind.SEMINORM, val, Method.PARSEVAL, err_root, order=int(q))


def variation_quadrature(derivative_series: HarmonicSeries, samples: int = 16384) -> FunctionalValue:
    """Integral of |f'| over the period, given the series of f'.

    Periodic trapezoid plus one midpoint-split refinement of every cell
    where f' changes sign (|f'| has a kink there and plain trapezoid
    overshoots); the error estimate combines the refinement delta with the
    series tail.
    """
    if not isinstance(samples, (int, np.integer)) or samples < 64:
        raise InvalidResolution(f"need at least 64 variation samples, got {samples!r}")
    h = TWO_PI / samples
    fp = eval_series_uniform(derivative_series, samples)
    base = h * float(np.abs(fp).sum())
    mids = eval_series_uniform(derivative_series, samples, offset=h / 2.0)
    nxt = np.roll(fp, -1)
    kink = np.signbit(fp) != np.signbit(nxt)
    old = h * (np.abs(fp[kink]) + np.abs(nxt[kink])) / 2.0
    new = h * (np.abs(fp[kink]) + 2.0 * np.abs(mids[kink]) + np.abs(nxt[kink])) / 4.0
    delta = float(new.sum() - old.sum())
    tail = derivative_series.tail_bound
    tail = TWO_PI * tail if math.isfinite(tail) else 0.0
    return FunctionalValue(
        FunctionalKind.VARIATION, base + delta, Method.QUADRATURE, abs(delta) + tail
    )


def variation_partition(series: HarmonicSeries, partition: int = 4096) -> FunctionalValue:
    """Sum of |f(t_i) - f(t_{i-1})| over a closed uniform partition of the
    period.  Defined for any series, converges to the variation from below
    under refinement; the doubling delta is the error estimate."""
    if not isinstance(partition, (int, np.integer)) or partition < 2:
        raise InvalidResolution(f"need at least 2 partition intervals, got {partition!r}")

    def closed_sum(p: int) -> float:
        vals = eval_series_uniform(series, p)
        return float(np.abs(np.diff(np.append(vals, vals[0]))).sum())

    v = closed_sum(partition)
    v2 = closed_sum(2 * partition)
    return FunctionalValue(FunctionalKind.VARIATION, v, Method.PARTITION, abs(v2 - v))


def arc_quadrature(derivative_series: HarmonicSeries, samples: int = 16384) -> FunctionalValue:
    """Curve length of one period from the series of f': integral of
    sqrt(1 + f'^2), periodic trapezoid, error from doubling.  Always
    >= 2pi, with equality only in the flat limit."""
    if not isinstance(samples, (int, np.integer)) or samples < 64:
        raise InvalidResolution(f"need at least 64 arc-length samples, got {samples!r}")

    def trap(p: int) -> float:
        fp = eval_series_uniform(derivative_series, p)
        return (TWO_PI / p) * float(np.sqrt(1.0 + fp**2).sum())

    v = trap(samples)
    v2 = trap(2 * samples)
    return FunctionalValue(FunctionalKind.ARC_LENGTH, v, Method.QUADRATURE, abs(v2 - v))


def total_variation_derivative(spec: SplineSpec, k: int = 1, samples: int = 16384) -> FunctionalValue:
    """Total variation of the fundamental spline via the |f'| integral.

    Needs degree >= 2 so the differentiated series still converges
    absolutely; below that use total_variation_partition.
    """
    if spec.factor.degree < 2:
        raise UseDPartitionVariation(
            f"derivative-based variation needs degree >= 2, got {spec.factor.degree};"
            " use total_variation_partition"
        )
    return variation_quadrature(harmonic_series(spec, k=k, q=1), samples)


def total_variation_partition(spec: SplineSpec, k: int = 1, partition: int = 4096) -> FunctionalValue:
    """Total variation of the fundamental spline by partition sums (any degree)."""
    return variation_partition(harmonic_series(spec, k=k), partition)


def arc_length(spec: SplineSpec, k: int = 1, samples: int = 16384) -> FunctionalValue:
    """Arc length of the fundamental spline over one period (degree >= 2)."""
    if spec.factor.degree < 2:
        raise UnsupportedForDegree(
            f"arc length needs the derivative series, so degree >= 2; got {spec.factor.degree}"
        )
    return arc_quadrature(harmonic_series(spec, k=k, q=1), samples)
