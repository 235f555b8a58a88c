"""Higher-level studies: norm tables over degree, functional sweeps over the
factor rate alpha, coincidence checks at the special rates k*pi/N, and the
high-degree limit of the squared norm.

These drive the CLI's table / sweep / coincide / limit commands and the
acceptance checks; each returns a small report dataclass that serializes
cleanly to CSV or JSON.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy import optimize

from .errors import (
    InvalidFrequency,
    NearSingularDenominator,
    ValidationError,
)
from .kernel import (
    TWO_PI,
    FactorKind,
    FactorSpec,
    GammaVector,
    SplineSpec,
    TruncationPolicy,
    eval_series_uniform,
    harmonic_series,
)
from .functionals import (
    arc_length,
    seminorm,
    spline_norm,
    total_variation_derivative,
)

DEFAULT_DEGREES = (1, 2, 3, 4, 5, 6, 7, 8, 50)
DEFAULT_GRID_PAIRS = ((0, 0), (0, 1))

SWEEP_FUNCTIONALS = ("norm", "norm_squared", "seminorm", "variation", "arc_length")


@dataclass(frozen=True)
class NormTable:
    """Squared L2 norms of the fundamental spline, degrees x grid pairs."""

    gamma: GammaVector
    factor_kind: FactorKind
    alpha: float
    grid_size: int
    degrees: tuple[int, ...]
    grid_pairs: tuple[tuple[int, int], ...]
    values: dict[tuple[tuple[int, int], int], float]
    converged: dict[tuple[tuple[int, int], int], bool]

    def cell(self, grid_pair: tuple[int, int], degree: int) -> float:
        return self.values[(tuple(grid_pair), degree)]

    def row(self, grid_pair: tuple[int, int]) -> list[float]:
        gp = tuple(grid_pair)
        return [self.values[(gp, r)] for r in self.degrees]


def reproduce_norm_table(
    gamma: GammaVector | None = None,
    degrees: tuple[int, ...] = DEFAULT_DEGREES,
    grid_pairs: tuple[tuple[int, int], ...] = DEFAULT_GRID_PAIRS,
    grid_size: int = 7,
    factor_kind: FactorKind = FactorKind.POWER_SIGN_CONSTANT,
    alpha: float = 1.0,
    truncation: TruncationPolicy | None = None,
) -> NormTable:
    """Table of squared norms over degrees and grid pairs.

    Power factor at alpha=1 by default (the squared norm is alpha-invariant
    there anyway).  Cells whose denominators are singular come back as NaN
    rather than aborting the rest of the table.
    """
    g = gamma if gamma is not None else GammaVector()
    trunc = truncation if truncation is not None else TruncationPolicy()
    values: dict = {}
    conv: dict = {}
    for gp in grid_pairs:
        for r in degrees:
            spec = SplineSpec(
                grid_size=grid_size,
                series_grid=gp[0],
                node_grid=gp[1],
                gamma=g,
                factor=FactorSpec(factor_kind, alpha, r),
                truncation=trunc,
            )
            key = (tuple(gp), r)
            try:
                series = harmonic_series(spec, purpose="parseval")
                sq = TWO_PI * series.c0**2 + math.pi * float(
                    np.sum(series.cos_coef**2 + series.sin_coef**2)
                )
                values[key] = sq
                conv[key] = series.converged
            except NearSingularDenominator:
                values[key] = math.nan
                conv[key] = False
    return NormTable(
        gamma=g,
        factor_kind=factor_kind,
        alpha=alpha,
        grid_size=grid_size,
        degrees=tuple(degrees),
        grid_pairs=tuple(tuple(gp) for gp in grid_pairs),
        values=values,
        converged=conv,
    )


@dataclass(frozen=True)
class SweepMinimum:
    alpha: float
    value: float
    index: int  # sample index that bracketed it


@dataclass(frozen=True)
class SweepCurve:
    functional: str
    alphas: np.ndarray
    values: np.ndarray  # NaN at invalid samples
    valid: np.ndarray
    minima: tuple[SweepMinimum, ...]
    reference: float | None  # counterpart level at alpha = pi/N (sinc only)
    spec: SplineSpec
    order: int | None = None

    def __post_init__(self):
        for arr in (self.alphas, self.values, self.valid):
            arr.setflags(write=False)


def default_alpha_grid(steps: int = 200, lo: float = 0.01, hi: float = math.pi / 2 - 0.01) -> np.ndarray:
    if steps < 2 or not (0.0 < lo < hi):
        raise ValidationError(f"bad alpha grid: steps={steps}, range=({lo}, {hi})")
    return np.linspace(lo, hi, steps)


def _functional_scalar(spec: SplineSpec, functional: str, order: int | None, samples: int) -> float:
    if functional == "norm":
        return spline_norm(spec)[1].value
    if functional == "norm_squared":
        return spline_norm(spec)[0].value
    if functional == "seminorm":
        return seminorm(spec, order=order).value
    if functional == "variation":
        return total_variation_derivative(spec, samples=samples).value
    if functional == "arc_length":
        return arc_length(spec, samples=samples).value
    raise ValidationError(
        f"unknown sweep functional {functional!r}; pick one of {SWEEP_FUNCTIONALS}"
    )


def sweep_alpha(
    spec: SplineSpec,
    functional: str,
    alphas: np.ndarray | None = None,
    *,
    order: int | None = None,
    samples: int = 16384,
    refine: bool = True,
) -> SweepCurve:
    """Evaluate one functional along a grid of factor rates.

    Samples whose denominators go singular are marked invalid (NaN) and the
    sweep continues; that is the documented behaviour, not an error.  Local
    minima are three-point brackets on valid samples (weak inequality both
    sides, strict on at least one, so flat curves yield none), then sharpened
    by bounded scalar minimization inside the bracket.

    For the sinc family a reference level is attached: the same functional at
    alpha = pi/N, where the spline coincides with its polynomial-counterpart
    construction.
    """
    a = np.asarray(alphas, dtype=float) if alphas is not None else default_alpha_grid()
    if a.ndim != 1 or a.size < 8:
        raise ValidationError("alpha grid must be 1-D with at least 8 samples")
    if np.any(a <= 0.0) or np.any(np.diff(a) <= 0.0):
        raise ValidationError("alpha grid must be positive and strictly increasing")

    def at(alpha: float) -> float:
        return _functional_scalar(
            replace(spec, factor=replace(spec.factor, alpha=float(alpha))),
            functional,
            order,
            samples,
        )

    values = np.empty(a.size)
    valid = np.ones(a.size, dtype=bool)
    for i, alpha in enumerate(a):
        try:
            values[i] = at(alpha)
        except NearSingularDenominator:
            values[i] = math.nan
            valid[i] = False

    minima = _bracketed_minima(a, values, valid, at, refine)

    reference = None
    if spec.factor.kind is FactorKind.SINC_POWER:
        try:
            reference = at(math.pi / spec.grid_size)
        except NearSingularDenominator:
            reference = None

    return SweepCurve(
        functional=functional,
        alphas=a,
        values=values,
        valid=valid,
        minima=tuple(minima),
        reference=reference,
        spec=spec,
        order=order,
    )


def _bracketed_minima(a, values, valid, at, refine):
    out = []
    for i in range(1, a.size - 1):
        if not (valid[i - 1] and valid[i] and valid[i + 1]):
            continue
        lo, mid, hi = values[i - 1], values[i], values[i + 1]
        # require the dip to clear floating-point noise, so curves that are
        # flat up to rounding (the alpha-invariant family) yield no minima
        eps = 1e-12 * max(abs(lo), abs(mid), abs(hi))
        if mid <= lo and mid <= hi and (mid < lo - eps or mid < hi - eps):
            alpha_star, v_star = a[i], mid
            if refine:
                try:
                    res = optimize.minimize_scalar(
                        at, bounds=(a[i - 1], a[i + 1]), method="bounded",
                        options={"xatol": 1e-8},
                    )
                    if res.fun <= mid:
                        alpha_star, v_star = float(res.x), float(res.fun)
                except NearSingularDenominator:
                    pass
            out.append(SweepMinimum(alpha=alpha_star, value=v_star, index=i))
    # plateau edges can flag twice around one basin; keep the deeper of any
    # pair closer than one grid step
    merged: list[SweepMinimum] = []
    step = float(np.min(np.diff(a)))
    for m in sorted(out, key=lambda m: m.alpha):
        if merged and abs(m.alpha - merged[-1].alpha) < step:
            if m.value < merged[-1].value:
                merged[-1] = m
        else:
            merged.append(m)
    return merged


@dataclass(frozen=True)
class CoincidenceReport:
    """Do the sinc-factor splines at rates k*pi/N all agree with each other,
    and do they match the polynomial-counterpart construction (the simple
    power-factor spline)?"""

    degree: int
    grid_size: int
    grid_pair: tuple[int, int]
    gamma: GammaVector
    multipliers: tuple[int, ...]
    alphas: tuple[float, ...]
    rejected: tuple[tuple[int, str], ...]
    pairwise_matrix: np.ndarray
    pairwise_deviation: float
    counterpart_deviation: tuple[float, ...]
    tolerance: float
    pairwise_coincide: bool
    matches_counterpart: bool

    def __post_init__(self):
        self.pairwise_matrix.setflags(write=False)

    def pair_verdicts(self) -> tuple[tuple[int, int, float, bool], ...]:
        """(k_i, k_j, deviation, coincide) for every tested pair."""
        out = []
        for i in range(len(self.multipliers)):
            for jj in range(i + 1, len(self.multipliers)):
                d = float(self.pairwise_matrix[i, jj])
                out.append((self.multipliers[i], self.multipliers[jj], d, d <= self.tolerance))
        return tuple(out)


def _default_multipliers(degree: int, grid_size: int) -> tuple[int, ...]:
    # rates below pi/2: k < N/2; even degrees need odd multipliers
    ks = [k for k in range(1, (grid_size + 1) // 2) if math.gcd(k, grid_size) == 1]
    if degree % 2 == 0:
        ks = [k for k in ks if k % 2 == 1]
    return tuple(ks)


def coincidence_check(
    degree: int,
    gamma: GammaVector | None = None,
    grid_size: int = 7,
    grid_pair: tuple[int, int] | None = None,
    multipliers: tuple[int, ...] | None = None,
    tolerance: float = 1e-6,
    samples: int = 512,
    truncation: TruncationPolicy | None = None,
) -> CoincidenceReport:
    """Check the special-rate coincidences of the sinc family.

    At alpha = k*pi/N (k coprime with N) the sinc-factor spline collapses to
    a power-factor form: exactly for odd degree on the node-aligned pair
    (0,0) with any valid k, and for even degree on the staggered pair (0,1)
    with odd k.  Pairwise agreement across the k-set holds for any weight
    vector (the per-band constants cancel); agreement with the *polynomial
    counterpart* (power factor with unit weights) additionally needs the
    unit weight vector.  The report measures both.
    """
    if not isinstance(degree, (int, np.integer)) or degree < 1:
        raise ValidationError(f"degree must be an integer >= 1, got {degree!r}")
    g = gamma if gamma is not None else GammaVector()
    gp = tuple(grid_pair) if grid_pair is not None else ((0, 0) if degree % 2 else (0, 1))
    if gp not in ((0, 0), (0, 1), (1, 0), (1, 1)):
        raise ValidationError(f"bad grid pair {grid_pair!r}")
    ks = tuple(multipliers) if multipliers is not None else _default_multipliers(degree, grid_size)

    accepted: list[int] = []
    rejected: list[tuple[int, str]] = []
    for k in ks:
        if not isinstance(k, (int, np.integer)) or k < 1:
            rejected.append((int(k), "multiplier must be a positive integer"))
        elif math.gcd(int(k), grid_size) != 1:
            rejected.append((int(k), "multiplier shares a factor with the grid size"))
        elif degree % 2 == 0 and k % 2 == 0:
            rejected.append((int(k), "even multiplier breaks the even-degree coincidence"))
        else:
            accepted.append(int(k))
    if not accepted:
        raise InvalidFrequency("no valid multipliers left after validation")

    trunc = truncation if truncation is not None else TruncationPolicy()
    alphas = tuple(k * math.pi / grid_size for k in accepted)

    def values_for(factor: FactorSpec, gam: GammaVector) -> np.ndarray:
        spec = SplineSpec(
            grid_size=grid_size,
            series_grid=gp[0],
            node_grid=gp[1],
            gamma=gam,
            factor=factor,
            truncation=trunc,
        )
        return eval_series_uniform(harmonic_series(spec), samples)

    curves = [values_for(FactorSpec(FactorKind.SINC_POWER, al, degree), g) for al in alphas]
    counterpart = values_for(FactorSpec(FactorKind.POWER_SIGN_CONSTANT, 1.0, degree), GammaVector())

    n = len(curves)
    matrix = np.zeros((n, n))
    for i in range(n):
        for jj in range(i + 1, n):
            d = float(np.max(np.abs(curves[i] - curves[jj])))
            matrix[i, jj] = matrix[jj, i] = d
    cdev = tuple(float(np.max(np.abs(c - counterpart))) for c in curves)
    pair_dev = float(matrix.max()) if n > 1 else 0.0

    return CoincidenceReport(
        degree=int(degree),
        grid_size=grid_size,
        grid_pair=gp,
        gamma=g,
        multipliers=tuple(accepted),
        alphas=alphas,
        rejected=tuple(rejected),
        pairwise_matrix=matrix,
        pairwise_deviation=pair_dev,
        counterpart_deviation=cdev,
        tolerance=float(tolerance),
        pairwise_coincide=bool(pair_dev <= tolerance),
        matches_counterpart=bool(max(cdev) <= tolerance),
    )


@dataclass(frozen=True)
class LimitReport:
    """Behaviour of the squared norm as the degree grows: both parity
    sequences converge to 2 pi / N, one from each side depending on the
    grid pair."""

    grid_size: int
    grid_pair: tuple[int, int]
    gamma: GammaVector
    limit_value: float
    high_degree: int
    value_at_high_degree: float
    deviation: float
    odd_degrees: tuple[int, ...]
    odd_values: tuple[float, ...]
    even_degrees: tuple[int, ...]
    even_values: tuple[float, ...]
    odd_side: str  # "below" | "above" | "mixed"
    even_side: str
    odd_monotone: bool  # |value - limit| strictly decreasing along the sequence
    even_monotone: bool


def _side_of(values, limit) -> str:
    arr = np.asarray(values)
    if np.all(arr < limit):
        return "below"
    if np.all(arr > limit):
        return "above"
    return "mixed"


def _monotone_toward(values, limit) -> bool:
    gaps = np.abs(np.asarray(values) - limit)
    return bool(np.all(np.diff(gaps) < 0.0))


def limit_check(
    gamma: GammaVector | None = None,
    grid_size: int = 7,
    grid_pair: tuple[int, int] = (0, 0),
    odd_degrees: tuple[int, ...] = (1, 3, 5, 7),
    even_degrees: tuple[int, ...] = (2, 4, 6, 8),
    high_degree: int = 50,
    factor_kind: FactorKind = FactorKind.POWER_SIGN_CONSTANT,
    alpha: float = 1.0,
    truncation: TruncationPolicy | None = None,
) -> LimitReport:
    """Squared-norm limit study on one grid pair (power factor by default)."""
    g = gamma if gamma is not None else GammaVector()
    degrees = tuple(odd_degrees) + tuple(even_degrees) + (high_degree,)
    table = reproduce_norm_table(
        gamma=g,
        degrees=degrees,
        grid_pairs=(tuple(grid_pair),),
        grid_size=grid_size,
        factor_kind=factor_kind,
        alpha=alpha,
        truncation=truncation,
    )
    gp = tuple(grid_pair)
    limit = TWO_PI / grid_size
    odd_vals = tuple(table.cell(gp, r) for r in odd_degrees)
    even_vals = tuple(table.cell(gp, r) for r in even_degrees)
    v_high = table.cell(gp, high_degree)
    return LimitReport(
        grid_size=grid_size,
        grid_pair=gp,
        gamma=g,
        limit_value=limit,
        high_degree=high_degree,
        value_at_high_degree=v_high,
        deviation=abs(v_high - limit),
        odd_degrees=tuple(odd_degrees),
        odd_values=odd_vals,
        even_degrees=tuple(even_degrees),
        even_values=even_vals,
        odd_side=_side_of(odd_vals, limit),
        even_side=_side_of(even_vals, limit),
        odd_monotone=_monotone_toward(odd_vals, limit),
        even_monotone=_monotone_toward(even_vals, limit),
    )
