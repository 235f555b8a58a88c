"""Core machinery for fundamental trigonometric splines.

A fundamental spline on a uniform N-point grid (N odd) is assembled from a
trigonometric series whose harmonics live at the base frequencies j = 1 ..
(N-1)/2 and at the shifted bands m*N - j and m*N + j, m = 1, 2, ...  Each
harmonic is damped by a convergence factor (a pure power law with an
alternating sign pattern, or a power of sinc), and each base frequency is
normalized by a denominator h_j so that the spline takes the value 1 at its
anchor node and 0 at the others.

The module exposes the configuration dataclasses, the two factor families, the
denominators (adaptive summation or closed form via the Hurwitz zeta), and
series construction / evaluation.  Everything downstream (norms, variation,
sweeps) consumes the HarmonicSeries produced here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import zeta as hurwitz_zeta

from .errors import (
    ArityMismatch,
    DerivativeOrderTooHigh,
    InvalidFrequency,
    InvalidGrid,
    InvalidResolution,
    NearSingularDenominator,
    TruncationNotConverged,
    ValidationError,
)

TWO_PI = 2.0 * math.pi

# |h_j| below this multiple of the largest partial term counts as singular
SINGULAR_REL_THRESHOLD = 1e-12

# relative mass target for Parseval-purpose truncation (see TruncationPolicy)
PARSEVAL_REL_TOL = 1e-14

# relative accuracy of denominators used inside series assembly; the policy's
# absolute tail_tol is too loose when h_j is naturally small (its scale is the
# factor at frequency j), and the error divides every coefficient
SERIES_H_REL_TOL = 1e-9

_EVAL_CHUNK = 1 << 18  # frequencies per block when forming outer products


class FactorKind(str, enum.Enum):
    """The two convergence-factor families."""

    POWER_SIGN_CONSTANT = "power"  # alpha * k**-(1+r), alternating-sign series
    SINC_POWER = "sinc"            # (sin(alpha*k) / (alpha*k))**(1+r)


class TruncationMode(str, enum.Enum):
    ADAPTIVE = "adaptive"          # sum blocks until the tail bound is met
    CLOSED_FORM_ZETA = "zeta"      # exact denominators via Hurwitz zeta (power factor only)


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic grid: ``size`` nodes on [0, 2pi), odd size >= 3.

    indicator 0 puts nodes at 2pi(j-1)/N (includes t=0), indicator 1 shifts
    them to pi(2j-1)/N (staggered by half a step).
    """

    size: int
    indicator: int = 0

    def __post_init__(self):
        if not isinstance(self.size, (int, np.integer)):
            raise InvalidGrid(f"grid size must be an integer, got {self.size!r}")
        if self.size < 3 or self.size % 2 == 0:
            raise InvalidGrid(f"grid size must be odd and >= 3, got {self.size}")
        if self.indicator not in (0, 1):
            raise InvalidGrid(f"grid indicator must be 0 or 1, got {self.indicator!r}")

    def nodes(self) -> np.ndarray:
        j = np.arange(1, self.size + 1, dtype=float)
        if self.indicator == 0:
            return TWO_PI * (j - 1.0) / self.size
        return math.pi * (2.0 * j - 1.0) / self.size

    def node(self, k: int) -> float:
        if not 1 <= k <= self.size:
            raise ValidationError(f"node index {k} outside 1..{self.size}")
        if self.indicator == 0:
            return TWO_PI * (k - 1.0) / self.size
        return math.pi * (2.0 * k - 1.0) / self.size


@dataclass(frozen=True)
class GammaVector:
    """Band weights: ``low`` scales the base harmonic j, ``mid`` the
    descending band m*N - j, ``high`` the ascending band m*N + j."""

    low: float = 1.0
    mid: float = 1.0
    high: float = 1.0

    def __post_init__(self):
        for name in ("low", "mid", "high"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValidationError(f"gamma.{name} must be finite, got {v!r}")

    @property
    def is_trig_polynomial(self) -> bool:
        # with both shifted bands switched off the spline degenerates to the
        # plain interpolating trigonometric polynomial of degree (N-1)/2
        return self.mid == 0.0 and self.high == 0.0

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.low, self.mid, self.high)


@dataclass(frozen=True)
class FactorSpec:
    """Convergence factor: family, rate parameter alpha > 0, degree r >= 0."""

    kind: FactorKind = FactorKind.SINC_POWER
    alpha: float = math.pi / 7.0
    degree: int = 3

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValidationError(f"alpha must be positive and finite, got {self.alpha!r}")
        if not isinstance(self.degree, (int, np.integer)) or self.degree < 0:
            raise ValidationError(f"degree must be an integer >= 0, got {self.degree!r}")


@dataclass(frozen=True)
class TruncationPolicy:
    """How far to push the shifted-band sums.

    ``tail_tol`` is an absolute bound on the summed magnitude of the omitted
    coefficients; ``tail_tol = 0`` means "use exactly m_max blocks" (useful
    for reproducing reference tables computed with short partial sums).
    ``m_max`` caps the number of m-blocks per base frequency; hitting the cap
    yields a partial series flagged converged=False rather than an error.
    CLOSED_FORM_ZETA evaluates denominators exactly (power factor only).

    Series built for Parseval-type functionals (norms, seminorms) are instead
    truncated on the omitted *squared* mass, relative to the accumulated mass
    per band (PARSEVAL_REL_TOL); the magnitude-sum criterion is hopeless for
    derivative series at small alpha while the mass converges twice as fast.
    """

    tail_tol: float = 1e-8
    m_max: int = 1_000_000
    mode: TruncationMode = TruncationMode.ADAPTIVE

    def __post_init__(self):
        if not (math.isfinite(self.tail_tol) and self.tail_tol >= 0.0):
            raise ValidationError(f"tail_tol must be >= 0, got {self.tail_tol!r}")
        if not isinstance(self.m_max, (int, np.integer)) or self.m_max < 1:
            raise ValidationError(f"m_max must be an integer >= 1, got {self.m_max!r}")


@dataclass(frozen=True)
class SplineSpec:
    """Everything needed to build one fundamental spline family.

    ``series_grid`` and ``node_grid`` are the two grid indicators: the first
    enters the sign pattern of the shifted bands, the second selects which of
    the two staggered grids carries the interpolation nodes.
    """

    grid_size: int = 7
    series_grid: int = 0
    node_grid: int = 0
    gamma: GammaVector = field(default_factory=GammaVector)
    factor: FactorSpec = field(default_factory=FactorSpec)
    truncation: TruncationPolicy = field(default_factory=TruncationPolicy)

    def __post_init__(self):
        GridSpec(self.grid_size, 0)  # validates size
        if self.series_grid not in (0, 1) or self.node_grid not in (0, 1):
            raise InvalidGrid(
                f"grid indicators must be 0 or 1, got ({self.series_grid!r}, {self.node_grid!r})"
            )
        if (
            self.truncation.mode is TruncationMode.CLOSED_FORM_ZETA
            and self.factor.kind is not FactorKind.POWER_SIGN_CONSTANT
        ):
            raise ValidationError("closed-form zeta denominators exist only for the power factor")

    @property
    def node_grid_spec(self) -> GridSpec:
        return GridSpec(self.grid_size, self.node_grid)

    def nodes(self) -> np.ndarray:
        return self.node_grid_spec.nodes()

    def max_derivative(self) -> int:
        """Largest termwise derivative order with an absolutely convergent series."""
        return self.factor.degree - 1

    def smoothness_class(self) -> str:
        r = self.factor.degree
        return f"C^{r - 1}" if r >= 1 else "C^-1"


def factor_value(factor: FactorSpec, freq):
    """Convergence factor at integer frequency(ies) >= 1.

    Power family: alpha * k**-(1+r), always positive (the alternating sign
    pattern belongs to the series assembly, not the factor).  Sinc family:
    (sin(alpha k)/(alpha k))**(1+r), whose sign survives the power when
    1+r is odd; the raw signed value is returned either way.
    """
    arr = np.asarray(freq)
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(arr == np.floor(arr)):
            raise InvalidFrequency(f"frequencies must be integers, got {freq!r}")
        arr = arr.astype(np.int64)
    if arr.size and arr.min() < 1:
        raise InvalidFrequency(f"frequencies must be >= 1, got min {arr.min()}")
    s = factor.degree + 1
    if factor.kind is FactorKind.POWER_SIGN_CONSTANT:
        out = factor.alpha * arr.astype(float) ** (-float(s))
    else:
        out = np.sinc(factor.alpha * arr.astype(float) / math.pi) ** s
    if np.isscalar(freq) or np.asarray(freq).ndim == 0:
        return float(out)
    return out


def _band_sign_setup(spec: SplineSpec) -> tuple[int, float]:
    """(parity, mid_sign): the shifted bands carry (-1)**(m*parity) overall
    and the descending band an extra constant ``mid_sign``."""
    i_sum = spec.series_grid + spec.node_grid
    r = spec.factor.degree
    if spec.factor.kind is FactorKind.POWER_SIGN_CONSTANT:
        return i_sum % 2, float((-1) ** (1 + r))
    return (r + 1 + i_sum) % 2, 1.0


def _envelope_scale(factor: FactorSpec) -> float:
    """K with |factor(n)| <= K * n**-(1+r), used by a-priori tail bounds."""
    if factor.kind is FactorKind.POWER_SIGN_CONSTANT:
        return factor.alpha
    return factor.alpha ** (-(factor.degree + 1))


def _tail_after(K: float, P: float, N: int, j: int, blocks: int) -> float:
    # sum_{m>blocks} K*(m*N-j)**-P <= integral bound, valid for P > 1
    if K == 0.0:
        return 0.0
    if P <= 1.0 or blocks < 1:
        return math.inf
    edge = blocks * N - j
    return K * edge ** (-(P - 1.0)) / (N * (P - 1.0))

def _blocks_for(K: float, P: float, N: int, j: int, target: float, m_max: int) -> int:
    """Smallest block count whose tail bound meets ``target`` (capped at m_max)."""
    if K == 0.0:
        return 0
    if target <= 0.0 or P <= 1.0:
        return m_max
    want = K / (N * (P - 1.0) * target)
    if want <= 0.0:
        return 1
    try:
        edge = want ** (1.0 / (P - 1.0))
    except OverflowError:
        return m_max
    blocks = max(1, math.ceil((edge + j) / N))
    return min(blocks, m_max)


@dataclass(frozen=True)
class DenominatorInfo:
    value: float
    tail_bound: float
    converged: bool
    blocks: int
    largest_term: float


def denominator(spec: SplineSpec, j: int, *, policy: TruncationPolicy | None = None) -> DenominatorInfo:
    """Normalizing sum h_j for base frequency j in 1 .. (N-1)/2.

    h_j = g_low*sigma(j) + sum_m (-1)**(m*parity) *
          (g_mid*mid_sign*sigma(mN-j) + g_high*sigma(mN+j))

    Adaptive mode sums blocks up to an a-priori count meeting tail_tol;
    CLOSED_FORM_ZETA evaluates the power-factor sum exactly through the
    Hurwitz zeta.  Raises NearSingularDenominator if the result is
    negligible against the largest contributing term.
    """
    N = spec.grid_size
    half = (N - 1) // 2
    if not 1 <= j <= half:
        raise InvalidFrequency(f"base frequency {j} outside 1..{half}")
    pol = policy if policy is not None else spec.truncation
    g = spec.gamma
    parity, mid_sign = _band_sign_setup(spec)
    base = g.low * factor_value(spec.factor, j)

    if pol.mode is TruncationMode.CLOSED_FORM_ZETA:
        value, largest = _denominator_zeta(spec, j, parity, mid_sign, base)
        info = DenominatorInfo(value, 0.0, True, 0, largest)
    else:
        K = (abs(g.mid) + abs(g.high)) * _envelope_scale(spec.factor)
        P = float(spec.factor.degree + 1)
        blocks = _blocks_for(K, P, N, j, pol.tail_tol, pol.m_max)
        if pol.tail_tol == 0.0:
            blocks = 0 if K == 0.0 else pol.m_max
        value, largest = _denominator_blocks(spec, j, parity, mid_sign, base, blocks)
        tail = _tail_after(K, P, N, j, blocks)
        info = DenominatorInfo(value, tail, tail <= pol.tail_tol, blocks, largest)

    # relative to the largest summand: h_j for high degrees is naturally tiny
    # (its scale is the factor at frequency j), which is fine; what matters is
    # cancellation wiping out the leading digits
    threshold = SINGULAR_REL_THRESHOLD * info.largest_term
    if info.largest_term == 0.0 or abs(info.value) < threshold:
        raise NearSingularDenominator(j, info.value, threshold)
    return info


def _denominator_blocks(spec, j, parity, mid_sign, base, blocks):
    if blocks == 0:
        return base, abs(base)
    N = spec.grid_size
    g = spec.gamma
    m = np.arange(1, blocks + 1, dtype=np.int64)
    down = factor_value(spec.factor, m * N - j)
    up = factor_value(spec.factor, m * N + j)
    sign = np.ones(blocks) if parity == 0 else (-1.0) ** m
    terms = sign * (g.mid * mid_sign * down + g.high * up)
    # pairwise-ish summation via numpy is fine here; magnitudes decay fast
    value = base + float(terms.sum())
    largest = max(abs(base), float(np.max(np.abs(terms), initial=0.0)))
    return value, largest


def _hurwitz_band_sums(s: float, frac: float, alternating: bool) -> tuple[float, float]:
    """(sum over mN-j, sum over mN+j) of n**-s, m >= 1, with frac = j/N.

    Plain sums reduce to N**-s * zeta(s, 1 -+ frac); alternating-in-m sums
    split into even/odd m and reduce to scaled zeta differences.
    """
    if not alternating:
        return hurwitz_zeta(s, 1.0 - frac), hurwitz_zeta(s, 1.0 + frac)
    down = 2.0 ** (-s) * (hurwitz_zeta(s, 1.0 - frac / 2.0) - hurwitz_zeta(s, (1.0 - frac) / 2.0))
    up = 2.0 ** (-s) * (hurwitz_zeta(s, 1.0 + frac / 2.0) - hurwitz_zeta(s, (1.0 + frac) / 2.0))
    return down, up


def _denominator_zeta(spec, j, parity, mid_sign, base):
    from .errors import UnsupportedForDegree

    r = spec.factor.degree
    if r < 1:
        raise UnsupportedForDegree("closed-form denominators need degree >= 1 (zeta(1, .) diverges)")
    s = float(r + 1)
    N = spec.grid_size
    g = spec.gamma
    down, up = _hurwitz_band_sums(s, j / N, alternating=(parity == 1))
    scale = spec.factor.alpha * N ** (-s)
    value = base + scale * (g.mid * mid_sign * down + g.high * up)
    largest = max(abs(base), abs(scale * g.mid * down), abs(scale * g.high * up))
    return value, largest


@dataclass(frozen=True)
class HarmonicSeries:
    """Finite cosine/sine expansion c0 + sum_n a_n cos(nt) + b_n sin(nt).

    freq is strictly increasing; tail_bound bounds the summed magnitude of
    everything omitted, tail_sq_bound the omitted Parseval mass.  For
    derivative series (derivative_order >= 1) c0 is always 0.
    """

    c0: float
    freq: np.ndarray
    cos_coef: np.ndarray
    sin_coef: np.ndarray
    derivative_order: int = 0
    tail_bound: float = 0.0
    tail_sq_bound: float = 0.0
    converged: bool = True

    def __post_init__(self):
        for arr in (self.freq, self.cos_coef, self.sin_coef):
            arr.setflags(write=False)
        if len(self.freq) != len(self.cos_coef) or len(self.freq) != len(self.sin_coef):
            raise ValidationError("freq / cos_coef / sin_coef lengths differ")
        if len(self.freq) > 1 and not np.all(np.diff(self.freq) > 0):
            raise ValidationError("frequencies must be strictly increasing")

    def __len__(self) -> int:
        return len(self.freq)

    def amplitudes(self) -> np.ndarray:
        return np.hypot(self.cos_coef, self.sin_coef)

    def require_converged(self, tol: float | None = None) -> "HarmonicSeries":
        """Strict-mode hook: raise if the truncation fell short of its target."""
        if not self.converged:
            raise TruncationNotConverged(self.tail_bound, tol if tol is not None else math.nan, 0)
        return self


def _band_arrays(spec, j, q, parity, mid_sign, blocks):
    """Signed raw coefficients (before the 2/(N h_j) scaling) for one base
    frequency: base term plus ``blocks`` m-blocks of the two shifted bands."""
    N = spec.grid_size
    g = spec.gamma
    freqs = [np.array([j], dtype=np.int64)]
    coefs = [np.array([g.low * factor_value(spec.factor, j) * float(j) ** q])]
    if blocks > 0:
        m = np.arange(1, blocks + 1, dtype=np.int64)
        down_n = m * N - j
        up_n = m * N + j
        sign = np.ones(blocks) if parity == 0 else (-1.0) ** m
        freqs += [down_n, up_n]
        coefs += [
            sign * g.mid * mid_sign * factor_value(spec.factor, down_n) * down_n.astype(float) ** q,
            sign * g.high * factor_value(spec.factor, up_n) * up_n.astype(float) ** q,
        ]
    return np.concatenate(freqs), np.concatenate(coefs)


def harmonic_series(spec: SplineSpec, k: int = 1, q: int = 0, purpose: str = "eval") -> HarmonicSeries:
    """Series of the fundamental spline anchored at node k (1-based), or of
    its q-th derivative.

    Differentiation acts termwise: each harmonic picks up n**q and a phase
    shift of q*pi/2, so a_n = A_n cos(n x_k - q pi/2), b_n = A_n sin(n x_k -
    q pi/2) with A_n the signed amplitude 2 sigma-weight / (N h_j).  q is
    limited to degree-1, where the differentiated series still converges
    absolutely.

    purpose selects the truncation criterion: "eval" targets the summed
    magnitude of the tail (pointwise accuracy), "parseval" targets relative
    omitted mass (cheap and tight for norm-type functionals).
    """
    N = spec.grid_size
    if not 1 <= k <= N:
        raise ValidationError(f"node index {k} outside 1..{N}")
    if not isinstance(q, (int, np.integer)) or q < 0:
        raise ValidationError(f"derivative order must be an integer >= 0, got {q!r}")
    if q > 0 and q > spec.max_derivative():
        raise DerivativeOrderTooHigh(
            f"derivative order {q} exceeds degree-1 = {spec.max_derivative()}"
        )
    if purpose not in ("eval", "parseval"):
        raise ValidationError(f"unknown truncation purpose {purpose!r}")

    pol = spec.truncation
    parity, mid_sign = _band_sign_setup(spec)
    half = (N - 1) // 2
    x_k = spec.node_grid_spec.node(k)
    K_env = _envelope_scale(spec.factor)
    g = spec.gamma
    band_K = (abs(g.mid) + abs(g.high)) * K_env
    P_amp = float(spec.factor.degree + 1 - q)

    freq_parts, a_parts, b_parts = [], [], []
    tail_amp = 0.0
    tail_sq = 0.0
    converged = True

    for j in range(1, half + 1):
        h = _series_denominator(spec, j)
        pref = 2.0 / (N * h.value)
        if purpose == "eval":
            target = pol.tail_tol / half if pol.tail_tol > 0.0 else 0.0
            blocks = _blocks_for(abs(pref) * band_K, P_amp, N, j, target, pol.m_max)
            if pol.tail_tol == 0.0:
                blocks = 0 if band_K == 0.0 else pol.m_max
            nn, raw = _band_arrays(spec, j, q, parity, mid_sign, blocks)
            t_amp = _tail_after(abs(pref) * band_K, P_amp, N, j, blocks)
            if not t_amp <= target:
                converged = False
            t_sq = _tail_after((pref * band_K) ** 2, 2.0 * P_amp, N, j, blocks)
        else:
            blocks, t_amp, t_sq, nn, raw = _parseval_blocks(
                spec, j, q, parity, mid_sign, pref, band_K, P_amp
            )
            if t_sq is None:  # relative target missed at m_max
                converged = False
                if blocks != pol.m_max:
                    nn, raw = _band_arrays(spec, j, q, parity, mid_sign, pol.m_max)
                t_amp = _tail_after(abs(pref) * band_K, P_amp, N, j, pol.m_max)
                t_sq = _tail_after((pref * band_K) ** 2, 2.0 * P_amp, N, j, pol.m_max)
        # fold the denominator's own truncation error into the magnitude bound
        amp = pref * raw
        h_rel = h.tail_bound / abs(h.value) if h.tail_bound > 0.0 else 0.0
        tail_amp += t_amp + h_rel * float(np.abs(amp).sum())
        tail_sq += t_sq
        if not h.converged:
            converged = False
        phase = nn.astype(float) * x_k - q * (math.pi / 2.0)
        freq_parts.append(nn)
        a_parts.append(amp * np.cos(phase))
        b_parts.append(amp * np.sin(phase))

    freq = np.concatenate(freq_parts)
    order = np.argsort(freq, kind="stable")
    freq = freq[order]
    a = np.concatenate(a_parts)[order]
    b = np.concatenate(b_parts)[order]
    # distinct bands never collide for j < N/2, so the sorted grid is strict
    if np.any(np.diff(freq) <= 0):
        raise ValidationError("internal: duplicate frequencies in assembled series")
    c0 = (1.0 / N) if q == 0 else 0.0
    return HarmonicSeries(
        c0=c0,
        freq=freq,
        cos_coef=a,
        sin_coef=b,
        derivative_order=int(q),
        tail_bound=float(tail_amp),
        tail_sq_bound=float(tail_sq),
        converged=converged,
    )


def _series_denominator(spec: SplineSpec, j: int) -> DenominatorInfo:
    """Denominator for series assembly, pushed to relative accuracy.

    The public denominator() op keeps the policy's absolute tail_tol
    semantics; here the coefficients all carry a 1/h_j factor, so the h_j
    error must be small relative to h_j itself.  Power factor with degree
    >= 1 gets the exact closed form (free accuracy); otherwise the adaptive
    sum is re-targeted at SERIES_H_REL_TOL of a first estimate.  The
    tail_tol = 0 reference policy (fixed block count) is passed through
    untouched.
    """
    pol = spec.truncation
    if pol.tail_tol == 0.0 or pol.mode is TruncationMode.CLOSED_FORM_ZETA:
        return denominator(spec, j)
    if spec.factor.kind is FactorKind.POWER_SIGN_CONSTANT and spec.factor.degree >= 1:
        return denominator(spec, j, policy=TruncationPolicy(mode=TruncationMode.CLOSED_FORM_ZETA))
    info = denominator(spec, j)
    target = SERIES_H_REL_TOL * abs(info.value)
    if info.tail_bound > target > 0.0:
        info = denominator(
            spec, j, policy=TruncationPolicy(tail_tol=target, m_max=pol.m_max, mode=pol.mode)
        )
    return info


_PARSEVAL_PILOT_BLOCKS = 64


def _parseval_blocks(spec, j, q, parity, mid_sign, pref, band_K, P_amp):
    """Pick the block count so the omitted mass is tiny relative to the band's
    accumulated mass, then return the final arrays.  Returns t_sq=None when
    even m_max cannot meet the relative target (caller falls back)."""
    pol = spec.truncation
    P_sq = 2.0 * P_amp
    K_sq = (pref * band_K) ** 2
    N = spec.grid_size
    pilot = 0 if band_K == 0.0 else min(_PARSEVAL_PILOT_BLOCKS, pol.m_max)
    if pol.tail_tol == 0.0 and band_K != 0.0:
        # exact-M reference policy applies to parseval series too
        blocks = pol.m_max
        nn, raw = _band_arrays(spec, j, q, parity, mid_sign, blocks)
        t_amp = _tail_after(abs(pref) * band_K, P_amp, N, j, blocks)
        t_sq = _tail_after(K_sq, P_sq, N, j, blocks)
        return blocks, t_amp, t_sq, nn, raw
    nn, raw = _band_arrays(spec, j, q, parity, mid_sign, pilot)
    mass = float(np.sum((pref * raw) ** 2))
    if mass == 0.0:
        return pilot, 0.0, 0.0, nn, raw
    target_sq = PARSEVAL_REL_TOL * mass
    blocks = _blocks_for(K_sq, P_sq, N, j, target_sq, pol.m_max)
    if blocks > pilot:
        nn, raw = _band_arrays(spec, j, q, parity, mid_sign, blocks)
    else:
        blocks = pilot
    t_sq = _tail_after(K_sq, P_sq, N, j, blocks)
    if not t_sq <= target_sq * (1.0 + 1e-9):
        return blocks, 0.0, None, nn, raw
    t_amp = _tail_after(abs(pref) * band_K, P_amp, N, j, blocks)
    return blocks, t_amp, t_sq, nn, raw


def eval_series(series: HarmonicSeries, t):
    """Evaluate at scalar or array t (radians).  Chunked over frequencies so
    huge series do not blow up memory."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    flat = t_arr.ravel()
    out = np.full(flat.shape, series.c0)
    n_terms = len(series)
    if n_terms:
        step = max(1, _EVAL_CHUNK // max(1, flat.size))
        for lo in range(0, n_terms, step):
            sl = slice(lo, lo + step)
            ang = np.outer(flat, series.freq[sl].astype(float))
            out += np.cos(ang) @ series.cos_coef[sl]
            out += np.sin(ang) @ series.sin_coef[sl]
    out = out.reshape(t_arr.shape)
    if np.isscalar(t) or np.asarray(t).ndim == 0:
        return float(out[()] if out.shape == () else out[0])
    return out


def eval_series_uniform(series: HarmonicSeries, samples: int, offset: float = 0.0) -> np.ndarray:
    """Values at t_i = offset + 2pi*i/samples, i = 0..samples-1.

    Folds harmonics into FFT bins modulo the sample count (exact, not an
    approximation), so cost is O(terms + samples log samples) instead of
    O(terms * samples).
    """
    if not isinstance(samples, (int, np.integer)) or samples < 1:
        raise InvalidResolution(f"sample count must be a positive integer, got {samples!r}")
    bins = np.zeros(samples, dtype=complex)
    if len(series):
        rotated = (series.cos_coef - 1j * series.sin_coef) * np.exp(
            1j * series.freq.astype(float) * offset
        )
        np.add.at(bins, series.freq % samples, rotated)
    return np.fft.ifft(bins).real * samples + series.c0


def interpolant_series(spec: SplineSpec, values, q: int = 0, purpose: str = "eval") -> HarmonicSeries:
    """Series of the spline interpolating ``values`` at the grid nodes.

    Uses the translation structure: every anchored spline is the same profile
    shifted by a node step, so the combined coefficients come from one base
    series rotated through the node offsets.
    """
    v = np.asarray(values, dtype=float)
    N = spec.grid_size
    if v.shape != (N,):
        raise ArityMismatch(f"expected {N} node values, got shape {v.shape}")
    base = harmonic_series(spec, k=1, q=q, purpose=purpose)
    delta = TWO_PI * np.arange(N, dtype=float) / N  # node k offset from node 1
    n_terms = len(base)
    a = np.empty(n_terms)
    b = np.empty(n_terms)
    step = max(1, _EVAL_CHUNK // N)
    for lo in range(0, n_terms, step):
        sl = slice(lo, lo + step)
        ang = np.outer(base.freq[sl].astype(float), delta)
        c, s = np.cos(ang), np.sin(ang)
        a1, b1 = base.cos_coef[sl], base.sin_coef[sl]
        a[sl] = (c * a1[:, None] - s * b1[:, None]) @ v
        b[sl] = (c * b1[:, None] + s * a1[:, None]) @ v
    scale = float(np.abs(v).sum())
    return HarmonicSeries(
        c0=base.c0 * float(v.sum()),
        freq=base.freq.copy(),
        cos_coef=a,
        sin_coef=b,
        derivative_order=int(q),
        tail_bound=base.tail_bound * scale,
        tail_sq_bound=2.0 * base.tail_sq_bound * scale**2,
        converged=base.converged,
    )


def eval_interpolant(spec: SplineSpec, values, t, q: int = 0):
    """Interpolating spline through ``values`` evaluated at t."""
    return eval_series(interpolant_series(spec, values, q=q), t)
