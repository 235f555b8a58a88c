"""Kernel-level checks: grids, factors, denominators, series assembly,
pointwise evaluation, and the interpolation structure."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigsplines import (
    FactorKind,
    FactorSpec,
    GammaVector,
    GridSpec,
    SplineSpec,
    TruncationMode,
    TruncationPolicy,
    eval_series,
    eval_series_uniform,
    factor_value,
    harmonic_series,
    interpolant_series,
)
from trigsplines.errors import (
    ArityMismatch,
    DerivativeOrderTooHigh,
    InvalidFrequency,
    InvalidGrid,
    NearSingularDenominator,
)
from trigsplines.kernel import denominator

TWO_PI = 2.0 * math.pi

ZETA_POLICY = TruncationPolicy(mode=TruncationMode.CLOSED_FORM_ZETA)

# direct summation of 1 + sum_m (7m-1)^-4 + (7m+1)^-4 to machine precision
H1_R3_EXACT = 1.0010873180647


def make_spec(kind=FactorKind.POWER_SIGN_CONSTANT, alpha=1.0, r=3,
              grids=(0, 0), gamma=(1.0, 1.0, 1.0), N=7, trunc=None):
    return SplineSpec(
        grid_size=N,
        series_grid=grids[0],
        node_grid=grids[1],
        gamma=GammaVector(*gamma),
        factor=FactorSpec(kind, alpha, r),
        truncation=trunc if trunc is not None else TruncationPolicy(),
    )


# ------------------------------------------------------------------ grids ---

def test_grid_nodes_indicator0():
    g = GridSpec(7, 0)
    nodes = g.nodes()
    assert nodes[0] == 0.0
    assert nodes[1] == pytest.approx(TWO_PI / 7, abs=1e-15)
    assert len(nodes) == 7
    assert np.all(np.diff(nodes) > 0) and nodes[-1] < TWO_PI


def test_grid_nodes_indicator1():
    nodes = GridSpec(7, 1).nodes()
    assert nodes[0] == pytest.approx(math.pi / 7, abs=1e-15)
    assert np.all(nodes < TWO_PI)


def test_grid_nodes_spacing_n9():
    nodes = GridSpec(9, 0).nodes()
    assert np.allclose(np.diff(nodes), TWO_PI / 9, atol=1e-15)


@pytest.mark.parametrize("bad", [6, 0, -3, 1])
def test_grid_rejects_bad_size(bad):
    with pytest.raises(InvalidGrid):
        GridSpec(bad, 0)


def test_grid_rejects_bad_indicator():
    with pytest.raises(InvalidGrid):
        GridSpec(7, 2)


# ---------------------------------------------------------------- factors ---

def test_power_factor_value():
    f = FactorSpec(FactorKind.POWER_SIGN_CONSTANT, 1.0, 1)
    assert factor_value(f, 2) == pytest.approx(0.25, abs=1e-16)


def test_sinc_factor_zero_at_full_turn():
    # sin(pi*7/7) = 0, cubed
    f = FactorSpec(FactorKind.SINC_POWER, math.pi / 7, 2)
    assert abs(factor_value(f, 7)) < 1e-45


def test_sinc_factor_small_alpha_limit():
    f = FactorSpec(FactorKind.SINC_POWER, 1e-9, 4)
    assert factor_value(f, 3) == pytest.approx(1.0, abs=1e-12)


def test_factor_rejects_zero_frequency():
    f = FactorSpec(FactorKind.POWER_SIGN_CONSTANT, 1.0, 1)
    with pytest.raises(InvalidFrequency):
        factor_value(f, 0)


def test_factor_vectorizes():
    f = FactorSpec(FactorKind.POWER_SIGN_CONSTANT, 2.0, 1)
    np.testing.assert_allclose(factor_value(f, np.array([1, 2, 4])),
                               [2.0, 0.5, 0.125], rtol=1e-15)


# ----------------------------------------------------------- denominators ---

def test_denominator_degenerate_gamma_is_bare_factor():
    # with (g2,g3)=(0,0) the m-sum vanishes and h_j = g1*sigma(j) exactly
    for kind, alpha in ((FactorKind.POWER_SIGN_CONSTANT, 1.0),
                        (FactorKind.SINC_POWER, 0.3)):
        spec = make_spec(kind=kind, alpha=alpha, gamma=(2.0, 0.0, 0.0))
        for j in (1, 2, 3):
            info = denominator(spec, j)
            assert info.value == pytest.approx(2.0 * factor_value(spec.factor, j), rel=1e-15)
            assert info.blocks == 0 and info.converged


def test_denominator_h1_r3_zeta():
    spec = make_spec(trunc=ZETA_POLICY)
    assert denominator(spec, 1).value == pytest.approx(H1_R3_EXACT, abs=1e-12)


def test_denominator_adaptive_matches_zeta_within_tail():
    spec = make_spec()
    info = denominator(spec, 1)
    assert info.converged
    assert abs(info.value - H1_R3_EXACT) <= info.tail_bound <= 1e-8


def test_denominator_r1_reports_honest_nonconvergence():
    # r=1 tails decay like 1/n^2: the 1e-8 target needs ~4e6 blocks, beyond
    # the default cap, so the result must carry converged=False and a tail
    # bound that really covers the deficit
    spec = make_spec(r=1)
    info = denominator(spec, 1)
    exact = denominator(make_spec(r=1, trunc=ZETA_POLICY), 1).value
    assert not info.converged
    assert abs(info.value - exact) <= info.tail_bound


def test_denominator_alpha_linear_for_power():
    # alpha factors out of every summand, so the ratio is exact on the
    # closed-form route; the adaptive route carries its truncation error
    base = denominator(make_spec(alpha=1.0, trunc=ZETA_POLICY), 2).value
    scaled = denominator(make_spec(alpha=0.37, trunc=ZETA_POLICY), 2).value
    assert scaled / base == pytest.approx(0.37, rel=1e-12)
    adaptive = denominator(make_spec(alpha=0.37), 2)
    assert adaptive.value == pytest.approx(0.37 * base, abs=adaptive.tail_bound)


def test_denominator_rejects_out_of_range_j():
    spec = make_spec()
    for j in (0, 4, -1):
        with pytest.raises(InvalidFrequency):
            denominator(spec, j)


def test_denominator_near_singular_raises_with_j():
    # weights tuned so the j=1 sum cancels exactly (power, r=1, grid (0,0));
    # the zeta route sees the cancellation at machine precision
    from scipy.special import zeta

    c_mid = zeta(2.0, 1.0 - 1.0 / 7.0) / 49.0
    c_high = zeta(2.0, 1.0 + 1.0 / 7.0) / 49.0
    bad = (1.0, 1.0, -(1.0 + c_mid) / c_high)
    spec = make_spec(r=1, gamma=bad, trunc=ZETA_POLICY)
    with pytest.raises(NearSingularDenominator) as exc:
        denominator(spec, 1)
    assert exc.value.j == 1
    # neighbouring frequencies are unaffected
    assert math.isfinite(denominator(spec, 2).value)


# ----------------------------------------------------------------- series ---

def test_degenerate_gamma_gives_fundamental_polynomial():
    # (1,0,0) collapses to (1/7)(1 + 2*sum_j cos(j(t-x_k))) for any factor
    spec = make_spec(gamma=(1.0, 0.0, 0.0))
    s = harmonic_series(spec, k=1)
    assert s.c0 == pytest.approx(1.0 / 7.0, abs=1e-15)
    np.testing.assert_array_equal(s.freq, [1, 2, 3])
    np.testing.assert_allclose(s.cos_coef, 2.0 / 7.0, rtol=1e-14)
    np.testing.assert_allclose(s.sin_coef, 0.0, atol=1e-16)


def test_derivative_series_has_no_constant_term():
    s = harmonic_series(make_spec(kind=FactorKind.SINC_POWER, alpha=0.3, r=4), q=1)
    assert s.c0 == 0.0
    assert s.derivative_order == 1


def test_frequencies_strictly_increasing_and_unique():
    for kind in FactorKind:
        s = harmonic_series(make_spec(kind=kind, alpha=0.4, r=2, grids=(0, 1)))
        assert np.all(np.diff(s.freq) > 0)
        assert len(np.unique(s.freq)) == len(s.freq)


def test_alpha_invariance_power_coefficients():
    a = harmonic_series(make_spec(alpha=0.5))
    b = harmonic_series(make_spec(alpha=1.5))
    np.testing.assert_array_equal(a.freq, b.freq)
    np.testing.assert_allclose(a.cos_coef, b.cos_coef, atol=1e-14)
    np.testing.assert_allclose(a.sin_coef, b.sin_coef, atol=1e-14)
    assert a.c0 == b.c0


def test_derivative_order_gate():
    spec = make_spec(kind=FactorKind.SINC_POWER, alpha=0.3, r=3)
    harmonic_series(spec, q=2)  # q <= r-1 fine
    with pytest.raises(DerivativeOrderTooHigh):
        harmonic_series(spec, q=3)


def test_delta_interpolation_within_tail_budget():
    for kind, alpha in ((FactorKind.POWER_SIGN_CONSTANT, 1.0),
                        (FactorKind.SINC_POWER, math.pi / 7)):
        for grids in ((0, 0), (0, 1)):
            spec = make_spec(kind=kind, alpha=alpha, grids=grids)
            nodes = spec.nodes()
            for k in (1, 4, 7):
                s = harmonic_series(spec, k=k)
                vals = eval_series(s, nodes)
                target = np.zeros(7)
                target[k - 1] = 1.0
                assert np.max(np.abs(vals - target)) <= 10.0 * s.tail_bound


def test_translation_symmetry():
    # st_k(t) = st_1(t - (x_k - x_1)) pointwise
    spec = make_spec(kind=FactorKind.SINC_POWER, alpha=0.5, r=4, grids=(0, 1))
    nodes = spec.nodes()
    t = np.linspace(0.0, TWO_PI, 64, endpoint=False)
    s1 = harmonic_series(spec, k=1)
    for k in (3, 6):
        sk = harmonic_series(spec, k=k)
        shift = nodes[k - 1] - nodes[0]
        assert np.max(np.abs(eval_series(sk, t) - eval_series(s1, t - shift))) < 1e-12


# ------------------------------------------------------------- evaluation ---

def test_eval_constant_series():
    s = harmonic_series(make_spec(gamma=(1.0, 0.0, 0.0)))
    const = type(s)(c0=1.0 / 7.0, freq=np.array([], dtype=np.int64),
                    cos_coef=np.array([]), sin_coef=np.array([]))
    assert eval_series(const, 1.234) == pytest.approx(1.0 / 7.0, abs=1e-16)


def test_eval_periodicity():
    s = harmonic_series(make_spec())
    t = np.linspace(0.0, TWO_PI, 17)
    assert np.max(np.abs(eval_series(s, t) - eval_series(s, t + TWO_PI))) < 1e-12


def test_eval_scalar_matches_array():
    s = harmonic_series(make_spec())
    assert eval_series(s, 0.7) == pytest.approx(eval_series(s, np.array([0.7]))[0], abs=1e-15)


def test_uniform_eval_matches_direct():
    # the FFT folding is exact, not an approximation
    s = harmonic_series(make_spec(kind=FactorKind.SINC_POWER, alpha=0.4, r=5))
    for n, offset in ((64, 0.0), (101, 0.123)):
        t = offset + TWO_PI * np.arange(n) / n
        np.testing.assert_allclose(eval_series_uniform(s, n, offset=offset),
                                   eval_series(s, t), atol=1e-12)


# ----------------------------------------------------------- interpolants ---

def test_interpolant_of_ones_is_constant_one():
    spec = make_spec()
    s = interpolant_series(spec, np.ones(7))
    vals = eval_series(s, np.linspace(0.0, TWO_PI, 50))
    assert np.max(np.abs(vals - 1.0)) <= 10.0 * s.tail_bound


def test_interpolant_unit_vector_recovers_fundamental_spline():
    spec = make_spec(grids=(0, 1))
    e4 = np.zeros(7)
    e4[3] = 1.0
    a = interpolant_series(spec, e4)
    b = harmonic_series(spec, k=4)
    t = np.linspace(0.0, TWO_PI, 40)
    np.testing.assert_allclose(eval_series(a, t), eval_series(b, t), atol=1e-12)


def test_interpolant_matches_samples_at_nodes():
    spec = make_spec(kind=FactorKind.SINC_POWER, alpha=math.pi / 7, r=3)
    nodes = spec.nodes()
    samples = np.cos(nodes)
    s = interpolant_series(spec, samples)
    assert np.max(np.abs(eval_series(s, nodes) - samples)) <= 10.0 * s.tail_bound


def test_interpolant_arity_check():
    with pytest.raises(ArityMismatch):
        interpolant_series(make_spec(), np.ones(6))


# ------------------------------------------------------- property checks ----

@settings(max_examples=25, deadline=None)
@given(
    kind=st.sampled_from(list(FactorKind)),
    r=st.integers(min_value=1, max_value=6),
    grids=st.sampled_from([(0, 0), (0, 1), (1, 0), (1, 1)]),
    k=st.integers(min_value=1, max_value=7),
)
def test_delta_property_random_specs(kind, r, grids, k):
    alpha = 1.0 if kind is FactorKind.POWER_SIGN_CONSTANT else 0.35
    spec = make_spec(kind=kind, alpha=alpha, r=r, grids=grids)
    s = harmonic_series(spec, k=k)
    assert len(np.unique(s.freq)) == len(s.freq)
    vals = eval_series(s, spec.nodes())
    target = np.zeros(7)
    target[k - 1] = 1.0
    assert np.max(np.abs(vals - target)) <= 10.0 * s.tail_bound


@settings(max_examples=25, deadline=None)
@given(t=st.floats(min_value=-50.0, max_value=50.0, allow_nan=False))
def test_periodicity_property(t):
    s = harmonic_series(make_spec(r=2))
    assert eval_series(s, t) == pytest.approx(eval_series(s, t + TWO_PI), abs=1e-10)
