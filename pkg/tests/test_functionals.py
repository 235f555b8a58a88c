"""Functional-level checks: Parseval vs quadrature norms, seminorms,
variation by both routes, arc length, scaling and k-independence."""

import dataclasses
import math

import numpy as np
import pytest
from scipy.special import ellipe

from trigsplines import (
    FactorKind,
    FactorSpec,
    GammaVector,
    HarmonicSeries,
    SplineSpec,
    TruncationPolicy,
    arc_length,
    arc_quadrature,
    harmonic_series,
    norm_parseval,
    norm_quadrature,
    norm_squared_closed_form,
    seminorm,
    seminorm_order,
    spline_norm,
    total_variation_derivative,
    total_variation_partition,
    variation_partition,
    variation_quadrature,
)
from trigsplines.errors import (
    DerivativeOrderTooHigh,
    InvalidResolution,
    UnsupportedForDegree,
    UseDPartitionVariation,
)
from trigsplines.functionals import Method

TWO_PI = 2.0 * math.pi


def make_spec(kind=FactorKind.POWER_SIGN_CONSTANT, alpha=1.0, r=3,
              grids=(0, 0), gamma=(1.0, 1.0, 1.0), N=7):
    return SplineSpec(
        grid_size=N,
        series_grid=grids[0],
        node_grid=grids[1],
        gamma=GammaVector(*gamma),
        factor=FactorSpec(kind, alpha, r),
    )


def bare_series(c0=0.0, freq=(), cos=(), sin=(), q=0):
    return HarmonicSeries(
        c0=c0,
        freq=np.asarray(freq, dtype=np.int64),
        cos_coef=np.asarray(cos, dtype=float),
        sin_coef=np.asarray(sin, dtype=float),
        derivative_order=q,
    )


COS_T = bare_series(freq=[1], cos=[1.0], sin=[0.0])
# d/dt cos t = -sin t
COS_T_PRIME = bare_series(freq=[1], cos=[0.0], sin=[-1.0], q=1)
FLAT = bare_series(c0=3.5)
FLAT_PRIME = bare_series(q=1)


# ------------------------------------------------------------------ norms ---

def test_parseval_constant():
    sq, root = norm_parseval(bare_series(c0=1.0))
    assert sq.value == pytest.approx(TWO_PI, rel=1e-15)
    assert root.value == pytest.approx(math.sqrt(TWO_PI), rel=1e-15)


def test_parseval_single_cosine():
    sq, _ = norm_parseval(COS_T)
    assert sq.value == pytest.approx(math.pi, rel=1e-15)


def test_parseval_root_consistent_with_square():
    sq, root = spline_norm(make_spec())
    assert root.value**2 == pytest.approx(sq.value, rel=1e-12)


def test_degenerate_gamma_norm_is_polynomial_norm():
    # fundamental trigonometric polynomial: integral of st^2 = 2*pi/7
    for kind in FactorKind:
        sq, _ = spline_norm(make_spec(kind=kind, gamma=(1.0, 0.0, 0.0)))
        assert sq.value == pytest.approx(TWO_PI / 7.0, rel=1e-13)


def test_quadrature_constant():
    _, root = norm_quadrature(bare_series(c0=1.0), samples=16)
    assert root.value == pytest.approx(math.sqrt(TWO_PI), rel=1e-13)


def test_quadrature_cosine():
    _, root = norm_quadrature(COS_T, samples=64)
    assert root.value == pytest.approx(math.sqrt(math.pi), abs=1e-12)


def test_quadrature_rejects_low_resolution():
    with pytest.raises(InvalidResolution):
        norm_quadrature(COS_T, samples=1)


SPEC_MATRIX = [
    make_spec(),
    make_spec(r=5, grids=(0, 1)),
    make_spec(kind=FactorKind.SINC_POWER, alpha=math.pi / 7, r=3),
    make_spec(kind=FactorKind.SINC_POWER, alpha=0.8, r=2, grids=(0, 1)),
    make_spec(gamma=(0.1, 0.5, 1.5), r=4),
]


@pytest.mark.parametrize("spec", SPEC_MATRIX, ids=range(len(SPEC_MATRIX)))
def test_parseval_matches_quadrature(spec):
    p = spline_norm(spec, method=Method.PARSEVAL)[1]
    q = spline_norm(spec, method=Method.QUADRATURE)[1]
    tail = harmonic_series(spec).tail_bound
    assert abs(p.value - q.value) <= max(1e-8, 20.0 * tail)


def test_closed_form_matches_parseval():
    for r in (1, 2, 3, 5, 8):
        for grids in ((0, 0), (0, 1)):
            spec = make_spec(r=r, grids=grids)
            exact = norm_squared_closed_form(spec).value
            adaptive = spline_norm(spec)[0].value
            assert adaptive == pytest.approx(exact, rel=1e-10)


def test_closed_form_rejects_sinc():
    from trigsplines.errors import ValidationError

    with pytest.raises(ValidationError):
        norm_squared_closed_form(make_spec(kind=FactorKind.SINC_POWER, alpha=0.3))


# -------------------------------------------------------------- seminorms ---

def test_seminorm_order_defaults():
    assert seminorm_order(3) == 2
    assert seminorm_order(7) == 4
    with pytest.raises(UnsupportedForDegree):
        seminorm_order(4)


def test_seminorm_of_cosine_series_by_hand():
    # order-2 derivative of cos t is -cos t: amplitude 1 at n=1, so the
    # Parseval mass is pi and the seminorm sqrt(pi)
    from trigsplines.functionals import series_mass

    d2 = bare_series(freq=[1], cos=[-1.0], sin=[0.0], q=2)
    assert math.sqrt(series_mass(d2)) == pytest.approx(math.sqrt(math.pi), rel=1e-15)


def test_seminorm_degenerate_polynomial_closed_form():
    # amplitudes 2/7 at n=1,2,3; order-2 Parseval mass pi*(4/49)*(1+16+81)=8*pi
    spec = make_spec(kind=FactorKind.SINC_POWER, alpha=0.3, r=3, gamma=(1.0, 0.0, 0.0))
    val = seminorm(spec, order=2).value
    assert val == pytest.approx(math.sqrt(8.0 * math.pi), rel=1e-10)


def test_seminorm_equal_at_coprime_special_rates():
    vals = [
        seminorm(make_spec(kind=FactorKind.SINC_POWER, alpha=k * math.pi / 7, r=3)).value
        for k in (1, 2, 3)
    ]
    assert max(vals) - min(vals) <= 1e-6 * max(vals)


def test_seminorm_order_gate():
    with pytest.raises(DerivativeOrderTooHigh):
        seminorm(make_spec(kind=FactorKind.SINC_POWER, alpha=0.3, r=3), order=3)


# -------------------------------------------------------------- variation ---

def test_variation_of_cosine():
    v = variation_quadrature(COS_T_PRIME, samples=4096)
    assert v.value == pytest.approx(4.0, abs=1e-6)


def test_variation_of_constant_is_zero():
    assert variation_quadrature(FLAT_PRIME, samples=64).value == 0.0


def test_partition_variation_cosine_from_below():
    # even partitions hit the extrema of cos exactly and telescope to 4;
    # an odd partition misses them and lands strictly below
    v = variation_partition(COS_T, partition=4096)
    assert 0.0 <= 4.0 - v.value < 1e-5
    v_odd = variation_partition(COS_T, partition=4095)
    assert 0.0 < 4.0 - v_odd.value < 1e-5


def test_partition_refinement_monotone():
    coarse = variation_partition(COS_T, partition=2048).value
    fine = variation_partition(COS_T, partition=4096).value
    assert coarse <= fine + 1e-12


def test_partition_agrees_with_derivative_route():
    spec = make_spec()
    a = total_variation_derivative(spec).value
    b = total_variation_partition(spec, partition=2**16).value
    assert abs(a - b) <= 1e-4


def test_variation_bounds_range():
    # V >= max f - min f on any sampled grid
    from trigsplines import eval_series_uniform

    spec = make_spec(kind=FactorKind.SINC_POWER, alpha=0.5, r=4)
    vals = eval_series_uniform(harmonic_series(spec), 2048)
    v = total_variation_derivative(spec).value
    assert v >= float(vals.max() - vals.min())


def test_variation_route_gate_low_degree():
    with pytest.raises(UseDPartitionVariation):
        total_variation_derivative(make_spec(r=1))
    # the partition route still works there
    assert total_variation_partition(make_spec(r=1)).value > 0.0


# -------------------------------------------------------------- arc length ---

def test_arc_length_of_constant():
    assert arc_quadrature(FLAT_PRIME, samples=64).value == pytest.approx(TWO_PI, rel=1e-14)


def test_arc_length_of_cosine_elliptic():
    # integral of sqrt(1+sin^2) over the period = 4*sqrt(2)*E(m=1/2)
    oracle = 4.0 * math.sqrt(2.0) * float(ellipe(0.5))
    assert arc_quadrature(COS_T_PRIME).value == pytest.approx(oracle, abs=1e-9)


def test_arc_length_above_flat_baseline():
    assert arc_length(make_spec()).value > TWO_PI


def test_arc_length_gate_low_degree():
    with pytest.raises(UnsupportedForDegree):
        arc_length(make_spec(r=1))


# ----------------------------------------------- scaling / k-independence ---

def scale_series(series: HarmonicSeries, c: float) -> HarmonicSeries:
    return dataclasses.replace(
        series,
        c0=c * series.c0,
        cos_coef=c * np.array(series.cos_coef),
        sin_coef=c * np.array(series.sin_coef),
    )


def test_linear_scaling_of_norm_seminorm_variation():
    spec = make_spec(kind=FactorKind.SINC_POWER, alpha=0.4, r=4)
    f = harmonic_series(spec)
    fp = harmonic_series(spec, q=1)
    f2, fp2 = scale_series(f, 2.0), scale_series(fp, 2.0)

    assert norm_parseval(f2)[1].value == pytest.approx(2.0 * norm_parseval(f)[1].value, rel=1e-12)
    d2 = harmonic_series(spec, q=2)
    assert norm_parseval(scale_series(d2, 2.0))[1].value == pytest.approx(
        2.0 * norm_parseval(d2)[1].value, rel=1e-12
    )
    assert variation_quadrature(fp2).value == pytest.approx(
        2.0 * variation_quadrature(fp).value, rel=1e-10
    )
    # arc length is affine in f only in the flat limit; doubling must NOT double it
    assert arc_quadrature(fp2).value < 2.0 * arc_quadrature(fp).value - 1.0


def test_functionals_independent_of_anchor_node():
    # Parseval-route functionals see only amplitudes, so k cancels exactly;
    # for the variation quadrature pick a sample count divisible by N so the
    # grid is closed under node shifts and the sums coincide term by term
    spec = make_spec(kind=FactorKind.SINC_POWER, alpha=0.6, r=3, grids=(0, 1))
    norms = [spline_norm(spec, k=k)[1].value for k in (1, 3, 7)]
    semis = [seminorm(spec, k=k).value for k in (1, 3, 7)]
    vars_ = [total_variation_derivative(spec, k=k, samples=7 * 512).value for k in (1, 3, 7)]
    assert max(norms) - min(norms) < 1e-10
    assert max(semis) - min(semis) < 1e-10
    assert max(vars_) - min(vars_) < 1e-10


def test_grid_pair_equivalence_of_norms():
    # (0,0) ~ (1,1) and (0,1) ~ (1,0)
    for kind, alpha in ((FactorKind.POWER_SIGN_CONSTANT, 1.0),
                        (FactorKind.SINC_POWER, 0.45)):
        for a, b in ((((0, 0)), ((1, 1))), (((0, 1)), ((1, 0)))):
            va = spline_norm(make_spec(kind=kind, alpha=alpha, grids=a))[0].value
            vb = spline_norm(make_spec(kind=kind, alpha=alpha, grids=b))[0].value
            assert abs(va - vb) < 1e-9
