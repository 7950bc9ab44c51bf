import numpy as np
import pytest
from scipy.interpolate import CubicSpline

from trigspline import EXAMPLE_ETA, EXAMPLE_GAMMA, build_spline, make_config, make_grid, sample_values
from trigspline.kernels import SincPower, tail_bound
from trigspline.oracles import (
    PeriodicCubic,
    PeriodicQuadratic,
    QuadratureSpec,
    dense_series_eval,
    numeric_power,
    piecewise_linear_eval,
    solve_cyclic_tridiagonal,
)


@pytest.mark.parametrize("n", [3, 4, 9, 30])
def test_cyclic_solver_against_dense(n):
    rng = np.random.default_rng(n)
    lo, up = rng.normal(size=n), rng.normal(size=n)
    diag = 4.0 + np.abs(lo) + np.abs(up)
    rhs = rng.normal(size=n)
    A = np.diag(diag)
    for i in range(n):
        A[i, (i - 1) % n] += lo[i]
        A[i, (i + 1) % n] += up[i]
    np.testing.assert_allclose(solve_cyclic_tridiagonal(lo, diag, up, rhs), np.linalg.solve(A, rhs), atol=1e-13)


@pytest.mark.parametrize("kind", [0, 1])
def test_cubic_matches_scipy(example_samples, kind):
    s = example_samples(kind)
    x = np.append(s.nodes, s.nodes[0] + 2 * np.pi)
    ref = CubicSpline(x, np.append(s.values, s.values[0]), bc_type="periodic")
    t = np.linspace(s.nodes[0], s.nodes[0] + 2 * np.pi, 301)
    np.testing.assert_allclose(PeriodicCubic(s)(t), ref(t), atol=1e-13)


def test_cubic_continuity_at_knots(example_samples):
    s = example_samples(0)
    cub = PeriodicCubic(s)
    eps = 1e-9
    for nu, tol in ((0, 1e-8), (1, 1e-7), (2, 1e-6)):
        left = cub(s.nodes - eps, nu)
        right = cub(s.nodes + eps, nu)
        assert np.max(np.abs(left - right)) < tol
    np.testing.assert_allclose(cub(s.nodes), s.values, atol=1e-13)


def test_piecewise_linear(example_samples):
    s = example_samples(1)
    np.testing.assert_allclose(piecewise_linear_eval(s, s.nodes), s.values, atol=1e-13)
    mid = s.nodes + np.pi / 9
    np.testing.assert_allclose(piecewise_linear_eval(s, mid), 0.5 * (s.values + np.roll(s.values, -1)), atol=1e-13)
    assert piecewise_linear_eval(s, 0.0) == pytest.approx(0.5 * (s.values[0] + s.values[-1]))


@pytest.mark.parametrize("knots", [0, 1])
def test_quadratic_interpolates_and_is_c1(example_samples, knots):
    s = example_samples(0)
    q = PeriodicQuadratic(s, knots)
    np.testing.assert_allclose(q(s.nodes), s.values, atol=1e-12)
    knot_pos = make_grid(knots, 9).nodes
    eps = 1e-6
    slope_l = (q(knot_pos) - q(knot_pos - eps)) / eps
    slope_r = (q(knot_pos + eps) - q(knot_pos)) / eps
    assert np.max(np.abs(slope_l - slope_r)) < 1e-4


def test_quadrature_spec():
    with pytest.raises(ValueError):
        QuadratureSpec(points=10)
    with pytest.raises(ValueError):
        QuadratureSpec(rule="simpson")


def _doubling_gap(example_samples, r, vec):
    sp = build_spline(example_samples(1), make_config(0, 1, r, vec, vec))
    a = numeric_power(sp, QuadratureSpec(1 << 14))
    b = numeric_power(sp, QuadratureSpec(1 << 15))
    return abs(a - b), b


@pytest.mark.parametrize("vec", [(1, 1, 1), EXAMPLE_GAMMA])
def test_quadrature_doubling_r3(example_samples, vec):
    gap, _ = _doubling_gap(example_samples, 3, vec)
    assert gap < 1e-10


@pytest.mark.xfail(strict=True, reason="r = 2: second derivative of St^2 jumps, trapezoid error ~3e-10 at 2^14 points")
def test_quadrature_doubling_r2_absolute(example_samples):
    gap, _ = _doubling_gap(example_samples, 2, (1, 1, 1))
    assert gap < 1e-10


@pytest.mark.parametrize("vec", [(1, 1, 1), EXAMPLE_GAMMA])
def test_quadrature_doubling_r2_relative(example_samples, vec):
    gap, ref = _doubling_gap(example_samples, 2, vec)
    assert gap < 1e-10 * ref


def test_dense_series_r3(example_samples):
    sp = build_spline(example_samples(0), make_config(1, 0, 3, EXAMPLE_GAMMA, EXAMPLE_ETA))
    t = np.linspace(0, 2 * np.pi, 40)
    dense = dense_series_eval(sp, t, M_huge=20_000)
    assert np.max(np.abs(dense - sp(t))) <= 10 * sp.config.trunc.tail_tol


def test_dense_series_r1(example_samples):
    sp = build_spline(example_samples(1), make_config(0, 1, 1, EXAMPLE_GAMMA, EXAMPLE_ETA))
    t = np.linspace(0.05, 2 * np.pi, 30)
    M = 100_000
    dense = dense_series_eval(sp, t, M_huge=M)
    # the partial sums stop at M_huge; bound the neglected tails of series and factors
    per_k = tail_bound(2.2, SincPower(r=1).envelope(9), 9, 4, M, 2)
    weights = np.sum(np.abs(sp.coeffs.a / sp.hc)) + np.sum(np.abs(sp.coeffs.b / sp.hs))
    bound = 2 * per_k * weights * (1 + np.max(np.abs(sp(t))))
    assert np.max(np.abs(dense - sp(t))) <= bound + 10 * sp.config.trunc.tail_tol


def test_dense_series_r0_reported(example_samples, capsys):
    sp = build_spline(example_samples(0), make_config(0, 0, 0))
    t = np.array([0.3, 1.1, 2.0])
    dense = dense_series_eval(sp, t, M_huge=20_000)
    with capsys.disabled():
        print(f"\nr=0 dense vs closed form (no certified bound): {np.max(np.abs(dense - sp(t))):.3e}")
    assert np.all(np.isfinite(dense))


def test_dense_series_polynomial_shape(example_samples):
    sp = build_spline(example_samples(0), make_config(0, 0, 1, (1, 0, 0), (1, 0, 0)))
    t = np.linspace(0, 6, 17)
    np.testing.assert_allclose(dense_series_eval(sp, t, M_huge=10), sp(t), atol=1e-13)


def test_constant_data_oracles_agree():
    s = sample_values(make_grid(0, 9), [2.5] * 9)
    t = np.linspace(-1, 8, 50)
    cub = PeriodicCubic(s)
    assert np.array_equal(cub(t), piecewise_linear_eval(s, t))
    np.testing.assert_allclose(cub(t, 2), 0.0, atol=1e-14)
