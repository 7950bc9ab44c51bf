"""Brute-force references used to check the spline machinery.

Nothing here calls into the closed-form alias summation: power comes from
plain quadrature, the polynomial splines are built piecewise in real space,
and :func:`dense_series_eval` sums the raw series term by term.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import TWO_PI, SampleSet
from .spline import Spline, eval_spline_batch


@dataclass(frozen=True)
class QuadratureSpec:
    points: int = 1 << 14
    rule: str = "trapezoid"

    def __post_init__(self):
        if self.points < 64:
            raise ValueError("quadrature needs at least 64 points")
        if self.rule != "trapezoid":
            raise ValueError(f"unknown rule {self.rule!r}")


def numeric_power(spline: Spline, q: QuadratureSpec = QuadratureSpec()) -> float:
    """(1/pi) * integral_0^{2pi} St^2 dt by the periodic trapezoid rule."""
    t = TWO_PI * np.arange(q.points) / q.points
    y = eval_spline_batch(spline, t)
    return 2.0 * float(np.mean(y * y))


def _locate(samples: SampleSet, t):
    """Interval index and local coordinate in [0, 1) for each t."""
    N = samples.N
    h = TWO_PI / N
    u = np.mod((np.asarray(t, dtype=float) - samples.nodes[0]) / h, N)
    i = np.floor(u).astype(int) % N
    return i, u - np.floor(u), h


def piecewise_linear_eval(samples: SampleSet, t):
    """Periodic broken line through the samples."""
    f = samples.values
    i, x, _ = _locate(samples, t)
    out = (1.0 - x) * f[i] + x * f[(i + 1) % samples.N]
    return float(out) if np.ndim(out) == 0 else out


def solve_cyclic_tridiagonal(lower, diag, upper, rhs) -> np.ndarray:
    """Solve a cyclic tridiagonal system (Thomas + Sherman-Morrison).

    Row i reads lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i]
    with indices taken mod n.
    """
    a = np.asarray(lower, dtype=float)
    b = np.array(diag, dtype=float)
    c = np.asarray(upper, dtype=float)
    d = np.asarray(rhs, dtype=float)
    n = b.size
    if n < 3:
        raise ValueError("cyclic system needs n >= 3")
    gamma = -b[0]
    bb = b.copy()
    bb[0] -= gamma
    bb[-1] -= a[0] * c[-1] / gamma
    u = np.zeros(n)
    u[0] = gamma
    u[-1] = c[-1]

    def thomas(r):
        cp = np.empty(n)
        dp = np.empty(n)
        cp[0] = c[0] / bb[0]
        dp[0] = r[0] / bb[0]
        for i in range(1, n):
            m = bb[i] - a[i] * cp[i - 1]
            cp[i] = c[i] / m
            dp[i] = (r[i] - a[i] * dp[i - 1]) / m
        x = np.empty(n)
        x[-1] = dp[-1]
        for i in range(n - 2, -1, -1):
            x[i] = dp[i] - cp[i] * x[i + 1]
        return x

    y = thomas(d)
    z = thomas(u)
    vy = y[0] + a[0] / gamma * y[-1]
    vz = z[0] + a[0] / gamma * z[-1]
    return y - vy / (1.0 + vz) * z


class PeriodicCubic:
    """C^2 periodic cubic interpolating spline with knots at the sample nodes."""

    def __init__(self, samples: SampleSet):
        self.samples = samples
        f = samples.values
        N = samples.N
        h = TWO_PI / N
        rhs = 6.0 / h**2 * (np.roll(f, -1) - 2.0 * f + np.roll(f, 1))
        ones = np.ones(N)
        # second derivatives ("moments") at the knots
        self.moments = solve_cyclic_tridiagonal(ones, 4.0 * ones, ones, rhs)

    def __call__(self, t, nu: int = 0):
        s = self.samples
        f = s.values
        Mm = self.moments
        i, x, h = _locate(s, t)
        j = (i + 1) % s.N
        y = 1.0 - x
        if nu == 0:
            out = (h * h / 6.0) * (Mm[i] * (y**3 - y) + Mm[j] * (x**3 - x)) + f[i] * y + f[j] * x
        elif nu == 1:
            out = (f[j] - f[i]) / h + (h / 6.0) * (
                Mm[j] * (3 * x**2 - 1) - Mm[i] * (3 * y**2 - 1)
            )
        elif nu == 2:
            out = Mm[i] * y + Mm[j] * x
        else:
            raise ValueError("nu must be 0, 1 or 2")
        return float(out) if np.ndim(out) == 0 else out


def periodic_cubic_eval(samples: SampleSet, t):
    return PeriodicCubic(samples)(t)


def _bspline2(u):
    """Centered quadratic cardinal B-spline, support [-1.5, 1.5]."""
    u = np.abs(u)
    return np.where(
        u < 0.5, 0.75 - u**2, np.where(u < 1.5, 0.5 * (1.5 - u) ** 2, 0.0)
    )


class PeriodicQuadratic:
    """Periodic quadratic spline with knots on grid ``knot_kind``, interpolating the samples.

    Each B-spline is centered half a step off its knots, i.e. on the other
    grid family.
    """

    def __init__(self, samples: SampleSet, knot_kind: int):
        N = samples.N
        self.h = TWO_PI / N
        self.samples = samples
        self.knot_kind = knot_kind
        j = np.arange(N)
        self.centers = (
            np.pi * (2 * j + 1) / N if knot_kind == 0 else TWO_PI * j / N
        )
        A = self._basis(samples.nodes)
        self.coef = np.linalg.solve(A, samples.values)

    def _basis(self, t):
        t = np.asarray(t, dtype=float)
        d = np.subtract.outer(t, self.centers)
        d = (d + np.pi) % TWO_PI - np.pi
        return _bspline2(d / self.h)

    def __call__(self, t):
        out = self._basis(np.atleast_1d(t)) @ self.coef
        return float(out[0]) if np.ndim(t) == 0 else out


def periodic_quadratic_eval(samples: SampleSet, t, knot_kind: int = 0):
    return PeriodicQuadratic(samples, knot_kind)(t)


def dense_series_eval(spline: Spline, t, M_huge: int = 100_000):
    """Raw partial sums of the spline series to m = M_huge, factors included.

    Uses only the convergence-factor rule, the coefficients and the shape
    vectors; no tail bound and no closed form.
    """
    c = spline.config
    cf = c.cf
    N = spline.N
    co = spline.coeffs
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    g1, g2, g3 = c.gamma.as_tuple()
    e1, e2, e3 = c.eta.as_tuple()
    xor = c.I1 ^ c.I2
    out = np.full(t_arr.shape, 0.5 * co.a0)
    chunk = max(1, (1 << 20) // t_arr.size)
    for k in range(1, co.harmonics + 1):
        vk = float(cf.values(np.array([k]), N)[0])
        Cs = g1 * vk * np.cos(k * t_arr)
        Ss = e1 * vk * np.sin(k * t_arr)
        hc = g1 * vk
        hs = e1 * vk
        for m0 in range(1, M_huge + 1, chunk):
            m = np.arange(m0, min(M_huge, m0 + chunk - 1) + 1)
            sb = np.where((m * c.I1) % 2, -1.0, 1.0)
            sf = np.where((m * xor) % 2, -1.0, 1.0)
            jp = m * N + k
            jm = m * N - k
            vp = cf.values(jp, N)
            vm = cf.values(jm, N)
            hc += float(np.sum(sf * (g2 * vp + g3 * vm)))
            hs += float(np.sum(sf * (e2 * vp + e3 * vm)))
            ap = np.multiply.outer(t_arr, jp.astype(float))
            am = np.multiply.outer(t_arr, jm.astype(float))
            Cs = Cs + np.cos(ap) @ (sb * g2 * vp) + np.cos(am) @ (sb * g3 * vm)
            Ss = Ss + np.sin(ap) @ (sb * e2 * vp) - np.sin(am) @ (sb * e3 * vm)
        out = out + co.a[k - 1] * Cs / hc + co.b[k - 1] * Ss / hs
    return float(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))
