"""Spline assembly, evaluation, derivatives and closed-form average power."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, GridMismatchError, RequiresSmoothnessError, TruncationWarning
from .fourier import TrigCoeffs, dft_coefficients
from .grids import SampleSet, check_grid_index
from .kernels import (
    ConvergenceFactor,
    ShapeVector,
    SincPower,
    TruncationPolicy,
    alias_square_sums,
    basis_series,
    convergence_factor,
    interp_factor_hc,
    interp_factor_hs,
)


@dataclass(frozen=True)
class SplineConfig:
    """Crosslink grid I1, interpolation grid I2, shape vectors and factor.

    The smoothness parameter r lives on the convergence factor.
    """

    I1: int = 0
    I2: int = 0
    gamma: ShapeVector = field(default_factory=ShapeVector.unit)
    eta: ShapeVector = field(default_factory=ShapeVector.unit)
    cf: ConvergenceFactor = field(default_factory=SincPower)
    trunc: TruncationPolicy = field(default_factory=TruncationPolicy)

    def __post_init__(self):
        object.__setattr__(self, "I1", check_grid_index(self.I1))
        object.__setattr__(self, "I2", check_grid_index(self.I2))
        object.__setattr__(self, "gamma", ShapeVector.of(self.gamma))
        object.__setattr__(self, "eta", ShapeVector.of(self.eta))

    @property
    def r(self) -> int:
        return self.cf.r

    def to_dict(self) -> dict:
        return {
            "I1": self.I1,
            "I2": self.I2,
            "r": self.r,
            "gamma": list(self.gamma.as_tuple()),
            "eta": list(self.eta.as_tuple()),
            "factor": self.cf.to_dict(),
            "truncation": {
                "max_m": self.trunc.max_m,
                "tail_tol": self.trunc.tail_tol,
                "closed_form": self.trunc.closed_form,
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SplineConfig":
        fac = d.get("factor", {"kind": "sinc"})
        if fac.get("kind", "sinc") != "sinc":
            raise ConfigError(f"unsupported factor kind {fac.get('kind')!r}")
        tr = d.get("truncation", {})
        return cls(
            I1=d.get("I1", 0),
            I2=d.get("I2", 0),
            gamma=ShapeVector.of(d.get("gamma", (1, 1, 1))),
            eta=ShapeVector.of(d.get("eta", (1, 1, 1))),
            cf=SincPower(r=fac.get("r", d.get("r", 1)), alpha=fac.get("alpha")),
            trunc=TruncationPolicy(**tr),
        )


def make_config(I1=0, I2=0, r=1, gamma=(1, 1, 1), eta=(1, 1, 1), alpha=None,
                trunc: TruncationPolicy | None = None) -> SplineConfig:
    return SplineConfig(
        I1=I1,
        I2=I2,
        gamma=ShapeVector.of(gamma),
        eta=ShapeVector.of(eta),
        cf=SincPower(r=r, alpha=alpha),
        trunc=trunc or TruncationPolicy(),
    )


@dataclass(frozen=True)
class PowerReport:
    total: float
    pc: np.ndarray
    ps: np.ndarray

    def to_dict(self) -> dict:
        return {"total": self.total, "pc": self.pc.tolist(), "ps": self.ps.tolist()}


@dataclass(frozen=True)
class Spline:
    config: SplineConfig
    coeffs: TrigCoeffs
    hc: np.ndarray
    hs: np.ndarray

    @property
    def N(self) -> int:
        return self.coeffs.N

    @property
    def harmonics(self) -> int:
        return self.coeffs.harmonics

    def __call__(self, t):
        return eval_spline_batch(self, t)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "coeffs": self.coeffs.to_dict(),
            "hc": self.hc.tolist(),
            "hs": self.hs.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Spline":
        hc = np.array(d["hc"], dtype=float)
        hs = np.array(d["hs"], dtype=float)
        hc.setflags(write=False)
        hs.setflags(write=False)
        return cls(
            config=SplineConfig.from_dict(d["config"]),
            coeffs=TrigCoeffs.from_dict(d["coeffs"]),
            hc=hc,
            hs=hs,
        )


def build_spline(samples: SampleSet, config: SplineConfig) -> Spline:
    """Coefficients on the interpolation grid plus the t-independent factors."""
    if samples.grid.kind != config.I2:
        raise GridMismatchError(
            f"samples live on grid {samples.grid.kind} but I2 = {config.I2}"
        )
    N = samples.N
    coeffs = dft_coefficients(samples)
    ks = range(1, coeffs.harmonics + 1)
    c = config
    hc = np.array([interp_factor_hc(k, c.I1, c.I2, c.gamma, c.cf, N, c.trunc) for k in ks])
    hs = np.array([interp_factor_hs(k, c.I1, c.I2, c.eta, c.cf, N, c.trunc) for k in ks])
    hc.setflags(write=False)
    hs.setflags(write=False)
    return Spline(config=config, coeffs=coeffs, hc=hc, hs=hs)


def _series(spline: Spline, t: np.ndarray, d: int) -> np.ndarray:
    c = spline.config
    co = spline.coeffs
    N = spline.N
    out = np.full(t.shape, 0.5 * co.a0 if d == 0 else 0.0)
    cache: dict = {}
    for k in range(1, co.harmonics + 1):
        ak, bk = co.a[k - 1], co.b[k - 1]
        if ak != 0.0:
            C = basis_series("C", k, c.I1, c.gamma, c.cf, N, t, c.trunc, d, cache)
            out = out + ak * C / spline.hc[k - 1]
        if bk != 0.0:
            S = basis_series("S", k, c.I1, c.eta, c.cf, N, t, c.trunc, d, cache)
            out = out + bk * S / spline.hs[k - 1]
    return out


def eval_spline_batch(spline: Spline, ts) -> np.ndarray:
    """Evaluate at every entry of ``ts``; output has the same shape."""
    t = np.asarray(ts, dtype=float)
    if t.size == 0:
        return np.zeros(t.shape)
    return _series(spline, t, 0)


def eval_spline(spline: Spline, t: float) -> float:
    return float(eval_spline_batch(spline, np.array([t]))[0])


def eval_spline_derivative(spline: Spline, t, order: int = 1):
    """Term-wise derivative of the series.

    Orders >= r lose the guaranteed continuity and emit a TruncationWarning;
    orders for which the differentiated series diverges raise
    TailNotConvergedError.
    """
    if int(order) != order or order < 1:
        raise ValueError("order must be an integer >= 1")
    order = int(order)
    if order >= spline.config.r:
        warnings.warn(
            f"derivative order {order} >= r = {spline.config.r}: result not guaranteed continuous",
            TruncationWarning,
            stacklevel=2,
        )
    t_arr = np.asarray(t, dtype=float)
    out = _series(spline, np.atleast_1d(t_arr), order)
    return float(out[0]) if t_arr.ndim == 0 else out.reshape(t_arr.shape)


def parseval_power(spline: Spline) -> PowerReport:
    """(1/pi) * integral of St^2 over the period, from the coefficients alone.

    The alias frequencies mN +- k are all distinct, so each contributes its
    squared amplitude with a plus sign.
    """
    c = spline.config
    if c.r < 1:
        raise RequiresSmoothnessError("closed-form power needs r >= 1")
    N = spline.N
    co = spline.coeffs
    pc = np.empty(co.harmonics)
    ps = np.empty(co.harmonics)
    for k in range(1, co.harmonics + 1):
        vk = convergence_factor(c.cf, k, N)
        w = max(c.gamma.alias_weight, c.eta.alias_weight)
        sp, sm = alias_square_sums(c.cf, N, k, c.trunc, w)
        g1, g2, g3 = c.gamma.as_tuple()
        e1, e2, e3 = c.eta.as_tuple()
        pc[k - 1] = ((g1 * vk) ** 2 + g2**2 * sp + g3**2 * sm) / spline.hc[k - 1] ** 2
        ps[k - 1] = ((e1 * vk) ** 2 + e2**2 * sp + e3**2 * sm) / spline.hs[k - 1] ** 2
    total = 0.5 * co.a0**2 + math.fsum(co.a**2 * pc) + math.fsum(co.b**2 * ps)
    pc.setflags(write=False)
    ps.setflags(write=False)
    return PowerReport(total=total, pc=pc, ps=ps)
