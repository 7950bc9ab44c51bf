"""Interpolating trigonometric polynomial of degree (N-1)/2 on a uniform grid."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import SampleSet, check_grid_index, check_node_count


@dataclass(frozen=True)
class TrigCoeffs:
    """Coefficients of a0/2 + sum_k (a_k cos kt + b_k sin kt), k = 1..(N-1)/2.

    ``a0`` follows the a0/2 convention, i.e. a0 = (2/N) * sum(f_j), so the
    polynomial reproduces the samples.
    """

    N: int
    grid_kind: int
    a0: float
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        check_node_count(self.N)
        check_grid_index(self.grid_kind)
        n = (self.N - 1) // 2
        for name in ("a", "b"):
            arr = np.array(getattr(self, name), dtype=float).reshape(-1)
            if arr.size != n:
                raise ValueError(f"{name} must have {n} entries, got {arr.size}")
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} must be finite")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "a0", float(self.a0))

    @property
    def harmonics(self) -> int:
        return (self.N - 1) // 2

    def to_dict(self) -> dict:
        return {
            "n": self.N,
            "grid_kind": self.grid_kind,
            "a0": self.a0,
            "a": self.a.tolist(),
            "b": self.b.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TrigCoeffs":
        return cls(N=d["n"], grid_kind=d["grid_kind"], a0=d["a0"], a=d["a"], b=d["b"])


def dft_coefficients(samples: SampleSet, method: str = "direct") -> TrigCoeffs:
    """Coefficients of the interpolating polynomial.

    ``method="direct"`` is the O(N^2) reference summation, ``"fft"`` goes
    through ``numpy.fft.rfft`` and rotates for the half-step offset of kind-1
    grids.
    """
    grid = samples.grid
    f = samples.values
    N = grid.N
    n = grid.harmonics
    if method == "direct":
        k = np.arange(1, n + 1)[:, None]
        kt = k * grid.nodes[None, :]
        a = (2.0 / N) * (np.cos(kt) @ f)
        b = (2.0 / N) * (np.sin(kt) @ f)
        a0 = (2.0 / N) * f.sum()
    elif method == "fft":
        F = np.fft.rfft(f)
        k = np.arange(n + 1)
        # t_j = t_1 + 2*pi*(j-1)/N, so sum f_j e^{-ik t_j} = e^{-ik t_1} * rfft
        F = F[: n + 1] * np.exp(-1j * k * grid.nodes[0])
        a0 = (2.0 / N) * F[0].real
        a = (2.0 / N) * F[1:].real
        b = -(2.0 / N) * F[1:].imag
    else:
        raise ValueError(f"unknown method {method!r}")
    return TrigCoeffs(N=N, grid_kind=grid.kind, a0=a0, a=a, b=b)


def eval_trig_polynomial(coeffs: TrigCoeffs, t):
    """Evaluate the polynomial at scalar or array ``t``."""
    t_arr = np.asarray(t, dtype=float)
    k = np.arange(1, coeffs.harmonics + 1)
    kt = np.multiply.outer(t_arr, k)
    out = 0.5 * coeffs.a0 + np.cos(kt) @ coeffs.a + np.sin(kt) @ coeffs.b
    return float(out) if out.ndim == 0 else out


def trig_polynomial_power(coeffs: TrigCoeffs) -> float:
    """(1/pi) * integral over the period of T^2, by Parseval."""
    return 0.5 * coeffs.a0**2 + float(np.sum(coeffs.a**2) + np.sum(coeffs.b**2))
