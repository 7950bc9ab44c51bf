"""Uniform node families on [0, 2*pi) and sample values attached to them.

Kind 0 puts nodes at 2*pi*(j-1)/N, kind 1 at the midpoints pi*(2j-1)/N
(j = 1..N, stored zero-based).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    ConfigError,
    EvenNError,
    LengthMismatchError,
    NonFiniteValueError,
    TooSmallError,
)

TWO_PI = 2.0 * np.pi


def check_grid_index(value) -> int:
    if isinstance(value, bool) or value not in (0, 1):
        raise ConfigError(f"grid index must be 0 or 1, got {value!r}")
    return int(value)


def check_node_count(N) -> int:
    if isinstance(N, bool) or int(N) != N:
        raise ConfigError(f"N must be an integer, got {N!r}")
    N = int(N)
    if N < 3:
        raise TooSmallError(f"N must be >= 3, got {N}")
    if N % 2 == 0:
        raise EvenNError(f"N must be odd (N = 2n+1), got {N}")
    return N


@dataclass(frozen=True)
class Grid:
    N: int
    kind: int

    def __post_init__(self):
        object.__setattr__(self, "N", check_node_count(self.N))
        object.__setattr__(self, "kind", check_grid_index(self.kind))

    @cached_property
    def nodes(self) -> np.ndarray:
        # closed formula per node; no accumulation
        j = np.arange(self.N, dtype=float)
        if self.kind == 0:
            x = TWO_PI * j / self.N
        else:
            x = np.pi * (2.0 * j + 1.0) / self.N
        x.setflags(write=False)
        return x

    @property
    def step(self) -> float:
        return TWO_PI / self.N

    @property
    def harmonics(self) -> int:
        """Number of cosine/sine pairs, (N-1)/2."""
        return (self.N - 1) // 2


def make_grid(kind: int, N: int) -> Grid:
    return Grid(N=N, kind=kind)


@dataclass(frozen=True)
class SampleSet:
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float).reshape(-1)
        if v.size != self.grid.N:
            raise LengthMismatchError(
                f"expected {self.grid.N} sample values, got {v.size}"
            )
        if not np.all(np.isfinite(v)):
            raise NonFiniteValueError("sample values must all be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def N(self) -> int:
        return self.grid.N

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes


def sample_values(grid: Grid, values) -> SampleSet:
    return SampleSet(grid=grid, values=values)


def sample_function(grid: Grid, f) -> SampleSet:
    """Sample a vectorised callable at the grid nodes."""
    return SampleSet(grid=grid, values=f(grid.nodes))
