"""Convergence factors, basis series C_k / S_k and interpolation factors hc / hs.

The basis series for harmonic k carries a principal term at frequency k and
two alias branches at frequencies mN + k and mN - k (m >= 1), weighted by the
shape vector (g1, g2, g3):

    C_k(t) = g1 v_k cos kt + sum_m (-1)^(m I1) [g2 v_{mN+k} cos (mN+k)t + g3 v_{mN-k} cos (mN-k)t]
    S_k(t) = g1 v_k sin kt + sum_m (-1)^(m I1) [g2 v_{mN+k} sin (mN+k)t - g3 v_{mN-k} sin (mN-k)t]

Two summation routes exist for the alias branches:

* closed form, for the sinc-power factor with alpha = 2*pi/N, where every
  branch is a shifted polylogarithm (see :mod:`trigspline.alias`);
* direct partial sums up to an M picked from the envelope tail bound, for
  any other factor.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import alias
from .errors import (
    ConfigError,
    SingularFactorError,
    TailNotConvergedError,
    TruncationWarning,
    ZeroShapeVectorError,
)
from .grids import check_grid_index

SINGULAR_EPS = 1e-12
_CHUNK = 1 << 21


@dataclass(frozen=True)
class ShapeVector:
    """Weights of the principal term and the (mN+k), (mN-k) alias branches."""

    g1: float = 1.0
    g2: float = 1.0
    g3: float = 1.0

    def __post_init__(self):
        vals = []
        for name in ("g1", "g2", "g3"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ConfigError(f"shape vector component {name} must be finite")
            object.__setattr__(self, name, v)
            vals.append(v)
        if all(v == 0.0 for v in vals):
            raise ZeroShapeVectorError("shape vector components must not all be zero")

    @classmethod
    def unit(cls) -> "ShapeVector":
        return cls(1.0, 1.0, 1.0)

    @classmethod
    def polynomial(cls) -> "ShapeVector":
        """(1, 0, 0): no alias terms, the spline is the plain trig polynomial."""
        return cls(1.0, 0.0, 0.0)

    @classmethod
    def of(cls, seq) -> "ShapeVector":
        if isinstance(seq, ShapeVector):
            return seq
        vals = list(seq)
        if len(vals) != 3:
            raise ConfigError(f"shape vector needs 3 components, got {len(vals)}")
        return cls(*vals)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.g1, self.g2, self.g3)

    @property
    def scale(self) -> float:
        return max(abs(self.g1), abs(self.g2), abs(self.g3))

    @property
    def alias_weight(self) -> float:
        return abs(self.g2) + abs(self.g3)


def _check_r(r) -> int:
    if isinstance(r, bool) or int(r) != r or r < 0:
        raise ConfigError(f"r must be a non-negative integer, got {r!r}")
    return int(r)


@dataclass(frozen=True)
class SincPower:
    """v_j = [sin(alpha j / 2) / (alpha j / 2)]^(1+r); alpha defaults to 2*pi/N."""

    r: int = 1
    alpha: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "r", _check_r(self.r))
        if self.alpha is not None:
            a = float(self.alpha)
            if not (math.isfinite(a) and a > 0):
                raise ConfigError(f"alpha must be positive, got {self.alpha!r}")
            object.__setattr__(self, "alpha", a)

    @property
    def power(self) -> int:
        return self.r + 1

    def resolved_alpha(self, N: int) -> float:
        return 2.0 * np.pi / N if self.alpha is None else self.alpha

    def values(self, j, N: int) -> np.ndarray:
        x = 0.5 * self.resolved_alpha(N) * np.asarray(j, dtype=float)
        return np.sinc(x / np.pi) ** self.power

    def envelope(self, N: int) -> float:
        """C with |v_j| <= C * j^-(1+r)."""
        return (2.0 / self.resolved_alpha(N)) ** self.power

    def closed_form_ok(self, N: int) -> bool:
        if self.alpha is None:
            return True
        return abs(self.alpha - 2.0 * np.pi / N) <= 4.0 * np.finfo(float).eps * self.alpha

    def to_dict(self) -> dict:
        return {"kind": "sinc", "r": self.r, "alpha": self.alpha}


@dataclass(frozen=True)
class CustomFactor:
    """User-supplied factor rule ``rule(j, N) -> v_j`` (vectorised over j).

    ``envelope_const`` must satisfy |v_j| <= envelope_const * j^-(1+r); it is
    trusted, not verified.
    """

    rule: Callable[[np.ndarray, int], np.ndarray]
    r: int
    envelope_const: float
    name: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "r", _check_r(self.r))
        if not self.envelope_const > 0:
            raise ConfigError("envelope_const must be positive")

    @property
    def power(self) -> int:
        return self.r + 1

    def values(self, j, N: int) -> np.ndarray:
        return np.asarray(self.rule(np.asarray(j, dtype=float), N), dtype=float)

    def envelope(self, N: int) -> float:
        return float(self.envelope_const)

    def closed_form_ok(self, N: int) -> bool:
        return False

    def to_dict(self) -> dict:
        raise TypeError("custom convergence factors are not serialisable")


ConvergenceFactor = SincPower | CustomFactor


@dataclass(frozen=True)
class TruncationPolicy:
    """Controls the direct-summation route.

    ``closed_form=False`` forces direct partial sums even where the exact
    polylogarithm route is available.
    """

    max_m: int = 100_000
    tail_tol: float = 1e-10
    closed_form: bool = True

    def __post_init__(self):
        if int(self.max_m) != self.max_m or self.max_m < 1:
            raise ConfigError(f"max_m must be an integer >= 1, got {self.max_m!r}")
        object.__setattr__(self, "max_m", int(self.max_m))
        if not (self.tail_tol > 0 and math.isfinite(self.tail_tol)):
            raise ConfigError(f"tail_tol must be positive, got {self.tail_tol!r}")


def convergence_factor(cf: ConvergenceFactor, k: int, N: int) -> float:
    if k < 1:
        raise ValueError("k must be >= 1")
    return float(cf.values(np.array([k]), N)[0])


def sign_exponent(I1: int, I2: int) -> int:
    """Exponent I1 - 2*I1*I2 + I2 of the (-1)^m sign in the factor sums (= I1 xor I2)."""
    return I1 - 2 * I1 * I2 + I2


# ----------------------------------------------------------------- alias sums


@dataclass
class AliasTerms:
    """Branch sums P+ = plus + carrier_plus * log and P- = minus + carrier_minus * log.

    P+(t) = sum_m (-1)^(m e) v_{mN+k} (mN+k)^d exp(i (mN+k) t), P- likewise at
    mN - k. ``log`` is only nonzero on the closed-form route at s = 1.
    """

    plus: np.ndarray
    minus: np.ndarray
    carrier_plus: np.ndarray
    carrier_minus: np.ndarray
    log: np.ndarray
    M: int  # -1 on the closed-form route
    tail: float


def tail_bound(weight: float, C: float, N: int, k: int, M: int, decay: int) -> float:
    """weight * C * sum_{m > M} (mN - k)^-decay, bounded by the integral from M."""
    if weight == 0.0:
        return 0.0
    if decay <= 1:
        return math.inf
    return weight * C * (M * N - k) ** (1.0 - decay) / (N * (decay - 1.0))


def choose_m(weight: float, C: float, N: int, k: int, decay: int, tol: float) -> int:
    """Smallest M >= 1 whose envelope tail bound is <= tol (may exceed any cap)."""
    if weight == 0.0:
        return 0
    x = (weight * C / (N * (decay - 1.0) * tol)) ** (1.0 / (decay - 1.0))
    M = max(1, math.ceil((x + k) / N))
    while M > 1 and tail_bound(weight, C, N, k, M - 1, decay) <= tol:
        M -= 1
    while tail_bound(weight, C, N, k, M, decay) > tol:
        M += 1
    return M


def _zero_terms(shape) -> AliasTerms:
    z = np.zeros(shape, dtype=complex)
    return AliasTerms(z, z, z, z, np.zeros(shape), 0, 0.0)


def _closed_terms(cf: SincPower, N: int, k: int, e: int, t, d: int, cache=None) -> AliasTerms:
    p = cf.power
    s = p - d
    a = k / N
    c = (math.sin(math.pi * a) / math.pi) ** p * float(N) ** d
    sgn_p = -1.0 if p % 2 else 1.0
    parity = (e + p) % 2
    theta = N * t + np.pi * parity
    sub = None if cache is None else cache.setdefault(parity, {})
    Fp, lc = alias.shifted_sum(theta, s, a, cache=sub)
    Fm, _ = alias.shifted_sum(theta, s, -a, cache=sub)
    eikt = np.exp(1j * k * t)
    cp = c * eikt
    cm = sgn_p * c * np.conj(eikt)
    log = alias.log_part(theta) if lc else np.zeros(np.shape(t))
    zero = np.zeros(np.shape(t), dtype=complex)
    return AliasTerms(
        plus=cp * Fp,
        minus=cm * Fm,
        carrier_plus=cp if lc else zero,
        carrier_minus=cm if lc else zero,
        log=log,
        M=-1,
        tail=0.0,
    )


def _direct_terms(cf, N: int, k: int, e: int, t, d: int, M: int) -> AliasTerms:
    t = np.asarray(t, dtype=float)
    plus = np.zeros(t.shape, dtype=complex)
    minus = np.zeros(t.shape, dtype=complex)
    tf = t.reshape(-1)
    step = max(1, _CHUNK // max(1, tf.size))
    for m0 in range(1, M + 1, step):
        m = np.arange(m0, min(M, m0 + step - 1) + 1, dtype=float)
        sign = (-1.0) ** (m * e) if e else np.ones_like(m)
        jp = m * N + k
        jm = m * N - k
        wp = sign * cf.values(jp, N) * jp**d
        wm = sign * cf.values(jm, N) * jm**d
        plus += (np.exp(1j * np.multiply.outer(tf, jp)) @ wp).reshape(t.shape)
        minus += (np.exp(1j * np.multiply.outer(tf, jm)) @ wm).reshape(t.shape)
    z = np.zeros(t.shape, dtype=complex)
    return AliasTerms(plus, minus, z, z, np.zeros(t.shape), M, 0.0)


def alias_terms(cf, N: int, k: int, e: int, t, trunc: TruncationPolicy,
                weight: float, d: int = 0, cache: dict | None = None) -> AliasTerms:
    """Sum both alias branches of harmonic k with sign pattern (-1)^(m e).

    ``cache`` is only valid for repeated calls on the same ``t`` array.
    """
    t = np.asarray(t, dtype=float)
    if weight == 0.0:
        return _zero_terms(t.shape)
    decay = cf.power - d
    if trunc.closed_form and cf.closed_form_ok(N):
        if decay < 1:
            raise TailNotConvergedError(
                f"derivative order {d} diverges for r = {cf.r}", k=k, bound=math.inf
            )
        return _closed_terms(cf, N, k, e, t, d, cache)
    C = cf.envelope(N)
    if decay >= 2:
        M = choose_m(weight, C, N, k, decay, trunc.tail_tol)
        if M > trunc.max_m:
            bound = tail_bound(weight, C, N, k, trunc.max_m, decay)
            raise TailNotConvergedError(
                f"tail bound {bound:.3g} > tail_tol {trunc.tail_tol:.3g} at max_m = "
                f"{trunc.max_m} (k = {k}, needs M = {M})",
                k=k,
                bound=bound,
            )
        terms = _direct_terms(cf, N, k, e, t, d, M)
        terms.tail = tail_bound(weight, C, N, k, M, decay)
        return terms
    if d == 0 and cf.r == 0:
        M = trunc.max_m
        warnings.warn(
            f"r = 0: alias sums capped at m = {M} without a certified tail bound",
            TruncationWarning,
            stacklevel=3,
        )
        terms = _direct_terms(cf, N, k, e, t, d, M)
        # size of the first neglected term; the series is only conditionally convergent
        terms.tail = weight * C * (M * N - k) ** (-1.0)
        return terms
    raise TailNotConvergedError(
        f"no tail bound for derivative order {d} with r = {cf.r} on the direct route",
        k=k,
        bound=math.inf,
    )


def _times_log(coef, log):
    """coef * log with 0 * inf treated as 0 (cancelled divergence)."""
    coef = np.asarray(coef)
    with np.errstate(invalid="ignore"):
        return np.where(coef == 0.0, 0.0, coef * log)


def _main(cf, N: int, k: int, t, d: int) -> np.ndarray:
    vk = convergence_factor(cf, k, N)
    return vk * float(k) ** d * np.exp(1j * k * np.asarray(t, dtype=float))


def _check_k(k: int, N: int):
    if not 1 <= k <= (N - 1) // 2:
        raise ValueError(f"harmonic index k = {k} outside 1..{(N - 1) // 2}")


def basis_series(kind: str, k: int, I1: int, shape: ShapeVector, cf, N: int, t,
                 trunc: TruncationPolicy, d: int = 0, cache: dict | None = None):
    """d-th derivative of C_k (kind 'C') or S_k (kind 'S') at t."""
    I1 = check_grid_index(I1)
    _check_k(k, N)
    shape = ShapeVector.of(shape)
    g1, g2, g3 = shape.as_tuple()
    if kind == "S":
        g3 = -g3
    T = alias_terms(cf, N, k, I1, t, trunc, shape.alias_weight, d, cache)
    rot = 1j**d
    z = rot * (g1 * _main(cf, N, k, t, d) + g2 * T.plus + g3 * T.minus)
    lc = rot * (g2 * T.carrier_plus + g3 * T.carrier_minus)
    if kind == "C":
        out = z.real + _times_log(lc.real, T.log)
    else:
        out = z.imag + _times_log(lc.imag, T.log)
    return float(out) if np.ndim(out) == 0 else out


def basis_C(k, I1, gamma, cf, N, t, trunc=TruncationPolicy(), d=0):
    return basis_series("C", k, I1, gamma, cf, N, t, trunc, d)


def basis_S(k, I1, eta, cf, N, t, trunc=TruncationPolicy(), d=0):
    return basis_series("S", k, I1, eta, cf, N, t, trunc, d)


def _interp_factor(which, k, I1, I2, shape, cf, N, trunc):
    I1 = check_grid_index(I1)
    I2 = check_grid_index(I2)
    _check_k(k, N)
    shape = ShapeVector.of(shape)
    g1, g2, g3 = shape.as_tuple()
    T = alias_terms(cf, N, k, sign_exponent(I1, I2), np.array(0.0), trunc, shape.alias_weight)
    val = g1 * convergence_factor(cf, k, N) + (g2 * T.plus + g3 * T.minus).real
    val = float(val + _times_log((g2 * T.carrier_plus + g3 * T.carrier_minus).real, T.log))
    if not math.isfinite(val):
        raise TailNotConvergedError(
            f"{which}_{k}: factor series diverges (r = {cf.r}, I1 = {I1}, I2 = {I2})",
            k=k,
            bound=math.inf,
        )
    if abs(val) < SINGULAR_EPS * shape.scale:
        raise SingularFactorError(which, k, val)
    return val


def interp_factor_hc(k, I1, I2, gamma, cf, N, trunc=TruncationPolicy()) -> float:
    return _interp_factor("hc", k, I1, I2, gamma, cf, N, trunc)


def interp_factor_hs(k, I1, I2, eta, cf, N, trunc=TruncationPolicy()) -> float:
    # both alias terms enter with + here, unlike S_k itself
    return _interp_factor("hs", k, I1, I2, eta, cf, N, trunc)


def alias_square_sums(cf, N: int, k: int, trunc: TruncationPolicy,
                      weight: float = 1.0) -> tuple[float, float]:
    """(sum_m v_{mN+k}^2, sum_m v_{mN-k}^2) over m >= 1."""
    p = cf.power
    if trunc.closed_form and cf.closed_form_ok(N):
        a = k / N
        c2 = (math.sin(math.pi * a) / math.pi) ** (2 * p)
        th = np.array(0.0)
        plus, _ = alias.shifted_sum(th, 2 * p, a)
        minus, _ = alias.shifted_sum(th, 2 * p, -a)
        return c2 * float(plus.real), c2 * float(minus.real)
    C = cf.envelope(N)
    M = choose_m(max(weight, 1.0), C * C, N, k, 2 * p, trunc.tail_tol)
    if M > trunc.max_m:
        raise TailNotConvergedError(
            f"squared alias sum for k = {k} needs M = {M} > max_m", k=k
        )
    m = np.arange(1, M + 1, dtype=float)
    plus = math.fsum(cf.values(m * N + k, N) ** 2)
    minus = math.fsum(cf.values(m * N - k, N) ** 2)
    return plus, minus
