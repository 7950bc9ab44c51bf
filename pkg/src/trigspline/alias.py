"""Closed-form one-sided alias sums on the unit circle.

For the sinc-power factor with alpha = 2*pi/N every alias branch of the
basis series reduces to

    F(theta, s, a) = sum_{m >= 1} exp(i*m*theta) / (m + a)**s,   |a| < 1/2,

with integer s >= 1. We sum a short head directly and expand the tail in
powers of a/m, which turns it into tails of polylogarithms Li_s(e^{i theta}).
Those are evaluated with the series about theta = 0 (valid for |theta| < 2*pi,
used on (-pi, pi] where it converges like 2**-k).

For s = 1 the sum has a logarithmic singularity at theta = 0; the real,
divergent part -log|2 sin(theta/2)| is returned separately so callers can
cancel it exactly when its coefficient vanishes.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import zeta

HEAD = 16
_EXTRA_TERMS = 64
_NEGLIGIBLE = 1e-19


def reduce_angle(theta):
    """Map angles to (-pi, pi]."""
    th = np.asarray(theta, dtype=float)
    th = th - 2.0 * np.pi * np.round(th / (2.0 * np.pi))
    return np.where(th <= -np.pi, th + 2.0 * np.pi, th)


@lru_cache(maxsize=None)
def _li_series(s: int) -> tuple[np.ndarray, float]:
    """Taylor coefficients zeta(s-k)/k! (k != s-1) and H_{s-1} for Li_s(e^mu)."""
    K = s + _EXTRA_TERMS
    c = np.zeros(K + 1)
    for k in range(K + 1):
        arg = s - k
        if arg == 1:
            continue
        if arg >= 2:
            z = float(zeta(arg))
            c[k] = z / math.factorial(k)
        elif arg == 0:
            c[k] = -0.5 / math.factorial(k)
        else:
            # zeta(1-m) = 2 cos(pi m/2) (m-1)! zeta(m) / (2 pi)^m, folded with 1/k!
            m = 1 - arg
            if m % 2:
                continue
            sign = 1.0 if m % 4 == 0 else -1.0
            log_mag = math.lgamma(m) - math.lgamma(k + 1) - m * math.log(2 * math.pi)
            c[k] = 2.0 * sign * float(zeta(m)) * math.exp(log_mag)
    harmonic = math.fsum(1.0 / i for i in range(1, s))
    c.setflags(write=False)
    return c, harmonic


def polylog_unit(s: int, theta) -> np.ndarray:
    """Li_s(exp(i*theta)) for integer s >= 2 (complex array)."""
    if s < 2:
        raise ValueError("polylog_unit needs s >= 2; use log_part/li1_regular for s = 1")
    th = reduce_angle(theta)
    mu = 1j * th
    c, harmonic = _li_series(s)
    out = np.polynomial.polynomial.polyval(mu, c)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_neg_mu = np.log(np.abs(th)) - 0.5j * np.pi * np.sign(th)
        sing = mu ** (s - 1) / math.factorial(s - 1) * (harmonic - log_neg_mu)
    return out + np.where(th == 0.0, 0.0, sing)


def log_part(theta) -> np.ndarray:
    """Real part of Li_1(e^{i theta}) = -log|2 sin(theta/2)|; +inf at theta = 0."""
    th = reduce_angle(theta)
    with np.errstate(divide="ignore"):
        return -np.log(np.abs(2.0 * np.sin(0.5 * th)))


def li1_imag(theta) -> np.ndarray:
    """Imaginary part of Li_1(e^{i theta}); the symmetric value 0 at the jump."""
    th = reduce_angle(theta)
    return np.where(th == 0.0, 0.0, 0.5 * (np.sign(th) * np.pi - th))


def _powers(theta, M: int, cache) -> np.ndarray:
    if cache is not None and ("w", M) in cache:
        return cache[("w", M)]
    m = np.arange(1, M + 1, dtype=float)
    w = np.exp(1j * np.multiply.outer(theta, m))
    if cache is not None:
        cache[("w", M)] = w
    return w


def _head(theta, s: int, a: float, M: int, cache=None) -> np.ndarray:
    m = np.arange(1, M + 1, dtype=float)
    return _powers(theta, M, cache) @ (m + a) ** (-float(s))


def _poly_tail(theta, sigma: int, M: int, cache=None) -> np.ndarray:
    """sum_{m > M} e^{i m theta} / m**sigma (s = 1: without the real log part)."""
    if cache is not None and ("T", sigma, M) in cache:
        return cache[("T", sigma, M)]
    head = _head(theta, sigma, 0.0, M, cache)
    if sigma == 1:
        out = 1j * li1_imag(theta) - head
    else:
        out = polylog_unit(sigma, theta) - head
    if cache is not None:
        cache[("T", sigma, M)] = out
    return out


def _tail_bound(sigma: int, M: int) -> float:
    """Upper bound on sum_{m > M} m**-sigma (sigma >= 2)."""
    return M ** (1.0 - sigma) / (sigma - 1.0)


def shifted_sum(theta, s: int, a: float, head: int = HEAD, cache: dict | None = None):
    """Return (regular, log_coef) with F(theta, s, a) = regular + log_coef * log_part(theta).

    ``log_coef`` is 1.0 for s = 1 and 0.0 otherwise; the caller multiplies it
    by :func:`log_part` (which may be infinite at theta = 0). ``cache`` may be
    shared between calls with the *same* theta array to reuse the polylog
    tails, which do not depend on ``a``.
    """
    if s < 1 or int(s) != s:
        raise ValueError(f"exponent must be a positive integer, got {s}")
    if not abs(a) < 1.0:
        raise ValueError("shift must satisfy |a| < 1")
    s = int(s)
    th = reduce_angle(theta)
    out = _head(th, s, a, head, cache)
    # (m + a)^-s = sum_q binom(-s, q) a^q m^(-s-q), |a/m| < 1 for m > head
    q = 0
    coef = 1.0
    while True:
        sigma = s + q
        if sigma >= 2:
            bound = abs(coef) * _tail_bound(sigma, head)
            if bound < _NEGLIGIBLE:
                break
            out = out + coef * _poly_tail(th, sigma, head, cache)
        else:
            out = out + coef * _poly_tail(th, 1, head, cache)
        q += 1
        coef *= -(s + q - 1) / q * a
        if q > 400:  # pragma: no cover - |a| < 1/2 converges in far fewer terms
            raise RuntimeError("shifted alias expansion failed to converge")
    return out, (1.0 if s == 1 else 0.0)
