"""Large-``w`` expansions of the log-derivatives on the imaginary axis.

A bivariate series ``sum_{n,k} C[n, k] x^n t^k`` with ``x = 1/w`` and
``t = log w`` is stored as a dense array ``C``.  Such series describe
``d/dw log D(-w^2)`` for large ``w`` up to exponentially small terms, and the
tail integrals ``int_W^inf w^{-2s} x^n t^k dw`` are available in closed form
for every complex ``s``, which is what continues the zeta function.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as P

from .specfun import EULER_GAMMA, riemann_zeta


@lru_cache(maxsize=8)
def _zeta_ints(nmax: int) -> tuple:
    return tuple([0.0, 0.0] + [float(riemann_zeta(k).real) for k in range(2, nmax + 2)])


def _log_series(s: np.ndarray, nmax: int) -> np.ndarray:
    """Coefficients of ``log S(x)`` for a power series with ``S(0) = 1``."""
    out = np.zeros(nmax + 1)
    for n in range(1, nmax + 1):
        acc = s[n] if n < len(s) else 0.0
        for j in range(1, n):
            if n - j < len(s):
                acc -= j * out[j] * s[n - j] / n
        out[n] = acc
    return out


def bmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two bivariate series truncated to the shape of ``a``."""
    nn, kk = a.shape
    out = np.zeros_like(a)
    for i in range(nn):
        for j in range(kk):
            if a[i, j] != 0.0:
                out[i:, j:] += a[i, j] * b[: nn - i, : kk - j]
    return out


def d_dw(c: np.ndarray) -> np.ndarray:
    """Apply ``d/dw`` using ``d(x^n t^k)/dw = -n x^{n+1} t^k + k x^{n+1} t^{k-1}``."""
    nn, kk = c.shape
    out = np.zeros_like(c)
    for n in range(nn - 1):
        for k in range(kk):
            v = c[n, k]
            if v == 0.0:
                continue
            out[n + 1, k] -= n * v
            if k > 0:
                out[n + 1, k - 1] += k * v
    return out


@lru_cache(maxsize=32)
def dirichlet_series(lam: float, depth: int) -> np.ndarray:
    """Expansion of ``d/dw log[e^{-w} M(1 + lam/(2w), 2; 2w)]`` through ``x^depth``.

    ``1 - x + c x^2 (1 - log 2 - t + psi(1 + c x)) + d/dw log 2F0(1-cx, -cx;; x/2)``
    with ``c = lam/2``.
    """
    c = 0.5 * lam
    zt = _zeta_ints(depth)
    out = np.zeros((depth + 1, 2))
    out[0, 0] += 1.0
    out[1, 0] -= 1.0
    if depth >= 2:
        out[2, 0] += c * (1.0 - math.log(2.0) - EULER_GAMMA)
        out[2, 1] -= c
    for k in range(2, depth):
        out[k + 1, 0] += (-1) ** k * zt[k] * c ** k
    # 2F0 part as a power series in x
    s = np.zeros(depth + 1)
    s[0] = 1.0
    poch_a = np.array([1.0])  # (1 - c x)_k
    poch_b = np.array([1.0])  # (-c x)_k
    fact = 1.0
    for k in range(1, depth + 1):
        poch_a = P.polymul(poch_a, [float(k), -c])[: depth + 1]
        poch_b = P.polymul(poch_b, [k - 1.0, -c])[: depth + 1]
        fact *= 2.0 * k
        term = P.polymul(poch_a, poch_b)[: depth + 1 - k] / fact
        s[k : k + len(term)] += term
    logs = _log_series(s, depth)
    for n in range(1, depth):
        out[n + 1, 0] -= n * logs[n]
    return out


@lru_cache(maxsize=32)
def beta_correction_series(lam: float, beta: float, depth: int) -> np.ndarray:
    """Expansion of ``d/dw log D_beta(-w^2) - d/dw log D_inf(-w^2)``.

    Equals ``1/w + d/dw log(1 - Q)`` with
    ``Q = lam x (t + K - gamma) + lam sum_{k>=2} (-1)^k zeta(k) c^{k-1} x^k``,
    ``K = log 2 - log lam + 2 gamma - 1 - beta`` and ``c = lam/2``.
    """
    c = 0.5 * lam
    zt = _zeta_ints(depth)
    kk = depth + 1
    q = np.zeros((depth + 1, kk))
    big_k = math.log(2.0) - math.log(lam) + 2.0 * EULER_GAMMA - 1.0 - beta
    q[1, 1] = lam
    q[1, 0] = lam * (big_k - EULER_GAMMA)
    for n in range(2, depth + 1):
        q[n, 0] += lam * (-1) ** n * zt[n] * c ** (n - 1)
    log1mq = np.zeros_like(q)
    power = q.copy()
    for m in range(1, depth + 1):
        log1mq -= power / m
        power = bmul(power, q)
        if not power.any():
            break
    out = d_dw(log1mq)
    out[1, 0] += 1.0
    return out


def evaluate(c: np.ndarray, w) -> np.ndarray:
    """Evaluate the series at ``w`` (for testing against exact values)."""
    w = np.asarray(w, dtype=float)
    x, t = 1.0 / w, np.log(w)
    out = np.zeros_like(w)
    for n in range(c.shape[0]):
        for k in range(c.shape[1]):
            if c[n, k] != 0.0:
                out = out + c[n, k] * x ** n * t ** k
    return out


def tail_integrals(c: np.ndarray, s, w0: float) -> np.ndarray:
    """``int_{w0}^inf w^{-2s} sum C[n,k] x^n t^k dw`` continued to all ``s``.

    Uses ``int_W^inf w^{-p-1} log^k w dw = W^{-p} sum_j k!/(k-j)! log^{k-j} W / p^{j+1}``
    with ``p = 2s + n - 1``.
    """
    s = np.asarray(s, dtype=complex)
    lw = math.log(w0)
    out = np.zeros_like(s)
    for n in range(c.shape[0]):
        row = c[n]
        if not row.any():
            continue
        p = 2.0 * s + (n - 1)
        wp = np.exp(-p * lw)
        for k in range(c.shape[1]):
            v = row[k]
            if v == 0.0:
                continue
            acc = np.zeros_like(s)
            ff = 1.0
            for j in range(k + 1):
                acc = acc + ff * lw ** (k - j) / p ** (j + 1)
                ff *= k - j
            out = out + v * wp * acc
    return out
