"""Heat trace ``K(tau) = sum_n exp(-tau z_n^2)`` and its small-``tau`` expansion.

For the Dirichlet problem

    K(tau) ~ (4 pi tau)^{-1/2} [a0 + a_half tau^{1/2} + a1 tau + b1 tau log tau + O(tau^{3/2})]

with ``a0 = L``, ``a_half = -sqrt(pi)``, ``a1 = -alpha (log L + gamma/2)`` and
``b1 = alpha/2``.  The remainder contains no further logarithms because the
zeta function has only simple poles at ``s = -3/2, -5/2, ...`` and is regular
at the negative integers; the image term from ``r = L`` is ``O(e^{-L^2/tau})``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .config import ProblemConfig
from .errors import NumericalError, ValidationError
from .specfun import EULER_GAMMA, gamma_complex
from .spectrum import asymptotic_roots, solve_spectrum

_EXPONENT_CUTOFF = 60.0
_MAX_ROOTS = 2_000_000


@dataclass(frozen=True)
class HeatTraceSample:
    """One value of the heat trace.

    Attributes
    ----------
    tau : float
        Proper time (units length^2).
    value : float
        ``K(tau)``.
    error : float
        Bound on the absolute error of ``value``.
    """

    tau: float
    value: float
    error: float = 0.0


@dataclass(frozen=True)
class HeatTraceFit:
    """Small-``tau`` coefficients of the heat trace.

    Attributes
    ----------
    a0, a_half, a1, b1 : float
        Coefficients of ``1, tau^{1/2}, tau, tau log tau`` in ``sqrt(4 pi tau) K``.
    residual_norm : float
        Root-mean-square relative residual of the fit.
    tau_window : tuple of float
        Smallest and largest sample ``tau``.
    condition : float
        Condition number of the column-scaled weighted design matrix.
    guards : tuple of float
        Fitted (and discarded) coefficients of ``tau^{3/2}, tau^2, ..., tau^{7/2}``.
    """

    a0: float
    a_half: float
    a1: float
    b1: float
    residual_norm: float
    tau_window: tuple
    condition: float
    guards: tuple = ()


def _roots_scaled(cfg: ProblemConfig, tau: float, n_exact: int):
    """Scaled roots ``x_n`` with ``tau x_n^2 / L^2 <= 60`` and the index where they stop."""
    t = tau / cfg.length ** 2
    x_max = math.sqrt(_EXPONENT_CUTOFF / t)
    n_need = int(x_max / math.pi) + 3
    if n_need > _MAX_ROOTS:
        raise NumericalError(f"heat_trace: tau = {tau} too small (needs {n_need} roots)")
    exact = np.asarray(solve_spectrum(cfg, n_exact).roots) * cfg.length
    if n_need <= n_exact:
        return exact[exact <= x_max + math.pi], exact
    n = np.arange(n_exact + 1, n_need + 1, dtype=float)
    asym = asymptotic_roots(cfg.lam, n) if cfg.lam != 0 else math.pi * n
    return np.concatenate([exact, asym]), exact


def heat_trace(cfg: ProblemConfig, tau: float, n_exact: int = 200) -> HeatTraceSample:
    """``sum_n exp(-tau z_n^2)`` over exact and asymptotic roots.

    Roots ``n <= n_exact`` are solved; beyond, the large-``n`` expansion
    (error ``O(n^-7 log^4 n)``) is used until ``tau z_n^2 > 60``.  The
    neglected remainder is bounded by the integral of the Gaussian tail.

    Raises
    ------
    ValidationError
        For ``tau <= 0`` or ``alpha < 0``.
    NumericalError
        When ``tau`` is so small that more than two million roots are needed.
    """
    if not tau > 0:
        raise ValidationError("heat_trace: tau must be positive")
    t = tau / cfg.length ** 2
    x, exact = _roots_scaled(cfg, tau, n_exact)
    terms = np.exp(-t * x * x)
    value = float(np.sum(np.sort(terms)))
    # truncation: terms beyond the cutoff are below e^{-60} and decay like a Gaussian
    trunc = math.exp(-_EXPONENT_CUTOFF) * (1.0 + 1.0 / (2 * math.pi * math.sqrt(_EXPONENT_CUTOFF * t)))
    # root error beyond n_exact, scaled from the last solved root
    if cfg.lam != 0 and len(x) > len(exact):
        d_last = abs(exact[-1] - float(asymptotic_roots(cfg.lam, float(len(exact)))))
        n = np.arange(len(exact) + 1, len(x) + 1, dtype=float)
        delta = d_last * (len(exact) / n) ** 7
        root_err = float(np.sum(2 * t * x[len(exact):] * delta * terms[len(exact):]))
    else:
        root_err = 0.0
    err = trunc + root_err + 1e-16 * len(x) * value
    return HeatTraceSample(float(tau), value, float(err))


def sample_window(cfg: ProblemConfig, tau_min: float = 1e-4, tau_max: float = 1e-2,
                  count: int = 40, n_exact: int = 200) -> list:
    """Log-spaced samples on ``[tau_min, tau_max] * L^2``."""
    if count < 12:
        raise ValidationError("sample_window: need at least 12 samples")
    taus = np.geomspace(tau_min, tau_max, count) * cfg.length ** 2
    return [heat_trace(cfg, float(t), n_exact) for t in taus]


_ORDER = (0.0, 0.5, 1.0, "log", 1.5, 2.0, 2.5, 3.0, 3.5)


def _design(tau: np.ndarray) -> np.ndarray:
    cols = []
    for p in _ORDER:
        cols.append(tau * np.log(tau) if p == "log" else tau ** p)
    return np.column_stack(cols)


def fit_small_tau(cfg: ProblemConfig, samples, *, cond_max: float = 1e10) -> HeatTraceFit:
    """Weighted least-squares fit of the small-``tau`` expansion.

    The fitted quantity is ``y = sqrt(4 pi tau) K(tau)`` on the basis
    ``1, tau^{1/2}, tau, tau log tau`` plus guard terms
    ``tau^{3/2}, ..., tau^{7/2}``; residuals are relative (weights
    ``1/y``), and columns are scaled to unit norm before solving.

    Raises
    ------
    ValidationError
        With fewer than 12 samples, samples outside ``[1e-4, 1e-1] L^2``, or a
        condition number above ``cond_max``.
    """
    if len(samples) < 12:
        raise ValidationError("fit_small_tau: need at least 12 samples")
    l2 = cfg.length ** 2
    tau = np.array([smp.tau for smp in samples], dtype=float)
    val = np.array([smp.value for smp in samples], dtype=float)
    if np.any(tau < 1e-4 * l2 * (1 - 1e-12)) or np.any(tau > 1e-1 * l2 * (1 + 1e-12)):
        raise ValidationError("fit_small_tau: samples must lie in [1e-4, 1e-1] L^2")
    if np.any(val <= 0):
        raise ValidationError("fit_small_tau: heat-trace values must be positive")
    y = np.sqrt(4 * math.pi * tau) * val
    a = _design(tau) / y[:, None]
    rhs = np.ones_like(y)
    norms = np.linalg.norm(a, axis=0)
    a_s = a / norms
    cond = float(np.linalg.cond(a_s))
    if cond > cond_max:
        raise ValidationError(f"fit_small_tau: design matrix ill-conditioned (cond = {cond:.2e})")
    coef, *_ = np.linalg.lstsq(a_s, rhs, rcond=None)
    coef = coef / norms
    resid = float(np.sqrt(np.mean((a @ coef - rhs) ** 2)))
    return HeatTraceFit(
        a0=float(coef[0]), a_half=float(coef[1]), a1=float(coef[2]), b1=float(coef[3]),
        residual_norm=resid, tau_window=(float(tau.min()), float(tau.max())), condition=cond,
        guards=tuple(float(c) for c in coef[4:]),
    )


def expected_coefficients(cfg: ProblemConfig) -> dict:
    """Closed-form ``a0, a_half, a1, b1`` for the Dirichlet problem."""
    return {
        "a0": cfg.length,
        "a_half": -math.sqrt(math.pi),
        "a1": -cfg.alpha * (math.log(cfg.length) + 0.5 * EULER_GAMMA),
        "b1": 0.5 * cfg.alpha,
    }


def zeta_poles_from_fit(fit: HeatTraceFit, mu: float) -> dict:
    """Laurent data of the zeta function implied by the heat-trace coefficients.

    ``Gamma(s) mu^{-2s} zeta(s) = int_0^inf tau^{s-1} K(tau) d tau`` maps ``a0`` to
    the residue at ``s = 1/2`` and ``(a1, b1)`` to the double pole at
    ``s = -1/2``.
    """
    psi_mhalf = -EULER_GAMMA - 2 * math.log(2.0) + 2.0
    return {
        "c-1(1/2)": mu * fit.a0 / (2 * math.pi),
        "c-2(-1/2)": fit.b1 / (4 * math.pi * mu),
        "c-1(-1/2)": -(fit.a1 - fit.b1 * (2 * math.log(mu) - psi_mhalf)) / (4 * math.pi * mu),
    }


def mellin_zeta(cfg: ProblemConfig, s: float, *, tau0: float = 1e-6, fit: HeatTraceFit = None,
                n_exact: int = 200) -> float:
    """``(mu^{2s}/Gamma(s)) int_0^inf tau^{s-1} K(tau) d tau`` for real ``s > 1/2``.

    The integral over ``(tau0 L^2, inf)`` is done numerically in ``log tau``;
    the piece over ``(0, tau0 L^2)`` uses the small-``tau`` expansion with the
    fitted coefficients (``fit`` defaults to a fit on the standard window).
    """
    if not s > 0.5:
        raise ValidationError("mellin_zeta: requires s > 1/2")
    l2 = cfg.length ** 2
    fit = fit or fit_small_tau(cfg, sample_window(cfg, n_exact=n_exact))
    x1 = solve_spectrum(cfg, 1).roots[0]
    t0 = tau0 * l2
    t_hi = 80.0 / x1 ** 2

    def f(u):
        t = math.exp(u)
        return t ** s * heat_trace(cfg, t, n_exact).value

    big, err = integrate.quad(f, math.log(t0), math.log(t_hi), epsabs=0.0, epsrel=1e-12, limit=400)
    # beyond t_hi the integrand is below e^{-80} (ground state dominated)
    coeffs = (fit.a0, fit.a_half, fit.a1, fit.b1) + tuple(fit.guards)
    small = 0.0
    for p, c in zip(_ORDER, coeffs):
        if p == "log":
            q = s + 0.5
            small += c * t0 ** q * (math.log(t0) / q - 1.0 / q ** 2)
        else:
            q = s - 0.5 + p
            small += c * t0 ** q / q
    small /= math.sqrt(4 * math.pi)
    total = big + small
    return float((cfg.mu ** (2 * s) / gamma_complex(s).real) * total)

