"""Selfadjoint extensions ``A_beta`` of ``-d^2/dr^2 + alpha/r`` on ``(0, L)``.

Functions in the domain of ``A_beta`` behave at the origin as
``phi ~ a (1 + alpha r log(alpha r)) + b alpha r`` with ``b = beta a``; the
Dirichlet condition is ``beta = inf``.  Eigenvalues ``z^2`` solve

    f(z) - Gamma(alpha/2iz) U(1 + alpha/2iz, 2; 2izL) / M(1 + alpha/2iz, 2; 2izL) = beta,

or, without poles, ``F_beta(z) = M (f - beta) - U Gamma = 0``.  For real ``z``
the product ``e^{-izL} F_beta(z)`` is real; it equals ``-D_beta(z^2 L^2)/(alpha L)``
with ``D_beta`` the entire Frobenius determinant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import optimize

from . import _frobenius
from .config import ExtensionParam, ProblemConfig
from .errors import BracketError, RealityError, ValidationError
from .specfun import EULER_GAMMA, ZETA3, digamma_complex, gamma_complex, kummer_m, tricomi_u_b2
from .spectrum import ModeList, SpectrumSlice, solve_spectrum
from . import zeta as _zeta

_REALITY_RTOL = 1e-9


def _require_repulsive(cfg: ProblemConfig, name: str) -> None:
    if not cfg.alpha > 0:
        raise ValidationError(f"{name}: requires alpha > 0")


def beta_tilde(beta: float) -> float:
    """``e^{beta - gamma + 4/3}``."""
    return math.exp(beta - EULER_GAMMA + 4.0 / 3.0)


# ---------------------------------------------------------------------------
# spectral condition
# ---------------------------------------------------------------------------


def f_of_z(cfg: ProblemConfig, z):
    """``f(z) = iz/alpha + psi(alpha/2iz) + log(2iz/alpha) + 2 gamma - 1`` (principal log)."""
    _require_repulsive(cfg, "f_of_z")
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ValidationError("f_of_z: z must be non-zero")
    al = cfg.alpha
    val = 1j * z / al + digamma_complex(al / (2j * z)) + np.log(2j * z / al) + 2 * EULER_GAMMA - 1.0
    return complex(val) if val.ndim == 0 else val


def _mu_pair(cfg: ProblemConfig, z):
    a = 1.0 + cfg.alpha / (2j * z)
    arg = 2j * z * cfg.length
    return kummer_m(a, 2.0, arg), tricomi_u_b2(a, arg)


def spectral_function_beta(cfg: ProblemConfig, param: ExtensionParam, z):
    """``e^{-izL} F_beta(z)`` with ``F_beta = M (f - beta) - U Gamma(alpha/2iz)``.

    The phase ``e^{-izL}`` makes the function real for real ``z``; for
    ``beta = inf`` the function ``e^{-izL} M`` (the Dirichlet condition) is
    returned.

    Raises
    ------
    RealityError
        If for real ``z > 0`` the imaginary part exceeds ``1e-9`` of
        ``|M (f - beta)| + |U Gamma|``.
    """
    _require_repulsive(cfg, "spectral_function_beta")
    zc = complex(z)
    m, u = _mu_pair(cfg, zc)
    phase = np.exp(-1j * zc * cfg.length)
    if param.is_dirichlet:
        val = complex(phase * m)
        scale = abs(val)
    else:
        g = gamma_complex(cfg.alpha / (2j * zc))
        t1, t2 = m * (f_of_z(cfg, zc) - param.beta), u * g
        val = complex(phase * (t1 - t2))
        # relative to the two terms, so that the check stays meaningful at roots
        scale = abs(t1) + abs(t2)
    if zc.imag == 0 and zc.real > 0 and abs(val.imag) > _REALITY_RTOL * scale:
        raise RealityError(f"spectral_function_beta: Im/|F| = {abs(val.imag) / scale:.2e} at z = {zc}")
    return val


def spectral_lhs_beta(cfg: ProblemConfig, z: float) -> float:
    """Left-hand side ``f - Gamma U / M`` of the spectral condition at real ``z``."""
    _require_repulsive(cfg, "spectral_lhs_beta")
    zc = complex(z)
    m, u = _mu_pair(cfg, zc)
    val = f_of_z(cfg, zc) - gamma_complex(cfg.alpha / (2j * zc)) * u / m
    if abs(val.imag) > 1e-8 * max(1.0, abs(val)):
        raise RealityError("spectral_lhs_beta: non-real value on the real axis")
    return float(val.real)


def determinant_real(cfg: ProblemConfig, param: ExtensionParam, z: float) -> float:
    """Frobenius form of :func:`spectral_function_beta` at real ``z``.

    ``e^{-izL} M = D_inf(z^2 L^2)`` and ``e^{-izL} F_beta = -D_beta(z^2 L^2)/(alpha L)``.
    """
    d, _, _ = _frobenius.determinant(cfg.lam, param.beta, (z * cfg.length) ** 2 + 0j)
    if param.is_dirichlet:
        return float(d[0].real)
    return float(-d[0].real / cfg.lam)


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def asymptotic_eigenvalue_beta(cfg: ProblemConfig, param: ExtensionParam, n: int) -> float:
    """Large-``n`` root ``L z_n ~ pi n + pi/2 - (lam/2 pi n)(log 2 pi n - 2 log lam + gamma - 2 - 2 beta)``."""
    lam = cfg.lam
    x = math.pi * n + 0.5 * math.pi - lam / (2 * math.pi * n) * (
        math.log(2 * math.pi * n) - 2 * math.log(lam) + EULER_GAMMA - 2.0 - 2.0 * param.beta)
    return x / cfg.length


def solve_spectrum_beta(cfg: ProblemConfig, param: ExtensionParam, n_max: int) -> SpectrumSlice:
    """Positive roots of ``F_beta`` with indices ``0 (if present), 1, ..., n_max``.

    The roots interlace the Dirichlet roots: exactly one lies in each interval
    ``(z_n^D, z_{n+1}^D)`` and gets index ``n``; a root in ``(0, z_1^D)`` (a
    low-lying state) gets index 0.  Each interval is a bracket polished by
    Brent's method on the real function ``e^{-izL} F_beta``.  Negative
    eigenvalues are reported separately by :func:`negative_modes_beta`.

    Raises
    ------
    ValidationError
        For ``n_max < 1`` or ``alpha <= 0`` (finite ``beta``).
    BracketError
        If an interlacing interval has no sign change.
    """
    if n_max < 1:
        raise ValidationError("solve_spectrum_beta: n_max must be >= 1")
    if param.is_dirichlet:
        return solve_spectrum(cfg, n_max)
    _require_repulsive(cfg, "solve_spectrum_beta")
    dir_roots = solve_spectrum(cfg, n_max + 1).roots
    L = cfg.length
    roots, methods, residuals = [], [], []

    def g(z):
        return spectral_function_beta(cfg, param, z).real

    def g_low(z):
        return determinant_real(cfg, param, z)

    # low interval (0, z_1^D): Frobenius determinant, well conditioned there
    lo, hi = 1e-12 / L, dir_roots[0]
    glo, ghi = g_low(lo), g_low(hi)
    n_start = 1
    if glo * ghi < 0:
        z = optimize.brentq(g_low, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
        roots.append(z)
        methods.append("interlacing-bracket")
        residuals.append(abs(g(z)))
        n_start = 0
    for n in range(1, n_max + 1):
        lo, hi = dir_roots[n - 1], dir_roots[n]
        glo, ghi = g(lo), g(hi)
        if not glo * ghi < 0:
            raise BracketError(f"solve_spectrum_beta: no sign change in ({lo}, {hi}) at n={n}")
        z = optimize.brentq(g, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
        roots.append(z)
        methods.append("interlacing-bracket")
        residuals.append(abs(g(z)))
    return SpectrumSlice(tuple(roots), n_start, tuple(methods), tuple(residuals))


def negative_modes_beta(cfg: ProblemConfig, param: ExtensionParam) -> ModeList:
    """``kappa > 0`` with ``-kappa^2`` an eigenvalue of ``A_beta`` (finite ``beta``)."""
    _require_repulsive(cfg, "negative_modes_beta")
    lam = cfg.lam
    kmax = max(20.0, 3.0 * lam * (abs(param.beta) + 10.0))
    kmax = min(kmax, 600.0)
    grid = np.linspace(0.0, kmax, 4001)

    def d(k):
        return float(_frobenius.determinant(lam, param.beta, -(k * k) + 0j)[0][0].real)

    vals = _frobenius.determinant(lam, param.beta, -(grid ** 2) + 0j)[0].real
    out = ModeList()
    out.zero_mode = abs(vals[0]) <= 1e-12
    for i in range(len(grid) - 1):
        if vals[i] * vals[i + 1] < 0:
            out.append(optimize.brentq(d, grid[i], grid[i + 1], xtol=1e-15) / cfg.length)
    return out


# ---------------------------------------------------------------------------
# deficiency phase
# ---------------------------------------------------------------------------


def _deficiency_data(cfg: ProblemConfig):
    """Boundary data ``(a_+, b_+)`` of the deficiency element at ``z_+ = e^{i pi/4}/L``."""
    zp = complex(np.exp(1j * math.pi / 4)) / cfg.length
    m, u = _mu_pair(cfg, zp)
    a_plus = complex(m)
    b_plus = complex(m * f_of_z(cfg, zp) - u * gamma_complex(cfg.alpha / (2j * zp)))
    return zp, a_plus, b_plus


def dirichlet_theta(cfg: ProblemConfig) -> float:
    """Phase ``theta`` in ``[0, pi)`` at which ``beta(theta) = inf``."""
    _require_repulsive(cfg, "dirichlet_theta")
    _, a_plus, _ = _deficiency_data(cfg)
    return float((0.5 * math.pi - np.angle(a_plus)) % math.pi)


def beta_of_theta(cfg: ProblemConfig, theta: float) -> float:
    """``beta(theta) = Re{e^{i theta} b_+} / Re{e^{i theta} a_+}``.

    ``a_+`` and ``b_+`` are the coefficients of ``1 + alpha r log(alpha r)`` and
    ``alpha r`` in the deficiency element with ``z_+^2 = i/L^2``.  Returns
    ``inf`` when the denominator vanishes (the Dirichlet point).
    """
    _require_repulsive(cfg, "beta_of_theta")
    _, a_plus, b_plus = _deficiency_data(cfg)
    ph = complex(np.exp(1j * theta))
    num, den = ph * b_plus, ph * a_plus
    if abs(den.real) <= 1e-14 * abs(a_plus):
        return math.inf
    return float(num.real / den.real)


def param_from_theta(cfg: ProblemConfig, theta: float) -> ExtensionParam:
    """:class:`ExtensionParam` carrying both ``theta`` and ``beta(theta)``."""
    return ExtensionParam(beta_of_theta(cfg, theta), float(theta))


def deficiency_element(cfg: ProblemConfig, r):
    """``phi_+(r)`` normalised so that its boundary data are ``(a_+, b_+)``."""
    zp, _, _ = _deficiency_data(cfg)
    r = np.asarray(r, dtype=float)
    a = 1.0 + cfg.alpha / (2j * zp)
    m_l, u_l = _mu_pair(cfg, zp)
    x = 2j * zp * r
    raw = r * np.exp(-1j * zp * r) * (m_l * tricomi_u_b2(a, x) - u_l * kummer_m(a, 2.0, x))
    return cfg.alpha * gamma_complex(cfg.alpha / (2j * zp)) * raw


def boundary_ratio_from_function(cfg: ProblemConfig, theta: float, r_max: float = 2e-3) -> float:
    """Fit ``b/a`` of ``e^{i theta} phi_+ + c.c.`` near the origin.

    Least squares on ``r in (0, r_max L]`` with the basis
    ``1 + alpha r log(alpha r), alpha r`` and nuisance terms
    ``r^2 log r, r^2, r^3 log r, r^3``.
    """
    r = np.geomspace(1e-7, r_max, 60) * cfg.length
    phi = 2 * np.real(np.exp(1j * theta) * deficiency_element(cfg, r))
    al = cfg.alpha
    basis = np.column_stack([1 + al * r * np.log(al * r), al * r, r ** 2 * np.log(r), r ** 2,
                             r ** 3 * np.log(r), r ** 3])
    nrm = np.linalg.norm(basis, axis=0)
    coef = np.linalg.lstsq(basis / nrm, phi, rcond=None)[0] / nrm
    return float(coef[1] / coef[0])


# ---------------------------------------------------------------------------
# pole table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PoleEntry:
    """Laurent data at one pole.

    Attributes
    ----------
    location : float
    multiplicity : int
    quantity : str
        ``"zeta_beta"`` or ``"zeta_beta - zeta_inf"``.
    analytic : tuple of float
        Closed-form coefficients ``c_{-multiplicity}, ..., c_{-1}``.
    numeric : tuple of float
        The same coefficients from the contour continuation.
    difference : float
        Largest ``|numeric - analytic|`` relative to ``max(1, |analytic|)``.
    spurious : float
        Largest extracted coefficient below ``-multiplicity``.
    """

    location: float
    multiplicity: int
    quantity: str
    analytic: tuple
    numeric: tuple
    difference: float
    spurious: float


@dataclass(frozen=True)
class PoleTable:
    """Poles of ``zeta_beta`` at ``s = 1/2, -1/2, -1, -3/2``."""

    beta: float
    entries: list = field(default_factory=list)

    def entry(self, location: float) -> PoleEntry:
        for e in self.entries:
            if e.location == location:
                return e
        raise KeyError(location)


def analytic_poles_beta(cfg: ProblemConfig, beta: float) -> dict:
    """Closed-form Laurent coefficients ``{s0: (c_{-m}, ..., c_{-1})}``.

    The value at ``s = 1/2`` refers to ``zeta_beta``; the others to
    ``zeta_beta - zeta_inf``.
    """
    al, mu = cfg.alpha, cfg.mu
    lb = math.log(2 * mu / (beta_tilde(beta) * al))
    pi = math.pi
    return {
        0.5: (mu * cfg.length / (2 * pi),),
        -0.5: (-al / (4 * pi * mu), -al * (lb - 2.0 / 3.0) / (2 * pi * mu)),
        -1.0: (-al ** 2 / (4 * mu ** 2), -al ** 2 * (lb - 1.0 / 6.0) / (2 * mu ** 2)),
        -1.5: (
            3 * al ** 3 / (8 * pi * mu ** 3),
            3 * al ** 3 * lb / (4 * pi * mu ** 3),
            3 * al ** 3 * (lb ** 2 - 1.0 / 9.0 - pi ** 2 / 6) / (4 * pi * mu ** 3),
            al ** 3 * (lb ** 3 - (1.0 / 3.0 + pi ** 2 / 2) * lb - 2.0 / 27.0 - 0.75 * ZETA3) / (2 * pi * mu ** 3),
        ),
    }


def pole_table_beta(cfg: ProblemConfig, param: ExtensionParam, *, radius: float = 0.15,
                    num_nodes: int = 128) -> PoleTable:
    """Analytic and numerically extracted Laurent data of ``zeta_beta``.

    Raises
    ------
    ValidationError
        For ``beta = inf`` or ``alpha <= 0``.
    ContaminationError
        If an extraction finds a pole of higher order than expected.
    """
    if param.is_dirichlet:
        raise ValidationError("pole_table_beta: requires finite beta")
    _require_repulsive(cfg, "pole_table_beta")
    analytic = analytic_poles_beta(cfg, param.beta)
    entries = []
    for s0, coeffs in analytic.items():
        diff_mode = s0 != 0.5
        lau = _zeta.laurent_at(cfg, s0, param=param, difference=diff_mode, radius=radius, num_nodes=num_nodes)
        m = lau.multiplicity
        numeric = tuple(lau.coefficient(k).real for k in range(-m, 0))
        dif = max(abs(x - y) / max(1.0, abs(y)) for x, y in zip(numeric, coeffs))
        entries.append(PoleEntry(s0, m, "zeta_beta - zeta_inf" if diff_mode else "zeta_beta",
                                 tuple(coeffs), numeric, float(dif), lau.spurious))
    return PoleTable(float(param.beta), entries)
