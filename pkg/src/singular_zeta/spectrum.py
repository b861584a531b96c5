"""Dirichlet spectrum of ``A = -d^2/dr^2 + alpha/r`` on ``(0, L)``.

The eigenvalues are ``z_n^2`` where ``z_n > 0`` solves

    e^{-iLz} M(1 + alpha/(2iz), 2; 2iLz) = 0,

a real function of real ``z`` (Kummer's transformation maps it to its own
conjugate).  Writing ``x = L z``, ``N = 2 pi n``, ``l = log N`` and
``lam = alpha L``, the large-``n`` roots admit the expansion

    x_n = N/2 + a1/N + a3/N^3 + a5/N^5 + O(N^-7 log^4 N)

with coefficients polynomial in ``l``, ``gamma``, ``zeta(3)`` and ``zeta(5)``
(see :func:`asymptotic_coefficients`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, optimize

from . import _frobenius
from .config import ProblemConfig
from .errors import BracketError, NumericalError, RealityError, ValidationError
from .specfun import EULER_GAMMA, ZETA3, bessel_j1_zero, kummer_m

ZETA5 = 1.0369277551433699263


class AsymptoticOrder(str, enum.Enum):
    """Truncation order of the large-``n`` eigenvalue expansion."""

    N1 = "n1"
    NM1 = "n-1"
    NM3 = "n-3"
    NM5 = "n-5"


_ORDER_INDEX = {AsymptoticOrder.N1: 0, AsymptoticOrder.NM1: 1, AsymptoticOrder.NM3: 2, AsymptoticOrder.NM5: 3}


@dataclass(frozen=True)
class SpectrumSlice:
    """Ordered eigenvalue roots ``z_n`` (units 1/length).

    Attributes
    ----------
    roots : tuple of float
        Strictly increasing roots, ``roots[i]`` has index ``n_start + i``.
    n_start : int
        Index of the first root.
    methods : tuple of str
        ``"asymptotic-seeded"`` or ``"bracketed-root"`` per root.
    residuals : tuple of float
        ``|F(z_n)|`` of the spectral function at each root.
    """

    roots: tuple
    n_start: int
    methods: tuple
    residuals: tuple

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.asarray(self.roots) ** 2

    def __len__(self) -> int:
        return len(self.roots)


# ---------------------------------------------------------------------------
# spectral function
# ---------------------------------------------------------------------------

def spectral_function_dirichlet(cfg: ProblemConfig, z):
    """``e^{-iLz} M(1 + alpha/(2iz), 2; 2iLz)``.

    Parameters
    ----------
    cfg : ProblemConfig
    z : complex or array_like
        Spectral variable, non-zero.

    Returns
    -------
    complex or ndarray
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ValidationError("spectral_function_dirichlet: z must be non-zero")
    L = cfg.length
    val = np.exp(-1j * L * z) * kummer_m(1.0 + cfg.alpha / (2j * z), 2.0, 2j * L * z)
    return complex(val) if np.ndim(val) == 0 else val


def _amplitude(x):
    return 1.0 / (1.0 + abs(x))


def dirichlet_real(cfg: ProblemConfig, z: float) -> float:
    """Real part of the spectral function for real ``z``, with a reality check."""
    val = spectral_function_dirichlet(cfg, float(z))
    if abs(val.imag) > 1e-10 * (abs(val) + _amplitude(cfg.length * z)):
        raise RealityError(f"spectral function not real at z={z}: {val}")
    return val.real


# ---------------------------------------------------------------------------
# asymptotic expansion
# ---------------------------------------------------------------------------

def asymptotic_coefficients(lam: float, n: int) -> tuple[float, float, float]:
    """Coefficients ``(a1, a3, a5)`` of ``x_n = N/2 + a1/N + a3/N^3 + a5/N^5``."""
    g = EULER_GAMMA
    z3, z5 = ZETA3, ZETA5
    lg = math.log(2.0 * math.pi * n)
    L1, L2, L3, L4, L5 = lam, lam ** 2, lam ** 3, lam ** 4, lam ** 5
    a1 = L1 * (lg + g)
    a3 = (-2 * L2 * lg ** 2 + lg * (-4 * g * L2 + 2 * L2) - 2 * g ** 2 * L2 + 2 * g * L2
          - L3 * z3 / 3 - L2 + L1)
    a5 = (8 * lg ** 3 * L3 + lg ** 2 * (24 * g * L3 - 14 * L3)
          + lg * (24 * g ** 2 * L3 - 28 * g * L3 + 8 * L4 * z3 / 3 + 12 * L3 - 8 * L2)
          + 8 * g ** 3 * L3 - 14 * g ** 2 * L3 + 8 * g * L4 * z3 / 3 + 12 * g * L3 - 8 * g * L2
          + L5 * z5 / 5 - 2 * L4 * z3 / 3 - 3 * L3 + 23 * L2 / 3 - 6 * L1)
    return a1, a3, a5


def asymptotic_eigenvalue(cfg: ProblemConfig, n: int, order) -> float:
    """Truncated large-``n`` expansion of the root ``z_n``.

    Parameters
    ----------
    cfg : ProblemConfig
    n : int
        Root index, ``n >= 1``.
    order : AsymptoticOrder or str
        One of ``"n1"``, ``"n-1"``, ``"n-3"``, ``"n-5"``.

    Returns
    -------
    float
        Approximation of ``z_n`` in units of 1/length.
    """
    if n < 1:
        raise ValidationError("asymptotic_eigenvalue: n must be >= 1")
    k = _ORDER_INDEX[AsymptoticOrder(order)]
    big_n = 2.0 * math.pi * n
    a1, a3, a5 = asymptotic_coefficients(cfg.lam, n)
    x = 0.5 * big_n
    if k >= 1:
        x += a1 / big_n
    if k >= 2:
        x += a3 / big_n ** 3
    if k >= 3:
        x += a5 / big_n ** 5
    return x / cfg.length


def asymptotic_roots(lam: float, n) -> np.ndarray:
    """Vectorised ``L z_n`` to order ``n^-5`` for an array of indices."""
    n = np.asarray(n, dtype=float)
    g = EULER_GAMMA
    big_n = 2.0 * np.pi * n
    lg = np.log(big_n)
    L1, L2, L3, L4, L5 = lam, lam ** 2, lam ** 3, lam ** 4, lam ** 5
    a1 = L1 * (lg + g)
    a3 = (-2 * L2 * lg ** 2 + lg * (-4 * g * L2 + 2 * L2) - 2 * g ** 2 * L2 + 2 * g * L2
          - L3 * ZETA3 / 3 - L2 + L1)
    a5 = (8 * lg ** 3 * L3 + lg ** 2 * (24 * g * L3 - 14 * L3)
          + lg * (24 * g ** 2 * L3 - 28 * g * L3 + 8 * L4 * ZETA3 / 3 + 12 * L3 - 8 * L2)
          + 8 * g ** 3 * L3 - 14 * g ** 2 * L3 + 8 * g * L4 * ZETA3 / 3 + 12 * g * L3 - 8 * g * L2
          + L5 * ZETA5 / 5 - 2 * L4 * ZETA3 / 3 - 3 * L3 + 23 * L2 / 3 - 6 * L1)
    return 0.5 * big_n + a1 / big_n + a3 / big_n ** 3 + a5 / big_n ** 5


# ---------------------------------------------------------------------------
# root solving
# ---------------------------------------------------------------------------

def _polish(f, lo, hi, flo, fhi):
    z = optimize.brentq(f, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    return z, abs(f(z))


@lru_cache(maxsize=64)
def _solve_cached(alpha: float, length: float, tol: float, n_max: int) -> SpectrumSlice:
    cfg = ProblemConfig(alpha, length, 1.0, tol)
    f = lambda z: dirichlet_real(cfg, z)
    half = 0.5 * math.pi / length
    repulsive = cfg.lam > 0
    roots, methods, residuals = [], [], []
    prev = 0.0
    # the sign between consecutive roots alternates; z_1 > pi/L for alpha > 0
    sign_right = math.copysign(1.0, f(half)) if repulsive else 1.0
    for n in range(1, n_max + 1):
        # z_n > n pi/L; the slack keeps weak-coupling roots (z_n - n pi/L ~ alpha) off rounding noise
        floor = n * math.pi / length - 1e-7 * half if repulsive else prev
        seed = asymptotic_eigenvalue(cfg, n, AsymptoticOrder.NM3) if repulsive else n * math.pi / length
        lo, hi = max(seed - half, prev + 1e-9 * half, floor), max(seed + half, floor + half)
        flo, fhi = f(lo), f(hi)
        method = "asymptotic-seeded"
        ok = flo * fhi < 0 and lo > prev and (not repulsive or math.copysign(1.0, flo) == sign_right)
        if not ok:
            lo, hi, flo, fhi = _scan(f, max(prev, floor), 0.25 * half, sign_right if repulsive else None)
            method = "bracketed-root"
        z, res = _polish(f, lo, hi, flo, fhi)
        if res > tol:
            raise NumericalError(f"solve_spectrum: residual {res:.3e} > tol at n={n}")
        if z <= prev:
            raise BracketError(f"solve_spectrum: non-increasing root at n={n} in ({lo}, {hi})")
        roots.append(z)
        methods.append(method)
        residuals.append(res)
        prev = z
        sign_right = -sign_right
    return SpectrumSlice(tuple(roots), 1, tuple(methods), tuple(residuals))


def _scan(f, start, step, sign_left=None, max_steps=4000):
    """First sign change of ``f`` on ``start + k step``, ``k = 1, 2, ...``."""
    x0 = start + 1e-9 * step
    v0 = f(x0)
    if sign_left is not None and math.copysign(1.0, v0) != sign_left and v0 != 0:
        raise BracketError(f"sign pattern broken at {start}")
    for k in range(1, max_steps + 1):
        x1 = start + k * step
        v1 = f(x1)
        if v0 * v1 < 0:
            return x0, x1, v0, v1
        x0, v0 = x1, v1
    raise BracketError(f"no sign change in ({start}, {start + max_steps * step})")


def solve_spectrum(cfg: ProblemConfig, n_max: int) -> SpectrumSlice:
    """First ``n_max`` Dirichlet roots ``z_n``.

    Each root is bracketed in ``seed +- pi/(2L)`` around the order ``n^-3``
    asymptotic seed, the bracket is checked for a sign change and the root is
    polished by Brent's method.  When the seed bracket fails (strong coupling,
    small ``n``), a grid scan from the previous root locates the next sign
    change instead.

    Raises
    ------
    ValidationError
        For ``n_max < 1`` or ``alpha < 0``.
    BracketError, NumericalError
        When a bracket fails or the residual exceeds ``cfg.tol``.
    """
    if n_max < 1:
        raise ValidationError("solve_spectrum: n_max must be >= 1")
    if cfg.alpha < 0:
        raise ValidationError("solve_spectrum: alpha must be >= 0 (use negative_modes)")
    return _solve_cached(float(cfg.alpha), float(cfg.length), float(cfg.tol), int(n_max))


# ---------------------------------------------------------------------------
# attractive coupling
# ---------------------------------------------------------------------------

def critical_coupling(L: float) -> float:
    """Largest ``alpha`` with a zero mode, ``-j_{1,1}^2/(4L)``."""
    if L <= 0:
        raise ValidationError("critical_coupling: L must be positive")
    return -bessel_j1_zero(1) ** 2 / (4.0 * L)


class ModeList(list):
    """List of ``kappa`` values (eigenvalues ``-kappa^2``) with a zero-mode flag."""

    zero_mode: bool = False


def zero_mode_count(lam: float) -> int:
    """Number of ``k`` with ``j_{1,k}^2/4 < -lam`` (negative eigenvalues by oscillation)."""
    count, k = 0, 1
    while lam < 0 and bessel_j1_zero(k) ** 2 / 4.0 < -lam:
        count += 1
        k += 1
    return count


def negative_modes(cfg: ProblemConfig) -> ModeList:
    """Negative eigenvalues ``-kappa^2`` for attractive coupling.

    Roots of the Dirichlet determinant on the imaginary axis ``z = i kappa``
    are located by a sign scan of the (real) regular solution at ``r = L`` and
    polished by Brent's method.  The search range uses the bound
    ``kappa <= |alpha|/2`` of the half-line problem.

    Returns
    -------
    ModeList
        Increasing ``kappa > 0``; ``.zero_mode`` is set when ``z = 0`` is
        itself an eigenvalue within 1e-9.
    """
    if cfg.alpha >= 0:
        raise ValidationError("negative_modes: alpha must be negative")
    lam = cfg.lam
    L = cfg.length

    def g(k):
        return float(_frobenius.frobenius_at_one(lam, -(k * k), irregular=False)["reg"][0].real)

    kmax = 0.5 * abs(lam) + 1.0
    grid = np.linspace(0.0, kmax, 801)
    vals = np.array([g(k) for k in grid])
    out = ModeList()
    g0 = vals[0]
    scale = float(np.max(np.abs(vals[:8])))
    out.zero_mode = abs(g0) <= 1e-9 * max(scale, 1.0)
    for i in range(len(grid) - 1):
        a, b = vals[i], vals[i + 1]
        if i == 0 and out.zero_mode:
            continue
        if a * b < 0:
            k = optimize.brentq(g, grid[i], grid[i + 1], xtol=1e-15)
            out.append(k / L)
        elif b == 0.0:
            out.append(grid[i + 1] / L)
    out.sort(reverse=False)
    return out


# ---------------------------------------------------------------------------
# eigenfunctions
# ---------------------------------------------------------------------------

def _raw_eigenfunction(cfg: ProblemConfig, z: float, r):
    r = np.asarray(r, dtype=float)
    zc = complex(z)
    val = r * np.exp(-1j * zc * r) * kummer_m(1.0 + cfg.alpha / (2j * zc), 2.0, 2j * zc * r)
    return np.real(val)


@lru_cache(maxsize=256)
def _norm(alpha: float, length: float, z: float) -> float:
    cfg = ProblemConfig(alpha, length)
    val, err = integrate.quad(lambda r: _raw_eigenfunction(cfg, z, r) ** 2, 0.0, length,
                              epsabs=1e-13, epsrel=1e-12, limit=200)
    if err > 1e-10:
        raise NumericalError("eigenfunction: normalization quadrature failed")
    return math.sqrt(val)


def eigenfunction(cfg: ProblemConfig, z: float, r):
    """Normalised eigenfunction ``psi_z(r) ~ r e^{-izr} M(1+alpha/(2iz),2;2izr)``.

    The phase is fixed so that ``psi`` is real with positive slope at
    ``r = 0``; the normalisation ``int_0^L psi^2 dr = 1`` uses adaptive
    Gauss-Kronrod quadrature.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0) or np.any(r_arr > cfg.length * (1 + 1e-14)):
        raise ValidationError("eigenfunction: r must lie in [0, L]")
    out = _raw_eigenfunction(cfg, z, r_arr) / _norm(float(cfg.alpha), float(cfg.length), float(z))
    return float(out) if out.ndim == 0 else out
