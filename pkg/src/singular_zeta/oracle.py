"""Independent low-technology eigenvalue checks.

* :func:`fd_eigenvalues`: second-order finite differences on ``r_j = j h`` with
  Sturm-sequence bisection of the symmetric tridiagonal matrix.
* :func:`shoot_eigenvalue`: integrate ``phi'' = (alpha/r - z^2) phi`` from a
  small ``r0`` with boundary data ``phi ~ a(1 + alpha r log(alpha r)) + b alpha r``
  and locate the zero of ``phi(L)`` in ``z``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize

from .config import ExtensionParam, ProblemConfig
from .errors import BracketError, NumericalError, ValidationError


@dataclass(frozen=True)
class FdGrid:
    """Interior grid ``r_j = j h``, ``j = 1..n_points``, ``h = L/(n_points + 1)``."""

    n_points: int
    h: float
    potential_samples: np.ndarray

    @classmethod
    def build(cls, cfg: ProblemConfig, n_points: int) -> "FdGrid":
        h = cfg.length / (n_points + 1)
        r = h * np.arange(1, n_points + 1)
        return cls(n_points, h, cfg.alpha / r)


def sturm_count(diag: np.ndarray, off2: float, x) -> np.ndarray:
    """Number of eigenvalues below each ``x`` of the matrix with diagonal ``diag``
    and constant squared off-diagonal ``off2``."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    count = np.zeros(x.shape, dtype=int)
    d = diag[0] - x
    # a zero pivot is treated as a tiny negative one; the overflow to -inf is harmless
    with np.errstate(over="ignore", divide="ignore"):
        for j in range(len(diag)):
            if j > 0:
                d = diag[j] - x - off2 / d
            d = np.where(d == 0.0, -1e-300, d)
            count += d < 0
    return count


def fd_eigenvalues(cfg: ProblemConfig, n_points: int, k: int) -> list:
    """Lowest ``k`` eigenvalues of ``(-1, 2 + h^2 alpha/r_j, -1)/h^2``.

    Bisection of the Sturm count, all ``k`` eigenvalues simultaneously, to
    relative width ``1e-15`` inside the Gershgorin interval.

    Raises
    ------
    ValidationError
        For ``n_points < 200`` or ``k > n_points/10``.
    """
    if n_points < 200:
        raise ValidationError("fd_eigenvalues: n_points must be >= 200")
    if not 1 <= k <= n_points // 10:
        raise ValidationError("fd_eigenvalues: need 1 <= k <= n_points/10")
    grid = FdGrid.build(cfg, n_points)
    h2 = grid.h ** 2
    diag = 2.0 / h2 + grid.potential_samples
    off2 = 1.0 / h2 ** 2
    lo_bound = float(np.min(diag) - 2.0 / h2)
    hi_bound = float(np.max(diag) + 2.0 / h2)
    target = np.arange(1, k + 1)
    lo = np.full(k, lo_bound)
    hi = np.full(k, hi_bound)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        c = sturm_count(diag, off2, mid)
        upper = c >= target
        hi = np.where(upper, mid, hi)
        lo = np.where(upper, lo, mid)
        if np.all(hi - lo <= 1e-15 * np.maximum(1.0, np.abs(hi))):
            break
    return [float(v) for v in 0.5 * (lo + hi)]


@dataclass(frozen=True)
class RichardsonResult:
    """Extrapolated value with the measured convergence order."""

    value: float
    order: float
    samples: tuple
    error: float


def fd_richardson(cfg: ProblemConfig, index: int = 1, sizes=(1000, 2000, 4000)) -> RichardsonResult:
    """Richardson extrapolation of the ``index``-th FD eigenvalue over a doubling triple.

    The order ``p = log2((l1 - l2)/(l2 - l3))`` is measured and used for the
    extrapolation ``l3 + (l3 - l2)/(2^p - 1)``; the error estimate is the
    size of that correction.
    """
    if len(sizes) != 3:
        raise ValidationError("fd_richardson: need three grid sizes")
    vals = [fd_eigenvalues(cfg, n, max(index, 1))[index - 1] for n in sizes]
    d1, d2 = vals[0] - vals[1], vals[1] - vals[2]
    if d1 == 0 or d2 == 0 or d1 / d2 <= 0:
        raise NumericalError("fd_richardson: non-monotone convergence")
    ratio = ((sizes[1] + 1) / (sizes[0] + 1) + (sizes[2] + 1) / (sizes[1] + 1)) / 2
    p = math.log(d1 / d2) / math.log(ratio)
    corr = d2 / (ratio ** p - 1)
    return RichardsonResult(vals[2] - corr, p, tuple(vals), abs(corr))


def _initial_data(cfg: ProblemConfig, param: ExtensionParam, z: float, r0: float):
    """Boundary expansion through ``O(r^2)`` at ``r0``."""
    al = cfg.alpha
    e = z * z
    if param.is_dirichlet:
        # u_reg = r + (alpha/2) r^2
        return r0 + 0.5 * al * r0 ** 2, 1.0 + al * r0
    if al == 0:
        raise ValidationError("shoot_eigenvalue: finite beta requires alpha != 0")
    lg = math.log(al * r0)
    d2 = 0.5 * (-e - 1.5 * al * al)
    phi = 1.0 + al * r0 * lg + 0.5 * al * al * r0 * r0 * lg + d2 * r0 * r0
    dphi = al * lg + al + al * al * r0 * lg + 0.5 * al * al * r0 + 2 * d2 * r0
    b = param.beta * al
    phi += b * (r0 + 0.5 * al * r0 ** 2)
    dphi += b * (1.0 + al * r0)
    return phi, dphi


def end_value(cfg: ProblemConfig, param: ExtensionParam, z: float, r0_factor: float = 1e-6) -> float:
    """``phi(L)`` for the solution with the boundary data of ``param`` at ``r0``."""
    r0 = r0_factor * cfg.length
    al = cfg.alpha
    e = z * z

    def rhs(r, y):
        return [y[1], (al / r - e) * y[0]]

    y0 = _initial_data(cfg, param, z, r0)
    sol = integrate.solve_ivp(rhs, (r0, cfg.length), y0, method="DOP853", rtol=1e-11,
                              atol=1e-14)
    if not sol.success:
        raise NumericalError(f"shoot_eigenvalue: integration failed ({sol.message})")
    return float(sol.y[0, -1])


def shoot_eigenvalue(cfg: ProblemConfig, param: ExtensionParam, bracket, *, r0_factor: float = 1e-6) -> float:
    """Eigenvalue root ``z`` in ``bracket`` by shooting.

    Raises
    ------
    BracketError
        When ``phi(L)`` does not change sign on the bracket.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not 0 < lo < hi:
        raise ValidationError("shoot_eigenvalue: bracket must satisfy 0 < lo < hi")
    f = lambda z: end_value(cfg, param, z, r0_factor)
    flo, fhi = f(lo), f(hi)
    if flo * fhi >= 0:
        raise BracketError(f"shoot_eigenvalue: no sign change of phi(L) on ({lo}, {hi})")
    return float(optimize.brentq(f, lo, hi, xtol=1e-13, rtol=1e-14, maxiter=200))
