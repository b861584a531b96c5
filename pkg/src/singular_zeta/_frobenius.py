"""Frobenius solutions of ``-u'' + (lam/r) u = E u`` on ``[0, 1]``.

Work in units of ``L`` (``lam = alpha L``, ``E = eigenvalue * L^2``).  Two
solutions are defined by their behaviour at the regular singular point:

* ``u_reg(r) = r + O(r^2)``, the solution obeying the Dirichlet condition;
* ``u_irr(r) = 1 + lam r log(lam r) + 0 * lam r + O(r^2 log r)``.

Both are entire functions of ``E``.  Their values at ``r = 1`` give the
determinants whose zeros are the eigenvalues: ``D_inf(E) = u_reg(1)`` for the
Dirichlet extension and ``D_beta(E) = u_irr(1) + beta lam u_reg(1)`` for the
extension with boundary ratio ``beta``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError


def frobenius_at_one(lam: float, energy, *, irregular: bool = True, kmax: int = 4000):
    """Values and ``E``-derivatives of ``u_reg(1)`` and ``u_irr(1)``.

    Parameters
    ----------
    lam : float
        Dimensionless coupling ``alpha L``.
    energy : array_like of complex
        Scaled energies ``E``.
    irregular : bool
        Also compute ``u_irr`` (requires ``lam > 0``).

    Returns
    -------
    dict
        Keys ``reg``, ``reg_e`` and, when ``irregular``, ``irr``, ``irr_e``;
        plus ``loss``, the ratio of the largest term to the result.
    """
    e = np.atleast_1d(np.asarray(energy, dtype=complex))
    zero = np.zeros_like(e)
    c_prev2, c_prev = zero.copy(), np.ones_like(e)  # c_0, c_1
    cp_prev2, cp_prev = zero.copy(), zero.copy()
    reg = c_prev.copy()
    reg_e = zero.copy()
    tmax = np.ones(e.shape)
    if irregular:
        d_prev2, d_prev = np.ones_like(e), zero.copy()  # d_0, d_1
        dp_prev2, dp_prev = zero.copy(), zero.copy()
        v = np.ones_like(e)
        v_e = zero.copy()
    kmin = int(3 * math.sqrt(float(np.max(np.abs(e))) + abs(lam))) + 8
    # at lam = 0 every other coefficient vanishes, so two consecutive small terms are required
    small_prev = False
    for k in range(2, kmax):
        kk = float(k * (k - 1))
        c = (lam * c_prev - e * c_prev2) / kk
        cp = (lam * cp_prev - c_prev2 - e * cp_prev2) / kk
        reg = reg + c
        reg_e = reg_e + cp
        mag = np.abs(c)
        if irregular:
            src = lam * (1.0 - 2.0 * k)
            d = (lam * d_prev - e * d_prev2 + src * c) / kk
            dp = (lam * dp_prev - d_prev2 - e * dp_prev2 + src * cp) / kk
            v = v + d
            v_e = v_e + dp
            mag = np.maximum(mag, np.abs(d))
            d_prev2, d_prev = d_prev, d
            dp_prev2, dp_prev = dp_prev, dp
        tmax = np.maximum(tmax, mag)
        c_prev2, c_prev = c_prev, c
        cp_prev2, cp_prev = cp_prev, cp
        small = bool(np.all(mag <= 1e-18 * tmax)
                     and np.all(np.abs(cp) <= 1e-18 * np.maximum(np.abs(reg_e), 1e-300)))
        if k > kmin and small and small_prev:
            break
        small_prev = small
    else:
        raise ConvergenceError("frobenius_at_one: series did not converge")
    out = {"reg": reg, "reg_e": reg_e}
    scale = np.abs(reg)
    if irregular:
        log_lam = math.log(lam)
        out["irr"] = lam * log_lam * reg + v
        out["irr_e"] = lam * log_lam * reg_e + v_e
        scale = np.minimum(scale, np.abs(out["irr"]))
    out["loss"] = tmax / np.maximum(scale, 1e-300)
    return out


def determinant(lam: float, beta: float, energy):
    """``D(E)`` and ``dD/dE`` for boundary ratio ``beta`` (``inf`` = Dirichlet)."""
    if math.isinf(beta):
        f = frobenius_at_one(lam, energy, irregular=False)
        return f["reg"], f["reg_e"], f["loss"]
    f = frobenius_at_one(lam, energy, irregular=True)
    d = f["irr"] + beta * lam * f["reg"]
    de = f["irr_e"] + beta * lam * f["reg_e"]
    return d, de, f["loss"]
