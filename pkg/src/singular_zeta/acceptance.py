"""Acceptance checks shared by the test suite and ``singular-zeta verify``.

Each ``criterion_N`` function returns a :class:`CriterionResult` made of
named sub-checks; a criterion passes when every sub-check passes and the
runtime budget (if any) is met.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import extensions as ext
from . import heattrace, oracle, spectrum, zeta
from .config import ExtensionParam, ProblemConfig
from .specfun import EULER_GAMMA, ZETA3, bessel_j1_zero

# Table of successive approximations at alpha = L = 1 (columns O(n), O(n^-1),
# O(n^-3), O(n^-5), solved eigenvalue), as printed.
TABLE1 = (
    ("3.141592654", "3.525966600", "3.496795708", "3.502157775", "3.500788704"),
    ("6.283185307", "6.530531180", "6.523724838", "6.524144307", "6.524098380"),
    ("9.424777961", "9.611185802", "9.608488391", "9.608573947", "9.608568384"),
    ("12.56637061", "12.71762300", "12.71625615", "12.71628294", "12.71628173"),
    ("15.70796327", "15.83606806", "15.83526998", "15.83528069", "15.83528033"),
    ("18.84955592", "18.96114614", "18.96063508", "18.96064010", "18.96063996"),
    ("21.99114858", "22.09030217", "22.08995291", "22.08995554", "22.08995548"),
    ("25.13274123", "25.22215715", "25.22190665", "25.22190815", "25.22190812"),
    ("28.27433388", "28.35589756", "28.35571107", "28.35571198", "28.35571196"),
    ("31.41592654", "31.49101071", "31.49086768", "31.49086826", "31.49086825"),
    ("34.55751919", "34.62715654", "34.62704415", "34.62704454", "34.62704453"),
    ("37.69911184", "37.76410010", "37.76401000", "37.76401027", "37.76401026"),
    ("40.84070450", "40.90167360", "40.90160012", "40.90160031", "40.90160031"),
)
TABLE1_ORDERS = ("n1", "n-1", "n-3", "n-5")

# Shape of the effective action versus L at alpha = 1 (50 points, L in [0.1, 5]).
GOLDEN_FIG4_SHAPE = {
    "sign_changes": 0,
    "signs": [-1, -1],
    "monotone_segments": [("increasing", 0), ("decreasing", 28)],
}


@dataclass
class Check:
    """One sub-check: a measured quantity against its target."""

    name: str
    passed: bool
    measured: str
    target: str


@dataclass
class CriterionResult:
    """Outcome of one acceptance criterion."""

    number: int
    title: str
    checks: list = field(default_factory=list)
    runtime: float = 0.0
    budget: Optional[float] = None

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.runtime <= self.budget

    @property
    def passed(self) -> bool:
        return self.within_budget and all(c.passed for c in self.checks)

    def add(self, name: str, value: float, target: float, tol: float, *, relative: bool = False) -> Check:
        err = abs(value - target)
        if relative:
            err /= abs(target)
        chk = Check(name, bool(err <= tol), f"{value:.12g}", f"{target:.12g} +/- {tol:g}{' rel' if relative else ''}")
        self.checks.append(chk)
        return chk

    def flag(self, name: str, ok: bool, measured, target) -> Check:
        chk = Check(name, bool(ok), str(measured), str(target))
        self.checks.append(chk)
        return chk

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        failed = [c.name for c in self.checks if not c.passed]
        if not self.within_budget:
            failed.append(f"runtime {self.runtime:.1f}s > {self.budget:g}s")
        tail = f" (failed: {', '.join(failed)})" if failed else ""
        return f"criterion {self.number:2d} {status}: {self.title} [{self.runtime:.1f}s]{tail}"


def _timed(number: int, title: str, budget: Optional[float], body: Callable[[CriterionResult], None]) -> CriterionResult:
    res = CriterionResult(number, title, budget=budget)
    t0 = time.perf_counter()
    body(res)
    res.runtime = time.perf_counter() - t0
    return res


def _digits_match(value: float, printed: str) -> bool:
    decimals = len(printed.split(".")[1])
    return f"{value:.{decimals}f}" == printed


_ONE = ProblemConfig(1.0, 1.0, 1.0)
HEAT_CONFIGS = ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0))
BETAS = (-20.0, 0.0, 35.0)


def criterion_1() -> CriterionResult:
    def body(res):
        sl = spectrum.solve_spectrum(_ONE, 13)
        worst = max(abs(z - float(row[4])) for z, row in zip(sl.roots, TABLE1))
        res.flag("solved eigenvalues |dz| <= 1e-8", len(sl) == 13 and worst <= 1e-8, f"{worst:.3e}", "1e-08")
        for col, order in enumerate(TABLE1_ORDERS):
            bad = [n for n in range(1, 14)
                   if not _digits_match(spectrum.asymptotic_eigenvalue(_ONE, n, order), TABLE1[n - 1][col])]
            res.flag(f"column {order} printed digits", not bad, f"mismatched rows {bad}" if bad else "all rows", "all rows")
    return _timed(1, "eigenvalue table reproduction", 10.0, body)


def criterion_2() -> CriterionResult:
    def body(res):
        cc = spectrum.critical_coupling(1.0)
        res.add("critical_coupling(L=1)", cc, -3.67049266, 1e-8)
        alt = -bessel_j1_zero(1) ** 2 / 4
        res.add("equals -j11^2/4", cc, alt, 1e-12)
    return _timed(2, "critical coupling", None, body)


def criterion_3() -> CriterionResult:
    def body(res):
        pi = math.pi
        l1 = zeta.laurent_at(_ONE, 0.5)
        res.add("c-1(1/2)", l1.coefficient(-1).real, 1 / (2 * pi), 1e-6)
        l2 = zeta.laurent_at(_ONE, -0.5)
        res.add("c-2(-1/2)", l2.coefficient(-2).real, 1 / (8 * pi), 1e-5)
        res.add("c-1(-1/2)", l2.coefficient(-1).real, (math.log(2) + EULER_GAMMA - 1) / (4 * pi), 1e-5)
        l3 = zeta.laurent_at(_ONE, -1.5)
        res.add("c-1(-3/2)", l3.coefficient(-1).real, -ZETA3 / (16 * pi), 1e-4)
        spur = max(l1.spurious, l2.spurious, l3.spurious)
        res.flag("spurious orders <= 1e-6", spur <= 1e-6, f"{spur:.3e}", "1e-06")
        ring = 0.1 * np.exp(2j * np.pi * (np.arange(64) + 0.5) / 64)
        vals = zeta.zeta_continued(_ONE, ring)
        neg = max(abs(np.mean(vals * ring ** m)) for m in (1, 2, 3))
        bounded = bool(np.all(np.isfinite(vals))) and neg <= 1e-6
        res.flag("regular at s=0 (radius 0.1)", bounded, f"max|z| {np.max(np.abs(vals)):.3g}, neg-order {neg:.2e}",
                 "finite, neg-order <= 1e-6")
    return _timed(3, "zeta pole ladder", 60.0, body)


def criterion_4() -> CriterionResult:
    def body(res):
        for al, L in HEAT_CONFIGS:
            cfg = ProblemConfig(al, L)
            fit = heattrace.fit_small_tau(cfg, heattrace.sample_window(cfg))
            exp = heattrace.expected_coefficients(cfg)
            res.add(f"b1 (alpha={al:g}, L={L:g})", fit.b1, exp["b1"], 1e-2, relative=True)
            res.add(f"a1 (alpha={al:g}, L={L:g})", fit.a1, exp["a1"], 1e-2, relative=True)
        free = ProblemConfig(0.0, 1.0)
        fit = heattrace.fit_small_tau(free, heattrace.sample_window(free))
        res.add("free a1", fit.a1, 0.0, 1e-6)
        res.add("free b1", fit.b1, 0.0, 1e-6)
    return _timed(4, "heat-trace log term", None, body)


def criterion_5(lengths=None) -> CriterionResult:
    def body(res):
        ea = zeta.effective_action_regularized(_ONE)
        fp = _ONE.mu * zeta.laurent_at(_ONE, -0.5).coefficient(0).real
        res.add("quadrature vs mu FP zeta(-1/2)", ea.mu_zeta0, fp, 1e-6)
        free = zeta.effective_action_regularized(ProblemConfig(0.0, 1.0))
        res.add("alpha -> 0 limit", free.value, -math.pi / 12, 1e-7)
        ls, vals = zeta.effective_action_curve(1.0, lengths)
        shape = zeta.curve_shape(vals)
        res.flag("50-point curve emitted", len(vals) == 50 and bool(np.all(np.isfinite(vals))), len(vals), 50)
        res.flag("curve shape matches golden", shape == GOLDEN_FIG4_SHAPE, shape, GOLDEN_FIG4_SHAPE)
    return _timed(5, "effective action", None, body)


def criterion_6() -> CriterionResult:
    def body(res):
        pole = zeta.zeta_d_pole(_ONE)
        res.add("residue at s=0", pole.residue, -_ONE.alpha / (8 * math.pi * _ONE.mu), 1e-5)
    return _timed(6, "zeta^(D) simple pole at s=0", None, body)


def _first_roots(cfg, beta, count=3):
    return ext.solve_spectrum_beta(cfg, ExtensionParam(beta), count)


def criterion_7() -> CriterionResult:
    def body(res):
        d = spectrum.solve_spectrum(_ONE, 13).roots
        b = ext.solve_spectrum_beta(_ONE, ExtensionParam.dirichlet(), 13).roots
        worst = max(abs(x - y) for x, y in zip(d, b))
        res.flag("beta=inf recovers Dirichlet", worst <= 1e-8, f"{worst:.3e}", "1e-08")
        for beta in BETAS:
            sl = _first_roots(_ONE, beta)
            roots = sl.roots[:3]
            errs = []
            for z in roots:
                br = (z * (1 - 1e-3), z * (1 + 1e-3))
                errs.append(abs(oracle.shoot_eigenvalue(_ONE, ExtensionParam(beta), br) - z))
            res.flag(f"shooting vs F_beta roots (beta={beta:g})", max(errs) <= 1e-6, f"{max(errs):.3e}", "1e-06")
        sl = ext.solve_spectrum_beta(_ONE, ExtensionParam(0.0), 50)
        z50 = sl.roots[50 - sl.n_start]
        res.add("L z_50 - 50 pi (beta=0)", z50 - 50 * math.pi, math.pi / 2, 0.02)
        worst = 0.0
        for theta in (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0):
            bt = ext.beta_of_theta(_ONE, theta)
            fit = ext.boundary_ratio_from_function(_ONE, theta)
            worst = max(worst, abs(fit - bt) / max(1.0, abs(bt)))
        res.flag("beta(theta) boundary ratio", worst <= 1e-8, f"{worst:.3e}", "1e-08 rel")
    return _timed(7, "extensions", None, body)


def criterion_8() -> CriterionResult:
    def body(res):
        table = ext.pole_table_beta(_ONE, ExtensionParam(0.0))
        picks = ((-0.5, 2, 0, "c-2(-1/2)"), (-1.0, 2, 0, "c-2(-1)"), (-1.0, 2, 1, "c-1(-1)"),
                 (-1.5, 4, 0, "c-4(-3/2)"))
        for loc, mult, idx, name in picks:
            e = table.entry(loc)
            res.flag(f"multiplicity at {loc:g}", e.multiplicity == mult, e.multiplicity, mult)
            if e.multiplicity == mult:
                res.add(name, e.numeric[idx], e.analytic[idx], 1e-4, relative=True)
        spur = max(table.entry(s).spurious for s in (-0.5, -1.0, -1.5))
        res.flag("spurious orders <= 1e-6", spur <= 1e-6, f"{spur:.3e}", "1e-06")
    return _timed(8, "higher-order pole table (beta=0)", 300.0, body)


ORACLE_CONFIGS = ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0), (0.0, 1.0))


def criterion_9() -> CriterionResult:
    def body(res):
        for al, L in ORACLE_CONFIGS:
            cfg = ProblemConfig(al, L)
            z1 = spectrum.solve_spectrum(cfg, 1).roots[0]
            rich = oracle.fd_richardson(cfg)
            res.add(f"FD lambda1 (alpha={al:g}, L={L:g})", rich.value, z1 * z1, 1e-4)
            res.flag(f"FD order (alpha={al:g}, L={L:g})", 1.5 <= rich.order <= 2.1, f"{rich.order:.4f}", "[1.5, 2.1]")
            shot = oracle.shoot_eigenvalue(cfg, ExtensionParam.dirichlet(), (z1 * (1 - 1e-3), z1 * (1 + 1e-3)))
            res.add(f"shooting z1 (alpha={al:g}, L={L:g})", shot, z1, 1e-7)
    return _timed(9, "oracle concordance", None, body)


def criterion_10() -> CriterionResult:
    def body(res):
        fit = heattrace.fit_small_tau(_ONE, heattrace.sample_window(_ONE))
        for s in (1.0, 1.5, 2.0):
            direct = zeta.zeta_direct(_ONE, s).value.real
            mel = heattrace.mellin_zeta(_ONE, s, fit=fit)
            res.add(f"s={s:g}", mel, direct, 1e-6)
    return _timed(10, "Mellin consistency", None, body)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10)


def run_all(report: Optional[Callable[[CriterionResult], None]] = None) -> list:
    """Run every criterion in order, calling ``report`` after each."""
    out = []
    for crit in CRITERIA:
        r = crit()
        out.append(r)
        if report is not None:
            report(r)
    return out
