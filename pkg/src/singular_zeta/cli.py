"""Command-line driver: ``singular-zeta <command> [flags]``.

Results go to stdout (or ``--output``) as JSON (``schema_version`` 1) or CSV.
Floats carry 12 significant digits, in lowercase scientific notation when
``|x|`` lies outside ``[1e-4, 1e6)``.  Exit status is 1 on invalid input, 2 on
numerical failure and 3 when ``verify`` finds a failing criterion.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import acceptance, extensions as ext, heattrace, spectrum, zeta
from .config import ExtensionParam, ProblemConfig
from .errors import NumericalError, SingularZetaError, ValidationError

SCHEMA_VERSION = 1
COMMANDS = ("spectrum", "zeta", "laurent", "heat", "effective-action", "extensions",
            "table1", "figure-data", "verify")
FIGURES = ("1", "2", "4", "5")


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

def format_float(x: float) -> str:
    """12 significant digits; scientific outside ``[1e-4, 1e6)``."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0.0:
        return "0"
    if 1e-4 <= abs(x) < 1e6:
        return f"{x:.12g}"
    return f"{x:.11e}"


def _json(obj, indent: int = 0) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{inner}{_json(str(k))}: {_json(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + _json(v, indent + 1) for v in obj) + "\n" + pad + "]"
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        s = format_float(obj)
        return s if math.isfinite(obj) else f'"{s}"'
    if isinstance(obj, complex):
        return _json({"re": obj.real, "im": obj.imag}, indent)
    s = str(obj)
    out = ['"']
    for ch in s:
        if ch in '"\\':
            out.append("\\" + ch)
        elif ch == "\n":
            out.append("\\n")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def _csv(header, rows) -> str:
    def cell(v):
        if isinstance(v, (float, np.floating)):
            return format_float(v)
        s = str(v)
        return f'"{s}"' if ("," in s or '"' in s) else s
    lines = [",".join(header)] + [",".join(cell(v) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# request
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunRequest:
    """Validated command-line request."""

    command: str
    config: ProblemConfig
    extension: Optional[ExtensionParam]
    output_path: Optional[str]
    format: str
    n_max: int
    tau_min: float
    tau_max: float
    at: Optional[float]
    figure: Optional[str]


def _parse_beta(text: str) -> float:
    if text.strip().lower() in ("inf", "+inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid beta {text!r}") from None


class _Parser(argparse.ArgumentParser):
    """Argument errors are validation failures (exit status 1)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: validation error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="singular-zeta", description="Spectral zeta functions of -d^2/dr^2 + alpha/r.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--alpha", type=float, default=1.0)
    common.add_argument("--length", type=float, default=1.0)
    common.add_argument("--mu", type=float, default=1.0)
    common.add_argument("--beta", type=_parse_beta, default=None)
    common.add_argument("--theta", type=float, default=None)
    common.add_argument("--n-max", type=int, default=13)
    common.add_argument("--tau-min", type=float, default=1e-4)
    common.add_argument("--tau-max", type=float, default=1e-2)
    common.add_argument("--at", type=float, default=None)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", default=None)
    common.add_argument("--tol", type=float, default=1e-11)
    common.add_argument("--figure", choices=FIGURES, default=None)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return p


def make_request(ns: argparse.Namespace) -> RunRequest:
    cfg = ProblemConfig(ns.alpha, ns.length, ns.mu, ns.tol)
    if ns.beta is not None and ns.theta is not None:
        raise ValidationError("give at most one of --beta and --theta")
    param = None
    if ns.beta is not None:
        param = ExtensionParam(ns.beta)
    elif ns.theta is not None:
        param = ext.param_from_theta(cfg, ns.theta)
    if ns.n_max < 1:
        raise ValidationError("--n-max must be >= 1")
    if ns.command in ("zeta", "laurent") and ns.at is None:
        raise ValidationError(f"{ns.command}: --at is required")
    if ns.command == "extensions" and param is None:
        raise ValidationError("extensions: --beta or --theta is required")
    if ns.command == "figure-data" and ns.format == "csv" and ns.figure is None:
        raise ValidationError("figure-data: --figure is required with --format csv")
    if ns.command in ("verify",) and ns.format == "csv":
        raise ValidationError("verify: only JSON output")
    return RunRequest(ns.command, cfg, param, ns.output, ns.format, ns.n_max,
                      ns.tau_min, ns.tau_max, ns.at, ns.figure)


def _threads() -> int:
    raw = os.environ.get("SINGULAR_ZETA_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError("SINGULAR_ZETA_THREADS must be a positive integer") from None
    if n < 1:
        raise ValidationError("SINGULAR_ZETA_THREADS must be a positive integer")
    return n


def _pmap(func, items):
    items = list(items)
    n = min(_threads(), len(items))
    if n <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(func, items))


def _cfg_dict(cfg: ProblemConfig) -> dict:
    return {"alpha": cfg.alpha, "length": cfg.length, "mu": cfg.mu, "tol": cfg.tol}


def _beta_value(param: Optional[ExtensionParam]):
    return None if param is None else param.beta


# ---------------------------------------------------------------------------
# commands (each returns (json payload, csv header, csv rows))
# ---------------------------------------------------------------------------

def _cmd_spectrum(req):
    cfg, param = req.config, req.extension
    if param is None or param.is_dirichlet:
        sl = spectrum.solve_spectrum(cfg, req.n_max)
        neg = list(spectrum.negative_modes(cfg)) if cfg.alpha < 0 else []
    else:
        sl = ext.solve_spectrum_beta(cfg, param, req.n_max)
        neg = list(ext.negative_modes_beta(cfg, param))
    rows = [(sl.n_start + i, z, z * z, m) for i, (z, m) in enumerate(zip(sl.roots, sl.methods))]
    payload = {"roots": [{"n": r[0], "z": r[1], "eigenvalue": r[2], "method": r[3]} for r in rows],
               "negative_modes": neg}
    return payload, ("n", "z", "eigenvalue", "method"), rows


def _cmd_zeta(req):
    s = req.at
    val = zeta.zeta_continued(req.config, s, param=req.extension)
    payload = {"s": s, "value": complex(val)}
    if s > 0.5 and (req.extension is None or req.extension.is_dirichlet):
        est = zeta.zeta_direct(req.config, s)
        payload["direct"] = {"value": complex(est.value), "error": float(est.error)}
    return payload, ("s", "re", "im"), [(s, complex(val).real, complex(val).imag)]


def _cmd_laurent(req):
    param = req.extension
    diff = param is not None and not param.is_dirichlet and req.at != 0.5
    lau = zeta.laurent_at(req.config, req.at, param=param, difference=diff)
    coeffs = {f"c{m}": lau.coefficient(m).real for m in sorted(lau.coefficients)}
    payload = {"at": req.at, "quantity": "zeta_beta - zeta_inf" if diff else "zeta",
               "multiplicity": lau.multiplicity, "coefficients": coeffs, "spurious": lau.spurious,
               "circle_radius": lau.circle_radius, "num_nodes": lau.num_nodes}
    rows = [(m, lau.coefficient(m).real, lau.coefficient(m).imag) for m in sorted(lau.coefficients)]
    return payload, ("order", "re", "im"), rows


def _cmd_heat(req):
    cfg = req.config
    samples = heattrace.sample_window(cfg, req.tau_min, req.tau_max)
    fit = heattrace.fit_small_tau(cfg, samples)
    exp = heattrace.expected_coefficients(cfg)
    payload = {
        "samples": [{"tau": s.tau, "value": s.value, "error": s.error} for s in samples],
        "fit": {"a0": fit.a0, "a_half": fit.a_half, "a1": fit.a1, "b1": fit.b1,
                "residual_norm": fit.residual_norm, "condition": fit.condition,
                "tau_window": list(fit.tau_window), "guards": list(fit.guards)},
        "expected": exp,
        "zeta_poles": heattrace.zeta_poles_from_fit(fit, cfg.mu),
    }
    return payload, ("tau", "value", "error"), [(s.tau, s.value, s.error) for s in samples]


def _cmd_effective_action(req):
    ea = zeta.effective_action_regularized(req.config)
    payload = {"value": ea.value, "removed_terms": ea.removed_terms, "mu_zeta0": ea.mu_zeta0,
               "scheme_note": ea.scheme_note}
    rows = [(ea.value, ea.removed_terms, ea.mu_zeta0)]
    return payload, ("value", "removed_terms", "mu_zeta0"), rows


def _cmd_extensions(req):
    cfg, param = req.config, req.extension
    sl = ext.solve_spectrum_beta(cfg, param, req.n_max)
    rows = []
    for i, z in enumerate(sl.roots):
        n = sl.n_start + i
        asym = ext.asymptotic_eigenvalue_beta(cfg, param, n) if n >= 1 and not param.is_dirichlet else None
        rows.append((n, z, z * z, "" if asym is None else asym))
    payload = {
        "beta": param.beta, "theta": param.theta,
        "roots": [{"n": r[0], "z": r[1], "eigenvalue": r[2], "asymptotic": r[3] if r[3] != "" else None}
                  for r in rows],
        "negative_modes": list(ext.negative_modes_beta(cfg, param)),
    }
    if not param.is_dirichlet:
        try:
            table = ext.pole_table_beta(cfg, param)
        except ValidationError as exc:
            payload["poles"] = None
            payload["poles_note"] = str(exc)
            return payload, ("n", "z", "eigenvalue", "asymptotic"), rows
        payload["poles"] = [{"location": e.location, "multiplicity": e.multiplicity, "quantity": e.quantity,
                             "analytic": list(e.analytic), "numeric": list(e.numeric),
                             "difference": e.difference, "spurious": e.spurious} for e in table.entries]
    return payload, ("n", "z", "eigenvalue", "asymptotic"), rows


def _cmd_table1(req):
    cfg = req.config
    sl = spectrum.solve_spectrum(cfg, req.n_max)
    rows = []
    for n in range(1, req.n_max + 1):
        approx = [spectrum.asymptotic_eigenvalue(cfg, n, o) for o in acceptance.TABLE1_ORDERS]
        rows.append((n, *approx, sl.roots[n - 1]))
    header = ("n", "O(n)", "O(n^-1)", "O(n^-3)", "O(n^-5)", "eigenvalue")
    payload = {"rows": [dict(zip(header, r)) for r in rows]}
    return payload, header, rows


def _fig1(cfg):
    z = np.linspace(0.05, 15.0, 600) / cfg.length
    return ("z", "lhs"), [(float(x), spectrum.dirichlet_real(cfg, float(x))) for x in z]


def _fig2(cfg):
    roots = spectrum.solve_spectrum(cfg, 3).roots
    r = np.linspace(0.0, cfg.length, 201)
    cols = [spectrum.eigenfunction(cfg, z, r) for z in roots]
    return ("r", "psi1", "psi2", "psi3"), [(float(r[i]), *(float(c[i]) for c in cols)) for i in range(len(r))]


def _effective_point(args):
    alpha, L = args
    return zeta.effective_action_regularized(ProblemConfig(alpha, L)).value


def _fig4(cfg):
    lengths = np.linspace(0.1, 5.0, 50)
    vals = _pmap(_effective_point, [(cfg.alpha, float(L)) for L in lengths])
    return ("length", "effective_action"), [(float(L), float(v)) for L, v in zip(lengths, vals)]


def _fig5(cfg):
    z = np.linspace(0.05, 15.0, 900) / cfg.length
    rows = []
    for x in z:
        try:
            rows.append((float(x), ext.spectral_lhs_beta(cfg, float(x))))
        except (ZeroDivisionError, SingularZetaError):
            rows.append((float(x), math.nan))
    return ("z", "lhs"), rows


_FIGS = {"1": _fig1, "2": _fig2, "4": _fig4, "5": _fig5}


def _cmd_figure_data(req):
    cfg = req.config
    figs = [req.figure] if req.figure else list(FIGURES)
    payload = {}
    header, rows = None, None
    for f in figs:
        header, rows = _FIGS[f](cfg)
        entry = {"columns": list(header), "points": [list(r) for r in rows]}
        if f == "4":
            entry["shape"] = zeta.curve_shape([r[1] for r in rows])
        if f == "5":
            entry["dirichlet_asymptotes"] = [z for z in spectrum.solve_spectrum(cfg, 4).roots
                                             if z <= 15.0 / cfg.length]
        payload[f"figure{f}"] = entry
    return payload, header, rows


def _cmd_verify(req):
    results = acceptance.run_all(lambda r: print(r.line(), file=sys.stderr, flush=True))
    payload = {"criteria": [{"number": r.number, "title": r.title, "passed": r.passed,
                             "runtime": r.runtime, "budget": r.budget,
                             "checks": [{"name": c.name, "passed": c.passed, "measured": c.measured,
                                         "target": c.target} for c in r.checks]} for r in results],
               "all_passed": all(r.passed for r in results)}
    return payload, None, None


_HANDLERS = {
    "spectrum": _cmd_spectrum, "zeta": _cmd_zeta, "laurent": _cmd_laurent, "heat": _cmd_heat,
    "effective-action": _cmd_effective_action, "extensions": _cmd_extensions, "table1": _cmd_table1,
    "figure-data": _cmd_figure_data, "verify": _cmd_verify,
}


def run(req: RunRequest) -> tuple[int, str]:
    """Execute ``req`` and return ``(exit status, rendered text)``."""
    payload, header, rows = _HANDLERS[req.command](req)
    if req.format == "csv":
        text = _csv(header, rows)
    else:
        doc = {"schema_version": SCHEMA_VERSION, "command": req.command, "config": _cfg_dict(req.config),
               "beta": _beta_value(req.extension), "result": payload}
        text = _json(doc) + "\n"
    status = 0
    if req.command == "verify" and not payload["all_passed"]:
        status = 3
    return status, text


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        req = make_request(ns)
        status, text = run(req)
    except ValidationError as exc:
        print(f"singular-zeta {ns.command}: validation error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, ArithmeticError) as exc:
        print(f"singular-zeta {ns.command}: numerical error: {exc}", file=sys.stderr)
        return 2
    if req.output_path:
        with open(req.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
