"""Spectral zeta functions of ``A = -d^2/dr^2 + alpha/r`` on ``(0, L)``.

The package solves the Dirichlet spectrum and its selfadjoint extensions,
continues the spectral zeta function to the left half-plane, extracts its
Laurent data, fits the small-time heat trace, and evaluates the regularized
one-loop effective action.  Independent finite-difference and shooting
solvers certify the spectra.
"""

from .config import ExtensionParam, ProblemConfig
from .errors import (BracketError, ContaminationError, ConvergenceError, NumericalError, PoleError,
                     RealityError, SingularZetaError, ValidationError)
from .extensions import (beta_of_theta, f_of_z, negative_modes_beta, pole_table_beta, solve_spectrum_beta,
                         spectral_function_beta)
from .heattrace import fit_small_tau, heat_trace, mellin_zeta, sample_window
from .oracle import fd_eigenvalues, fd_richardson, shoot_eigenvalue
from .spectrum import (asymptotic_eigenvalue, critical_coupling, eigenfunction, negative_modes, solve_spectrum,
                       spectral_function_dirichlet)
from .zeta import (ContinuationPlan, effective_action_regularized, ground_energy, laurent_at, zeta_continued,
                   zeta_d_pole, zeta_direct)

__version__ = "0.1.0"

__all__ = [
    "BracketError", "ContaminationError", "ContinuationPlan", "ConvergenceError", "ExtensionParam",
    "NumericalError", "PoleError", "ProblemConfig", "RealityError", "SingularZetaError", "ValidationError",
    "asymptotic_eigenvalue", "beta_of_theta", "critical_coupling", "effective_action_regularized",
    "eigenfunction", "f_of_z", "fd_eigenvalues", "fd_richardson", "fit_small_tau", "ground_energy",
    "heat_trace", "laurent_at", "mellin_zeta", "negative_modes", "negative_modes_beta", "pole_table_beta",
    "sample_window", "shoot_eigenvalue", "solve_spectrum", "solve_spectrum_beta", "spectral_function_beta",
    "spectral_function_dirichlet", "zeta_continued", "zeta_d_pole", "zeta_direct",
]
