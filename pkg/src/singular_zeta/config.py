"""Problem configuration and boundary-condition parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import ValidationError


@dataclass(frozen=True)
class ProblemConfig:
    """Physical parameters of ``A = -d^2/dr^2 + alpha/r`` on ``(0, L)``.

    Attributes
    ----------
    alpha : float
        Coupling (mass dimension one).
    length : float
        Interval length ``L > 0``.
    mu : float
        Mass scale of the zeta function, ``mu > 0``.
    tol : float
        Root tolerance, in ``(0, 1e-6)``.
    """

    alpha: float
    length: float = 1.0
    mu: float = 1.0
    tol: float = 1e-11

    def __post_init__(self):
        for name in ("alpha", "length", "mu", "tol"):
            val = getattr(self, name)
            if not isinstance(val, (int, float)) or not math.isfinite(val):
                raise ValidationError(f"ProblemConfig.{name} must be a finite real number")
        if self.length <= 0:
            raise ValidationError("ProblemConfig.length must be positive")
        if self.mu <= 0:
            raise ValidationError("ProblemConfig.mu must be positive")
        if not 0 < self.tol < 1e-6:
            raise ValidationError("ProblemConfig.tol must lie in (0, 1e-6)")

    @property
    def lam(self) -> float:
        """Dimensionless coupling ``alpha * L``."""
        return self.alpha * self.length


@dataclass(frozen=True)
class ExtensionParam:
    """Selfadjoint extension parameter.

    ``beta = inf`` is the Dirichlet condition at ``r = 0``.  Finite ``beta``
    imposes ``b = beta * a`` on the boundary data
    ``phi ~ a (1 + alpha r log(alpha r)) + b alpha r``.  ``theta``, when given,
    records the deficiency phase that produced ``beta``.
    """

    beta: float = math.inf
    theta: Optional[float] = None

    def __post_init__(self):
        if math.isnan(self.beta) or self.beta == -math.inf:
            raise ValidationError("ExtensionParam.beta must be real or +inf")

    @property
    def is_dirichlet(self) -> bool:
        return math.isinf(self.beta)

    @classmethod
    def dirichlet(cls) -> "ExtensionParam":
        return cls(math.inf)
