"""Plain Newton iteration on the perimeter gradient and Smale-style certificates.

The certificate uses

    beta    = |H^-1 g|
    gamma_s = |H^-1| |H| / 2      (spectral norms)
    alpha   = beta * gamma_s

Note that gamma_s is a condition-number surrogate, not Smale's gamma built
from higher derivatives; it is implemented as stated for this method.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BilliardError,
    DegeneratePolygonError,
    InvalidInputError,
    SingularHessianError,
)
from .functional import as_params, evaluate
from .geometry import BoundarySpec, wrap_unit

DEFAULT_THRESHOLD = 0.15767
SMALE_BOUND = np.sqrt(3.0) - 1.0
MAX_CONDITION = 1e14


@dataclass(frozen=True)
class Certificate:
    beta: float
    gamma_s: float
    alpha: float
    threshold: float = DEFAULT_THRESHOLD

    @property
    def certified(self) -> bool:
        return bool(self.alpha < self.threshold)


UNCERTIFIABLE = dict(beta=np.inf, gamma_s=np.inf, alpha=np.inf)


@dataclass(frozen=True)
class NewtonConfig:
    max_steps: int = 50
    step_tol: float = 1e-12
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        if self.max_steps < 1:
            raise InvalidInputError("max_steps must be >= 1")
        if not self.step_tol > 0:
            raise InvalidInputError("step_tol must be positive")
        if not (0 < self.threshold < SMALE_BOUND):
            raise InvalidInputError(
                f"threshold must lie in (0, {SMALE_BOUND:.6f}), got {self.threshold}"
            )


def newton_step(spec: BoundarySpec, theta):
    """One Newton update ``theta - H^-1 g``; returns (theta_next, step_norm)."""
    ev = evaluate(spec, theta)
    lam = np.abs(np.linalg.eigvalsh(ev.hessian))
    if not np.all(np.isfinite(lam)) or lam.min() * MAX_CONDITION < lam.max():
        raise SingularHessianError("Hessian is singular or too ill-conditioned")
    try:
        d = np.linalg.solve(ev.hessian, -ev.gradient)
    except np.linalg.LinAlgError as exc:
        raise SingularHessianError(str(exc)) from exc
    theta_next = wrap_unit(as_params(theta) + d)
    return theta_next, float(np.linalg.norm(d))


def certify(spec: BoundarySpec, theta, threshold: float = DEFAULT_THRESHOLD) -> Certificate:
    ev = evaluate(spec, theta)
    lam = np.abs(np.linalg.eigvalsh(ev.hessian))
    if not np.all(np.isfinite(lam)) or lam.min() == 0.0:
        return Certificate(**UNCERTIFIABLE, threshold=threshold)
    try:
        d = np.linalg.solve(ev.hessian, ev.gradient)
    except np.linalg.LinAlgError:
        return Certificate(**UNCERTIFIABLE, threshold=threshold)
    beta = float(np.linalg.norm(d))
    gamma_s = 0.5 * float(lam.max() / lam.min())
    return Certificate(beta, gamma_s, beta * gamma_s, threshold)


@dataclass
class PolishResult:
    theta: np.ndarray
    certificate: Certificate | None
    trace: list[float] = field(default_factory=list)
    failure: str | None = None

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.certified


def _failure_cause(exc: BilliardError) -> str:
    if isinstance(exc, DegeneratePolygonError):
        return "degenerate"
    if isinstance(exc, SingularHessianError):
        return "singular"
    return "error"


def polish_and_certify(spec: BoundarySpec, seed, config: NewtonConfig = NewtonConfig()) -> PolishResult:
    """Run Newton from ``seed`` and certify the final iterate.

    Numerical failures never propagate; they come back as a result with
    ``failure`` set to a short cause label.
    """
    theta = as_params(seed)
    trace: list[float] = []
    try:
        for _ in range(config.max_steps):
            nxt, step = newton_step(spec, theta)
            trace.append(step)
            if not (np.isfinite(step) and np.all(np.isfinite(nxt))):
                return PolishResult(theta, None, trace, "nonfinite")
            theta = nxt
            if step < config.step_tol:
                break
        cert = certify(spec, theta, config.threshold)
    except BilliardError as exc:
        return PolishResult(theta, None, trace, _failure_cause(exc))
    if not np.isfinite(cert.alpha):
        return PolishResult(theta, cert, trace, "singular")
    if not cert.certified:
        return PolishResult(theta, cert, trace, "not_certified")
    return PolishResult(theta, cert, trace)
