"""Oracle-approximating shrinkage (OAS) toward a scaled-identity target.

The estimator blends the sample covariance R with F = (tr(R)/L) * I:

    sigma = (1 - rho) * R + rho * F

with rho chosen to minimize mean-squared error against the true covariance.
The closed form is the production path; the fixed-point iteration exists for
cross-validation.  rho is clamped to [RHO_MIN, 1] so the result is strictly
positive definite whenever tr(R) > 0, which keeps the eigenvalue ratio finite
from the very first accumulated vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import ensure_symmetric

# denominator guard: treat tr(R^2) - tr(R)^2/L below this fraction of tr(R)^2
# as zero spread (white matrix), where the rho expression diverges to +inf
DEGENERATE_EPS = 1e-14
RHO_MIN = 1e-12


@dataclass
class ShrinkageResult:
    sigma_oas: np.ndarray
    rho: float
    target_scale: float
    iterations_used: int = 0


def _traces(r_hat: np.ndarray) -> tuple[float, float]:
    tr = float(np.trace(r_hat))
    # tr(R^2) as the squared Frobenius norm; exact for symmetric R
    tr2 = float(np.sum(r_hat * r_hat))
    return tr, tr2


def oas_rho_closed_form(r_hat: np.ndarray, n: int) -> float:
    """Converged shrinkage coefficient for a sample covariance built from n vectors."""
    r_hat = ensure_symmetric(r_hat, "r_hat")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    L = r_hat.shape[0]
    tr, tr2 = _traces(r_hat)
    if tr <= 0:
        raise ValueError("degenerate input: Tr <= 0")
    spread = tr2 - tr * tr / L
    if spread <= DEGENERATE_EPS * tr * tr:
        return 1.0
    num = (1.0 - 2.0 / L) * tr2 + tr * tr
    den = (n + 1.0 - 2.0 / L) * spread
    return float(min(max(num / den, RHO_MIN), 1.0))


def oas_rho_iterative(r_hat: np.ndarray, n: int, rho0: float = 0.5,
                      max_iter: int = 200, tol: float = 1e-12) -> tuple[float, int]:
    """Fixed-point iteration for rho, started from sigma_0 = r_hat.

    Returns (rho, iterations); iterations == max_iter means the tolerance was
    not reached (reported, not raised).
    """
    r_hat = ensure_symmetric(r_hat, "r_hat")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not (0.0 < rho0 < 1.0):
        raise ValueError(f"rho0 must be in (0, 1), got {rho0}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    L = r_hat.shape[0]
    tr, _ = _traces(r_hat)
    if tr <= 0:
        raise ValueError("degenerate input: Tr <= 0")
    target = (tr / L) * np.eye(L)
    sigma = r_hat.copy()
    rho = rho0
    for it in range(1, max_iter + 1):
        t_cross = float(np.sum(sigma * r_hat))           # Tr(sigma_j R)
        tr_sigma = float(np.trace(sigma))
        num = (1.0 - 2.0 / L) * t_cross + tr_sigma * tr_sigma
        den = (n + 1.0 - 2.0 / L) * t_cross + (1.0 - n / L) * tr_sigma * tr_sigma
        rho_next = num / den
        sigma = (1.0 - rho_next) * r_hat + rho_next * target
        done = abs(rho_next - rho) < tol
        rho = rho_next
        if done:
            return float(min(max(rho, RHO_MIN), 1.0)), it
    return float(min(max(rho, RHO_MIN), 1.0)), max_iter


def oas_estimate(r_hat: np.ndarray, n: int) -> ShrinkageResult:
    """Shrunk covariance estimate (1-rho)*R + rho*(tr(R)/L)*I with closed-form rho."""
    r_hat = ensure_symmetric(r_hat, "r_hat")
    rho = oas_rho_closed_form(r_hat, n)
    L = r_hat.shape[0]
    mu = float(np.trace(r_hat)) / L
    sigma = (1.0 - rho) * r_hat
    sigma.flat[:: L + 1] += rho * mu
    return ShrinkageResult(sigma_oas=sigma, rho=rho, target_scale=mu, iterations_used=0)
