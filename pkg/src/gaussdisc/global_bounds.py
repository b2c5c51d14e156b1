"""Single-copy bounds for the optimal global (joint) detector.

The error probability of discriminating the uncorrelated thermal pair from
the maximally correlated separable state is bracketed by a Chernoff-type
upper bound (the s-minimized overlap) and a Bhattacharyya-type lower bound
(built from the s = 1/2 overlap).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, NumericalError
from .states import WilliamsonDecomposition, make_state_one, williamson_symmetric

# The overlap weights degenerate at s in {0, 1} whenever a symplectic
# eigenvalue equals 1 (exactly the case here), so the minimization runs on a
# slightly clipped interval; the objective is log-convex and its boundary
# values are approached continuously.
S_INTERVAL = (1e-6, 1.0 - 1e-6)


def g_weight(s: float, x: float) -> float:
    """Overlap prefactor weight ``2^s / ((x+1)^s - (x-1)^s)``; equals 1 at x = 1."""
    _check_weight_args(s, x)
    if x == 1.0:
        return 1.0
    # (x+1)^s - (x-1)^s = (x+1)^s * (1 - r) with r = ((x-1)/(x+1))^s, written
    # through expm1/log1p so large x and s near 1 keep full precision.
    r = math.exp(s * math.log1p(-2.0 / (x + 1.0)))
    return math.exp(s * math.log(2.0 / (x + 1.0))) / (1.0 - r)


def lambda_weight(s: float, x: float) -> float:
    """Overlap width weight ``((x+1)^s + (x-1)^s) / ((x+1)^s - (x-1)^s)`` >= 1."""
    _check_weight_args(s, x)
    if x == 1.0:
        return 1.0
    r = math.exp(s * math.log1p(-2.0 / (x + 1.0)))
    return (1.0 + r) / (1.0 - r)


def _check_weight_args(s: float, x: float) -> None:
    if x < 1.0:
        raise DomainError(f"weight argument must satisfy x >= 1, got {x}")
    if not 0.0 < s < 1.0:
        raise DomainError(f"order parameter must satisfy 0 < s < 1, got {s}")


def s_overlap_two_mode(
    dec_a: WilliamsonDecomposition, dec_b: WilliamsonDecomposition, s: float
) -> float:
    """Overlap Tr(rho_a^s rho_b^(1-s)) of two zero-mean two-mode Gaussian states.

    Takes the Williamson decompositions of the two covariance matrices and
    evaluates the full 4x4 matrix formula; used as the generic route and as a
    self-check for the reduced closed form.
    """
    pi_s = (
        4.0
        * g_weight(s, dec_a.nu_minus)
        * g_weight(s, dec_a.nu_plus)
        * g_weight(1.0 - s, dec_b.nu_minus)
        * g_weight(1.0 - s, dec_b.nu_plus)
    )
    sigma = dec_a.s_matrix @ np.diag(
        [lambda_weight(s, dec_a.nu_minus)] * 2 + [lambda_weight(s, dec_a.nu_plus)] * 2
    ) @ dec_a.s_matrix.T + dec_b.s_matrix @ np.diag(
        [lambda_weight(1.0 - s, dec_b.nu_minus)] * 2
        + [lambda_weight(1.0 - s, dec_b.nu_plus)] * 2
    ) @ dec_b.s_matrix.T
    return pi_s / math.sqrt(np.linalg.det(sigma))


def s_overlap_global(mu: float, s: float, *, matrix_form: bool = False) -> float:
    """Overlap Tr(rho_0^s rho_1^(1-s)) of the two encoded states at variance ``mu``.

    The uncorrelated state is already in normal form with degenerate spectrum
    ``{mu, mu}``; the correlated one has spectrum ``{1, 2 mu - 1}`` and an
    orthogonal-symplectic diagonalizer, so the 4x4 determinant collapses to a
    product of two squared factors.  Pass ``matrix_form=True`` to evaluate
    the unreduced 4x4 expression instead (debugging self-check).
    """
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    if matrix_form:
        dec0 = WilliamsonDecomposition(mu, mu, np.eye(4))
        dec1 = williamson_symmetric(make_state_one(mu))
        return s_overlap_two_mode(dec0, dec1, s)
    nu_plus = 2.0 * mu - 1.0
    pi_s = 4.0 * g_weight(s, mu) ** 2 * g_weight(1.0 - s, 1.0) * g_weight(1.0 - s, nu_plus)
    lam_mu = lambda_weight(s, mu)
    factor_minus = lam_mu + lambda_weight(1.0 - s, 1.0)
    factor_plus = lam_mu + lambda_weight(1.0 - s, nu_plus)
    return pi_s / (factor_minus * factor_plus)


@dataclass(frozen=True)
class SOverlapResult:
    """Minimized s-overlap: location, value and the implied error bound."""

    s_star: float
    q_value: float
    p_upper: float


@dataclass(frozen=True)
class GlobalBounds:
    """Error-probability bracket for the global detector."""

    p_upper: float
    p_lower: float
    bhattacharyya: float


def minimize_overlap(objective) -> tuple[float, float]:
    """Minimize a log-convex overlap over the clipped s-interval.

    Returns ``(s_star, minimum)``; Brent-style bounded scalar minimization
    with s-tolerance 1e-10.
    """
    result = minimize_scalar(
        objective,
        bounds=S_INTERVAL,
        method="bounded",
        options={"xatol": 1e-10, "maxiter": 200},
    )
    if not result.success:
        raise NumericalError(f"s-minimization did not converge: {result.message}")
    return float(result.x), float(result.fun)


def qcb_global(mu: float) -> SOverlapResult:
    """Chernoff-type upper bound ``P+ = min_s Q_s / 2`` for the global detector."""
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    s_star, q_value = minimize_overlap(lambda s: s_overlap_global(mu, s))
    return SOverlapResult(s_star, q_value, q_value / 2.0)


def bhattacharyya_global(mu: float) -> GlobalBounds:
    """Bracket the global error probability from both sides.

    The lower bound uses the s = 1/2 overlap B through
    ``P- = (1 - sqrt(1 - B^2)) / 2``; the upper bound is :func:`qcb_global`.
    """
    b = s_overlap_global(mu, 0.5)
    p_lower = (1.0 - math.sqrt(max(0.0, 1.0 - b * b))) / 2.0
    p_upper = qcb_global(mu).p_upper
    return GlobalBounds(p_upper=p_upper, p_lower=p_lower, bhattacharyya=b)
