"""Covariance matrices and Williamson normal forms for two bosonic modes.

Conventions used throughout the package:

* quadrature ordering (x_A, p_A, x_B, p_B);
* the vacuum covariance matrix is the identity (quadrature variance 1), so a
  thermal state with variance ``mu`` carries ``(mu - 1) / 2`` photons per mode;
* the symplectic form is ``OMEGA = omega2 (+) omega2`` with
  ``omega2 = [[0, 1], [-1, 0]]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import schur

from .errors import DomainError, NumericalError

OMEGA2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA = np.block(
    [[OMEGA2, np.zeros((2, 2))], [np.zeros((2, 2)), OMEGA2]]
)

# Orthogonal building blocks of the analytic decomposition below:
# _QUAD_SWAP exchanges the two quadratures of a mode, _QUAD_REFLECT flips the
# sign of p.  _BALANCED_MIX is the SO(4) rotation that diagonalizes every
# covariance matrix of the symmetric family; it is *not* symplectic on its
# own, which is why the reflections are appended in _SYMMETRIC_DIAGONALIZER.
_QUAD_SWAP = np.array([[0.0, 1.0], [1.0, 0.0]])
_QUAD_REFLECT = np.diag([1.0, -1.0])
_BALANCED_MIX = np.block(
    [[-_QUAD_SWAP, _QUAD_SWAP], [_QUAD_SWAP, _QUAD_SWAP]]
) / math.sqrt(2.0)
_SYMMETRIC_DIAGONALIZER = _BALANCED_MIX @ np.block(
    [[_QUAD_REFLECT, np.zeros((2, 2))], [np.zeros((2, 2)), _QUAD_REFLECT]]
)
_MODE_SWAP = np.block(
    [[np.zeros((2, 2)), np.eye(2)], [np.eye(2), np.zeros((2, 2))]]
)


def balanced_squeezer(mu: float) -> np.ndarray:
    """Single-mode squeezer ``diag(1/sqrt(b), sqrt(b))`` with ``b = sqrt(2 mu - 1)``.

    Kept only for reference.  Composing two of these with the balanced
    rotation does *not* give a symplectic congruence for ``mu > 1`` (a special
    orthogonal 4x4 matrix need not preserve the symplectic form), so the
    route through this matrix would assign the maximally correlated state a
    degenerate spectrum ``{b, b}``.  The actual symplectic spectrum is
    ``{1, 2 mu - 1}``; see :func:`williamson_symmetric`.
    """
    b = math.sqrt(2.0 * mu - 1.0)
    return np.diag([1.0 / math.sqrt(b), math.sqrt(b)])


@dataclass(frozen=True)
class SymmetricTwoModeCM:
    """Normal-form covariance matrix of a symmetric two-mode Gaussian state.

    ``mu`` is the thermal variance of each mode, ``g`` and ``gp`` the x- and
    p-quadrature correlations.  Values are stored as given; use
    :func:`check_bona_fide` to test physical validity.
    """

    mu: float
    g: float
    gp: float

    def matrix(self) -> np.ndarray:
        """The 4x4 covariance matrix in (x_A, p_A, x_B, p_B) ordering."""
        m, g, gp = self.mu, self.g, self.gp
        return np.array(
            [
                [m, 0.0, g, 0.0],
                [0.0, m, 0.0, gp],
                [g, 0.0, m, 0.0],
                [0.0, gp, 0.0, m],
            ]
        )

    @property
    def mean_photons(self) -> float:
        """Mean photon number of each reduced (thermal) mode."""
        return (self.mu - 1.0) / 2.0


def make_state_zero(mu: float) -> SymmetricTwoModeCM:
    """Uncorrelated pair of thermal modes with variance ``mu``."""
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    return SymmetricTwoModeCM(mu, 0.0, 0.0)


def make_state_one(mu: float) -> SymmetricTwoModeCM:
    """Maximally correlated separable state with the same local energy.

    Both quadrature correlations sit at the separability edge ``mu - 1``.
    """
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    return SymmetricTwoModeCM(mu, mu - 1.0, mu - 1.0)


def make_symmetric_state(mu: float, g: float) -> SymmetricTwoModeCM:
    """Separable member of the ``g = gp`` family; requires ``|g| <= mu - 1``."""
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    if abs(g) > mu - 1.0:
        raise DomainError(
            f"|g| <= mu - 1 required for the separable family, got g={g}, mu={mu}"
        )
    return SymmetricTwoModeCM(mu, g, g)


def check_bona_fide(cm: SymmetricTwoModeCM) -> tuple[bool, list[str]]:
    """Test the physical-validity inequalities of the normal form.

    Returns ``(ok, violations)`` where ``violations`` lists every clause that
    fails: ``mu >= 1``, ``|g| < mu``, ``|gp| < mu`` and
    ``mu^2 + g*gp - 1 >= mu*|g + gp|``.
    """
    violations = []
    if cm.mu < 1.0:
        violations.append(f"mu >= 1 violated (mu = {cm.mu})")
    if abs(cm.g) >= cm.mu:
        violations.append(f"|g| < mu violated (g = {cm.g}, mu = {cm.mu})")
    if abs(cm.gp) >= cm.mu:
        violations.append(f"|gp| < mu violated (gp = {cm.gp}, mu = {cm.mu})")
    lhs = cm.mu * cm.mu + cm.g * cm.gp - 1.0
    rhs = cm.mu * abs(cm.g + cm.gp)
    if lhs < rhs:
        violations.append(
            f"mu^2 + g*gp - 1 >= mu*|g + gp| violated ({lhs} < {rhs})"
        )
    return (not violations, violations)


@dataclass(frozen=True)
class WilliamsonDecomposition:
    """Symplectic normal form ``V = S diag(nu-, nu-, nu+, nu+) S^T``."""

    nu_minus: float
    nu_plus: float
    s_matrix: np.ndarray

    def normal_form(self) -> np.ndarray:
        return np.diag([self.nu_minus, self.nu_minus, self.nu_plus, self.nu_plus])

    def reconstruct(self) -> np.ndarray:
        return self.s_matrix @ self.normal_form() @ self.s_matrix.T


def williamson_symmetric(cm: SymmetricTwoModeCM) -> WilliamsonDecomposition:
    """Closed-form Williamson decomposition for the ``g = gp`` family.

    The symplectic spectrum is ``{mu - |g|, mu + |g|}`` and the diagonalizing
    symplectic matrix is the constant product of the balanced mode-mixing
    rotation and a per-mode reflection (a mode swap is appended when ``g < 0``
    so that the smaller eigenvalue always comes first).
    """
    if cm.g != cm.gp:
        raise DomainError("closed form requires g == gp")
    ok, violations = check_bona_fide(cm)
    if not ok:
        raise DomainError("not a bona-fide covariance matrix: " + "; ".join(violations))
    if abs(cm.g) > cm.mu - 1.0:
        raise DomainError(
            f"separable-family decomposition requires |g| <= mu - 1, got g={cm.g}"
        )
    s = _SYMMETRIC_DIAGONALIZER
    if cm.g < 0.0:
        s = s @ _MODE_SWAP
    return WilliamsonDecomposition(cm.mu - abs(cm.g), cm.mu + abs(cm.g), s)


def williamson_numeric(cm: np.ndarray | SymmetricTwoModeCM) -> WilliamsonDecomposition:
    """Williamson decomposition of a generic 4x4 covariance matrix.

    The symplectic eigenvalues are the moduli of the eigenvalues of
    ``OMEGA @ V``; the symplectic matrix is assembled from the real Schur
    form of ``V^(-1/2) OMEGA V^(-1/2)``.  Serves as an independent
    cross-check of :func:`williamson_symmetric`.
    """
    v = cm.matrix() if isinstance(cm, SymmetricTwoModeCM) else np.asarray(cm, float)
    if v.shape != (4, 4):
        raise DomainError(f"expected a 4x4 covariance matrix, got shape {v.shape}")
    if not np.allclose(v, v.T, atol=1e-12):
        raise DomainError("covariance matrix must be symmetric")
    try:
        eigvals, eigvecs = np.linalg.eigh(v)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    if eigvals[0] <= 0.0:
        raise DomainError("covariance matrix must be positive definite")

    root = (eigvecs * np.sqrt(eigvals)) @ eigvecs.T
    inv_root = (eigvecs / np.sqrt(eigvals)) @ eigvecs.T
    antisym = inv_root @ OMEGA @ inv_root
    try:
        t, q = schur(antisym, output="real")
    except Exception as exc:  # scipy raises LinAlgError on non-convergence
        raise NumericalError(f"Schur decomposition failed: {exc}") from exc

    # The Schur form of an antisymmetric matrix is block diagonal with
    # blocks b * omega2; orient each block so b > 0, then sort by eigenvalue.
    pairs = []
    for i in (0, 2):
        b = t[i, i + 1]
        cols = q[:, i : i + 2]
        if b < 0.0:
            cols = cols[:, ::-1]
            b = -b
        if b == 0.0:
            raise NumericalError("degenerate symplectic structure in Schur form")
        pairs.append((1.0 / b, cols))
    pairs.sort(key=lambda item: item[0])
    nus = [p[0] for p in pairs]
    basis = np.hstack([p[1] for p in pairs])
    scale = np.diag(
        [1.0 / math.sqrt(nus[0])] * 2 + [1.0 / math.sqrt(nus[1])] * 2
    )
    s = root @ basis @ scale
    return WilliamsonDecomposition(nus[0], nus[1], s)
