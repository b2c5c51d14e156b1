"""Brute-force validation in a truncated Fock basis.

Density operators are plain ndarrays over the number basis (dimension
``cutoff`` for one mode, ``cutoff**2`` for two).  None of the constructors
renormalize: the missing trace is the signal that a cutoff is too small, and
every builder raises :class:`ConvergenceError` when the loss exceeds the
configured tolerance.

The correlated encoded state is realized as a Gauss-Hermite discretized
mixture of identical coherent pairs, which certifies its separability by
construction; with the displacement variance chosen below its covariance
matrix is the symmetric normal form with correlations at the separable edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import ConvergenceError, DomainError, NumericalError

#: eigenvalues below this are treated as exact zeros of the finite-rank
#: construction (fractional powers would otherwise amplify solver noise)
EIG_CLAMP = 1e-12
#: anything more negative than this is not eigensolver noise
EIG_FLOOR = -1e-10
#: accepted change of an overlap when the cutoff is doubled
DOUBLING_TOL = 1e-6


@dataclass(frozen=True)
class FockConfig:
    """Truncation and discretization parameters for the oracle."""

    cutoff: int
    modulation_nodes: int = 16
    convergence_tol: float = 1e-6

    def __post_init__(self) -> None:
        if self.cutoff < 4:
            raise DomainError(f"cutoff must be at least 4, got {self.cutoff}")
        if self.modulation_nodes < 8:
            raise DomainError(
                f"need at least 8 modulation nodes, got {self.modulation_nodes}"
            )
        if self.convergence_tol <= 0.0:
            raise DomainError("convergence tolerance must be positive")


def destroy(cutoff: int) -> np.ndarray:
    """Annihilation operator on the truncated number basis."""
    return np.diag(np.sqrt(np.arange(1.0, cutoff)), 1)


def coherent_state(alpha: complex, cutoff: int) -> np.ndarray:
    """Number-basis amplitudes of a coherent state (recursively, stable)."""
    amps = np.empty(cutoff, complex)
    amps[0] = math.exp(-abs(alpha) ** 2 / 2.0)
    if cutoff > 1:
        amps[1:] = amps[0] * np.cumprod(alpha / np.sqrt(np.arange(1.0, cutoff)))
    return amps


def build_thermal(n_bar: float, config: FockConfig) -> np.ndarray:
    """Truncated thermal state; diagonal, deliberately not renormalized."""
    if n_bar < 0.0:
        raise DomainError(f"mean photon number must be nonnegative, got {n_bar}")
    if n_bar == 0.0:
        diag = np.zeros(config.cutoff)
        diag[0] = 1.0
    else:
        ratio = n_bar / (n_bar + 1.0)
        diag = (1.0 / (n_bar + 1.0)) * ratio ** np.arange(config.cutoff)
    trace = float(diag.sum())
    if trace < 1.0 - config.convergence_tol:
        raise ConvergenceError(
            f"thermal state lost {1.0 - trace:.2e} of trace at cutoff {config.cutoff}"
        )
    return np.diag(diag)


def build_thermal_product(mu: float, config: FockConfig) -> np.ndarray:
    """Two identical uncorrelated thermal modes with variance ``mu``."""
    single = build_thermal((mu - 1.0) / 2.0, config)
    return np.kron(single, single)


def build_correlated(mu: float, config: FockConfig) -> np.ndarray:
    """Maximally correlated separable state as a coherent-pair mixture.

    Both modes receive the same random displacement; each quadrature mean is
    modulated with variance ``mu - 1``, i.e. the real and imaginary parts of
    the coherent amplitude (with ``x = a + a^dag``, so the mean of x is
    ``2 Re alpha``) carry variance ``(mu - 1) / 4`` each.  The resulting
    covariance matrix is the symmetric normal form with correlations
    ``mu - 1`` on both quadratures.
    """
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    cutoff, nodes = config.cutoff, config.modulation_nodes
    t, w = np.polynomial.hermite_e.hermegauss(nodes)
    w = w / w.sum()
    amp = math.sqrt((mu - 1.0) / 4.0) * t
    dim = cutoff * cutoff
    vectors = np.empty((dim, nodes * nodes), complex)
    weights = np.empty(nodes * nodes)
    k = 0
    for i, re in enumerate(amp):
        for j, im in enumerate(amp):
            single = coherent_state(re + 1j * im, cutoff)
            vectors[:, k] = np.kron(single, single)
            weights[k] = w[i] * w[j]
            k += 1
    rho = (vectors * weights) @ vectors.conj().T
    # conjugate node pairs carry equal weight, so the matrix is real
    rho = rho.real
    trace = float(np.trace(rho))
    if trace < 1.0 - config.convergence_tol:
        raise ConvergenceError(
            f"correlated state lost {1.0 - trace:.2e} of trace at cutoff {cutoff}"
        )
    return rho


def displaced_thermal(n_bar: float, mean, cutoff: int, tol: float = 1e-6) -> np.ndarray:
    """Thermal state displaced to the given quadrature mean ``(x, p)``."""
    mean = np.asarray(mean, float)
    alpha = (mean[0] + 1j * mean[1]) / 2.0
    if n_bar == 0.0:
        vec = coherent_state(alpha, cutoff)
        rho = np.outer(vec, vec.conj())
    else:
        base = build_thermal(n_bar, FockConfig(cutoff, convergence_tol=tol))
        op = expm(alpha * destroy(cutoff).T - np.conj(alpha) * destroy(cutoff))
        rho = op @ base @ op.conj().T
    trace = float(np.trace(rho).real)
    if trace < 1.0 - tol:
        raise ConvergenceError(
            f"displaced thermal state lost {1.0 - trace:.2e} of trace at cutoff {cutoff}"
        )
    return rho


def _checked_spectrum(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    try:
        eigvals, eigvecs = np.linalg.eigh(rho)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    if eigvals.min() < EIG_FLOOR:
        raise NumericalError(
            f"operator has eigenvalue {eigvals.min():.3e} below {EIG_FLOOR:g}"
        )
    eigvals = np.where(eigvals < EIG_CLAMP, 0.0, eigvals)
    return eigvals, eigvecs


def _fractional_power(rho: np.ndarray, power: float) -> np.ndarray:
    eigvals, eigvecs = _checked_spectrum(rho)
    with np.errstate(divide="ignore"):
        scaled = np.where(eigvals > 0.0, eigvals**power, 0.0)
    return (eigvecs * scaled) @ eigvecs.conj().T


def oracle_s_overlap(rho0: np.ndarray, rho1: np.ndarray, s: float) -> float:
    """Tr(rho0^s rho1^(1-s)) by direct eigendecomposition of both operators."""
    if not 0.0 < s < 1.0:
        raise DomainError(f"order parameter must satisfy 0 < s < 1, got {s}")
    a = _fractional_power(rho0, s)
    b = _fractional_power(rho1, 1.0 - s)
    return float(np.sum(a * b.T).real)


def oracle_fidelity(rho_a: np.ndarray, rho_b: np.ndarray) -> float:
    """Uhlmann fidelity ``(Tr sqrt(sqrt(a) b sqrt(a)))^2``."""
    root = _fractional_power(rho_a, 0.5)
    inner = root @ rho_b @ root
    try:
        eigvals = np.linalg.eigvalsh(inner)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    return float(np.sum(np.sqrt(np.clip(eigvals, 0.0, None))) ** 2)


def s_overlap_curve(mu: float, s_values, config: FockConfig) -> dict[float, float]:
    """Oracle overlaps of the encoded pair for several orders at one cutoff.

    Shares a single eigendecomposition of the correlated state across all
    requested orders; the uncorrelated state is diagonal, so each order costs
    one matrix-vector contraction.
    """
    thermal_diag = np.diag(build_thermal_product(mu, config)).copy()
    rho1 = build_correlated(mu, config)
    eigvals, eigvecs = _checked_spectrum(rho1)
    weights = eigvecs**2  # real symmetric by construction
    out = {}
    for s in s_values:
        if not 0.0 < s < 1.0:
            raise DomainError(f"order parameter must satisfy 0 < s < 1, got {s}")
        with np.errstate(divide="ignore"):
            powered = np.where(eigvals > 0.0, eigvals ** (1.0 - s), 0.0)
        diag_of_power = weights @ powered
        out[float(s)] = float(thermal_diag**s @ diag_of_power)
    return out


def s_overlap_converged(mu: float, s_values, config: FockConfig) -> dict[float, float]:
    """Oracle overlaps validated by the cutoff-doubling protocol.

    Computes the curve at the configured cutoff and at twice that cutoff and
    requires every overlap to move by less than ``DOUBLING_TOL``; returns the
    doubled-cutoff values.
    """
    coarse = s_overlap_curve(mu, s_values, config)
    fine_config = FockConfig(
        2 * config.cutoff, config.modulation_nodes, config.convergence_tol
    )
    fine = s_overlap_curve(mu, s_values, fine_config)
    for s, value in fine.items():
        drift = abs(value - coarse[s])
        if drift >= DOUBLING_TOL:
            raise ConvergenceError(
                f"overlap at s={s} moved by {drift:.2e} when doubling the cutoff"
            )
    return fine


def quadrature_moments(rho: np.ndarray, n_modes: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Mean vector and covariance matrix extracted from a Fock-basis state.

    Uses ``x = a + a^dag`` and ``p = -i (a - a^dag)`` so the vacuum
    covariance is the identity.
    """
    dim = rho.shape[0]
    if n_modes == 1:
        cutoff = dim
    elif n_modes == 2:
        cutoff = round(math.isqrt(dim))
        if cutoff * cutoff != dim:
            raise DomainError(f"dimension {dim} is not a square")
    else:
        raise DomainError("only one- and two-mode states are supported")
    a = destroy(cutoff)
    x = a + a.T
    p = -1j * (a - a.T)
    eye = np.eye(cutoff)
    if n_modes == 1:
        ops = [x, p]
    else:
        ops = [np.kron(x, eye), np.kron(p, eye), np.kron(eye, x), np.kron(eye, p)]
    mean = np.array([float(np.trace(rho @ op).real) for op in ops])
    cm = np.empty((len(ops), len(ops)))
    for i, op_i in enumerate(ops):
        for j, op_j in enumerate(ops):
            sym = 0.5 * np.trace(rho @ (op_i @ op_j + op_j @ op_i)).real
            cm[i, j] = sym - mean[i] * mean[j]
    return mean, cm


def partial_trace(rho: np.ndarray, keep: int) -> np.ndarray:
    """Reduced state of mode ``keep`` (0 or 1) of a two-mode operator."""
    dim = rho.shape[0]
    cutoff = round(math.isqrt(dim))
    if cutoff * cutoff != dim:
        raise DomainError(f"dimension {dim} is not a square")
    tensor = rho.reshape(cutoff, cutoff, cutoff, cutoff)
    if keep == 0:
        return np.einsum("ijkj->ik", tensor)
    if keep == 1:
        return np.einsum("ijil->jl", tensor)
    raise DomainError("keep must be 0 or 1")
