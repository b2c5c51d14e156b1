"""Multi-copy error exponents and the asymptotic gain of the global detector.

Over many copies the error probability of either detector decays as
``exp(-kappa * M)`` with ``kappa = -ln Q`` for the corresponding minimized
s-overlap; the gap ``delta = kappa - kappa_loc`` and the ratio in dB quantify
how much the global strategy wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entropy import delta_c, delta_d
from .errors import DomainError
from .global_bounds import qcb_global
from .local_bounds import p_upper_local


@dataclass(frozen=True)
class ExponentReport:
    """Error exponents (in nats) of both detectors at one thermal variance.

    ``ratio`` and ``ratio_db`` are NaN at ``mu = 1`` where both exponents
    vanish; ``ratio_db`` uses the power convention ``10 log10(ratio)``.
    """

    kappa: float
    kappa_loc: float
    delta: float
    ratio: float
    ratio_db: float


def exponents(mu: float) -> ExponentReport:
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    if mu == 1.0:
        return ExponentReport(0.0, 0.0, 0.0, math.nan, math.nan)
    kappa = -math.log(qcb_global(mu).q_value)
    kappa_loc = -math.log(2.0 * p_upper_local(mu).p_upper)
    ratio = kappa / kappa_loc
    return ExponentReport(
        kappa=kappa,
        kappa_loc=kappa_loc,
        delta=kappa - kappa_loc,
        ratio=ratio,
        ratio_db=10.0 * math.log10(ratio),
    )


def multicopy_p_upper(mu: float, copies: int) -> float:
    """Chernoff-type bound ``Q^M / 2`` on the M-copy global error probability."""
    if copies < 1 or int(copies) != copies:
        raise DomainError(f"copy count must be a positive integer, got {copies}")
    return 0.5 * qcb_global(mu).q_value ** int(copies)


@dataclass(frozen=True)
class GainPoint:
    """One row of the asymptotic-gain table."""

    mu: float
    delta_c: float
    delta_d: float
    kappa: float
    kappa_loc: float
    delta: float
    ratio: float
    ratio_db: float


def gain_curves(mu_grid) -> list[GainPoint]:
    """Asymptotic-gain table over a sorted grid of thermal variances > 1."""
    grid = list(mu_grid)
    if not grid:
        raise DomainError("empty grid")
    if any(mu <= 1.0 for mu in grid):
        raise DomainError("gain curves require mu > 1 everywhere")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("grid must be strictly increasing")
    rows = []
    for mu in grid:
        rep = exponents(mu)
        rows.append(
            GainPoint(
                mu=mu,
                delta_c=delta_c(mu),
                delta_d=delta_d(mu),
                kappa=rep.kappa,
                kappa_loc=rep.kappa_loc,
                delta=rep.delta,
                ratio=rep.ratio,
                ratio_db=rep.ratio_db,
            )
        )
    return rows
