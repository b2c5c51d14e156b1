"""Per-point aggregation of every bound, information bracket and exponent."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .entropy import correlation_budget, info_bounds
from .errors import DomainError
from .global_bounds import bhattacharyya_global
from .local_bounds import p_lower_local, p_upper_local

#: CSV column contract: exactly these names, in this order.
REPORT_FIELDS = (
    "mu",
    "delta_c",
    "delta_d",
    "p_plus_global",
    "p_minus_global",
    "p_plus_local",
    "p_minus_local",
    "i_plus_global",
    "i_minus_global",
    "i_plus_local",
    "i_minus_local",
    "kappa",
    "kappa_loc",
    "delta",
    "ratio_db",
)


@dataclass(frozen=True)
class DiscriminationReport:
    """All discrimination quantities at one thermal variance.

    ``i_plus_*``/``i_minus_*`` are the upper/lower mutual-information bounds
    induced by the corresponding error bounds; ``ratio_db`` is NaN at
    ``mu = 1`` where the exponent ratio is undefined.
    """

    mu: float
    delta_c: float
    delta_d: float
    p_plus_global: float
    p_minus_global: float
    p_plus_local: float
    p_minus_local: float
    i_plus_global: float
    i_minus_global: float
    i_plus_local: float
    i_minus_local: float
    kappa: float
    kappa_loc: float
    delta: float
    ratio_db: float

    def as_row(self) -> list[float]:
        return [getattr(self, name) for name in REPORT_FIELDS]


assert tuple(f.name for f in fields(DiscriminationReport)) == REPORT_FIELDS


def discrimination_report(mu: float) -> DiscriminationReport:
    if mu < 1.0:
        raise DomainError(f"thermal variance must satisfy mu >= 1, got {mu}")
    budget = correlation_budget(mu)
    glob = bhattacharyya_global(mu)
    loc_up = p_upper_local(mu).p_upper
    loc_lo = p_lower_local(mu)
    ig_lower, ig_upper = info_bounds(glob.p_upper, glob.p_lower)
    il_lower, il_upper = info_bounds(loc_up, loc_lo)
    if mu == 1.0:
        kappa = kappa_loc = 0.0
        ratio_db = math.nan
    else:
        kappa = -math.log(2.0 * glob.p_upper)
        kappa_loc = -math.log(2.0 * loc_up)
        ratio_db = 10.0 * math.log10(kappa / kappa_loc)
    return DiscriminationReport(
        mu=mu,
        delta_c=budget.delta_c,
        delta_d=budget.delta_d,
        p_plus_global=glob.p_upper,
        p_minus_global=glob.p_lower,
        p_plus_local=loc_up,
        p_minus_local=loc_lo,
        i_plus_global=ig_upper,
        i_minus_global=ig_lower,
        i_plus_local=il_upper,
        i_minus_local=il_lower,
        kappa=kappa,
        kappa_loc=kappa_loc,
        delta=kappa - kappa_loc,
        ratio_db=ratio_db,
    )


def report_violations(report: DiscriminationReport, slack: float = 1e-12) -> list[str]:
    """Cross-bound ordering checks; an empty list means the row is consistent."""
    r = report
    checks = [
        (r.p_minus_global <= r.p_plus_global + slack, "p_minus_global <= p_plus_global"),
        (r.p_plus_global <= 0.5 + slack, "p_plus_global <= 1/2"),
        (r.p_minus_local <= r.p_plus_local + slack, "p_minus_local <= p_plus_local"),
        (r.p_plus_local <= 0.5 + slack, "p_plus_local <= 1/2"),
        (r.p_plus_global <= r.p_plus_local + slack, "p_plus_global <= p_plus_local"),
        (r.p_minus_global <= r.p_minus_local + slack, "p_minus_global <= p_minus_local"),
        (r.i_minus_global <= r.i_plus_global + slack, "i_minus_global <= i_plus_global"),
        (r.i_minus_local <= r.i_plus_local + slack, "i_minus_local <= i_plus_local"),
        (r.i_minus_local <= r.i_minus_global + slack, "i_minus_local <= i_minus_global"),
        (r.i_plus_local <= r.i_plus_global + slack, "i_plus_local <= i_plus_global"),
        (-slack <= r.i_minus_global and r.i_plus_global <= 1.0 + slack, "global info in [0, 1]"),
        (-slack <= r.i_minus_local and r.i_plus_local <= 1.0 + slack, "local info in [0, 1]"),
        (r.kappa >= r.kappa_loc - slack, "kappa >= kappa_loc"),
        (abs(r.delta - (r.kappa - r.kappa_loc)) <= slack, "delta = kappa - kappa_loc"),
    ]
    return [label for ok, label in checks if not ok]
