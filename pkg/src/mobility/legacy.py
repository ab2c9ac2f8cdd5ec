"""Mobility indices from the existing literature.

Statistical indices (one minus the OLS slope, one minus the correlation),
the Fields-Ok distance indices, Shorrocks' inequality-based index, and the
directional indices of Ray-Genicot and Barcena-Canto.

The statistical indices act on whatever status the profile carries; pass a
log-transformed profile to get the usual log-income versions. The others
take income directly.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    BadAlpha,
    DegenerateOrigin,
    DegenerateVariance,
    NonPositiveForLog,
    NonPositiveIncome,
    NonPositiveOrigin,
    ZeroDenominator,
)
from .inequality import generalized_entropy, gini
from .profile import as_profile

__all__ = [
    "elasticity_mobility",
    "pearson_mobility",
    "fields_ok",
    "shorrocks",
    "ray_genicot",
    "barcena_canto",
]


def elasticity_mobility(p):
    """``1 - beta`` where beta is the OLS slope of ``v`` on ``u``."""
    p = as_profile(p)
    du = p.u - p.u.mean()
    dv = p.v - p.v.mean()
    var_u = np.mean(du * du)
    if var_u == 0:
        raise DegenerateOrigin("period-0 status has zero variance")
    return float(1.0 - np.mean(du * dv) / var_u)


def pearson_mobility(p):
    """``1 - rho`` with rho the Pearson correlation of ``u`` and ``v``."""
    p = as_profile(p)
    du = p.u - p.u.mean()
    dv = p.v - p.v.mean()
    suu = np.sum(du * du)
    svv = np.sum(dv * dv)
    if suu == 0 or svv == 0:
        raise DegenerateVariance("correlation undefined when a period has zero variance")
    return float(1.0 - np.sum(du * dv) / np.sqrt(suu * svv))


def fields_ok(p, variant="income"):
    """Mean absolute change in income (``FO1``) or in log income (``FO2``)."""
    p = as_profile(p)
    if variant == "income":
        return float(np.mean(np.abs(p.v - p.u)))
    if variant != "log":
        raise ValueError(f"unknown Fields-Ok variant {variant!r}")
    if np.any(p.u <= 0) or np.any(p.v <= 0):
        raise NonPositiveForLog("FO2 needs strictly positive incomes")
    return float(np.mean(np.abs(np.log(p.v) - np.log(p.u))))


_INEQUALITY = {
    "theil": lambda y: generalized_entropy(y, 1),
    "gini": lambda y: gini(y, "relative"),
}


def shorrocks(p, inequality="theil"):
    """Shorrocks index: one minus pooled inequality over mean-weighted period inequality.

    ``inequality`` is ``"theil"`` or ``"gini"`` (relative), or any callable
    mapping an income vector to a number.
    """
    p = as_profile(p)
    I = _INEQUALITY[inequality.lower()] if isinstance(inequality, str) else inequality
    if np.any(p.u <= 0) or np.any(p.v <= 0):
        raise NonPositiveIncome("Shorrocks index needs strictly positive incomes")
    pooled = p.u + p.v
    mu0, mu1, mu01 = p.u.mean(), p.v.mean(), pooled.mean()
    denom = (mu0 / mu01) * I(p.u) + (mu1 / mu01) * I(p.v)
    if denom == 0:
        raise ZeroDenominator("both periods are perfectly equal")
    return float(1.0 - I(pooled) / denom)


def ray_genicot(p, variant="absolute", alpha=1.0):
    """Ray-Genicot upward mobility, absolute (``RG1``) or relative (``RG2``)."""
    p = as_profile(p)
    if not alpha > 0:
        raise BadAlpha(f"Ray-Genicot needs alpha > 0, got {alpha}")
    if np.any(p.u <= 0) or np.any(p.v <= 0):
        raise NonPositiveIncome("Ray-Genicot indices need strictly positive incomes")
    # ratio of power means computed in logs to avoid overflow for large alpha
    lu = np.log(p.u)
    lv = np.log(p.v)
    rg1 = -(_logsumexp(-alpha * lv) - _logsumexp(-alpha * lu)) / alpha
    if variant == "absolute":
        return float(rg1)
    if variant != "relative":
        raise ValueError(f"unknown Ray-Genicot variant {variant!r}")
    return float(rg1 + np.log(p.u.sum() / p.v.sum()))


def _logsumexp(a):
    m = a.max()
    return m + np.log(np.sum(np.exp(a - m)))


def barcena_canto(p, direction="down", alpha=1.0):
    """Barcena-Canto downward or upward mobility.

    ``(1/n)`` times the sum, over people moving in the chosen direction, of
    their proportional change raised to ``alpha``. People whose status is
    unchanged belong to neither set, so ``alpha = 0`` counts movers.
    """
    p = as_profile(p)
    if not alpha >= 0:
        raise BadAlpha(f"Barcena-Canto needs alpha >= 0, got {alpha}")
    if direction == "down":
        movers = p.v < p.u
        change = p.u - p.v
    elif direction == "up":
        movers = p.v > p.u
        change = p.v - p.u
    else:
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    if np.any(p.u[movers] <= 0):
        raise NonPositiveOrigin("movers need strictly positive period-0 income")
    rel = change[movers] / p.u[movers]
    return float(np.sum(rel**alpha) / p.n)
