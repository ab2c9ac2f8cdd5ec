"""Inequality indices, and the reduction of mobility measures to them.

If everyone ends up at the origin mean (``v_i = mean(u)`` for all ``i``),
each mobility measure in this package becomes a familiar inequality index
of the origin distribution. :func:`reduce_mobility` builds that profile and
evaluates a measure on it.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, ZeroMean

__all__ = [
    "generalized_entropy",
    "kolm_family",
    "gini",
    "extended_gini",
    "mean_absolute_deviation",
    "mean_absolute_log_deviation",
    "reduce_mobility",
    "equal_destination",
]


def _values(x):
    x = np.asarray(x, dtype=float).ravel()
    if x.size < 1:
        raise DomainError("empty distribution")
    if not np.all(np.isfinite(x)):
        raise DomainError("values must be finite")
    return x


def generalized_entropy(x, alpha):
    """Generalised entropy index GE(alpha).

    ``alpha = 0`` is the mean logarithmic deviation and ``alpha = 1`` the
    Theil index. All values must be strictly positive.
    """
    x = _values(x)
    if np.any(x <= 0):
        raise DomainError("generalised entropy needs strictly positive values")
    s = x / x.mean()
    if alpha == 0:
        return float(-np.mean(np.log(s)))
    if alpha == 1:
        return float(np.mean(s * np.log(s)))
    return float(np.mean(s**alpha - 1.0) / (alpha * (alpha - 1.0)))


def kolm_family(x, alpha, variance_convention="population"):
    """Translation-invariant (Kolm-type) index.

    For ``alpha != 0``: ``mean(exp(alpha*(x - mu)) - 1) / alpha**2``; for
    ``alpha = 0`` half the variance, population (``n``) or sample (``n-1``)
    denominator.
    """
    x = _values(x)
    t = x - x.mean()
    if alpha == 0:
        return 0.5 * float(np.var(t, ddof=_ddof(variance_convention)))
    # subtracting alpha*t changes nothing in exact arithmetic (sum t = 0)
    # but keeps the small-alpha limit accurate
    return float(np.mean(_expm1mx(alpha * t)) / alpha**2)


def _expm1mx(x):
    """``exp(x) - 1 - x`` without cancellation for small ``|x|``."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 0.5
    out = np.expm1(x) - x
    xs = x[small]
    term = xs * xs / 2.0
    acc = term.copy()
    for k in range(3, 24):
        term = term * xs / k
        acc += term
    out[small] = acc
    return out


def _ddof(convention):
    if convention in ("population", "n", 0):
        return 0
    if convention in ("sample", "n-1", 1):
        return 1
    raise ValueError(f"unknown variance convention {convention!r}")


def gini(x, variant="relative"):
    """Gini coefficient, ``(1/(2 n^2)) sum_ij |x_i - x_j|`` (absolute).

    The relative version divides by the mean.
    """
    x = np.sort(_values(x))
    n = x.size
    i = np.arange(1, n + 1)
    g = float(np.sum((2.0 * i - n - 1.0) * x) / n**2)
    if variant == "absolute":
        return g
    if variant != "relative":
        raise ValueError(f"unknown Gini variant {variant!r}")
    mu = x.mean()
    if mu == 0:
        raise ZeroMean("relative Gini undefined for zero mean")
    return g / mu


def extended_gini(x, gamma, variant="absolute"):
    """Extended Gini with power-``gamma`` positional weights.

    Computes ``(1/n) sum_i c_i x_(i)`` over ascending ``x`` with
    ``c_i = a_i**gamma - mean(a**gamma)`` and ``a_i = i/n - q - 1/(2n)``,
    where ``q`` is the share of values at or below the mean. This is exactly
    the class-2 absolute measure of the profile that moves everyone to the
    mean; at ``gamma = 1`` it equals half the absolute Gini.
    """
    from .class2 import check_gamma

    gamma = check_gamma(gamma)
    if gamma == 0:
        raise DomainError("extended Gini needs gamma >= 1")
    x = np.sort(_values(x))
    n = x.size
    mu = x.mean()
    k = int(np.sum(x <= mu))
    i = np.arange(1, n + 1)
    a = ((2.0 * i - 2.0 * k - 1.0) / (2.0 * n)) ** gamma
    c = a - a.mean()
    g = float(np.mean(c * x))
    if variant == "absolute":
        return g
    if variant != "relative":
        raise ValueError(f"unknown variant {variant!r}")
    if mu == 0:
        raise ZeroMean("relative extended Gini undefined for zero mean")
    return g / mu


def mean_absolute_deviation(x):
    x = _values(x)
    return float(np.mean(np.abs(x - x.mean())))


def mean_absolute_log_deviation(x):
    """``mean |log(mu) - log(x_i)|`` for strictly positive ``x``."""
    x = _values(x)
    if np.any(x <= 0):
        raise DomainError("log deviation needs strictly positive values")
    return float(np.mean(np.abs(np.log(x.mean()) - np.log(x))))


def equal_destination(x):
    """Profile with origin ``x`` and everyone at the origin mean afterwards."""
    from .profile import MovementProfile

    x = _values(x)
    return MovementProfile(x, np.full_like(x, x.mean()))


def reduce_mobility(x, spec):
    """Evaluate a mobility measure on the equal-destination profile of ``x``.

    ``spec`` is a :class:`~mobility.measures.MeasureSpec` or a measure id.
    """
    from .measures import MeasureSpec, evaluate

    if isinstance(spec, str):
        spec = MeasureSpec(spec)
    return evaluate(spec, equal_destination(x))
