"""Class-2 mobility measures: rank-weighted averages of status differences.

Each person's movement is summarised by a distance ``d_i`` (absolute,
scale-normalised or translation-normalised). Distances are sorted in
ascending order and averaged with positional weights that are negative for
the ``n*p`` largest falls and positive for the rest, where ``p`` is the
share of people moving down.

``gamma = 0`` gives binary +/-1 weights, which turns the absolute measure
into the mean absolute change. Odd ``gamma >= 1`` gives power weights
``(i/n - p - 1/(2n))**gamma``; ``gamma = 1`` links the measure to the Gini
coefficient of the distances.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .decomposition import Component, DecompositionResult
from .errors import (
    DegeneratePartition,
    EvenGamma,
    NegativeGamma,
    ParameterError,
    ZeroMean,
)
from .inequality import gini
from .profile import as_profile

__all__ = [
    "DistanceConcept",
    "PMode",
    "WeightScheme",
    "check_gamma",
    "distances",
    "downward_share",
    "weights",
    "gamma_measure",
    "a2",
    "s2",
    "t2",
    "gini_of_differences",
    "linear_aggregate",
    "decompose_updown",
    "rank_matched_origin",
    "decompose_seg",
]


class DistanceConcept(str, Enum):
    """How a single history is turned into a distance."""

    ABSOLUTE = "absolute"
    SCALE = "scale"
    TRANSLATION = "translation"

    @classmethod
    def _missing_(cls, value):
        aliases = {"a": cls.ABSOLUTE, "s": cls.SCALE, "t": cls.TRANSLATION}
        if isinstance(value, str):
            return aliases.get(value.lower())
        return None


class PMode(str, Enum):
    """Whether the downward share counts negative distances or falls in status."""

    DISTANCE = "distance"
    STATUS = "status"


def check_gamma(gamma) -> int:
    """Validate a positional-weight exponent; returns it as ``int``.

    Allowed values are ``0`` and odd positive integers.

    Raises
    ------
    NegativeGamma, EvenGamma, ParameterError
    """
    if isinstance(gamma, bool) or not isinstance(gamma, numbers.Real):
        raise ParameterError(f"gamma must be an integer, got {gamma!r}")
    if gamma != int(gamma):
        raise ParameterError(f"gamma must be an integer, got {gamma}")
    gamma = int(gamma)
    if gamma < 0:
        raise NegativeGamma(f"gamma must be non-negative, got {gamma}")
    if gamma > 0 and gamma % 2 == 0:
        raise EvenGamma(f"gamma must be 0 or odd, got {gamma}")
    return gamma


@dataclass(frozen=True)
class WeightScheme:
    """Positional weights: exponent ``gamma`` and the rule used to count ``p``."""

    gamma: int = 1
    p_mode: PMode = PMode.DISTANCE

    def __post_init__(self):
        object.__setattr__(self, "gamma", check_gamma(self.gamma))
        object.__setattr__(self, "p_mode", PMode(self.p_mode))


# -- array-level helpers (no profile validation, so groups may be singletons)


def _snap(d, scale):
    # differences of mean-normalised quantities leave rounding noise where
    # the exact answer is zero; noise would otherwise flip the sign count
    d = np.asarray(d, dtype=float)
    d[np.abs(d) <= 16 * np.finfo(float).eps * scale] = 0.0
    return d


def _distances(u, v, concept):
    if concept is DistanceConcept.ABSOLUTE:
        return v - u
    mu_u, mu_v = u.mean(), v.mean()
    if concept is DistanceConcept.SCALE:
        if mu_u == 0 or mu_v == 0:
            raise ZeroMean("scale-normalised distance needs nonzero means")
        a, b = v / mu_v, u / mu_u
        return _snap(a - b, np.abs(a) + np.abs(b))
    a, b = v - u, np.full_like(u, mu_v - mu_u)
    return _snap(a - b, np.abs(v) + np.abs(u) + abs(mu_v) + abs(mu_u))


def _share_down(u, v, d, p_mode):
    if p_mode is PMode.STATUS:
        return int(np.count_nonzero(v < u))
    return int(np.count_nonzero(d < 0))


def _weights_k(n, k, gamma):
    i = np.arange(1, n + 1, dtype=float)
    if gamma == 0:
        return np.where(i <= k, -1.0, 1.0)
    return ((2.0 * i - 2.0 * k - 1.0) / (2.0 * n)) ** gamma


def _measure_parts(u, v, concept, gamma, p_mode):
    d = _distances(u, v, concept)
    k = _share_down(u, v, d, p_mode)
    ds = np.sort(d, kind="stable")
    return ds, _weights_k(d.size, k, gamma), k


def _measure(u, v, concept, gamma, p_mode):
    ds, a, _ = _measure_parts(u, v, concept, gamma, p_mode)
    return float(np.mean(a * ds))


def _scheme(w, gamma, p_mode):
    if w is None:
        return WeightScheme(gamma, p_mode)
    if isinstance(w, WeightScheme):
        return w
    return WeightScheme(w, p_mode)


# -- public API ------------------------------------------------------------


def distances(p, concept="absolute"):
    """Per-person distances in the original order.

    Examples
    --------
    >>> distances(([10, 20, 40], [20, 40, 80])).tolist()
    [10.0, 20.0, 40.0]
    """
    p = as_profile(p)
    return _distances(p.u, p.v, DistanceConcept(concept))


def downward_share(p, concept="absolute", p_mode="distance"):
    """Share of people counted as moving down."""
    p = as_profile(p)
    concept = DistanceConcept(concept)
    d = _distances(p.u, p.v, concept)
    return _share_down(p.u, p.v, d, PMode(p_mode)) / p.n


def weights(n, p, gamma):
    """Positional weights for ``n`` ascending distances with downward share ``p``.

    ``n * p`` must be a whole number (it is a head count).

    Examples
    --------
    >>> weights(4, 0.5, 0).tolist()
    [-1.0, -1.0, 1.0, 1.0]
    """
    gamma = check_gamma(gamma)
    if not 0 <= p <= 1:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    k = round(n * p)
    if abs(n * p - k) > 1e-9:
        raise ParameterError(f"n*p must be an integer count, got {n * p}")
    return _weights_k(int(n), int(k), gamma)


def gamma_measure(p, concept="absolute", w=None, *, gamma=1, p_mode="distance"):
    """Class-2 mobility ``(1/n) sum_i a_i d_(i)``.

    Parameters
    ----------
    p : MovementProfile or (u, v)
    concept : DistanceConcept or str
        ``"absolute"``, ``"scale"`` or ``"translation"``.
    w : WeightScheme or int, optional
        Overrides ``gamma`` and ``p_mode`` when given.
    gamma : int
        0 or an odd positive integer.
    p_mode : {"distance", "status"}
        Count downward movers by the sign of the distance (default) or by
        a fall in status.
    """
    p = as_profile(p)
    w = _scheme(w, gamma, p_mode)
    return _measure(p.u, p.v, DistanceConcept(concept), w.gamma, w.p_mode)


def a2(p, gamma=1, p_mode="distance"):
    """Absolute class-2 mobility."""
    return gamma_measure(p, "absolute", gamma=gamma, p_mode=p_mode)


def s2(p, gamma=1, p_mode="distance"):
    """Scale-independent class-2 mobility."""
    return gamma_measure(p, "scale", gamma=gamma, p_mode=p_mode)


def t2(p, gamma=1, p_mode="distance"):
    """Translation-independent class-2 mobility."""
    return gamma_measure(p, "translation", gamma=gamma, p_mode=p_mode)


def gini_of_differences(p, concept="absolute"):
    """Absolute Gini coefficient of the distances."""
    return gini(distances(p, concept), "absolute")


def linear_aggregate(p, w):
    """``(1/n) sum_i w_i (v_i - u_i)`` with person-specific weights, unsorted."""
    p = as_profile(p)
    w = np.asarray(w, dtype=float)
    return float(np.mean(w * (p.v - p.u)))


def decompose_updown(p, concept="absolute", w=None, *, gamma=1, p_mode="distance"):
    """Split class-2 mobility into downward movers, the rest, and a between term.

    Components ``"down"`` and ``"up"`` carry weights ``p**(gamma+1)`` and
    ``(1-p)**(gamma+1)``; each value is the measure computed inside the
    group, with distances normalised by the group's own means. ``between``
    compares the population's sorted distances with the group-wise ones.

    With distance-counted ``p`` and a normalised concept the algebra only
    closes at ``gamma = 1``; other odd ``gamma`` raise ``ParameterError``.

    Raises
    ------
    DegeneratePartition
        If nobody, or everybody, moves down.
    """
    p = as_profile(p)
    concept = DistanceConcept(concept)
    w = _scheme(w, gamma, p_mode)
    if w.gamma == 0:
        raise ParameterError("up/down decomposition needs gamma >= 1")
    if w.p_mode is PMode.DISTANCE and concept is not DistanceConcept.ABSOLUTE and w.gamma != 1:
        raise ParameterError(
            "with distance-counted p the up/down split of a normalised concept needs gamma = 1"
        )
    ds, a, k = _measure_parts(p.u, p.v, concept, w.gamma, w.p_mode)
    n = p.n
    if k in (0, n):
        raise DegeneratePartition("up/down split needs movers on both sides")
    d = _distances(p.u, p.v, concept)
    down = (p.v < p.u) if w.p_mode is PMode.STATUS else (d < 0)
    share = k / n

    groups = {}
    sorted_parts = []
    for label, mask, wt in (("down", down, share), ("up", ~down, 1.0 - share)):
        gu, gv = p.u[mask], p.v[mask]
        gd = np.sort(_distances(gu, gv, concept), kind="stable")
        groups[label] = Component(wt ** (w.gamma + 1), _measure(gu, gv, concept, w.gamma, w.p_mode))
        sorted_parts.append(gd)
    d_du = np.concatenate(sorted_parts)
    between = float(np.mean(a * (ds - d_du)))
    return DecompositionResult(
        groups,
        between,
        float(np.mean(a * ds)),
        method="updown",
        extra={"p": share},
    )


def rank_matched_origin(p):
    """Origin status rearranged so that its ranking matches the destination.

    The k-th smallest origin value is placed where the destination holds
    its k-th smallest value (ties in the destination broken by position).
    """
    p = as_profile(p)
    out = np.empty_like(p.u)
    out[np.argsort(p.v, kind="stable")] = np.sort(p.u, kind="stable")
    return out


def decompose_seg(p, concept="absolute", w=None, *, gamma=1, p_mode="distance"):
    """Split class-2 mobility into structural, exchange and growth parts.

    Mobility from ``u`` to ``v`` is routed through ``u'``, the origin values
    re-ordered to follow the destination ranking:

    * structural: the measure from ``u'`` to ``v`` (no re-ranking);
    * exchange: the sorted distance change caused by re-ranking, weighted
      with the ``u'`` weights;
    * growth: the change in weights applied to the actual distances. At
      ``gamma = 1`` this is ``(p' - p) * mean(d)``, zero for the normalised
      concepts.

    ``gamma = 1`` is the usual setting; ``gamma = 0`` is also accepted and
    gives the corresponding split of the mean absolute change.
    """
    p = as_profile(p)
    concept = DistanceConcept(concept)
    w = _scheme(w, gamma, p_mode)
    u_prime = rank_matched_origin(p)
    ds, a, k = _measure_parts(p.u, p.v, concept, w.gamma, w.p_mode)
    dps, ap, kp = _measure_parts(u_prime, p.v, concept, w.gamma, w.p_mode)
    structural = float(np.mean(ap * dps))
    exchange = float(np.mean(ap * (ds - dps)))
    growth = float(np.mean((a - ap) * ds))
    comps = {
        "structural": Component(1.0, structural),
        "exchange": Component(1.0, exchange),
        "growth": Component(1.0, growth),
    }
    return DecompositionResult(
        comps,
        0.0,
        float(np.mean(a * ds)),
        method="seg",
        extra={"p": k / p.n, "p_prime": kp / p.n},
    )
