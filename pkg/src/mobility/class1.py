"""Class-1 mobility measures: power-function aggregates of histories.

Four families share one sensitivity parameter ``alpha``:

* :func:`a1` absolute, unchanged only by no movement at all;
* :func:`s1` scale-independent (status measured relative to each period's mean);
* :func:`t1` translation-independent (status measured as a gap from the mean);
* :func:`intermediate`, which shifts status by ``c`` before applying ``s1``
  and moves from ``s1`` (``c = 0``) towards ``t1`` (``c -> inf``).

High positive ``alpha`` weights downward movement more heavily, negative
``alpha`` upward movement. The functions here accept positive status only
where logs or non-integer powers appear.
"""

from __future__ import annotations

import math

import numpy as np

from .decomposition import Component, DecompositionResult
from .errors import BadAlphaTilde, DomainError
from .inequality import _ddof, _expm1mx
from .profile import MovementProfile, as_profile

__all__ = [
    "a1",
    "s1",
    "t1",
    "intermediate",
    "alpha_tilde",
    "updown_partition",
    "decompose_a1_subgroups",
    "decompose_s1_subgroups",
    "decompose_t1_subgroups",
    "reverse_profile",
]

from .profile import reverse_profile  # noqa: E402  (re-exported)


def _positive(u, v, what):
    if np.any(u <= 0) or np.any(v <= 0):
        raise DomainError(f"{what} needs strictly positive status")


def _a1(u, v, alpha):
    _positive(u, v, "A1")
    m = np.log(u) - np.log(v)
    if alpha == 0:
        return float(-np.mean(v * m))
    mu_u, mu_v = u.mean(), v.mean()
    if alpha == 1:
        if math.isclose(mu_u, mu_v, rel_tol=1e-12, abs_tol=0.0):
            return float(np.mean(u * m))
        return math.inf
    k = alpha * (alpha - 1.0)
    if alpha <= 0.5:
        return float(np.mean(v * np.expm1(alpha * m)) / k)
    return float(np.mean(u * np.expm1(-(1.0 - alpha) * m)) / k + (mu_u - mu_v) / k)


def _s1(u, v, alpha):
    _positive(u, v, "S1")
    x = u / u.mean()
    y = v / v.mean()
    m = np.log(x) - np.log(y)
    if alpha == 0:
        return float(-np.mean(y * m))
    if alpha == 1:
        return float(np.mean(x * m))
    k = alpha * (alpha - 1.0)
    # the dropped constant sums to zero: mean(y) = mean(x) = 1
    if alpha <= 0.5:
        return float(np.mean(y * np.expm1(alpha * m)) / k)
    return float(np.mean(x * np.expm1(-(1.0 - alpha) * m)) / k)


def _t1(u, v, alpha, ddof=0):
    t = (u - u.mean()) - (v - v.mean())
    if alpha == 0:
        if t.size - ddof <= 0:
            return 0.0
        return 0.5 * float(np.var(t, ddof=ddof))
    return float(np.mean(_expm1mx(alpha * t)) / alpha**2)


def a1(p, alpha=0.0):
    """Absolute class-1 mobility.

    Returns ``math.inf`` for ``alpha = 1`` when the two period means differ,
    where the measure diverges.
    """
    p = as_profile(p)
    return _a1(p.u, p.v, alpha)


def s1(p, alpha=0.0):
    """Scale-independent class-1 mobility.

    Unchanged when either period's status is rescaled by a positive factor.
    Continuous in ``alpha``; the ``alpha = 0`` and ``alpha = 1`` cases are the
    limits of the general formula.

    Examples
    --------
    >>> round(s1(([10, 20, 40], [20, 40, 10]), 0), 3)
    0.396
    """
    p = as_profile(p)
    return _s1(p.u, p.v, alpha)


def t1(p, alpha=0.0, variance_convention="population"):
    """Translation-independent class-1 mobility.

    At ``alpha = 0`` this is half the variance of ``v - u``.
    ``variance_convention`` picks the ``n`` or ``n - 1`` denominator for
    that case only; the default ``"population"`` is the limit of the
    ``alpha != 0`` formula and makes subgroup decomposition exact.
    """
    p = as_profile(p)
    return _t1(p.u, p.v, alpha, _ddof(variance_convention))


def alpha_tilde(c, alpha, gamma):
    """Affine sensitivity schedule ``gamma + alpha * c`` for :func:`intermediate`."""
    return gamma + alpha * c


def intermediate(p, c, alpha_tilde):
    """Class-1 mobility of status shifted by ``c >= 0``.

    ``c = 0`` gives :func:`s1`. With ``alpha_tilde = gamma + alpha * c`` the
    value tends to ``t1(p, alpha)`` as ``c`` grows.
    """
    p = as_profile(p)
    if not c >= 0:
        raise DomainError(f"location parameter c must be non-negative, got {c}")
    if alpha_tilde in (0, 1):
        raise BadAlphaTilde("alpha_tilde must differ from 0 and 1")
    u = p.u + c
    v = p.v + c
    _positive(u, v, "intermediate mobility")
    mu_u, mu_v = u.mean(), v.mean()
    e = alpha_tilde * np.log1p((p.u - p.u.mean()) / mu_u) + (1.0 - alpha_tilde) * np.log1p(
        (p.v - p.v.mean()) / mu_v
    )
    theta = (1.0 + c * c) / (alpha_tilde * alpha_tilde - alpha_tilde)
    return float(theta * np.mean(np.expm1(e)))


# -- decompositions -------------------------------------------------------


def _groups(p, groups):
    groups = np.asarray(groups)
    if groups.shape != (p.n,):
        raise ValueError(f"need one group label per history ({p.n}), got {groups.shape}")
    labels = list(dict.fromkeys(groups.tolist()))
    return [(lab, groups == lab) for lab in labels]


def updown_partition(p):
    """Labels ``"up"`` for ``u_i <= v_i`` and ``"down"`` for ``u_i > v_i``."""
    p = as_profile(p)
    return np.where(p.u <= p.v, "up", "down")


def decompose_a1_subgroups(p, alpha, groups):
    """Absolute class-1 mobility as a population-share weighted sum over groups."""
    p = as_profile(p)
    comps = {}
    for lab, mask in _groups(p, groups):
        comps[lab] = Component(mask.mean(), _a1(p.u[mask], p.v[mask], alpha))
    return DecompositionResult(comps, 0.0, a1(p, alpha), method="subgroup")


def decompose_s1_subgroups(p, alpha, groups):
    """Within/between decomposition of :func:`s1` over arbitrary groups.

    Group ``k`` gets weight ``p_k (mu_uk/mu_u)**alpha (mu_vk/mu_v)**(1-alpha)``
    and value ``s1`` computed inside the group; ``between`` depends on the
    group means alone.
    """
    p = as_profile(p)
    mu_u, mu_v = p.u.mean(), p.v.mean()
    comps = {}
    btw = 0.0
    wsum = 0.0
    for lab, mask in _groups(p, groups):
        share = mask.mean()
        ru = p.u[mask].mean() / mu_u
        rv = p.v[mask].mean() / mu_v
        value = _s1(p.u[mask], p.v[mask], alpha)
        if alpha == 0:
            w = share * rv
            btw -= w * math.log(ru / rv)
        elif alpha == 1:
            w = share * ru
            btw += w * math.log(ru / rv)
        else:
            w = share * ru**alpha * rv ** (1.0 - alpha)
        wsum += w
        comps[lab] = Component(w, value)
    if alpha not in (0, 1):
        btw = (wsum - 1.0) / (alpha * alpha - alpha)
    return DecompositionResult(comps, btw, s1(p, alpha), method="subgroup")


def decompose_t1_subgroups(p, alpha, groups):
    """Within/between decomposition of :func:`t1` (population variance at ``alpha = 0``).

    Weights are ``(n_k/n) exp(alpha (mu_uk - mu_u - mu_vk + mu_v))``.
    """
    p = as_profile(p)
    mu_u, mu_v = p.u.mean(), p.v.mean()
    mu_d = mu_v - mu_u
    comps = {}
    wsum = 0.0
    wmd2 = 0.0
    for lab, mask in _groups(p, groups):
        gu, gv = p.u[mask], p.v[mask]
        w = mask.mean() * math.exp(alpha * (gu.mean() - mu_u - gv.mean() + mu_v))
        wsum += w
        wmd2 += w * (gv.mean() - gu.mean()) ** 2
        comps[lab] = Component(w, _t1(gu, gv, alpha))
    if alpha == 0:
        btw = 0.5 * (wmd2 - mu_d**2)
    else:
        btw = (wsum - 1.0) / alpha**2
    return DecompositionResult(comps, btw, t1(p, alpha), method="subgroup")


def symmetric_swap_profile(lows, highs) -> MovementProfile:
    """Profile where each upward history ``(l, h)`` is matched by ``(h, l)``."""
    lows = np.asarray(lows, dtype=float)
    highs = np.asarray(highs, dtype=float)
    return MovementProfile(np.concatenate([lows, highs]), np.concatenate([highs, lows]))
