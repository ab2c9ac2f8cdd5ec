"""Uniform handle over every index in the package.

A :class:`MeasureSpec` names an index and carries its parameters; passing
it to :func:`evaluate` gives the value on a profile. :data:`ROSTER` lists
the sixteen configurations audited by :mod:`mobility.axioms`, and
:func:`info` exposes per-index metadata (direction of interest, whether the
index has a sensitivity parameter that favours one direction, and which
decompositions are available).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from . import class1, class2, legacy
from .decomposition import Component, DecompositionResult
from .errors import ParameterError
from .profile import MovementProfile, StatusTransform, as_profile, transform_status

__all__ = ["MeasureSpec", "MeasureInfo", "MEASURE_IDS", "ROSTER", "evaluate", "info", "decompose"]

MEASURE_IDS = (
    "elasticity",
    "pearson",
    "FO1",
    "FO2",
    "shorrocks",
    "RG1",
    "RG2",
    "BCD",
    "BCU",
    "A1",
    "S1",
    "T1",
    "A2",
    "S2",
    "T2",
    "intermediate",
)

_ALIASES = {
    "1-beta": "elasticity",
    "1-rho": "pearson",
    "bc_d": "BCD",
    "bc_u": "BCU",
    "s_theil": "shorrocks",
    "s_gini": "shorrocks",
}
_CANON = {m.lower(): m for m in MEASURE_IDS}

_DEFAULT_ALPHA = {"RG1": 1.0, "RG2": 1.0, "BCD": 1.0, "BCU": 1.0, "intermediate": 0.5}
_CLASS2 = {"A2": "absolute", "S2": "scale", "T2": "translation"}


def _canonical(mid):
    key = str(mid).strip()
    low = key.lower()
    if low in _ALIASES:
        return _ALIASES[low]
    if low in _CANON:
        return _CANON[low]
    raise ParameterError(f"unknown measure {mid!r}")


@dataclass(frozen=True)
class MeasureSpec:
    """An index identifier plus its parameters.

    ``alpha`` is the sensitivity parameter of the class-1, Ray-Genicot and
    Barcena-Canto indices (for ``intermediate`` it is the shifted-status
    exponent). ``gamma`` is the class-2 positional exponent. ``status`` is
    applied to the profile before evaluation.
    """

    id: str
    alpha: Optional[float] = None
    gamma: Optional[int] = None
    c: Optional[float] = None
    status: str = "identity"
    p_mode: str = "distance"
    variance: str = "population"
    inequality: str = "theil"

    def __post_init__(self):
        raw = str(self.id).strip().lower()
        mid = _canonical(self.id)
        object.__setattr__(self, "id", mid)
        if raw == "s_gini":
            object.__setattr__(self, "inequality", "gini")
        if self.alpha is None and (mid in _DEFAULT_ALPHA or mid in ("A1", "S1", "T1")):
            object.__setattr__(self, "alpha", _DEFAULT_ALPHA.get(mid, 0.0))
        if mid in _CLASS2:
            g = 1 if self.gamma is None else self.gamma
            object.__setattr__(self, "gamma", class2.check_gamma(g))
            object.__setattr__(self, "p_mode", class2.PMode(self.p_mode).value)
        if mid == "intermediate" and self.c is None:
            object.__setattr__(self, "c", 0.0)
        object.__setattr__(self, "status", StatusTransform(self.status).value)

    @property
    def label(self) -> str:
        """Short display name, e.g. ``"S_Gini"`` or ``"1-beta"``."""
        if self.id == "shorrocks":
            return "S_Gini" if self.inequality == "gini" else "S_Theil"
        return {"elasticity": "1-beta", "pearson": "1-rho", "BCD": "BC_D", "BCU": "BC_U"}.get(
            self.id, self.id
        )

    def params(self) -> dict:
        """Parameters that affect this index, for reporting."""
        out = {}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        if self.id in _CLASS2:
            out["gamma"] = self.gamma
            out["p_mode"] = self.p_mode
        if self.id == "intermediate":
            out["c"] = self.c
        if self.id == "T1":
            out["variance"] = self.variance
        if self.id == "shorrocks":
            out["inequality"] = self.inequality
        out["status"] = self.status
        return out

    def with_(self, **kw) -> "MeasureSpec":
        return replace(self, **kw)


def _eval_raw(s: MeasureSpec, p: MovementProfile) -> float:
    mid = s.id
    if mid == "elasticity":
        return legacy.elasticity_mobility(p)
    if mid == "pearson":
        return legacy.pearson_mobility(p)
    if mid == "FO1":
        return legacy.fields_ok(p, "income")
    if mid == "FO2":
        return legacy.fields_ok(p, "log")
    if mid == "shorrocks":
        return legacy.shorrocks(p, s.inequality)
    if mid in ("RG1", "RG2"):
        return legacy.ray_genicot(p, "absolute" if mid == "RG1" else "relative", s.alpha)
    if mid in ("BCD", "BCU"):
        return legacy.barcena_canto(p, "down" if mid == "BCD" else "up", s.alpha)
    if mid == "A1":
        return class1.a1(p, s.alpha)
    if mid == "S1":
        return class1.s1(p, s.alpha)
    if mid == "T1":
        return class1.t1(p, s.alpha, s.variance)
    if mid == "intermediate":
        return class1.intermediate(p, s.c, s.alpha)
    return class2.gamma_measure(p, _CLASS2[mid], gamma=s.gamma, p_mode=s.p_mode)


def evaluate(spec, p) -> float:
    """Value of the index described by ``spec`` on profile ``p``."""
    if isinstance(spec, str):
        spec = MeasureSpec(spec)
    p = transform_status(as_profile(p), spec.status)
    return _eval_raw(spec, p)


# -- per-person terms for the additively separable indices ---------------


def _terms(s: MeasureSpec, u, v):
    if s.id == "FO1":
        return np.abs(v - u)
    if s.id == "FO2":
        return np.abs(np.log(v) - np.log(u))
    if s.id == "BCD":
        movers = v < u
        out = np.zeros_like(u)
        out[movers] = ((u[movers] - v[movers]) / u[movers]) ** s.alpha
        return out
    if s.id == "BCU":
        movers = v > u
        out = np.zeros_like(u)
        out[movers] = ((v[movers] - u[movers]) / u[movers]) ** s.alpha
        return out
    raise ParameterError(f"{s.id} is not a per-person sum")


def _additive_split(s, p, groups):
    comps = {}
    labels = list(dict.fromkeys(np.asarray(groups).tolist()))
    groups = np.asarray(groups)
    for lab in labels:
        m = groups == lab
        comps[lab] = Component(m.mean(), float(np.mean(_terms(s, p.u[m], p.v[m]))))
    return DecompositionResult(comps, 0.0, _eval_raw(s, p), method="subgroup")


def _updown(s: MeasureSpec, p: MovementProfile) -> DecompositionResult:
    if s.id in ("FO1", "FO2", "BCD", "BCU"):
        return _additive_split(s, p, class1.updown_partition(p))
    if s.id == "A1":
        return class1.decompose_a1_subgroups(p, s.alpha, class1.updown_partition(p))
    if s.id == "S1":
        return class1.decompose_s1_subgroups(p, s.alpha, class1.updown_partition(p))
    if s.id == "T1":
        return class1.decompose_t1_subgroups(p, s.alpha, class1.updown_partition(p))
    return class2.decompose_updown(p, _CLASS2[s.id], gamma=s.gamma, p_mode=s.p_mode)


def _subgroup(s: MeasureSpec, p: MovementProfile, groups) -> DecompositionResult:
    if s.id in ("FO1", "FO2", "BCD", "BCU"):
        return _additive_split(s, p, groups)
    if s.id == "A1":
        return class1.decompose_a1_subgroups(p, s.alpha, groups)
    if s.id == "S1":
        return class1.decompose_s1_subgroups(p, s.alpha, groups)
    if s.id == "T1":
        return class1.decompose_t1_subgroups(p, s.alpha, groups)
    raise ParameterError(f"no subgroup decomposition registered for {s.label}")


def _exchange(s: MeasureSpec, p: MovementProfile) -> DecompositionResult:
    if s.id in ("FO1", "FO2"):
        # mean absolute change is the binary-weight absolute class-2 measure
        q = transform_status(p, "log") if s.id == "FO2" else p
        return class2.decompose_seg(q, "absolute", gamma=0)
    return class2.decompose_seg(p, _CLASS2[s.id], gamma=s.gamma, p_mode=s.p_mode)


@dataclass(frozen=True)
class MeasureInfo:
    """Static facts about an index.

    ``direction`` is the kind of movement the index is meant to register
    (``"both"``, ``"up"`` or ``"down"``); the monotonicity audit only probes
    that kind. ``directional`` is true when a parameter lets the user weight
    upward against downward movement.
    """

    direction: str = "both"
    directional: bool = False
    updown: Optional[Callable] = None
    exchange: Optional[Callable] = None
    subgroup: Optional[Callable] = None
    needs_positive: bool = False
    extra: dict = field(default_factory=dict)


_INFO = {
    "elasticity": MeasureInfo(),
    "pearson": MeasureInfo(),
    "FO1": MeasureInfo(updown=_updown, exchange=_exchange, subgroup=_subgroup),
    "FO2": MeasureInfo(updown=_updown, exchange=_exchange, subgroup=_subgroup, needs_positive=True),
    "shorrocks": MeasureInfo(needs_positive=True),
    "RG1": MeasureInfo(direction="up", directional=True, needs_positive=True),
    "RG2": MeasureInfo(direction="up", directional=True, needs_positive=True),
    "BCD": MeasureInfo(direction="down", directional=True, updown=_updown, subgroup=_subgroup),
    "BCU": MeasureInfo(direction="up", directional=True, updown=_updown, subgroup=_subgroup),
    "A1": MeasureInfo(directional=True, updown=_updown, subgroup=_subgroup, needs_positive=True),
    "S1": MeasureInfo(directional=True, updown=_updown, subgroup=_subgroup, needs_positive=True),
    "T1": MeasureInfo(directional=True, updown=_updown, subgroup=_subgroup),
    "A2": MeasureInfo(directional=True, updown=_updown, exchange=_exchange),
    "S2": MeasureInfo(directional=True, updown=_updown, exchange=_exchange),
    "T2": MeasureInfo(directional=True, updown=_updown, exchange=_exchange),
    "intermediate": MeasureInfo(directional=True, needs_positive=True),
}


def info(spec) -> MeasureInfo:
    if isinstance(spec, str):
        spec = MeasureSpec(spec)
    return _INFO[spec.id]


def decompose(spec, p, method="updown", groups=None) -> DecompositionResult:
    """Run a registered decomposition of ``spec`` on profile ``p``.

    ``method`` is ``"updown"``, ``"seg"`` (structural/exchange/growth) or
    ``"subgroup"`` (needs ``groups``, one label per history).
    """
    if isinstance(spec, str):
        spec = MeasureSpec(spec)
    meta = _INFO[spec.id]
    fn = {"updown": meta.updown, "seg": meta.exchange, "subgroup": meta.subgroup}.get(method)
    if method not in ("updown", "seg", "subgroup"):
        raise ParameterError(f"unknown decomposition method {method!r}")
    if fn is None:
        raise ParameterError(f"no {method} decomposition registered for {spec.label}")
    p = transform_status(as_profile(p), spec.status)
    if method == "subgroup":
        if groups is None:
            raise ParameterError("subgroup decomposition needs group labels")
        return fn(spec, p, groups)
    return fn(spec, p)


ROSTER = (
    MeasureSpec("A1", alpha=0.0),
    MeasureSpec("A2", gamma=1),
    MeasureSpec("S1", alpha=0.0),
    MeasureSpec("S2", gamma=1),
    MeasureSpec("T1", alpha=0.0),
    MeasureSpec("T2", gamma=1),
    MeasureSpec("elasticity"),
    MeasureSpec("pearson"),
    MeasureSpec("FO1"),
    MeasureSpec("FO2"),
    MeasureSpec("shorrocks", inequality="theil"),
    MeasureSpec("shorrocks", inequality="gini"),
    MeasureSpec("RG1", alpha=1.0),
    MeasureSpec("RG2", alpha=1.0),
    MeasureSpec("BCD", alpha=1.0),
    MeasureSpec("BCU", alpha=1.0),
)
