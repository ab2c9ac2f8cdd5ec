"""Movement profiles: paired status vectors for the same n people.

A profile holds ``u`` (status in period 0) and ``v`` (status in period 1).
Person ``i``'s history is ``(u[i], v[i])``. Every measure in the package
takes a :class:`MovementProfile`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.stats import rankdata

from .errors import LengthMismatch, NonFinite, NonPositiveForLog, TooSmall

__all__ = [
    "MovementProfile",
    "StatusTransform",
    "SummaryStats",
    "validate_profile",
    "transform_status",
    "replicate",
    "summary",
    "reverse_profile",
]


def _frozen(x):
    arr = np.array(x, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MovementProfile:
    """Status of ``n`` people in two periods.

    Use :func:`validate_profile` (or the constructor, which delegates to
    it) to build one; the arrays are stored read-only.
    """

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float).ravel()
        v = np.asarray(self.v, dtype=float).ravel()
        if u.shape != v.shape:
            raise LengthMismatch(f"u has {u.size} values, v has {v.size}")
        if u.size < 2:
            raise TooSmall(f"need at least 2 histories, got {u.size}")
        if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
            raise NonFinite("status values must be finite")
        object.__setattr__(self, "u", _frozen(u))
        object.__setattr__(self, "v", _frozen(v))

    @property
    def n(self) -> int:
        return self.u.size

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, MovementProfile):
            return NotImplemented
        return np.array_equal(self.u, other.u) and np.array_equal(self.v, other.v)

    def __repr__(self):
        return f"MovementProfile(u={self.u.tolist()}, v={self.v.tolist()})"

    def subset(self, mask) -> MovementProfile:
        """Histories selected by a boolean mask or index array."""
        return MovementProfile(self.u[mask], self.v[mask])


class StatusTransform(str, Enum):
    IDENTITY = "identity"
    LOG = "log"
    RANK = "rank"


@dataclass(frozen=True)
class SummaryStats:
    mu_u: float
    mu_v: float
    n: int


def validate_profile(u, v) -> MovementProfile:
    """Build a profile, checking lengths match, ``n >= 2`` and finiteness.

    Raises
    ------
    LengthMismatch, TooSmall, NonFinite
    """
    return MovementProfile(u, v)


def fractional_rank(x) -> np.ndarray:
    """Positions ``i/n`` in ``(0, 1]``; tied values share their average position."""
    x = np.asarray(x, dtype=float)
    return rankdata(x, method="average") / x.size


def transform_status(p: MovementProfile, t) -> MovementProfile:
    """Apply a status transform to both periods independently.

    ``log`` needs strictly positive status in both periods. ``rank`` maps
    each period to within-period fractional ranks.
    """
    t = StatusTransform(t)
    if t is StatusTransform.IDENTITY:
        return p
    if t is StatusTransform.LOG:
        if np.any(p.u <= 0) or np.any(p.v <= 0):
            raise NonPositiveForLog("log status needs strictly positive values")
        return MovementProfile(np.log(p.u), np.log(p.v))
    return MovementProfile(fractional_rank(p.u), fractional_rank(p.v))


def replicate(p: MovementProfile, r: int) -> MovementProfile:
    """Profile in which every history appears ``r`` times."""
    if int(r) != r or r < 1:
        raise ValueError(f"replication factor must be a positive integer, got {r}")
    return MovementProfile(np.tile(p.u, int(r)), np.tile(p.v, int(r)))


def summary(p: MovementProfile) -> SummaryStats:
    return SummaryStats(mu_u=float(np.mean(p.u)), mu_v=float(np.mean(p.v)), n=p.n)


def reverse_profile(p: MovementProfile) -> MovementProfile:
    """Swap origin and destination in every history."""
    return MovementProfile(p.v, p.u)


def as_profile(p) -> MovementProfile:
    """Accept a profile or a ``(u, v)`` pair."""
    if isinstance(p, MovementProfile):
        return p
    u, v = p
    return MovementProfile(u, v)
