"""Container for decomposition results."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Component:
    weight: float
    value: float

    @property
    def contribution(self) -> float:
        return self.weight * self.value


@dataclass(frozen=True)
class DecompositionResult:
    """Named components of a measure.

    ``total == sum(weight * value) + between + residual``; ``residual`` is
    what floating-point arithmetic leaves over and should be tiny.
    """

    components: dict
    between: float
    total: float
    method: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def explained(self) -> float:
        return float(sum(c.contribution for c in self.components.values()) + self.between)

    @property
    def residual(self) -> float:
        return float(self.total - self.explained)

    def to_dict(self):
        return {
            "method": self.method,
            "total": _num(self.total),
            "between": _num(self.between),
            "residual": _num(self.residual),
            "components": {
                str(k): {"weight": _num(c.weight), "value": _num(c.value)}
                for k, c in self.components.items()
            },
            **{k: _num(v) for k, v in self.extra.items()},
        }


def _num(x):
    x = float(x) + 0.0  # drops the sign of -0.0
    if np.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x
