"""Numerical audit of mobility indices against their defining principles.

Each check perturbs profiles in a way a principle says should (or should
not) change mobility, and compares index values. A failure always comes
with a :class:`Witness`: the concrete pair of profiles and their values,
which :func:`recheck` can re-evaluate independently.

Checks
------
monotonicity
    Moving one person's destination further from the origin, in the
    direction they already move (or from no move at all), must raise the
    index strictly.
monotonicity-2
    A matched pair of such moves, one up and one down of the same size,
    must raise the index strictly (both period means stay put).
scale / translation
    Rescaling (shifting) each period separately must not change how any
    two profiles are ranked; the weak forms only rescale (shift) both
    periods together.
up/down, exchange
    The registered decomposition must reproduce the total.
directional
    Descriptive: whether a parameter lets the user weight upward against
    downward movement.

Invariance is tested on index values by default. With
``level="ordering"`` a value change is tolerated as long as pairs of
equal-size profiles put through the same transformation keep their
ranking; a homogeneous index, for instance, passes that weaker test.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DegeneratePartition, MobilityError
from .measures import ROSTER, MeasureSpec, evaluate, info
from .profile import MovementProfile

__all__ = [
    "Witness",
    "PropertyVerdict",
    "PropertyReport",
    "COLUMNS",
    "REFERENCE_MATRIX",
    "check_monotonicity",
    "check_monotonicity2",
    "check_scale",
    "check_translation",
    "check_updown",
    "check_exchange",
    "check_directional",
    "property_report",
    "recheck",
    "random_profile",
]

STRICT = 1e-9
INVARIANCE_TOL = 1e-9
ORIGIN = np.array([10.0, 20.0, 40.0])
SCENARIOS = {
    "1a": (20.0, 40.0, 80.0),
    "1b": (15.0, 25.0, 45.0),
    "1c": (20.0, 40.0, 10.0),
    "1d": (40.0, 80.0, 20.0),
    "1e": (25.0, 45.0, 15.0),
    "1f": (10.0, 30.0, 40.0),
    "1g": (10.0, 40.0, 160.0),
}


@dataclass(frozen=True)
class Witness:
    """Evidence for a failed check.

    For monotonicity checks ``profile`` should be the more mobile of the
    two; for invariance checks ``other`` is the transformed profile; for
    decompositions ``value`` is the total and ``other_value`` the residual.
    A ranking failure also fills ``images`` with the two transformed
    profiles and their values.
    """

    profile: MovementProfile
    value: float
    other: Optional[MovementProfile] = None
    other_value: Optional[float] = None
    note: str = ""
    images: tuple = ()

    def to_dict(self):
        out = {
            "u": self.profile.u.tolist(),
            "v": self.profile.v.tolist(),
            "value": _num(self.value),
        }
        if self.other is not None:
            out["other_u"] = self.other.u.tolist()
            out["other_v"] = self.other.v.tolist()
        if self.other_value is not None:
            out["other_value"] = _num(self.other_value)
        if self.note:
            out["note"] = self.note
        if self.images:
            out["images"] = [
                {"u": q.u.tolist(), "v": q.v.tolist(), "value": _num(x)} for q, x in self.images
            ]
        return out


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of one check on one index.

    ``verdict`` is ``"pass"``, ``"fail"`` or ``"weak"`` (only the joint
    rescaling or shifting form holds). ``basis`` says whether the verdict
    came from numeric probes or from index metadata; numeric failures always
    carry a witness.
    """

    property: str
    verdict: str
    witness: Optional[Witness] = None
    basis: str = "numeric"
    probes: int = 0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self):
        out = {"property": self.property, "verdict": self.verdict, "basis": self.basis}
        out["probes"] = self.probes
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def _num(x):
    x = float(x) + 0.0  # drops the sign of -0.0
    if np.isinf(x):
        return "inf" if x > 0 else "-inf"
    if np.isnan(x):
        return "nan"
    return x


def _rng(seed, spec, prop):
    key = zlib.crc32(f"{spec.label}|{spec.params()}|{prop}".encode())
    return np.random.default_rng([int(seed), key])


def random_profile(rng, n_range=(3, 10), low=1.0, high=100.0) -> MovementProfile:
    """Random profile with ``n`` drawn from ``n_range`` and status uniform on ``[low, high]``."""
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    return MovementProfile(rng.uniform(low, high, n), rng.uniform(low, high, n))


def _value(spec, p):
    try:
        return float(evaluate(spec, p))
    except MobilityError:
        return None


def _with_v(p, idx, vals):
    v = p.v.copy()
    v[list(idx)] = vals
    return MovementProfile(p.u, v)


# -- monotonicity ----------------------------------------------------------


def _scenario_profiles():
    for v in SCENARIOS.values():
        yield MovementProfile(ORIGIN, v)


def _fixed_single_probes():
    """Deterministic (z, z') pairs: z moves person i further than z' does."""
    # equally spaced origins where the OLS slope stays at 1
    x0 = np.array([1.0, 2.0, 3.0])
    yield MovementProfile(x0, [2.0, 0.0, 4.0]), MovementProfile(x0, [2.0, 1.0, 4.0]), "D"
    for base in _scenario_profiles():
        for i in range(base.n):
            u_i, v_i = base.u[i], base.v[i]
            if v_i >= u_i:
                yield _with_v(base, [i], [v_i + 0.25 * u_i]), base, "U"
            if v_i <= u_i:
                yield _with_v(base, [i], [0.5 * v_i]), base, "D"
    # moves away from an immobile starting point
    for base in _scenario_profiles():
        for i in range(base.n):
            start = _with_v(base, [i], [base.u[i]])
            yield _with_v(start, [i], [base.u[i] * 1.25]), start, "U"
            yield _with_v(start, [i], [base.u[i] * 0.9975]), start, "D"


def _random_single_probe(rng):
    p = random_profile(rng)
    i = int(rng.integers(p.n))
    u_i = p.u[i]
    at_origin = rng.random() < 0.25
    if rng.random() < 0.5:
        v_prime = u_i if at_origin else u_i * rng.uniform(1.0, 3.0)
        v_new = v_prime + u_i * rng.uniform(0.01, 1.0)
        kind = "U"
    else:
        v_prime = u_i if at_origin else u_i * rng.uniform(0.2, 1.0)
        v_new = v_prime * rng.uniform(0.1, 0.99)
        kind = "D"
    base = _with_v(p, [i], [v_prime])
    return _with_v(base, [i], [v_new]), base, kind


def _compare(spec, z, z_prime, strict):
    """Return a witness when ``z`` is not ranked above ``z_prime``, else None."""
    a = _value(spec, z)
    b = _value(spec, z_prime)
    if a is None or b is None:
        return None, False
    if np.isinf(a) or np.isinf(b) or np.isnan(a) or np.isnan(b):
        return None, False
    margin = STRICT * (1.0 + abs(b))
    ok = (a - b >= margin) if strict else (a - b >= -margin)
    if ok:
        return None, True
    return Witness(z, a, z_prime, b, note="first profile should show more mobility"), True


def check_monotonicity(spec: MeasureSpec, trials: int = 300, seed: int = 0) -> PropertyVerdict:
    """Single-person monotonicity.

    Indices meant for one direction only (per :func:`mobility.measures.info`)
    must rise strictly with moves in that direction and must not fall with
    moves in the other.
    """
    direction = info(spec).direction
    rng = _rng(seed, spec, "monotonicity")
    probes = 0

    def strictness(kind):
        if direction == "both":
            return True
        return (kind == "U") == (direction == "up")

    pairs = list(_fixed_single_probes())
    pairs += [_random_single_probe(rng) for _ in range(max(int(trials), 1))]
    for z, zp, kind in pairs:
        strict = strictness(kind)
        w, used = _compare(spec, z, zp, strict)
        probes += used
        if w is not None:
            detail = f"{kind} move" + ("" if strict else ", must not decrease")
            return PropertyVerdict("monotonicity", "fail", w, probes=probes, detail=detail)
    return PropertyVerdict("monotonicity", "pass", probes=probes)


def _fixed_pair_probes():
    for base in _scenario_profiles():
        ups = [i for i in range(base.n) if base.v[i] >= base.u[i]]
        downs = [j for j in range(base.n) if base.v[j] <= base.u[j]]
        for i in ups:
            for j in downs:
                if i == j:
                    continue
                delta = 0.5 * base.v[j]
                yield _with_v(base, [i, j], [base.v[i] + delta, base.v[j] - delta]), base
    for base in _scenario_profiles():
        start = MovementProfile(base.u, base.u)
        for i in range(base.n):
            for j in range(base.n):
                if i != j:
                    delta = 0.1 * min(base.u[i], base.u[j])
                    yield _with_v(start, [i, j], [base.u[i] + delta, base.u[j] - delta]), start


def _random_pair_probe(rng):
    p = random_profile(rng)
    i, j = rng.choice(p.n, size=2, replace=False)
    vi = p.u[i] if rng.random() < 0.25 else p.u[i] * rng.uniform(1.0, 3.0)
    vj = p.u[j] if rng.random() < 0.25 else p.u[j] * rng.uniform(0.2, 1.0)
    base = _with_v(p, [i, j], [vi, vj])
    delta = vj * rng.uniform(0.01, 0.9)
    return _with_v(base, [i, j], [vi + delta, vj - delta]), base


def check_monotonicity2(spec: MeasureSpec, trials: int = 300, seed: int = 0) -> PropertyVerdict:
    """Matched-pair monotonicity: an equal rise for an up-mover and fall for a down-mover."""
    rng = _rng(seed, spec, "monotonicity2")
    probes = 0
    pairs = list(_fixed_pair_probes()) + [_random_pair_probe(rng) for _ in range(max(int(trials), 1))]
    for z, zp in pairs:
        w, used = _compare(spec, z, zp, True)
        probes += used
        if w is not None:
            return PropertyVerdict("monotonicity2", "fail", w, probes=probes)
    return PropertyVerdict("monotonicity2", "pass", probes=probes)


# -- invariance ------------------------------------------------------------


def _finite(x):
    return x is not None and bool(np.isfinite(x))


def _sign(a, b):
    d = a - b
    if abs(d) <= INVARIANCE_TOL * (1.0 + abs(a) + abs(b)):
        return 0
    return 1 if d > 0 else -1


def _same_size_pairs(rng, trials):
    scen = list(_scenario_profiles())
    for i in range(len(scen)):
        for j in range(i + 1, len(scen)):
            yield scen[i], scen[j]
    for _ in range(max(int(trials), 1)):
        z = random_profile(rng)
        yield z, random_profile(rng, n_range=(z.n, z.n))


def _invariance(spec, name, draw, trials, seed, level="value"):
    if level not in ("value", "ordering"):
        raise ValueError(f"level must be 'value' or 'ordering', got {level!r}")
    rng = _rng(seed, spec, name)
    probes = 0
    bases = list(_scenario_profiles()) + [random_profile(rng) for _ in range(max(int(trials), 1))]
    values_fixed = True
    for base in bases:
        other = draw(rng)(base)
        a = _value(spec, base)
        b = _value(spec, other)
        if not (_finite(a) and _finite(b)):
            continue
        probes += 1
        if abs(a - b) > INVARIANCE_TOL * (1.0 + abs(a)):
            if level == "value":
                w = Witness(base, a, other, b, note="values should agree")
                return PropertyVerdict(name, "fail", w, probes=probes)
            values_fixed = False
            break
    if values_fixed:
        return PropertyVerdict(name, "pass", probes=probes, detail="values unchanged")
    for z, zp in _same_size_pairs(rng, trials):
        f = draw(rng)
        fz, fzp = f(z), f(zp)
        vals = [_value(spec, q) for q in (z, zp, fz, fzp)]
        if not all(_finite(x) for x in vals):
            continue
        probes += 1
        a, b, fa, fb = vals
        before, after = _sign(a, b), _sign(fa, fb)
        if before * after < 0:
            w = Witness(z, a, zp, b, note="ranking reversed by the transformation", images=((fz, fa), (fzp, fb)))
            return PropertyVerdict(name, "fail", w, probes=probes)
    return PropertyVerdict(name, "pass", probes=probes, detail="ranking preserved, values change")


def _scaled(independent):
    def draw(rng):
        l0 = 10 ** rng.uniform(-1, 1)
        l1 = 10 ** rng.uniform(-1, 1) if independent else l0
        return lambda p: MovementProfile(l0 * p.u, l1 * p.v)

    return draw


def _shifted(independent):
    def draw(rng):
        d0 = rng.uniform(-0.5, 50)
        d1 = rng.uniform(-0.5, 50) if independent else d0
        return lambda p: MovementProfile(p.u + d0, p.v + d1)

    return draw


def check_scale(
    spec: MeasureSpec, mode: str = "independent", trials: int = 100, seed: int = 0, level: str = "value"
) -> PropertyVerdict:
    """Invariance under rescaling: ``"independent"`` (each period) or ``"PSI"`` (both).

    ``level`` is ``"value"`` or ``"ordering"``; see the module notes.
    """
    if mode not in ("independent", "PSI"):
        raise ValueError(f"mode must be 'independent' or 'PSI', got {mode!r}")
    name = "scale" if mode == "independent" else "PSI"
    return _invariance(spec, name, _scaled(mode == "independent"), trials, seed, level)


def check_translation(
    spec: MeasureSpec, mode: str = "independent", trials: int = 100, seed: int = 0, level: str = "value"
) -> PropertyVerdict:
    """Invariance under shifts: ``"independent"`` (each period) or ``"PTI"`` (both)."""
    if mode not in ("independent", "PTI"):
        raise ValueError(f"mode must be 'independent' or 'PTI', got {mode!r}")
    name = "translation" if mode == "independent" else "PTI"
    return _invariance(spec, name, _shifted(mode == "independent"), trials, seed, level)


# -- decompositions and metadata ------------------------------------------


def _decomposable(spec, name, fn, trials, seed):
    if fn is None:
        return PropertyVerdict(name, "fail", basis="metadata", detail="no decomposition registered")
    rng = _rng(seed, spec, name)
    probes = 0
    from .profile import transform_status

    bases = list(_scenario_profiles()) + [random_profile(rng) for _ in range(max(int(trials), 1))]
    for base in bases:
        try:
            res = fn(spec, transform_status(base, spec.status))
        except DegeneratePartition:
            continue
        probes += 1
        if not np.isfinite(res.total):
            continue
        if not abs(res.residual) <= 1e-9 * (1.0 + abs(res.total)):
            return PropertyVerdict(
                name, "fail", Witness(base, res.total, other_value=res.residual, note="residual"), probes=probes
            )
    return PropertyVerdict(name, "pass", probes=probes)


def check_updown(spec: MeasureSpec, trials: int = 100, seed: int = 0) -> PropertyVerdict:
    """The registered up/down decomposition reproduces the total."""
    return _decomposable(spec, "updown", info(spec).updown, trials, seed)


def check_exchange(spec: MeasureSpec, trials: int = 100, seed: int = 0) -> PropertyVerdict:
    """The registered structural/exchange decomposition reproduces the total."""
    return _decomposable(spec, "exchange", info(spec).exchange, trials, seed)


def check_directional(spec: MeasureSpec) -> PropertyVerdict:
    flag = info(spec).directional
    return PropertyVerdict("directional", "pass" if flag else "fail", basis="metadata")


# -- report ----------------------------------------------------------------

COLUMNS = ("axiom2", "axiom2'", "scale", "translation", "updown", "exchange", "directional")

_Y, _PSI, _PTI, _NO = "✓", "(PSI)", "(PTI)", ""

#: Expected property matrix for the default roster, keyed by measure label.
REFERENCE_MATRIX = {
    "A1": (_Y, _NO, _PSI, _NO, _Y, _NO, _Y),
    "A2": (_Y, _NO, _NO, _PTI, _Y, _Y, _Y),
    "S1": (_NO, _Y, _Y, _NO, _Y, _NO, _Y),
    "S2": (_NO, _Y, _Y, _NO, _Y, _Y, _Y),
    "T1": (_NO, _Y, _NO, _Y, _Y, _NO, _Y),
    "T2": (_NO, _Y, _NO, _Y, _Y, _Y, _Y),
    "1-beta": (_NO, _NO, _PSI, _NO, _NO, _NO, _NO),
    "1-rho": (_NO, _NO, _Y, _Y, _NO, _NO, _NO),
    "FO1": (_Y, _NO, _NO, _PTI, _Y, _Y, _NO),
    "FO2": (_Y, _NO, _PSI, _NO, _Y, _Y, _NO),
    "S_Theil": (_Y, _NO, _PSI, _NO, _NO, _NO, _NO),
    "S_Gini": (_Y, _NO, _PSI, _NO, _NO, _NO, _NO),
    "RG1": (_NO, _NO, _PSI, _NO, _NO, _NO, _Y),
    "RG2": (_NO, _NO, _Y, _NO, _NO, _NO, _Y),
    "BC_D": (_Y, _NO, _PSI, _NO, _Y, _NO, _Y),
    "BC_U": (_Y, _NO, _PSI, _NO, _Y, _NO, _Y),
}


@dataclass
class PropertyReport:
    """Verdicts for a list of indices, one row per index."""

    labels: list = field(default_factory=list)
    rows: list = field(default_factory=list)  # list of dict column -> PropertyVerdict

    def cell(self, label, column) -> str:
        """Checkmark-style symbol: tick, ``(PSI)``/``(PTI)`` or blank."""
        v = self.rows[self.labels.index(label)][column]
        if v.verdict == "pass":
            return _Y
        if v.verdict == "weak":
            return _PSI if column == "scale" else _PTI
        return _NO

    def matrix(self) -> dict:
        return {lab: tuple(self.cell(lab, c) for c in COLUMNS) for lab in self.labels}

    def mismatches(self, expected=None) -> list:
        """``(label, column, got, expected)`` for cells that differ from ``expected``."""
        expected = REFERENCE_MATRIX if expected is None else expected
        out = []
        for lab, got in self.matrix().items():
            if lab not in expected:
                continue
            for col, g, e in zip(COLUMNS, got, expected[lab]):
                if g != e:
                    out.append((lab, col, g, e))
        return out

    def failures(self):
        for lab, row in zip(self.labels, self.rows):
            for col, v in row.items():
                if v.verdict == "fail":
                    yield lab, col, v

    def to_dict(self):
        return {
            "columns": list(COLUMNS),
            "rows": [
                {
                    "measure": lab,
                    "cells": {c: self.cell(lab, c) for c in COLUMNS},
                    "verdicts": {c: row[c].to_dict() for c in COLUMNS},
                }
                for lab, row in zip(self.labels, self.rows)
            ],
        }


def _combined(strong: PropertyVerdict, weak: PropertyVerdict, column: str) -> PropertyVerdict:
    if strong.passed:
        return PropertyVerdict(column, "pass", probes=strong.probes)
    if weak.passed:
        return PropertyVerdict(column, "weak", strong.witness, probes=strong.probes + weak.probes)
    return PropertyVerdict(column, "fail", strong.witness, probes=strong.probes + weak.probes)


def measure_row(spec: MeasureSpec, trials: int = 300, seed: int = 0) -> dict:
    """All column verdicts for one index."""
    inv_trials = max(int(trials) // 3, 1)
    return {
        "axiom2": check_monotonicity(spec, trials, seed),
        "axiom2'": check_monotonicity2(spec, trials, seed),
        "scale": _combined(
            check_scale(spec, "independent", inv_trials, seed), check_scale(spec, "PSI", inv_trials, seed), "scale"
        ),
        "translation": _combined(
            check_translation(spec, "independent", inv_trials, seed),
            check_translation(spec, "PTI", inv_trials, seed),
            "translation",
        ),
        "updown": check_updown(spec, inv_trials, seed),
        "exchange": check_exchange(spec, inv_trials, seed),
        "directional": check_directional(spec),
    }


def property_report(specs=ROSTER, trials: int = 300, seed: int = 0) -> PropertyReport:
    """Audit every index in ``specs``; deterministic for a given ``seed``."""
    rep = PropertyReport()
    for spec in specs:
        if isinstance(spec, str):
            spec = MeasureSpec(spec)
        rep.labels.append(spec.label)
        rep.rows.append(measure_row(spec, trials, seed))
    return rep


def recheck(spec: MeasureSpec, verdict: PropertyVerdict) -> bool:
    """Re-evaluate a failure's witness from scratch; True if it still violates the property."""
    w = verdict.witness
    if w is None:
        return False
    if verdict.property in ("updown", "exchange"):
        fn = info(spec).updown if verdict.property == "updown" else info(spec).exchange
        from .profile import transform_status

        res = fn(spec, transform_status(w.profile, spec.status))
        return abs(res.residual) > 1e-9 * (1.0 + abs(res.total))
    if w.images:
        (fz, _), (fzp, _) = w.images
        a, b, fa, fb = (float(evaluate(spec, q)) for q in (w.profile, w.other, fz, fzp))
        return _sign(a, b) * _sign(fa, fb) < 0
    a = float(evaluate(spec, w.profile))
    b = float(evaluate(spec, w.other))
    if verdict.property in ("monotonicity", "monotonicity2"):
        margin = STRICT * (1.0 + abs(b))
        if "must not decrease" in verdict.detail:
            return a - b < -margin
        return a - b < margin
    return abs(a - b) > INVARIANCE_TOL * (1.0 + abs(a))
