"""Built-in worked examples: two small log-income cases and a set of
three-person income scenarios sharing the origin ``(10, 20, 40)``.

:func:`run_paper_tables` evaluates the standard batteries of indices on
them and returns a :class:`~mobility.io.ResultTable`.
"""

from __future__ import annotations

from .io import ResultTable, ScenarioSet
from .measures import MeasureSpec, evaluate
from .profile import MovementProfile

__all__ = ["LOG_CASES", "SCENARIOS", "LEGACY_BATTERY", "CLASS_BATTERY", "run_paper_tables"]

#: Log-income origin and two destinations (already on the log scale).
LOG_CASES = {
    "case 1": MovementProfile([1.0, 2.0, 3.0], [3.0, 2.0, 3.0]),
    "case 2": MovementProfile([1.0, 2.0, 3.0], [3.0, 1.0, 5.0]),
}

SCENARIOS = ScenarioSet(
    base=(10.0, 20.0, 40.0),
    scenarios={
        "1a": (20.0, 40.0, 80.0),
        "1b": (15.0, 25.0, 45.0),
        "1c": (20.0, 40.0, 10.0),
        "1d": (40.0, 80.0, 20.0),
        "1e": (25.0, 45.0, 15.0),
        "1f": (10.0, 30.0, 40.0),
        "1g": (10.0, 40.0, 160.0),
    },
)

#: Literature indices on income scenarios; the two statistical ones use log income.
LEGACY_BATTERY = (
    ("1-beta", MeasureSpec("elasticity", status="log")),
    ("1-rho", MeasureSpec("pearson", status="log")),
    ("FO1", MeasureSpec("FO1")),
    ("FO2", MeasureSpec("FO2")),
    ("S_Theil", MeasureSpec("shorrocks", inequality="theil")),
    ("S_Gini", MeasureSpec("shorrocks", inequality="gini")),
    ("RG1", MeasureSpec("RG1", alpha=1.0)),
    ("RG2", MeasureSpec("RG2", alpha=1.0)),
    ("BC_D", MeasureSpec("BCD", alpha=1.0)),
    ("BC_U", MeasureSpec("BCU", alpha=1.0)),
)

#: Class-1 at alpha = 0 and class-2 at gamma = 1 (sample variance for T1).
CLASS_BATTERY = (
    ("A1", MeasureSpec("A1", alpha=0.0)),
    ("A2", MeasureSpec("A2", gamma=1, p_mode="distance")),
    ("S1", MeasureSpec("S1", alpha=0.0)),
    ("S2", MeasureSpec("S2", gamma=1, p_mode="distance")),
    ("T1", MeasureSpec("T1", alpha=0.0, variance="sample")),
    ("T2", MeasureSpec("T2", gamma=1, p_mode="distance")),
)


def _table(title, battery, profiles):
    rows = [lab for lab, _ in battery]
    cols = list(profiles)
    cells = [[evaluate(spec, profiles[c]) for c in cols] for _, spec in battery]
    return ResultTable(title, rows, cols, cells)


def run_paper_tables(which) -> ResultTable:
    """Evaluate one of the built-in batteries.

    ``1``: correlation and slope indices on the two log-income cases.
    ``2``: the ten literature indices on the seven scenarios.
    ``4``: the six class-1/class-2 indices on the seven scenarios.
    """
    which = int(which)
    if which == 1:
        battery = (("1-rho", MeasureSpec("pearson")), ("1-beta", MeasureSpec("elasticity")))
        return _table("statistical indices", battery, LOG_CASES)
    if which == 2:
        return _table("literature indices by scenario", LEGACY_BATTERY, SCENARIOS.profiles())
    if which == 4:
        return _table("class-1 (alpha=0) and class-2 (gamma=1) indices", CLASS_BATTERY, SCENARIOS.profiles())
    raise ValueError(f"no built-in table {which}; choose 1, 2 or 4")
