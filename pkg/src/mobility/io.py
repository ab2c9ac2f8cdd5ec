"""Reading profiles, group labels and scenario sets; rendering result tables.

Formats
-------
profile CSV
    Header ``id,u,v``, one row per person, ``.`` decimals.
groups CSV
    Header ``id,group``.
scenario JSON
    ``{"base": [...], "scenarios": {"label": [...], ...}}``; each scenario
    is a destination vector for the shared origin ``base``.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import BadNumber, DuplicateId, LengthMismatch, MissingHeader, ParseError, TooSmall, UnknownGroupId
from .profile import MovementProfile

__all__ = [
    "parse_profile_csv",
    "read_profile_csv",
    "write_profile_csv",
    "parse_groups_csv",
    "ScenarioSet",
    "parse_scenarios_json",
    "ResultTable",
    "format_number",
]


def _rows(text, header):
    # newline="" lets csv handle both LF and CRLF
    reader = csv.reader(_io.StringIO(text, newline=""))
    try:
        first = next(reader)
    except StopIteration:
        raise MissingHeader(f"expected header {','.join(header)!r}, file is empty") from None
    if [h.strip().lower() for h in first] != list(header):
        raise MissingHeader(f"expected header {','.join(header)!r}, got {','.join(first)!r}")
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise ParseError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        yield lineno, [c.strip() for c in row]


def _number(text, lineno):
    try:
        x = float(text)
    except ValueError:
        raise BadNumber(lineno, text) from None
    if not math.isfinite(x):
        raise BadNumber(lineno, text)
    return x


def read_profile_csv(text: str):
    """Parse profile CSV text; returns ``(ids, MovementProfile)``."""
    ids, u, v = [], [], []
    seen = set()
    for lineno, (pid, us, vs) in _rows(text, ("id", "u", "v")):
        if pid in seen:
            raise DuplicateId(f"line {lineno}: id {pid!r} appears twice")
        seen.add(pid)
        ids.append(pid)
        u.append(_number(us, lineno))
        v.append(_number(vs, lineno))
    if len(ids) < 2:
        raise TooSmall(f"need at least 2 histories, got {len(ids)}")
    return ids, MovementProfile(u, v)


def parse_profile_csv(path) -> MovementProfile:
    """Read a profile from a CSV file with header ``id,u,v``.

    Raises
    ------
    MissingHeader, BadNumber, DuplicateId, TooSmall
    """
    return read_profile_csv(Path(path).read_text(encoding="utf-8"))[1]


def write_profile_csv(path, p: MovementProfile, ids=None) -> None:
    """Write ``p`` as ``id,u,v`` CSV using shortest round-tripping floats."""
    ids = [str(i + 1) for i in range(p.n)] if ids is None else [str(i) for i in ids]
    lines = ["id,u,v"] + [f"{i},{repr(float(a))},{repr(float(b))}" for i, a, b in zip(ids, p.u, p.v)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_groups_csv(path, ids) -> np.ndarray:
    """Group labels aligned with profile ``ids``.

    Every profile id needs a label; ids not in the profile raise
    :class:`UnknownGroupId`, as do profile ids without one.
    """
    text = Path(path).read_text(encoding="utf-8")
    mapping = {}
    for lineno, (pid, grp) in _rows(text, ("id", "group")):
        if pid in mapping:
            raise DuplicateId(f"line {lineno}: id {pid!r} appears twice")
        mapping[pid] = grp
    known = set(ids)
    extra = [k for k in mapping if k not in known]
    if extra:
        raise UnknownGroupId(f"group file mentions unknown id {extra[0]!r}")
    missing = [i for i in ids if i not in mapping]
    if missing:
        raise UnknownGroupId(f"id {missing[0]!r} has no group")
    return np.array([mapping[i] for i in ids], dtype=object)


@dataclass(frozen=True)
class ScenarioSet:
    """One origin vector and several named destination vectors."""

    base: tuple
    scenarios: dict

    def __post_init__(self):
        for lab, v in self.scenarios.items():
            if len(v) != len(self.base):
                raise LengthMismatch(f"scenario {lab!r} has {len(v)} values, base has {len(self.base)}")

    def profiles(self) -> dict:
        return {lab: MovementProfile(self.base, v) for lab, v in self.scenarios.items()}


def parse_scenarios_json(path_or_text) -> ScenarioSet:
    text = str(path_or_text)
    if not text.lstrip().startswith("{"):
        text = Path(path_or_text).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
        base = tuple(float(x) for x in data["base"])
        sc = {str(k): tuple(float(x) for x in v) for k, v in data["scenarios"].items()}
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad scenario file: {exc}") from None
    return ScenarioSet(base, sc)


def format_number(x, decimals=3) -> str:
    """Fixed-point text with ``.`` decimals; infinities as ``inf``; no ``-0``."""
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    s = f"{round(x, decimals) + 0.0:.{decimals}f}"
    if s.startswith("-") and float(s) == 0:
        s = s[1:]
    return s


@dataclass
class ResultTable:
    """Measures by scenarios."""

    title: str
    rows: list
    columns: list
    cells: list = field(default_factory=list)  # rows x columns of float

    def value(self, row, col) -> float:
        return self.cells[self.rows.index(row)][self.columns.index(col)]

    def to_tsv(self, decimals=3) -> str:
        out = ["\t".join(["measure"] + list(self.columns))]
        for r, vals in zip(self.rows, self.cells):
            out.append("\t".join([r] + [format_number(x, decimals) for x in vals]))
        return "\n".join(out) + "\n"

    def to_json(self, decimals=3) -> dict:
        return {
            "title": self.title,
            "columns": list(self.columns),
            "rows": [
                {"measure": r, "values": {c: format_number(x, decimals) for c, x in zip(self.columns, vals)}}
                for r, vals in zip(self.rows, self.cells)
            ],
        }
