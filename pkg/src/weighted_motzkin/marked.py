"""Partial 2-Motzkin paths with marked R-visible up steps and elevation lines.

With marks at levels ``y_1 < ... < y_m`` (initial points) and lines at levels
``x_1 < ... < x_{m+1}``, the interleaving is::

    0 <= x_1 <= y_1 < x_2 <= y_2 < ... <= y_m < x_{m+1} <= end_level

so each marked up step lies between two adjacent lines.  Cutting the path
at the marks leaves ``m + 1`` pieces, and piece ``k`` holds exactly one line.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import EnumerationLimitError, InvalidObjectError
from .paths import (
    LatticePath,
    PathClass,
    current_enumeration_cap,
    enumerate_paths,
    r_visible_up_steps,
    validate_path,
)

TWO_MOTZKIN = PathClass.partial_motzkin(horizontal_colors=2)


@dataclass(frozen=True)
class MarkedPartialPath:
    path: LatticePath
    marks: tuple[int, ...]
    lines: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(self.marks))
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def m(self) -> int:
        return len(self.marks)

    def mark_levels(self) -> list[int]:
        starts = self.path.start_heights()
        return [starts[i] for i in self.marks]

    def problems(self) -> list[str]:
        verdict = validate_path(self.path, TWO_MOTZKIN)
        if not verdict:
            return [f"path is not a partial 2-Motzkin path: {verdict}"]
        errs = []
        e = self.path.end_level
        if len(self.lines) != self.m + 1:
            errs.append(f"need {self.m + 1} elevation lines, got {len(self.lines)}")
        visible = set(r_visible_up_steps(self.path))
        for i in self.marks:
            if i not in visible:
                errs.append(f"marked step {i} is not an R-visible up step")
        if any(b <= a for a, b in zip(self.marks, self.marks[1:])):
            errs.append("marks must be strictly increasing")
        if any(not 0 <= x <= e for x in self.lines):
            errs.append(f"elevation lines must lie in 0..{e}")
        if errs:
            return errs
        ys = self.mark_levels()
        xs = self.lines
        for k, y in enumerate(ys):
            if not xs[k] <= y < xs[k + 1]:
                errs.append(f"marked step at level {y} is not between lines {xs[k]} and {xs[k + 1]}")
        return errs

    def validate(self) -> "MarkedPartialPath":
        errs = self.problems()
        if errs:
            raise InvalidObjectError("invalid marked path: " + "; ".join(errs))
        return self

    def to_json(self) -> dict:
        return {"path": self.path.to_json(), "marks": list(self.marks), "lines": list(self.lines)}

    @classmethod
    def from_json(cls, obj: dict) -> "MarkedPartialPath":
        try:
            return cls(LatticePath.from_json(obj["path"]), tuple(obj["marks"]), tuple(obj["lines"]))
        except (KeyError, TypeError) as exc:
            raise InvalidObjectError(f"malformed marked path JSON: {obj!r}") from exc


def line_choices(mark_levels: list[int], end_level: int) -> Iterator[tuple[int, ...]]:
    """Every admissible tuple of elevation lines for the given mark levels."""
    bounds = []
    lo = 0
    for y in mark_levels:
        bounds.append(range(lo, y + 1))
        lo = y + 1
    bounds.append(range(lo, end_level + 1))
    return itertools.product(*bounds)


def enumerate_marked_paths(length: int, m: int, end_level: int | None = None) -> Iterator[MarkedPartialPath]:
    """Every marked partial 2-Motzkin path of the given length with ``m`` marks."""
    cap = current_enumeration_cap()
    emitted = 0
    for p in enumerate_paths(PathClass.partial_motzkin(end_level, horizontal_colors=2), length):
        visible = r_visible_up_steps(p)
        e = p.end_level
        for ys in itertools.combinations(range(e), m):
            marks = tuple(visible[y] for y in ys)
            for lines in line_choices(list(ys), e):
                emitted += 1
                if emitted > cap:
                    raise EnumerationLimitError(emitted, cap)
                yield MarkedPartialPath(p, marks, lines)
