"""Compositions of (colored) Dyck paths.

A composition is stored as the full path plus the step indices after which
it is cut.  The final step is always a cut.  Rooted compositions carry a
1-based distinguished segment; colored compositions carry one segment color
per segment.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EnumerationLimitError, InvalidObjectError, ParameterError
from .paths import (
    LatticePath,
    PathClass,
    current_enumeration_cap,
    enumerate_paths,
    validate_path,
)


@dataclass(frozen=True)
class Composition:
    path: LatticePath
    cuts: tuple[int, ...]
    root: int | None = None
    segment_colors: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cuts", tuple(self.cuts))
        if self.segment_colors is not None:
            object.__setattr__(self, "segment_colors", tuple(self.segment_colors))

    @classmethod
    def from_segments(
        cls,
        segments: Sequence[LatticePath],
        root: int | None = None,
        segment_colors: Sequence[int] | None = None,
    ) -> "Composition":
        steps: list = []
        cuts = []
        for seg in segments:
            steps.extend(seg.steps)
            cuts.append(len(steps) - 1)
        return cls(LatticePath(tuple(steps)), tuple(cuts), root,
                   None if segment_colors is None else tuple(segment_colors))

    @property
    def num_segments(self) -> int:
        return len(self.cuts)

    def segments(self) -> list[LatticePath]:
        out, start = [], 0
        for c in self.cuts:
            out.append(self.path[start:c + 1])
            start = c + 1
        return out

    def problems(self, color_count: int | None = None, t: int | None = None) -> list[str]:
        """All invariant violations; empty when the composition is valid.

        ``color_count`` switches path validation to colored Dyck paths with
        that many up-step colors; ``t`` bounds the segment colors.
        """
        errs = []
        cls = PathClass.dyck() if color_count is None else PathClass.colored_dyck(color_count)
        verdict = validate_path(self.path, cls)
        if not verdict:
            errs.append(f"path: {verdict}")
        n = len(self.path)
        if n == 0:
            errs.append("empty path")
            return errs
        if not self.cuts or self.cuts[-1] != n - 1:
            errs.append("final step must be a cut")
        if any(b <= a for a, b in zip(self.cuts, self.cuts[1:])):
            errs.append("cuts must be strictly increasing")
        heights = self.path.heights()
        for c in self.cuts:
            if not 0 <= c < n or heights[c] != 0:
                errs.append(f"cut after step {c} is not a return point")
        if self.root is not None and not 1 <= self.root <= self.num_segments:
            errs.append(f"root {self.root} outside 1..{self.num_segments}")
        if self.segment_colors is not None:
            cs = self.segment_colors
            if len(cs) != self.num_segments:
                errs.append("need one segment color per segment")
            if any(c < 1 or (t is not None and c > t) for c in cs):
                errs.append(f"segment colors must lie in 1..{t}")
            if 1 not in cs:
                errs.append("coloring is not feasible: color 1 unused")
        return errs

    def validate(self, color_count: int | None = None, t: int | None = None) -> "Composition":
        errs = self.problems(color_count, t)
        if errs:
            raise InvalidObjectError("invalid composition: " + "; ".join(errs))
        return self

    def to_json(self) -> dict:
        return {
            "path": self.path.to_json(),
            "cuts": list(self.cuts),
            "root": self.root,
            "segment_colors": None if self.segment_colors is None else list(self.segment_colors),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Composition":
        try:
            colors = obj.get("segment_colors")
            return cls(
                LatticePath.from_json(obj["path"]),
                tuple(obj["cuts"]),
                obj.get("root"),
                None if colors is None else tuple(colors),
            )
        except (KeyError, TypeError) as exc:
            raise InvalidObjectError(f"malformed composition JSON: {obj!r}") from exc

    def __str__(self) -> str:
        parts = []
        for idx, seg in enumerate(self.segments(), 1):
            s = str(seg)
            if self.segment_colors is not None:
                s += f":c{self.segment_colors[idx - 1]}"
            if self.root == idx:
                s += "*"
            parts.append(s)
        return " | ".join(parts)


def feasible_colorings(num_segments: int, t: int) -> Iterator[tuple[int, ...]]:
    """Colorings of the segments with colors ``1..t`` that use color 1."""
    for cs in itertools.product(range(1, t + 1), repeat=num_segments):
        if 1 in cs:
            yield cs


def enumerate_compositions(
    length: int,
    segments: int | None = None,
    rooted: bool = False,
    color_count: int | None = None,
    t: int | None = None,
) -> Iterator[Composition]:
    """Every composition of every Dyck path with ``length`` steps.

    Paths come in :func:`enumerate_paths` order; for each path every subset
    of its non-final return points is tried as extra cuts.  ``segments``
    keeps only compositions with that many segments, ``rooted`` expands every
    root choice, ``color_count`` uses colored Dyck paths and ``t`` expands
    every feasible segment coloring with colors ``1..t``.
    """
    if length < 2 or length % 2:
        raise ParameterError("composition length must be a positive even number")
    cls = PathClass.dyck() if color_count is None else PathClass.colored_dyck(color_count)
    cap = current_enumeration_cap()
    emitted = 0
    for p in enumerate_paths(cls, length):
        heights = p.heights()
        returns = [i for i, h in enumerate(heights[:-1]) if h == 0]
        for mask in range(1 << len(returns)):
            cuts = tuple(r for b, r in enumerate(returns) if mask >> b & 1) + (length - 1,)
            j = len(cuts)
            if segments is not None and j != segments:
                continue
            roots = range(1, j + 1) if rooted else (None,)
            colorings = feasible_colorings(j, t) if t is not None else (None,)
            for colors in colorings:
                for root in roots:
                    emitted += 1
                    if emitted > cap:
                        raise EnumerationLimitError(emitted, cap)
                    yield Composition(p, cuts, root, colors)
