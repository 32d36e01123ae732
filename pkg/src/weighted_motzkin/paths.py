"""Lattice path data model, path classes, weights and exhaustive enumeration.

A path is an immutable sequence of :class:`Step` values.  Constrained
families (Dyck, Motzkin, partial and free Motzkin, colored Dyck) are not
separate types; they are :class:`PathClass` predicates checked by
:func:`validate_path` and generated by :func:`enumerate_paths`.

Enumeration order is lexicographic with ``U < H < D``; among steps of the
same direction an uncolored step sorts first and colors ascend.
"""
from __future__ import annotations

import contextlib
import contextvars
import enum
import functools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EnumerationLimitError, InvalidObjectError, ParameterError

UP, DOWN, HORIZONTAL = "U", "D", "H"
_RISE = {UP: 1, DOWN: -1, HORIZONTAL: 0}
_RANK = {UP: 0, HORIZONTAL: 1, DOWN: 2}

DEFAULT_ENUMERATION_CAP = 10**8
_cap: contextvars.ContextVar[int] = contextvars.ContextVar(
    "enumeration_cap", default=DEFAULT_ENUMERATION_CAP
)


def current_enumeration_cap() -> int:
    return _cap.get()


@contextlib.contextmanager
def enumeration_cap(cap: int):
    """Temporarily set the maximum number of objects any enumeration may emit."""
    if cap < 0:
        raise ParameterError("enumeration cap must be nonnegative")
    token = _cap.set(cap)
    try:
        yield cap
    finally:
        _cap.reset(token)


def check_cap(needed: int) -> None:
    cap = _cap.get()
    if needed > cap:
        raise EnumerationLimitError(needed, cap)


@dataclass(frozen=True, slots=True)
class Step:
    """One step of a lattice path; ``color`` is ``None`` for uncolored steps."""

    direction: str
    color: int | None = None

    def __post_init__(self):
        if self.direction not in _RISE:
            raise InvalidObjectError(f"unknown step direction {self.direction!r}")
        if self.color is not None and (
            isinstance(self.color, bool) or not isinstance(self.color, int) or self.color < 1
        ):
            raise InvalidObjectError(f"step color must be a positive integer, got {self.color!r}")

    @property
    def rise(self) -> int:
        return _RISE[self.direction]

    def sort_key(self) -> tuple[int, int]:
        return _RANK[self.direction], self.color or 0

    def recolored(self, color: int | None) -> "Step":
        return Step(self.direction, color)

    def __str__(self) -> str:
        return self.direction if self.color is None else f"{self.direction}{self.color}"


U_STEP = Step(UP)
D_STEP = Step(DOWN)
H_STEP = Step(HORIZONTAL)

_TOKEN = re.compile(r"([UDH])(\d*)")


@dataclass(frozen=True)
class LatticePath:
    """An immutable sequence of steps starting at height 0."""

    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        if not isinstance(self.steps, tuple):
            object.__setattr__(self, "steps", tuple(self.steps))

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        """Parse the text encoding, e.g. ``"UHU3DD"``."""
        steps = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise InvalidObjectError(f"cannot parse path at offset {pos}: {text!r}")
            color = int(m.group(2)) if m.group(2) else None
            steps.append(Step(m.group(1), color))
            pos = m.end()
        return cls(tuple(steps))

    @classmethod
    def from_json(cls, obj) -> "LatticePath":
        """Accept ``{"steps": [{"dir": "U", "color": 3}, ...]}`` or a text string."""
        if isinstance(obj, str):
            return cls.parse(obj)
        try:
            raw = obj["steps"]
            return cls(tuple(Step(s["dir"], s.get("color")) for s in raw))
        except (KeyError, TypeError) as exc:
            raise InvalidObjectError(f"malformed path JSON: {obj!r}") from exc

    def to_json(self) -> dict:
        out = []
        for s in self.steps:
            d: dict = {"dir": s.direction}
            if s.color is not None:
                d["color"] = s.color
            out.append(d)
        return {"steps": out}

    def __str__(self) -> str:
        return "".join(map(str, self.steps))

    def __repr__(self) -> str:
        return f"LatticePath({str(self)!r})"

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return LatticePath(self.steps[index])
        return self.steps[index]

    def __add__(self, other: "LatticePath") -> "LatticePath":
        return LatticePath(self.steps + tuple(other))

    def sort_key(self) -> tuple:
        return tuple(s.sort_key() for s in self.steps)

    @property
    def shape(self) -> str:
        """Directions only, colors dropped."""
        return "".join(s.direction for s in self.steps)

    def heights(self) -> list[int]:
        """Height after each step."""
        h, out = 0, []
        for s in self.steps:
            h += s.rise
            out.append(h)
        return out

    def start_heights(self) -> list[int]:
        """Height of the initial point of each step."""
        h, out = 0, []
        for s in self.steps:
            out.append(h)
            h += s.rise
        return out

    @property
    def end_level(self) -> int:
        return sum(s.rise for s in self.steps)

    @property
    def min_level(self) -> int:
        return min([0, *self.heights()])

    def count(self, direction: str, color: int | None = None) -> int:
        if color is None:
            return sum(1 for s in self.steps if s.direction == direction)
        return sum(1 for s in self.steps if s.direction == direction and s.color == color)


def path(text: str) -> LatticePath:
    """Shorthand for :meth:`LatticePath.parse`."""
    return LatticePath.parse(text)


class PathKind(enum.Enum):
    DYCK = "dyck"
    MOTZKIN = "motzkin"
    PARTIAL_MOTZKIN = "partial-motzkin"
    FREE_MOTZKIN = "free-motzkin"
    COLORED_DYCK = "colored-dyck"


@dataclass(frozen=True)
class PathClass:
    """A family of paths.

    ``end_level`` fixes the final height of partial (and optionally free)
    Motzkin paths; ``None`` admits every end level.  ``color_count`` is the
    number of up-step colors of a colored Dyck path.  ``horizontal_colors``,
    when set, requires every horizontal step to carry a color in
    ``1..horizontal_colors`` and makes enumeration expand those colors.
    """

    kind: PathKind
    end_level: int | None = None
    color_count: int | None = None
    horizontal_colors: int | None = None

    def __post_init__(self):
        k = self.kind
        if k is PathKind.COLORED_DYCK:
            if self.color_count is None or self.color_count < 0:
                raise ParameterError("colored Dyck class needs color_count >= 0")
        elif self.color_count is not None:
            raise ParameterError("color_count only applies to colored Dyck paths")
        if k in (PathKind.DYCK, PathKind.MOTZKIN, PathKind.COLORED_DYCK) and self.end_level not in (None, 0):
            raise ParameterError(f"{k.value} paths always end at level 0")
        if k is PathKind.PARTIAL_MOTZKIN and self.end_level is not None and self.end_level < 0:
            raise ParameterError("partial Motzkin end level must be >= 0")
        if self.horizontal_colors is not None:
            if k in (PathKind.DYCK, PathKind.COLORED_DYCK):
                raise ParameterError("Dyck paths have no horizontal steps")
            if self.horizontal_colors < 1:
                raise ParameterError("horizontal_colors must be >= 1")

    @classmethod
    def dyck(cls) -> "PathClass":
        return cls(PathKind.DYCK)

    @classmethod
    def motzkin(cls, horizontal_colors: int | None = None) -> "PathClass":
        return cls(PathKind.MOTZKIN, horizontal_colors=horizontal_colors)

    @classmethod
    def partial_motzkin(cls, end_level: int | None = None, horizontal_colors: int | None = None) -> "PathClass":
        return cls(PathKind.PARTIAL_MOTZKIN, end_level=end_level, horizontal_colors=horizontal_colors)

    @classmethod
    def free_motzkin(cls, end_level: int | None = None, horizontal_colors: int | None = None) -> "PathClass":
        return cls(PathKind.FREE_MOTZKIN, end_level=end_level, horizontal_colors=horizontal_colors)

    @classmethod
    def colored_dyck(cls, color_count: int) -> "PathClass":
        return cls(PathKind.COLORED_DYCK, color_count=color_count)

    @property
    def nonnegative(self) -> bool:
        return self.kind is not PathKind.FREE_MOTZKIN

    @property
    def allows_horizontal(self) -> bool:
        return self.kind not in (PathKind.DYCK, PathKind.COLORED_DYCK)

    @property
    def target(self) -> int | None:
        if self.kind in (PathKind.DYCK, PathKind.MOTZKIN, PathKind.COLORED_DYCK):
            return 0
        return self.end_level

    def with_end_level(self, end_level: int | None) -> "PathClass":
        """Restrict to a final height; conflicting restrictions are an error."""
        if end_level is None:
            return self
        current = self.target
        if current is not None:
            if current != end_level:
                raise ParameterError(f"{self.kind.value} class already ends at level {current}")
            return self
        return PathClass(self.kind, end_level, self.color_count, self.horizontal_colors)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        where = "" if self.index is None else f" at step {self.index}"
        return f"violation{where}: {self.reason}"


def validate_path(p: LatticePath, path_class: PathClass) -> Verdict:
    """Check ``p`` against every invariant of ``path_class``.

    Violations are returned, not raised; the verdict names the first failed
    invariant and the step index where it occurs.
    """
    kind = path_class.kind
    steps = p.steps
    h = 0
    for i, s in enumerate(steps):
        if s.direction == HORIZONTAL:
            if not path_class.allows_horizontal:
                return Verdict(False, "horizontal step not allowed", i)
            hc = path_class.horizontal_colors
            if hc is not None and (s.color is None or s.color > hc):
                return Verdict(False, f"horizontal step needs a color in 1..{hc}", i)
        elif kind is PathKind.COLORED_DYCK:
            if s.direction == UP:
                followed_by_down = i + 1 < len(steps) and steps[i + 1].direction == DOWN
                if followed_by_down and s.color is not None:
                    return Verdict(False, "up step followed by a down step must be uncolored", i)
                if not followed_by_down and (s.color is None or s.color > path_class.color_count):
                    return Verdict(False, f"up step needs a color in 1..{path_class.color_count}", i)
            elif s.color is not None:
                return Verdict(False, "down steps are uncolored", i)
        elif s.color is not None:
            return Verdict(False, "up and down steps are uncolored", i)
        h += s.rise
        if path_class.nonnegative and h < 0:
            return Verdict(False, f"prefix height {h} below the axis", i)
    target = path_class.target
    if target is not None and h != target:
        return Verdict(False, f"final height {h}, expected {target}", len(steps) - 1 if steps else None)
    return Verdict(True)


def require_valid(p: LatticePath, path_class: PathClass) -> None:
    verdict = validate_path(p, path_class)
    if not verdict:
        raise InvalidObjectError(f"{p} is not a valid {path_class.kind.value} path: {verdict}")


@dataclass(frozen=True)
class WeightSpec:
    """Step weights: up 1, horizontal ``a``, down ``b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 1:
            raise ParameterError(f"need a >= 0 and b >= 1, got a={self.a}, b={self.b}")

    @classmethod
    def from_kt(cls, k: int, t: int) -> "WeightSpec":
        """Weights of the (k - t - 1, t) family, whose step weights sum to ``k``."""
        return cls(k - t - 1, t)

    @property
    def k(self) -> int:
        return 1 + self.a + self.b


def weight(p: LatticePath, w: WeightSpec) -> int:
    """Product of step weights; the empty path weighs 1."""
    return w.a ** p.count(HORIZONTAL) * w.b ** p.count(DOWN)


# Enumeration automaton.  A token is a step plus a constraint on the next
# step: None, "D" (next must be a down step) or "U" (next must be an up step).
def _tokens(path_class: PathClass) -> list[tuple[Step, str | None]]:
    if path_class.kind is PathKind.COLORED_DYCK:
        toks = [(U_STEP, DOWN)]
        toks += [(Step(UP, c), UP) for c in range(1, path_class.color_count + 1)]
        toks.append((D_STEP, None))
        return toks
    toks = [(U_STEP, None)]
    if path_class.allows_horizontal:
        hc = path_class.horizontal_colors
        if hc is None:
            toks.append((H_STEP, None))
        else:
            toks += [(Step(HORIZONTAL, c), None) for c in range(1, hc + 1)]
    toks.append((D_STEP, None))
    return toks


def _reachable(path_class: PathClass, h: int, remaining: int) -> bool:
    if path_class.nonnegative and h < 0:
        return False
    target = path_class.target
    if target is None:
        return True
    gap = abs(h - target)
    if gap > remaining:
        return False
    if not path_class.allows_horizontal and (remaining - gap) % 2:
        return False
    return True


def count_paths(path_class: PathClass, length: int) -> int:
    """Number of objects :func:`enumerate_paths` would emit, by dynamic programming."""
    if length < 0:
        raise ParameterError("length must be >= 0")
    toks = _tokens(path_class)

    @functools.lru_cache(maxsize=None)
    def go(pos: int, h: int, pending: str | None) -> int:
        if not _reachable(path_class, h, length - pos):
            return 0
        if pos == length:
            return 1 if pending is None and (path_class.target is None or h == path_class.target) else 0
        total = 0
        for step, nxt in toks:
            if pending is not None and step.direction != pending:
                continue
            total += go(pos + 1, h + step.rise, nxt)
        return total

    return go(0, 0, None)


def _walk(path_class: PathClass, length: int) -> Iterator[tuple[Step, ...]]:
    toks = _tokens(path_class)
    target = path_class.target
    buf: list[Step] = []

    def go(h: int, pending: str | None) -> Iterator[tuple[Step, ...]]:
        pos = len(buf)
        if pos == length:
            if pending is None and (target is None or h == target):
                yield tuple(buf)
            return
        for step, nxt in toks:
            if pending is not None and step.direction != pending:
                continue
            nh = h + step.rise
            if not _reachable(path_class, nh, length - pos - 1):
                continue
            buf.append(step)
            yield from go(nh, nxt)
            buf.pop()

    if _reachable(path_class, 0, length):
        yield from go(0, None)


def enumerate_paths(path_class: PathClass, length: int) -> Iterator[LatticePath]:
    """Yield every path of ``path_class`` with ``length`` steps, exactly once.

    Colored Dyck paths are expanded over all admissible up-step colorings,
    and classes with ``horizontal_colors`` over all horizontal colorings.

    Raises
    ------
    EnumerationLimitError
        Before emitting anything, if the output would exceed the current cap.
    """
    check_cap(count_paths(path_class, length))
    return (LatticePath(steps) for steps in _walk(path_class, length))


def _uncolored(path_class: PathClass) -> tuple[PathClass, int, int]:
    """Shape class plus (up-step color count, horizontal color count) multiplicities."""
    if path_class.kind is PathKind.COLORED_DYCK:
        return PathClass.dyck(), path_class.color_count, 1
    hc = path_class.horizontal_colors
    if hc is None:
        return path_class, 1, 1
    return PathClass(path_class.kind, path_class.end_level), 1, hc


def count_weighted(
    path_class: PathClass,
    length: int,
    end_level: int | None = None,
    weights: WeightSpec | None = None,
) -> int:
    """Total weight of all paths of ``path_class`` of the given length.

    Equal to ``sum(weight(p, weights) for p in enumerate_paths(...))``, but
    only uncolored shapes are walked and color choices enter as per-shape
    multiplicities.  With ``weights=None`` every step weighs 1, so the result
    is the cardinality of the (color-expanded) enumeration.
    """
    cls = path_class.with_end_level(end_level)
    w = weights or WeightSpec(1, 1)
    shape_class, up_colors, h_colors = _uncolored(cls)
    check_cap(count_paths(shape_class, length))
    total = 0
    for steps in _walk(shape_class, length):
        nh = nd = colorable = 0
        for i, s in enumerate(steps):
            d = s.direction
            if d == HORIZONTAL:
                nh += 1
            elif d == DOWN:
                nd += 1
            elif i + 1 < length and steps[i + 1].direction != DOWN:
                colorable += 1
        mult = h_colors**nh
        if cls.kind is PathKind.COLORED_DYCK:
            mult *= up_colors**colorable
        total += mult * w.a**nh * w.b**nd
    return total


def r_visible_up_steps(p: LatticePath) -> list[int]:
    """Indices of the R-visible up steps, one per level ``0..end_level-1``.

    The R-visible up step at level ``l`` is the rightmost up step whose
    initial point is at height ``l``; no step at that level follows it.
    """
    require_valid(p, PathClass(PathKind.PARTIAL_MOTZKIN))
    starts = p.start_heights()
    rightmost: dict[int, int] = {}
    for i in range(len(p) - 1, -1, -1):
        if p.steps[i].direction == UP and starts[i] not in rightmost:
            rightmost[starts[i]] = i
    return [rightmost[level] for level in range(p.end_level)]


def l_visible_down_steps(p: LatticePath) -> list[int]:
    """Indices of the L-visible down steps of a free path.

    For each level ``-1, -2, ..., min_level`` this is the down step that first
    reaches that level, i.e. the leftmost step ending there with nothing at
    that level to its left.
    """
    out = []
    low = h = 0
    for i, s in enumerate(p.steps):
        h += s.rise
        if h < low:
            out.append(i)
            low = h
    return out


def flip(p: LatticePath, indices: Iterable[int], direction: str) -> LatticePath:
    """Replace the steps at ``indices`` by uncolored steps of ``direction``."""
    steps = list(p.steps)
    for i in indices:
        steps[i] = Step(direction)
    return LatticePath(tuple(steps))
