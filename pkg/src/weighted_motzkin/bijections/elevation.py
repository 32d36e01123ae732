"""Elevation: partial Motzkin paths with elevation lines <-> free Motzkin paths."""
from __future__ import annotations

from ..errors import ParameterError
from ..marked import MarkedPartialPath
from ..paths import (
    DOWN,
    HORIZONTAL,
    UP,
    LatticePath,
    PathClass,
    Step,
    U_STEP,
    flip,
    l_visible_down_steps,
    r_visible_up_steps,
    require_valid,
)

DOTTED = 3
DOTTED_STEP = Step(HORIZONTAL, DOTTED)
THREE_MOTZKIN_FREE = PathClass.free_motzkin(horizontal_colors=3)


def elevate(p: LatticePath, line: int) -> LatticePath:
    """Turn the R-visible up steps at levels ``0..line-1`` into down steps.

    The result has the same length and, for down weight ``b``, weight
    ``b**line`` times the weight of ``p``.
    """
    visible = r_visible_up_steps(p)
    if not 0 <= line <= len(visible):
        raise ParameterError(f"elevation line {line} outside 0..{len(visible)}")
    return flip(p, visible[:line], DOWN)


def elevate_inverse(f: LatticePath) -> tuple[LatticePath, int]:
    """Undo :func:`elevate`: flip every L-visible down step back up."""
    visible = l_visible_down_steps(f)
    return flip(f, visible, UP), len(visible)


def multi_elevate(mp: MarkedPartialPath) -> LatticePath:
    """Free 3-Motzkin path with one dotted horizontal step per mark.

    The path is cut as ``P1 U* P2 U* ... U* P(m+1)``; every marked step
    becomes a dotted step and each piece is elevated, relative to its own
    starting height, by the one line that falls inside it.
    """
    mp.validate()
    starts = mp.path.start_heights()
    out: list[Step] = []
    base = begin = 0
    for k, stop in enumerate((*mp.marks, len(mp.path))):
        piece = mp.path[begin:stop]
        out.extend(elevate(piece, mp.lines[k] - base).steps)
        if stop < len(mp.path):
            out.append(DOTTED_STEP)
            base = starts[stop] + 1
        begin = stop + 1
    return LatticePath(tuple(out))


def multi_elevate_inverse(f: LatticePath) -> MarkedPartialPath:
    """Undo :func:`multi_elevate` on a free path with colored horizontals in ``1..3``."""
    require_valid(f, THREE_MOTZKIN_FREE)
    pieces: list[list[Step]] = [[]]
    for s in f.steps:
        if s == DOTTED_STEP:
            pieces.append([])
        else:
            pieces[-1].append(s)
    steps: list[Step] = []
    marks, lines = [], []
    base = 0
    for k, raw in enumerate(pieces):
        q, p = elevate_inverse(LatticePath(tuple(raw)))
        lines.append(base + p)
        steps.extend(q.steps)
        if k + 1 < len(pieces):
            marks.append(len(steps))
            steps.append(U_STEP)
            base += q.end_level + 1
    return MarkedPartialPath(LatticePath(tuple(steps)), tuple(marks), tuple(lines))
