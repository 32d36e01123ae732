"""Dyck path factorizations used by the composition bijections."""
from __future__ import annotations

from ..paths import D_STEP, UP, U_STEP, Step

Steps = tuple[Step, ...]
UD: Steps = (U_STEP, D_STEP)


def last_return_split(seg: Steps) -> tuple[Steps, Steps]:
    """``seg = A U B D`` where the final ``D`` matches the ``U`` after ``A``."""
    h = q = 0
    for i, s in enumerate(seg):
        if h == 0 and s.direction == UP:
            q = i
        h += s.rise
    return seg[:q], seg[q + 1:-1]


def first_return_split(seg: Steps) -> tuple[Steps, Steps]:
    """``seg = U A D B`` where the ``D`` after ``A`` is the first return."""
    h = 0
    for i, s in enumerate(seg):
        h += s.rise
        if h == 0:
            return seg[1:i], seg[i + 1:]
    raise ValueError("not a Dyck path")
