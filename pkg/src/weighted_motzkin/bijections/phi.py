"""Rooted compositions of Dyck paths of length ``2i`` <-> words of length ``i-1`` on ``{1,2,3,4}``.

Each step peels the first segment ``P1 = A U B D`` (last-return
factorization) and emits one letter:

====================  ======  ===============================  ================
first segment         letter  remaining segments               new root
====================  ======  ===============================  ================
``UD``, root 1        1       ``P2 .. Pj``                     1
``UD``, root r > 1    2       ``P2 .. Pj``                     r - 1
``A U D``             3       ``A, P2 .. Pj``                  r
``A U B D``           1       ``A, B, P2 .. Pj``               2 if r == 1 else r + 1
``U B D``             4       ``B, P2 .. Pj``                  r
====================  ======  ===============================  ================

The inverse reads letters right to left; a ``1`` is disambiguated by the
current root: root 1 undoes the first row, root 2 and root > 2 undo the
fourth row with old root 1 and ``r - 1`` respectively.
"""
from __future__ import annotations

from ..compositions import Composition
from ..errors import InvalidObjectError
from ..paths import D_STEP, LatticePath, U_STEP
from ._dyck import UD, last_return_split
from .words import PHI_ALPHABET, Word


def phi(c: Composition) -> Word:
    """Encode a rooted composition as a word of length ``i - 1``."""
    c.validate()
    if c.root is None:
        raise InvalidObjectError("phi needs a rooted composition")
    segs = [seg.steps for seg in c.segments()]
    root = c.root
    letters = []
    while len(segs) > 1 or len(segs[0]) > 2:
        first, rest = segs[0], segs[1:]
        a, b = last_return_split(first)
        if not a and not b:
            if root == 1:
                letters.append("1")
            else:
                letters.append("2")
                root -= 1
            segs = rest
        elif not b:
            letters.append("3")
            segs = [a, *rest]
        elif a:
            letters.append("1")
            segs = [a, b, *rest]
            root = 2 if root == 1 else root + 1
        else:
            letters.append("4")
            segs = [b, *rest]
    return Word(tuple(letters), PHI_ALPHABET)


def phi_inverse(w: Word | str) -> Composition:
    """Rebuild the rooted composition whose code is ``w``."""
    if isinstance(w, str):
        w = Word.parse(w, PHI_ALPHABET)
    segs = [UD]
    root = 1
    for letter in reversed(w.letters):
        if letter == "2":
            segs = [UD, *segs]
            root += 1
        elif letter == "3":
            segs = [segs[0] + UD, *segs[1:]]
        elif letter == "4":
            segs = [(U_STEP, *segs[0], D_STEP), *segs[1:]]
        elif root == 1:
            segs = [UD, *segs]
        else:
            segs = [(*segs[0], U_STEP, *segs[1], D_STEP), *segs[2:]]
            root = 1 if root == 2 else root - 1
    return Composition.from_segments([LatticePath(s) for s in segs], root=root)
