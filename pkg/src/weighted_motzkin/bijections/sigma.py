"""Feasibly colored compositions of ``(t^2-t)``-Dyck paths <-> words on ``t^2+t`` letters.

The first segment is factored as ``P1 = U A D B`` (first return).  With
segment colors ``c``:

* ``UD`` and color 1 still used later: ``a<c1>``, drop ``P1``.
* ``UD`` colored 1 and color 1 unused later: ``b<s>`` where ``P2`` has color
  ``s + 1``; drop ``P1`` and recolor ``P2`` with color 1.
* ``UD B``: ``d``, ``P1`` becomes ``B``.
* ``U A D``: ``g<k>`` with ``k`` the color of the first up step, ``P1`` becomes ``A``.
* ``U A D B``: up-step color ``k = (s-1)*t + r`` gives ``b<s>``; ``P1`` is
  replaced by ``A`` colored ``r`` and ``B`` carrying the old color of ``P1``.

A ``b`` letter is inverted as the last case exactly when at least two
segments remain and color 1 occurs after the first of them.
"""
from __future__ import annotations

from ..compositions import Composition
from ..errors import InvalidObjectError
from ..paths import D_STEP, LatticePath, Step, UP
from ._dyck import UD, first_return_split
from .words import SigmaAlphabet, Word


def encode_pair(r: int, s: int, t: int) -> int:
    """Up-step color for the pair (segment color ``r``, letter ``b<s>``)."""
    return (s - 1) * t + r


def decode_pair(k: int, t: int) -> tuple[int, int]:
    return (k - 1) % t + 1, (k - 1) // t + 1


def sigma(c: Composition, t: int) -> Word:
    """Encode a feasibly colored composition as a word of length ``i - 1``."""
    alphabet = SigmaAlphabet(t)
    c.validate(color_count=t * t - t, t=t)
    if c.segment_colors is None:
        raise InvalidObjectError("sigma needs segment colors")
    segs = [seg.steps for seg in c.segments()]
    colors = list(c.segment_colors)
    letters = []
    while len(segs) > 1 or len(segs[0]) > 2:
        first = segs[0]
        a, b = first_return_split(first)
        if not a and not b:
            if 1 in colors[1:]:
                letters.append(alphabet.alpha(colors[0]))
                colors = colors[1:]
            else:
                letters.append(alphabet.beta(colors[1] - 1))
                colors = [1, *colors[2:]]
            segs = segs[1:]
        elif not a:
            letters.append(alphabet.DELTA)
            segs = [b, *segs[1:]]
        elif not b:
            letters.append(alphabet.gamma(first[0].color))
            segs = [a, *segs[1:]]
        else:
            r, s = decode_pair(first[0].color, t)
            letters.append(alphabet.beta(s))
            segs = [a, b, *segs[1:]]
            colors = [r, *colors]
    return Word(tuple(letters), alphabet)


def sigma_inverse(w: Word | str, t: int) -> Composition:
    """Rebuild the colored composition whose code is ``w``."""
    alphabet = SigmaAlphabet(t)
    if isinstance(w, str):
        w = Word.parse(w, alphabet)
    segs = [UD]
    colors = [1]
    for letter in reversed(w.letters):
        kind, num = letter[0], int(letter[1:] or 0)
        if kind == "a":
            segs = [UD, *segs]
            colors = [num, *colors]
        elif kind == "d":
            segs = [UD + segs[0], *segs[1:]]
        elif kind == "g":
            segs = [(Step(UP, num), *segs[0], D_STEP), *segs[1:]]
        elif len(segs) >= 2 and 1 in colors[1:]:
            k = encode_pair(colors[0], num, t)
            segs = [(Step(UP, k), *segs[0], D_STEP, *segs[1]), *segs[2:]]
            colors = colors[1:]
        else:
            segs = [UD, *segs]
            colors = [1, num + 1, *colors[1:]]
    return Composition.from_segments([LatticePath(s) for s in segs], segment_colors=colors)
