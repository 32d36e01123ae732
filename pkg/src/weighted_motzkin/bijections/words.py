"""Words over the finite alphabets that index the bijections."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import InvalidObjectError, ParameterError


class Alphabet:
    """A named, ordered set of string tokens.

    ``separator`` joins tokens in the text form of a word: the empty string
    for single-character alphabets, a space otherwise.
    """

    def __init__(self, name: str, tokens, separator: str = ""):
        self.name = name
        self.tokens = tuple(tokens)
        self.separator = separator
        self._index = {tok: i for i, tok in enumerate(self.tokens)}

    def __contains__(self, token) -> bool:
        return token in self._index

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and (self.name, self.tokens) == (other.name, other.tokens)

    def __hash__(self) -> int:
        return hash((self.name, self.tokens))

    def __repr__(self) -> str:
        return f"Alphabet({self.name!r}, {len(self)} letters)"

    def split(self, text: str) -> list[str]:
        text = text.strip()
        if not text:
            return []
        return text.split() if self.separator else list(text)


PHI_ALPHABET = Alphabet("phi", ("1", "2", "3", "4"))


class SigmaAlphabet(Alphabet):
    """``t**2 + t`` letters ``a1..at``, ``b1..b(t-1)``, ``g1..g(t**2-t)`` and ``d``."""

    def __init__(self, t: int):
        if t < 2:
            raise ParameterError("the sigma alphabet needs t >= 2")
        self.t = t
        tokens = [f"a{r}" for r in range(1, t + 1)]
        tokens += [f"b{s}" for s in range(1, t)]
        tokens += [f"g{k}" for k in range(1, t * t - t + 1)]
        tokens.append("d")
        super().__init__(f"sigma-{t}", tokens, " ")

    @staticmethod
    def alpha(r: int) -> str:
        return f"a{r}"

    @staticmethod
    def beta(s: int) -> str:
        return f"b{s}"

    @staticmethod
    def gamma(k: int) -> str:
        return f"g{k}"

    DELTA = "d"


@dataclass(frozen=True)
class Word:
    letters: tuple[str, ...]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for tok in self.letters:
            if tok not in self.alphabet:
                raise InvalidObjectError(f"letter {tok!r} not in alphabet {self.alphabet.name}")

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "Word":
        return cls(tuple(alphabet.split(text)), alphabet)

    def __str__(self) -> str:
        return self.alphabet.separator.join(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)
