"""Finitely presented semigroups: words, equations, presentations.

A word is a nonempty string of lowercase ASCII letters, each letter a
generator.  An equation asserts that two words denote the same element in
every model of the presentation; a presentation is a finite list of such
equations together with the alphabet they range over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

__all__ = ["check_word", "Equation", "Presentation"]

_LOWER = frozenset("abcdefghijklmnopqrstuvwxyz")


def check_word(word: str, what: str = "word") -> str:
    """Validate a word: nonempty, lowercase ASCII letters only."""
    if not isinstance(word, str):
        raise TypeError(f"{what} must be a string, got {type(word).__name__}")
    if not word:
        raise ValueError(f"{what} must be nonempty")
    for ch in word:
        if ch not in _LOWER:
            raise ValueError(f"{what} {word!r} contains {ch!r}; only a-z are generators")
    return word


@dataclass(frozen=True, slots=True)
class Equation:
    """An identity ``lhs = rhs`` between two nonempty words."""

    lhs: str
    rhs: str

    def __post_init__(self):
        check_word(self.lhs, "left side")
        check_word(self.rhs, "right side")

    def letters(self) -> frozenset[str]:
        return frozenset(self.lhs) | frozenset(self.rhs)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True, slots=True)
class Presentation:
    """A finite semigroup presentation: equations over an alphabet.

    The alphabet always contains every letter used by the equations and may
    include extra generators that no equation mentions.
    """

    equations: tuple[Equation, ...]
    alphabet: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        used: set[str] = set()
        for eq in self.equations:
            if not isinstance(eq, Equation):
                raise TypeError(f"expected an Equation, got {eq!r}")
            used |= eq.letters()
        for ch in self.alphabet:
            check_word(ch, "alphabet letter")
            if len(ch) != 1:
                raise ValueError(f"alphabet entries are single letters, got {ch!r}")
        object.__setattr__(self, "alphabet", frozenset(self.alphabet) | used)

    @classmethod
    def of(cls, equations: Iterable[Equation | tuple[str, str]], extra_letters: str = "") -> "Presentation":
        eqs = tuple(e if isinstance(e, Equation) else Equation(*e) for e in equations)
        return cls(eqs, frozenset(extra_letters))

    def __str__(self) -> str:
        return "; ".join(str(eq) for eq in self.equations)
