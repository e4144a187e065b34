"""Equality oracle for classical braid words via the action on a free group.

Each classical generator acts on the free group F(x1..xn) by

    s(i):   x(i) -> x(i) x(i+1) x(i)^-1,   x(i+1) -> x(i)
    s(i)^-1: x(i) -> x(i+1),               x(i+1) -> x(i+1)^-1 x(i) x(i+1)

with all other generators fixed.  The induced action of the braid group is
faithful, so two classical words are equal exactly when they act
identically; that decision is what :func:`classical_equal` computes.  The
oracle deliberately rejects virtual letters: the analogous extension to
virtual words is not faithful, and accepting them would invite misuse.

Free-group words are stored as freely reduced tuples of signed generator
indices (+i for x(i), -i for its inverse).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .words import BraidWord


class VirtualLetterError(ValueError):
    """Raised when a virtual letter reaches the classical-only oracle."""


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for v in letters:
        if stack and stack[-1] == -v:
            stack.pop()
        else:
            stack.append(v)
    return tuple(stack)


def _invert(letters: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-v for v in reversed(letters))


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in a free group, as signed generator indices."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for k, v in enumerate(self.letters):
            if v == 0:
                raise ValueError("generator indices are nonzero")
            if k and self.letters[k - 1] == -v:
                raise ValueError(f"not freely reduced at position {k}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> FreeWord:
        return cls(_reduce(index * sign for index, sign in pairs))

    def pairs(self) -> Iterator[tuple[int, int]]:
        """The word as (generator index, exponent sign) pairs."""
        return ((abs(v), 1 if v > 0 else -1) for v in self.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(_invert(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{v}" if v > 0 else f"x{-v}^-1" for v in self.letters)


def free_multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    """Product in the free group: concatenate and cancel."""
    return FreeWord(_reduce(a.letters + b.letters))


@dataclass(frozen=True)
class EndoImages:
    """Images of the free generators x1..xn under an endomorphism."""

    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> EndoImages:
        return cls(tuple(FreeWord((j,)) for j in range(1, n + 1)))

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(img.letters == (j + 1,) for j, img in enumerate(self.images))

    def apply(self, word: FreeWord) -> FreeWord:
        """Image of ``word`` under this endomorphism."""
        out: list[int] = []
        for v in word.letters:
            image = self.images[abs(v) - 1].letters
            for u in image if v > 0 else _invert(image):
                if out and out[-1] == -u:
                    out.pop()
                else:
                    out.append(u)
        return FreeWord(tuple(out))

    def then(self, other: EndoImages) -> EndoImages:
        """Composite endomorphism: this action followed by ``other``."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return EndoImages(tuple(self.apply(img) for img in other.images))


def artin_action(w: BraidWord) -> EndoImages:
    """Compose the generator actions of a classical word, left to right.

    Images are kept freely reduced throughout; each letter at most triples
    the total image length.  Raises :class:`VirtualLetterError` on virtual
    input.
    """
    images: list[tuple[int, ...]] = [(j,) for j in range(1, w.strands + 1)]
    for k, letter in enumerate(w.letters):
        if letter.is_virtual:
            raise VirtualLetterError(
                f"letter {k} ({letter.token()}) is virtual; the oracle decides classical words only"
            )
        i = letter.index
        a, b = images[i - 1], images[i]
        if letter.sign > 0:
            images[i - 1] = _reduce(a + b + _invert(a))
            images[i] = a
        else:
            images[i - 1] = b
            images[i] = _reduce(_invert(b) + a + b)
    return EndoImages(tuple(FreeWord(t) for t in images))


def classical_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Whether two classical words represent the same braid."""
    if w1.strands != w2.strands:
        raise ValueError(f"strand count mismatch: {w1.strands} vs {w2.strands}")
    return artin_action(w1) == artin_action(w2)
