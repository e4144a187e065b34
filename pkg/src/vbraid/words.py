"""Words over the classical and virtual braid generators.

A braid word on n strands is a finite sequence of letters, each either a
classical generator (signed) or a virtual generator, with generator indices
in [1, n-1].  Read left to right, the letters stack crossings from the
bottom of the diagram to the top.  Words carry their strand count so that
values from different groups cannot be mixed silently.

The ASCII grammar is ``sK`` for the K-th classical generator, ``SK`` for its
inverse, and ``tK`` for the K-th virtual generator, separated by whitespace
or ``.``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator


class BraidSyntaxError(ValueError):
    """Raised by :func:`parse` for malformed input; carries the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Letter:
    """One crossing.  ``sign`` is +1 or -1 for classical letters, 0 for virtual."""

    index: int
    sign: int

    @property
    def is_virtual(self) -> bool:
        return self.sign == 0

    @property
    def is_classical(self) -> bool:
        return self.sign != 0

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)

    def token(self) -> str:
        if self.sign == 0:
            return f"t{self.index}"
        return f"{'s' if self.sign > 0 else 'S'}{self.index}"

    def __repr__(self) -> str:
        return f"Letter({self.token()!r})"


def sigma(index: int, sign: int = 1) -> Letter:
    """Classical generator; ``sign=-1`` gives the inverse."""
    if sign not in (1, -1):
        raise ValueError(f"classical sign must be +1 or -1, got {sign}")
    return Letter(index, sign)


def tau(index: int) -> Letter:
    """Virtual generator (self-inverse)."""
    return Letter(index, 0)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n.

    For a braid word this is the occupancy map of the top of the diagram:
    ``images[p-1]`` is the strand (numbered by its bottom position) that
    ends at top position p.  Both a classical and a virtual generator at
    index i contribute the transposition (i, i+1).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def then(self, other: Permutation) -> Permutation:
        """Permutation of this diagram with ``other`` stacked on top of it."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class BraidWord:
    """An immutable word over the braid generators on ``strands`` strands."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        for k, letter in enumerate(self.letters):
            if letter.sign not in (-1, 0, 1):
                raise ValueError(f"letter {k}: bad sign {letter.sign}")
            if not 1 <= letter.index <= self.strands - 1:
                raise ValueError(
                    f"letter {k} ({letter.token()}): index {letter.index} out of range "
                    f"for {self.strands} strands (valid: 1..{self.strands - 1})"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(letter.token() for letter in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        """Concatenation (group product); strand counts must agree."""
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise ValueError(f"strand count mismatch: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    @property
    def is_classical(self) -> bool:
        """True when the word has no virtual letters."""
        return all(letter.is_classical for letter in self.letters)

    def inverse(self) -> BraidWord:
        """Reverse the letters and invert each one."""
        return BraidWord(self.strands, tuple(l.inverse() for l in reversed(self.letters)))

    def free_reduce(self) -> BraidWord:
        """Delete adjacent inverse pairs (sigma with its inverse, tau with
        itself) until none remain.

        Only literal cancellations are performed; commutations and the
        triple relations are rewriting moves, not normalization.
        """
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and _cancels(stack[-1], letter):
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(self.strands, tuple(stack))

    def permutation(self) -> Permutation:
        """Occupancy permutation of the top of the diagram (see :class:`Permutation`)."""
        occ = list(range(1, self.strands + 1))
        for letter in self.letters:
            i = letter.index
            occ[i - 1], occ[i] = occ[i], occ[i - 1]
        return Permutation(tuple(occ))


def _cancels(a: Letter, b: Letter) -> bool:
    return a.index == b.index and (a.sign == -b.sign if a.is_classical else b.is_virtual)


_TOKEN_RE = re.compile(r"([sSt])([0-9]+)$")


def parse(text: str, strands: int) -> BraidWord:
    """Parse the ASCII grammar into a word on ``strands`` strands.

    Tokens are separated by whitespace or ``.``; the empty string is the
    identity braid.  Raises :class:`BraidSyntaxError` for malformed tokens
    and ``ValueError`` for generator indices outside [1, strands-1].
    """
    if strands < 1:
        raise ValueError(f"strand count must be >= 1, got {strands}")
    letters = []
    for match in re.finditer(r"[^\s.]+", text):
        token, position = match.group(), match.start()
        parsed = _TOKEN_RE.match(token)
        if parsed is None:
            raise BraidSyntaxError(f"bad token {token!r}", position)
        head, index = parsed.group(1), int(parsed.group(2))
        if not 1 <= index <= strands - 1:
            raise ValueError(
                f"token {token!r} at position {position}: index {index} out of range "
                f"for {strands} strands (valid: 1..{strands - 1})"
            )
        letters.append(tau(index) if head == "t" else sigma(index, 1 if head == "s" else -1))
    return BraidWord(strands, tuple(letters))
