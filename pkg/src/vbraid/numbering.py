"""Integer numbering of braid-word diagrams and the parity of crossings.

Arcs of a diagram (strand segments between classical crossings; virtual
crossings do not break arcs) are numbered by a single bottom-to-top sweep:
strand i's first arc is numbered i, and at each classical crossing the
strand entering on the left exits on the right with its number increased by
one, while the strand entering on the right exits on the left decreased by
one.  The bottom anchors propagate upward uniquely, so the sweep *is* the
numbering.

A classical crossing is even when its incoming numbers satisfy mu = lambda
+ 1 (equivalently, the crossing's oriented smoothing merges equal-numbered
arcs); otherwise it is odd.  A word is almost classical when every
classical crossing is even.  On purely classical words arc numbers coincide
with horizontal positions, so every crossing is even and the top numbers
are 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord


@dataclass(frozen=True)
class CrossingRecord:
    """Incoming data of one classical crossing, in sweep order.

    ``position`` is the generator index i: the crossing joins horizontal
    positions i and i+1.  ``left_in_number``/``right_in_number`` are the
    incoming arc numbers (lambda and mu), ``*_strand`` the incoming strand
    ids by bottom position.
    """

    word_index: int
    sign: int
    position: int
    left_in_number: int
    right_in_number: int
    left_in_strand: int
    right_in_strand: int

    @property
    def is_even(self) -> bool:
        return self.right_in_number == self.left_in_number + 1

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"


@dataclass(frozen=True)
class IntegerNumbering:
    """Sweep output: one record per classical crossing plus the top boundary."""

    strands: int
    crossings: tuple[CrossingRecord, ...]
    top_strands: tuple[int, ...]
    top_numbers: tuple[int, ...]


def integer_numbering(w: BraidWord) -> IntegerNumbering:
    """Number the diagram of ``w`` in one bottom-to-top sweep.

    Total and linear time, with one (strand, number) pair of state per
    horizontal position.  Virtual letters swap the pairs unchanged.
    """
    strands = list(range(1, w.strands + 1))
    numbers = list(range(1, w.strands + 1))
    crossings = []
    for k, letter in enumerate(w.letters):
        i = letter.index
        if letter.is_virtual:
            strands[i - 1], strands[i] = strands[i], strands[i - 1]
            numbers[i - 1], numbers[i] = numbers[i], numbers[i - 1]
            continue
        lam, mu = numbers[i - 1], numbers[i]
        crossings.append(
            CrossingRecord(
                word_index=k,
                sign=letter.sign,
                position=i,
                left_in_number=lam,
                right_in_number=mu,
                left_in_strand=strands[i - 1],
                right_in_strand=strands[i],
            )
        )
        strands[i - 1], strands[i] = strands[i], strands[i - 1]
        numbers[i - 1], numbers[i] = mu - 1, lam + 1
    return IntegerNumbering(w.strands, tuple(crossings), tuple(strands), tuple(numbers))


def parity(w: BraidWord) -> list[tuple[int, str]]:
    """Parity of each classical letter, as (word index, "even"|"odd") pairs."""
    return [(c.word_index, c.parity) for c in integer_numbering(w).crossings]


def is_almost_classical(w: BraidWord) -> bool:
    """True when the propagated numbering is even at every classical crossing."""
    return all(c.is_even for c in integer_numbering(w).crossings)


def top_numbering(w: BraidWord) -> tuple[int, ...]:
    """Arc numbers at the top endpoints, by position from the left."""
    return integer_numbering(w).top_numbers


def smooth(w: BraidWord, k: int) -> BraidWord:
    """Oriented smoothing of the classical crossing at letter ``k``.

    Smoothing leaves both strands at their incoming positions, so on words
    it is deletion of the letter.
    """
    if not 0 <= k < len(w.letters):
        raise IndexError(f"letter index {k} out of range for word of length {len(w.letters)}")
    if w.letters[k].is_virtual:
        raise ValueError(f"letter {k} is virtual; only classical crossings can be smoothed")
    return BraidWord(w.strands, w.letters[:k] + w.letters[k + 1 :])
