"""Local rewriting moves on braid words and a seeded random walk over them.

Every defining relation of the classical and virtual braid groups is
exposed as a reversible move on words:

* ``U1``/``V1``/``V5`` - distant commutations (|i-j| > 1), applied as swaps
  of adjacent letters;
* ``U2``/``V2`` - deletion or insertion of an adjacent canceling pair;
* ``U3``/``V3`` - the triple rewrites s(i) s(i-1) s(i) <-> s(i-1) s(i) s(i-1)
  (uniform sign for the classical case) and likewise for virtual letters;
* ``V4`` - the mixed triple t(i) t(i-1) s(i) <-> s(i-1) t(i) t(i-1), with the
  classical letter positive, exactly as the relation is stated.

Mixed-sign variants of U3 and signed variants of V4 are not primitive;
walks reach them by composing pair insertions with the moves above.  Every
move preserves the word's underlying permutation and its length modulo 2.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .words import BraidWord, Letter, sigma, tau


class MoveKind(enum.Enum):
    U1 = "U1"
    U2 = "U2"
    U3 = "U3"
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"
    V4 = "V4"
    V5 = "V5"


# Kinds whose two relation sides are distinguishable patterns; the others
# (plain swaps) are their own reverse and carry direction "forward" only.
_DIRECTED = {MoveKind.U2, MoveKind.U3, MoveKind.V2, MoveKind.V3, MoveKind.V4, MoveKind.V5}


class InapplicableMoveError(ValueError):
    """Raised by :func:`apply_move` when the pattern is absent at the site."""


@dataclass(frozen=True)
class MoveInstance:
    """One applicable rewrite: kind, letter index where the match starts,
    which relation side is matched, and for U2/V2 the canceling pair
    (deleted for "forward", inserted for "backward")."""

    kind: MoveKind
    site: int
    direction: str = "forward"
    payload: tuple[Letter, Letter] | None = None

    def reversed(self) -> MoveInstance:
        """The instance that undoes this one when applied to the result."""
        if self.kind in (MoveKind.U1, MoveKind.V1):
            return self
        flipped = "backward" if self.direction == "forward" else "forward"
        return MoveInstance(self.kind, self.site, flipped, self.payload)


def _sort_key(m: MoveInstance):
    payload = tuple((l.index, l.sign) for l in m.payload) if m.payload else ()
    return (m.site, m.kind.value, m.direction, payload)


def _pair_moves(w: BraidWord) -> list[MoveInstance]:
    out = []
    letters = w.letters
    for j in range(len(letters) - 1):
        a, b = letters[j], letters[j + 1]
        distant = abs(a.index - b.index) > 1
        if a.is_classical and b.is_classical:
            if distant:
                out.append(MoveInstance(MoveKind.U1, j))
            if a.index == b.index and a.sign == -b.sign:
                out.append(MoveInstance(MoveKind.U2, j, "forward", (a, b)))
        elif a.is_virtual and b.is_virtual:
            if distant:
                out.append(MoveInstance(MoveKind.V1, j))
            if a.index == b.index:
                out.append(MoveInstance(MoveKind.V2, j, "forward", (a, b)))
        elif distant:
            direction = "forward" if a.is_virtual else "backward"
            out.append(MoveInstance(MoveKind.V5, j, direction))
    return out


def _triple_moves(w: BraidWord) -> list[MoveInstance]:
    out = []
    letters = w.letters
    for j in range(len(letters) - 2):
        a, b, c = letters[j], letters[j + 1], letters[j + 2]
        if a.is_classical and b.is_classical and c.is_classical:
            if a.sign == b.sign == c.sign and a.index == c.index:
                if a.index == b.index + 1:
                    out.append(MoveInstance(MoveKind.U3, j, "forward"))
                elif a.index == b.index - 1:
                    out.append(MoveInstance(MoveKind.U3, j, "backward"))
        elif a.is_virtual and b.is_virtual and c.is_virtual:
            if a.index == c.index:
                if a.index == b.index + 1:
                    out.append(MoveInstance(MoveKind.V3, j, "forward"))
                elif a.index == b.index - 1:
                    out.append(MoveInstance(MoveKind.V3, j, "backward"))
        if a.is_virtual and b.is_virtual and c.is_classical:
            if c.sign == 1 and a.index == c.index and b.index == a.index - 1:
                out.append(MoveInstance(MoveKind.V4, j, "forward"))
        if a.is_classical and b.is_virtual and c.is_virtual:
            if a.sign == 1 and b.index == a.index + 1 and c.index == a.index:
                out.append(MoveInstance(MoveKind.V4, j, "backward"))
    return out


def _insertion_variants(strands: int) -> list[tuple[MoveKind, tuple[Letter, Letter]]]:
    variants = []
    for i in range(1, strands):
        variants.append((MoveKind.U2, (sigma(i, 1), sigma(i, -1))))
        variants.append((MoveKind.U2, (sigma(i, -1), sigma(i, 1))))
        variants.append((MoveKind.V2, (tau(i), tau(i))))
    return variants


def enumerate_moves(w: BraidWord, insertion_limit: int | None = None) -> list[MoveInstance]:
    """All applicable move instances, ordered by site, kind, direction, payload.

    Pattern matches are found by a single scan; U2/V2 pair insertions are
    enumerated at every site for every generator index and both letter
    orders.  ``insertion_limit`` caps how many insertion instances are
    returned (0 gives pattern moves only); pattern matches are never
    dropped.
    """
    moves = _pair_moves(w) + _triple_moves(w)
    insertions = [
        MoveInstance(kind, j, "backward", pair)
        for j in range(len(w.letters) + 1)
        for kind, pair in _insertion_variants(w.strands)
    ]
    if insertion_limit is not None:
        insertions = insertions[: max(insertion_limit, 0)]
    return sorted(moves + insertions, key=_sort_key)


def apply_move(w: BraidWord, m: MoveInstance) -> BraidWord:
    """Rewrite ``w`` by one move; raises :class:`InapplicableMoveError` if
    the matched side of the relation is not present at ``m.site``."""
    letters = w.letters
    j = m.site

    if m.kind in (MoveKind.U2, MoveKind.V2) and m.direction == "backward":
        if not 0 <= j <= len(letters):
            raise InapplicableMoveError(f"insertion site {j} out of range")
        if m.payload is None:
            raise InapplicableMoveError("insertion requires a payload pair")
        a, b = m.payload
        virtual = m.kind is MoveKind.V2
        if a.index != b.index or a.is_virtual != virtual or b.is_virtual != virtual:
            raise InapplicableMoveError(f"payload {a.token()} {b.token()} does not match {m.kind.value}")
        if not virtual and a.sign != -b.sign:
            raise InapplicableMoveError(f"payload {a.token()} {b.token()} is not a canceling pair")
        return BraidWord(w.strands, letters[:j] + (a, b) + letters[j:])

    width = 2 if m.kind in (MoveKind.U1, MoveKind.U2, MoveKind.V1, MoveKind.V2, MoveKind.V5) else 3
    if not (0 <= j and j + width <= len(letters)):
        raise InapplicableMoveError(f"site {j} out of range for a width-{width} match")
    window = letters[j : j + width]

    replacement = _rewrite(window, m)
    if replacement is None:
        shown = " ".join(l.token() for l in window)
        raise InapplicableMoveError(f"{m.kind.value} {m.direction} does not match '{shown}' at site {j}")
    return BraidWord(w.strands, letters[:j] + replacement + letters[j + width :])


def _rewrite(window: tuple[Letter, ...], m: MoveInstance) -> tuple[Letter, ...] | None:
    kind, direction = m.kind, m.direction
    if kind is MoveKind.U1:
        a, b = window
        if a.is_classical and b.is_classical and abs(a.index - b.index) > 1:
            return (b, a)
    elif kind is MoveKind.V1:
        a, b = window
        if a.is_virtual and b.is_virtual and abs(a.index - b.index) > 1:
            return (b, a)
    elif kind is MoveKind.V5:
        a, b = window
        if abs(a.index - b.index) > 1:
            if direction == "forward" and a.is_virtual and b.is_classical:
                return (b, a)
            if direction == "backward" and a.is_classical and b.is_virtual:
                return (b, a)
    elif kind in (MoveKind.U2, MoveKind.V2):
        a, b = window
        if kind is MoveKind.U2 and a.is_classical and b.is_classical and a.index == b.index and a.sign == -b.sign:
            return ()
        if kind is MoveKind.V2 and a.is_virtual and b.is_virtual and a.index == b.index:
            return ()
    elif kind in (MoveKind.U3, MoveKind.V3):
        a, b, c = window
        classical = kind is MoveKind.U3
        uniform = (
            a.is_classical == b.is_classical == c.is_classical == classical
            and a.index == c.index
            and (a.sign == b.sign == c.sign if classical else True)
        )
        offset = 1 if direction == "forward" else -1
        if uniform and a.index == b.index + offset:
            return (b, a, b)
    elif kind is MoveKind.V4:
        a, b, c = window
        if direction == "forward":
            if a.is_virtual and b.is_virtual and c.is_classical and c.sign == 1:
                if a.index == c.index and b.index == a.index - 1:
                    return (sigma(a.index - 1, 1), a, b)
        else:
            if a.is_classical and a.sign == 1 and b.is_virtual and c.is_virtual:
                if b.index == a.index + 1 and c.index == a.index:
                    return (b, c, sigma(a.index + 1, 1))
    return None


@dataclass(frozen=True)
class WalkPolicy:
    """Relative weights of pair insertions vs. pattern moves in a walk.

    The default keeps word growth mild: insertions lengthen the word by
    two, while pattern moves (including U2/V2 deletions) keep it the same
    or shrink it.
    """

    insertion: float = 1.0
    pattern: float = 3.0

    def __post_init__(self):
        if self.insertion < 0 or self.pattern < 0 or self.insertion + self.pattern == 0:
            raise ValueError("weights must be nonnegative and not both zero")


def random_walk(
    w: BraidWord, steps: int, seed: int, policy: WalkPolicy = WalkPolicy()
) -> list[tuple[MoveInstance, BraidWord]]:
    """Apply ``steps`` random moves starting from ``w``; deterministic per seed.

    Every word in the returned chain is obtained from its predecessor by
    ``apply_move``, hence represents the same virtual braid.  The walk ends
    early only when no move applies (possible only for n = 1).
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    variants = _insertion_variants(w.strands)
    chain = []
    current = w
    for _ in range(steps):
        pattern_moves = enumerate_moves(current, insertion_limit=0)
        can_insert = bool(variants)
        if pattern_moves and can_insert:
            total = policy.insertion + policy.pattern
            insert = rng.random() < policy.insertion / total
        elif can_insert:
            insert = True
        elif pattern_moves:
            insert = False
        else:
            break
        if insert:
            site = rng.randrange(len(current.letters) + 1)
            kind, pair = variants[rng.randrange(len(variants))]
            move = MoveInstance(kind, site, "backward", pair)
        else:
            move = pattern_moves[rng.randrange(len(pattern_moves))]
        current = apply_move(current, move)
        chain.append((move, current))
    return chain
