"""Elementary word edits and the bounded bumping algorithm.

The sequence of pushed columns depends only on the word ``a``; the bounded
word ``b`` merely decides where (if ever) the bump stops early with a
deletion.  :func:`push_path` exposes that ``a``-only path so batch code can
reuse it for many ``b`` at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .words import Word, _defect_unchecked, delete, insert, is_reduced

DEC, INC = -1, +1


class Outcome(str, Enum):
    BUMPED = "bumped"
    DELETED = "deleted"


@dataclass(frozen=True)
class BumpResult:
    a: Word
    b: Word
    row: int
    column: int
    outcome: Outcome


@dataclass(frozen=True)
class BoundedPair:
    """A reduced word ``a`` with a bounded word ``b`` (``1 <= b_i <= a_i``)."""

    a: Word
    b: Word

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if not is_bounded(self.a, self.b):
            raise ValueError(f"{self.b} is not a bounded word for {self.a}")
        if not is_reduced(self.a):
            raise ValueError(f"{self.a} is not reduced")

    def __iter__(self):
        return iter((self.a, self.b))


def is_bounded(a: Sequence[int], b: Sequence[int]) -> bool:
    return len(a) == len(b) and all(1 <= y <= x for x, y in zip(a, b))


def word_edit(kind: str, a: Sequence[int], t: int, x: int | None = None) -> Word:
    """Apply one of ``dec_push``, ``inc_push``, ``delete``, ``insert`` at column ``t``."""
    a = tuple(a)
    if kind == "insert":
        if x is None:
            raise ValueError("insert needs a letter")
        if not 1 <= t <= len(a) + 1:
            raise ValueError(f"insert column {t} out of range 1..{len(a) + 1}")
        return insert(a, t, x)
    if not 1 <= t <= len(a):
        raise ValueError(f"column {t} out of range for word of length {len(a)}")
    if kind == "delete":
        return delete(a, t)
    if kind in ("dec_push", "inc_push"):
        value = a[t - 1] + (1 if kind == "inc_push" else -1)
        if value < 0:
            raise ValueError("decrement-push below zero")
        return a[: t - 1] + (value,) + a[t:]
    raise ValueError(f"unknown edit {kind!r}")


def push_path(a: Sequence[int], t0: int, direction: int) -> list[tuple[int, Word]]:
    """Columns pushed by an unbounded bump of ``a`` from ``t0``, with the word after each push.

    The path ends when the word becomes reduced or (for decrements) a letter
    reaches 0; in the latter case every bounded word forces a deletion there.
    """
    word = list(a)
    t = t0
    path: list[tuple[int, Word]] = []
    while True:
        word[t - 1] += direction
        path.append((t, tuple(word)))
        if word[t - 1] == 0 or is_reduced(word):
            return path
        t = _defect_unchecked(word, t)


def _check_bump_input(a: Sequence[int], b: Sequence[int], t0: int, direction: int) -> None:
    if direction not in (DEC, INC):
        raise ValueError(f"direction must be -1 or +1, got {direction}")
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    if not 1 <= t0 <= len(a):
        raise ValueError(f"column {t0} out of range for word of length {len(a)}")
    for i, (x, y) in enumerate(zip(a, b), start=1):
        # an increment bump may start from an inserted 0 at t0 (it is pushed first)
        low = 0 if (i == t0 and direction == INC) else 1
        if not low <= y <= x:
            raise ValueError(f"b is not bounded by a at column {i}: b={tuple(b)}, a={tuple(a)}")
    if not is_reduced(delete(a, t0)):
        raise ValueError(f"{tuple(a)} is not nearly reduced at column {t0}")


def bounded_bump(
    a: Sequence[int],
    b: Sequence[int],
    t0: int,
    direction: int,
    trace: list | None = None,
) -> BumpResult:
    """Run the bounded bumping algorithm from column ``t0``.

    Every push moves ``a`` and ``b`` together at the active column.  The bump
    stops with ``deleted`` when ``b`` reaches 0 there, or with ``bumped`` once
    ``a`` is reduced; otherwise it continues at the defect column.  When
    ``trace`` is a list, the pair ``(column, a after push)`` is appended for
    every push.
    """
    _check_bump_input(a, b, t0, direction)
    bw = list(b)
    for t, word in push_path(a, t0, direction):
        bw[t - 1] += direction
        if trace is not None:
            trace.append((t, word))
        if bw[t - 1] == 0:
            return BumpResult(delete(word, t), delete(bw, t), word[t - 1], t, Outcome.DELETED)
    return BumpResult(word, tuple(bw), word[t - 1], t, Outcome.BUMPED)


def little_bump(a: Sequence[int], t0: int, direction: int) -> Word:
    """Little's bump, as the bounded bump of ``a`` against itself."""
    return bounded_bump(a, a, t0, direction).a
