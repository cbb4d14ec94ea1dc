"""Words in the simple transpositions, their wiring diagrams and statistics.

A word ``(a_1, ..., a_k)`` stands for the product ``s_{a_1} s_{a_2} ... s_{a_k}``.
Columns are 1-based.  Crossing pairs are reported with *right* labels: the
wires are numbered down the right edge of the diagram, so for a reduced word
of ``w`` the crossing pairs are exactly the inversions of ``w``.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Sequence

from .perm import Inversion, Permutation

Word = tuple[int, ...]


class Status(Enum):
    REDUCED = "reduced"
    NEARLY_REDUCED = "nearly_reduced"
    NEITHER = "neither"


def _check_letters(a: Sequence[int]) -> None:
    for letter in a:
        if letter < 1:
            raise ValueError(f"word letters must be positive, got {tuple(a)}")


def evaluate(a: Sequence[int]) -> Permutation:
    """The permutation ``s_{a_1} ... s_{a_k}``."""
    _check_letters(a)
    w = list(range(1, max(a, default=0) + 2))
    for letter in a:
        w[letter - 1], w[letter] = w[letter], w[letter - 1]
    return Permutation(w)


def is_reduced(a: Sequence[int]) -> bool:
    """True iff ``len(a)`` equals the length of its product.

    Each right multiplication by ``s_i`` must create an inversion, i.e. swap an
    ascent of the running one-line notation.
    """
    _check_letters(a)
    w = list(range(1, max(a, default=0) + 2))
    for letter in a:
        if w[letter - 1] > w[letter]:
            return False
        w[letter - 1], w[letter] = w[letter], w[letter - 1]
    return True


def delete(a: Sequence[int], t: int) -> Word:
    return tuple(a[: t - 1]) + tuple(a[t:])


def insert(a: Sequence[int], t: int, x: int) -> Word:
    return tuple(a[: t - 1]) + (x,) + tuple(a[t - 1 :])


def _check_column(a: Sequence[int], t: int) -> None:
    if not 1 <= t <= len(a):
        raise ValueError(f"column {t} out of range for word of length {len(a)}")


def is_nearly_reduced_at(a: Sequence[int], t: int) -> bool:
    _check_column(a, t)
    return is_reduced(delete(a, t))


def reduced_status(a: Sequence[int], t: int | None = None) -> Status:
    """Classify ``a``: reduced, nearly reduced at ``t`` (but not reduced), or neither.

    Without ``t`` a non-reduced word is reported as nearly reduced if some
    single deletion makes it reduced.
    """
    if t is not None:
        _check_column(a, t)
    if is_reduced(a):
        return Status.REDUCED
    columns = [t] if t is not None else range(1, len(a) + 1)
    if any(is_reduced(delete(a, c)) for c in columns):
        return Status.NEARLY_REDUCED
    return Status.NEITHER


def crossing_pairs(a: Sequence[int]) -> list[Inversion]:
    """Right-labeled wire pair ``(q, r)``, ``q < r``, crossing in each column.

    The pair for column ``t`` is ``{u(a_t), u(a_t + 1)}`` where
    ``u = s_{a_p} ... s_{a_{t+1}}`` carries rows just right of column ``t``
    to right-edge labels.  Computed for all columns in one right-to-left pass.
    """
    _check_letters(a)
    size = max(a, default=0) + 2
    # label[row] = right-edge label of the wire occupying ``row`` at the current column boundary
    label = list(range(size + 1))
    pairs: list[Inversion] = []
    for letter in reversed(a):
        x, y = label[letter], label[letter + 1]
        pairs.append((min(x, y), max(x, y)))
        label[letter], label[letter + 1] = y, x
    pairs.reverse()
    return pairs


def right_labeled_crossing(a: Sequence[int], t: int) -> Inversion:
    _check_column(a, t)
    return crossing_pairs(a)[t - 1]


def column_of_crossing(a: Sequence[int], pair: Sequence[int]) -> int:
    """The unique column of a reduced word whose crossing is ``pair``."""
    q, r = sorted(pair)
    pairs = crossing_pairs(a)
    columns = [t for t, p in enumerate(pairs, start=1) if p == (q, r)]
    if len(columns) != 1:
        raise ValueError(f"{(q, r)} is not an inversion crossed exactly once in {tuple(a)}")
    return columns[0]


def defect(a: Sequence[int], t: int) -> int:
    """The other column at which the wires crossing in column ``t`` cross again.

    Requires ``a`` not reduced and nearly reduced at ``t``.
    """
    _check_column(a, t)
    if is_reduced(a) or not is_reduced(delete(a, t)):
        raise ValueError(f"{tuple(a)} must be non-reduced and nearly reduced at column {t}")
    return _defect_unchecked(a, t)


def _defect_unchecked(a: Sequence[int], t: int) -> int:
    pairs = crossing_pairs(a)
    others = [c for c, p in enumerate(pairs, start=1) if c != t and p == pairs[t - 1]]
    if len(others) != 1:
        raise ValueError(f"no unique defect for column {t} in {tuple(a)}")
    return others[0]


def ascent_set(a: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(a)) if a[i - 1] < a[i])


def comaj(a: Sequence) -> int:
    """Sum of ascent positions; works for any sequence of comparable values."""
    return sum(i for i in range(1, len(a)) if a[i - 1] < a[i])


def comaj_and_ascents(a: Sequence[int]) -> tuple[int, frozenset[int]]:
    asc = ascent_set(a)
    return sum(asc), asc


def wire_row(a: Sequence[int], j: int, i: int) -> int:
    """h^j_i(a): row of the left-labeled ``j``-wire just before column ``i``.

    Equal to ``s_{a_{i-1}} ... s_{a_1}(j)``.
    """
    if not 1 <= i <= len(a) + 1:
        raise ValueError(f"column {i} out of range 1..{len(a) + 1}")
    if j < 1:
        raise ValueError("wire labels are positive")
    row = j
    for letter in a[: i - 1]:
        if row == letter:
            row += 1
        elif row == letter + 1:
            row -= 1
    return row


def enumerate_reduced_words(pi: Permutation) -> list[Word]:
    """R(pi) in lexicographic order."""
    return list(_reduced_words(pi.window))


@lru_cache(maxsize=None)
def _reduced_words(window: tuple[int, ...]) -> tuple[Word, ...]:
    if not window:
        return ((),)
    words: list[Word] = []
    for d in range(1, len(window)):
        if window[d - 1] > window[d]:
            w = list(window)
            w[d - 1], w[d] = w[d], w[d - 1]
            prefix_perm = Permutation(w).window
            words.extend(word + (d,) for word in _reduced_words(prefix_perm))
    return tuple(sorted(words))
