"""Permutations of the positive integers with finite support.

A permutation is stored by its one-line window ``[w(1), ..., w(n)]``; every
value beyond the window is a fixed point.  Windows are normalized by trimming
trailing fixed points, so two permutations are equal exactly when their
windows are equal.  Positions and values are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Sequence

Inversion = tuple[int, int]


def _normalize(values: Sequence[int]) -> tuple[int, ...]:
    window = list(values)
    while window and window[-1] == len(window):
        window.pop()
    return tuple(window)


@dataclass(frozen=True, init=False)
class Permutation:
    """A finitely supported bijection of ``{1, 2, ...}``."""

    window: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation window: {list(values)}")
        object.__setattr__(self, "window", _normalize(values))

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @classmethod
    def simple(cls, i: int) -> Permutation:
        """The simple transposition s_i swapping i and i+1."""
        if i < 1:
            raise ValueError(f"simple transposition index must be >= 1, got {i}")
        return cls.transposition(i, i + 1)

    @classmethod
    def transposition(cls, i: int, j: int) -> Permutation:
        if i < 1 or j < 1:
            raise ValueError("transposition entries must be positive")
        values = list(range(1, max(i, j) + 1))
        values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
        return cls(values)

    # ---- basic access -------------------------------------------------

    def __len__(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"positions are positive integers, got {i}")
        return self.window[i - 1] if i <= len(self.window) else i

    def __repr__(self) -> str:
        return f"Permutation({list(self.window)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        """The window padded with fixed points up to length ``n``."""
        n = len(self.window) if n is None else n
        if n < len(self.window):
            raise ValueError(f"window of length {len(self.window)} does not fit in S_{n}")
        return self.window + tuple(range(len(self.window) + 1, n + 1))

    @property
    def is_identity(self) -> bool:
        return not self.window

    # ---- group operations --------------------------------------------

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.window)
        for i, v in enumerate(self.window, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def swap_positions(self, i: int, j: int) -> Permutation:
        """Right multiplication by the transposition t_ij."""
        n = max(len(self.window), i, j)
        values = list(self.one_line(n))
        values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
        return Permutation(values)

    # ---- inversions ----------------------------------------------------

    @cached_property
    def inversions(self) -> tuple[Inversion, ...]:
        """Inv(w): all inversions in reverse lex order (lex largest first)."""
        w = self.window
        n = len(w)
        return tuple(
            (i + 1, j + 1)
            for i in reversed(range(n))
            for j in reversed(range(i + 1, n))
            if w[i] > w[j]
        )

    @cached_property
    def length(self) -> int:
        w = self.window
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def lex_largest_inversion(self) -> Inversion:
        """The lex largest inversion (r, s).

        ``r`` is the last descent and ``s`` the largest position with
        ``w(r) > w(s)``.
        """
        if self.is_identity:
            raise ValueError("no inversions")
        w = self.window
        r = max(i for i in range(1, len(w)) if w[i - 1] > w[i])
        s = max(j for j in range(r + 1, len(w) + 1) if w[r - 1] > w[j - 1])
        return r, s

    def descents(self) -> tuple[int, ...]:
        w = self.window
        return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])

    # ---- Lehmer code ---------------------------------------------------

    @cached_property
    def code(self) -> tuple[int, ...]:
        """Lehmer code, trimmed of trailing zeros."""
        w = self.window
        code = [sum(1 for j in range(i + 1, len(w)) if w[i] > w[j]) for i in range(len(w))]
        while code and code[-1] == 0:
            code.pop()
        return tuple(code)

    @classmethod
    def from_code(cls, code: Sequence[int]) -> Permutation:
        """Inverse of :attr:`code`.

        Any sequence of nonnegative integers is the code of exactly one
        permutation; trailing zeros are ignored.
        """
        code = list(code)
        if any(c < 0 for c in code):
            raise ValueError(f"code entries must be nonnegative, got {tuple(code)}")
        n = max([len(code)] + [i + c for i, c in enumerate(code, start=1)])
        code += [0] * (n - len(code))
        available = list(range(1, n + 1))
        return cls(available.pop(c) for c in code)

    @property
    def is_dominant(self) -> bool:
        c = self.code
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1))


def compose(pi: Permutation, tau: Permutation) -> Permutation:
    """The product ``pi * tau`` acting by ``i -> pi(tau(i))``."""
    n = max(len(pi), len(tau))
    return Permutation(pi(tau(i)) for i in range(1, n + 1))


def length_and_inversions(pi: Permutation) -> tuple[int, tuple[Inversion, ...]]:
    return pi.length, pi.inversions


def inversion_order_cmp(tau: Permutation, pi: Permutation) -> int:
    """Compare in inversion order: -1, 0 or 1 as ``tau`` is below, equal to, above ``pi``.

    The order compares the reverse-lex inversion lists lexicographically.
    """
    a, b = tau.inversions, pi.inversions
    return (a > b) - (a < b)


def precedes(tau: Permutation, pi: Permutation) -> bool:
    return inversion_order_cmp(tau, pi) < 0


def dominant_from_partition(shape: Sequence[int]) -> Permutation:
    """The dominant permutation in S_{p+1} whose code is ``shape``."""
    shape = list(shape)
    if any(part < 1 for part in shape) or any(
        shape[i] < shape[i + 1] for i in range(len(shape) - 1)
    ):
        raise ValueError(f"not a partition: {shape}")
    p = sum(shape)
    return Permutation.from_code(shape + [0] * (p + 1 - len(shape)))


def shift_embed(x: int, pi: Permutation) -> Permutation:
    """``1^x × pi``: fix 1..x and send x+i to pi(i)+x."""
    if x < 0:
        raise ValueError("shift must be nonnegative")
    return Permutation(list(range(1, x + 1)) + [v + x for v in pi.window])


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n, in lexicographic order of one-line notation."""
    for values in permutations(range(1, n + 1)):
        yield Permutation(values)
