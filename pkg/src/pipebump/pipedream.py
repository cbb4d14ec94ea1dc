"""Pipe dreams, their biword encoding, and Schubert polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .perm import Permutation
from .polynomial import Polynomial, polysum
from .words import Word, evaluate, is_reduced

Cell = tuple[int, int]


def _reading_key(cell: Cell) -> tuple[int, int]:
    # rows top to bottom, right to left within a row
    return cell[0], -cell[1]


@dataclass(frozen=True)
class PipeDream:
    """A finite set of crossings ``(row, column)`` in matrix coordinates."""

    cells: frozenset[Cell]

    def __init__(self, cells: Iterable[Sequence[int]] = ()):
        cells = frozenset((int(i), int(j)) for i, j in cells)
        for i, j in cells:
            if i < 1 or j < 1:
                raise ValueError(f"cell {(i, j)} is outside the positive quadrant")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_biword(cls, r: Sequence[int], j: Sequence[int]) -> PipeDream:
        """Decode diagonal numbers ``r`` and column numbers ``j``.

        The pairs ``(r_k - j_k + 1, -j_k)`` must be strictly increasing in lex
        order, which is exactly the condition that the crossings were listed
        in reading order.
        """
        if len(r) != len(j):
            raise ValueError("biword rows must have equal length")
        keys = []
        for rk, jk in zip(r, j):
            if not 1 <= jk <= rk:
                raise ValueError(f"not a pipe dream: column {jk} outside 1..{rk}")
            keys.append((rk - jk + 1, -jk))
        if any(keys[k] >= keys[k + 1] for k in range(len(keys) - 1)):
            raise ValueError(f"not a pipe dream: {tuple(r)}, {tuple(j)} is not in reading order")
        return cls((i, -mj) for i, mj in keys)

    @classmethod
    def from_rows(cls, r: Sequence[int], i: Sequence[int]) -> PipeDream:
        """Decode diagonal numbers ``r`` and row numbers ``i``."""
        if len(r) != len(i):
            raise ValueError("biword rows must have equal length")
        return cls.from_biword(r, [rk - ik + 1 for rk, ik in zip(r, i)])

    @cached_property
    def reading_order(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells, key=_reading_key))

    @cached_property
    def biword(self) -> tuple[Word, Word]:
        """``(r_D, j_D)``: diagonal and column numbers in reading order."""
        r = tuple(i + j - 1 for i, j in self.reading_order)
        j = tuple(j for _, j in self.reading_order)
        return r, j

    @property
    def rows(self) -> Word:
        """``i_D``: row numbers in reading order."""
        return tuple(i for i, _ in self.reading_order)

    def __len__(self) -> int:
        return len(self.cells)

    @cached_property
    def permutation(self) -> Permutation:
        """The permutation of ``D``; its diagonal word ``r_D`` is a word for it."""
        return evaluate(self.biword[0])

    @property
    def is_reduced(self) -> bool:
        return is_reduced(self.biword[0])

    def weight(self) -> Polynomial:
        """x^D, the product of x_i over the rows of the crossings."""
        return Polynomial.monomial_of_rows(self.rows)

    def to_json(self) -> dict:
        r, j = self.biword
        return {"r": list(r), "j": list(j)}

    def __repr__(self) -> str:
        r, j = self.biword
        return f"PipeDream(r={r}, j={j})"


def biword_encode(d: PipeDream) -> tuple[Word, Word]:
    return d.biword


def biword_decode(r: Sequence[int], j: Sequence[int]) -> PipeDream:
    return PipeDream.from_biword(r, j)


def is_pipe_dream_biword(r: Sequence[int], j: Sequence[int]) -> bool:
    try:
        PipeDream.from_biword(r, j)
    except ValueError:
        return False
    return True


def permutation_and_reduced(d: PipeDream) -> tuple[Permutation, bool]:
    return d.permutation, d.is_reduced


def weight(d: PipeDream) -> Polynomial:
    return d.weight()


@dataclass(frozen=True)
class WireTrace:
    """Result of following the pipes of a pipe dream.

    ``exit_column[w]`` is where the wire entering row ``w`` on the left leaves
    through the top; ``crossings[cell] = (horizontal wire, vertical wire)``.
    """

    exit_column: dict[int, int]
    crossings: dict[Cell, tuple[int, int]]

    def permutation(self) -> Permutation:
        n = len(self.exit_column)
        return Permutation(self.exit_column[w] for w in range(1, n + 1))


def trace_wires(d: PipeDream) -> WireTrace:
    """Follow every wire through crossings (+) and elbow tiles."""
    n = max((i + j for i, j in d.cells), default=1)
    exits: dict[int, int] = {}
    seen: dict[Cell, dict[str, int]] = {}
    for w in range(1, n + 1):
        row, col, moving_right = w, 1, True
        while row >= 1:
            if (row, col) in d.cells:
                seen.setdefault((row, col), {})["h" if moving_right else "v"] = w
                if moving_right:
                    col += 1
                else:
                    row -= 1
            elif moving_right:
                moving_right = False
                row -= 1
            else:
                moving_right = True
                col += 1
        exits[w] = col
    crossings = {cell: (ws["h"], ws["v"]) for cell, ws in seen.items()}
    return WireTrace(exits, crossings)


def enumerate_pipe_dreams(pi: Permutation, strategy: str = "chains") -> list[PipeDream]:
    """RP(pi), sorted by biword.

    ``chains`` replays every transition chain through the inverse transition
    map; ``brute`` searches subsets of the staircase ``i + j <= n`` and is
    only meant as an independent check for small ``n``.
    """
    if strategy == "chains":
        from .transition import reduced_pipe_dreams

        found = reduced_pipe_dreams(pi)
    elif strategy == "brute":
        found = _brute_pipe_dreams(pi)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return sorted(found, key=lambda d: d.biword)


def _brute_pipe_dreams(pi: Permutation) -> list[PipeDream]:
    n = max(len(pi), 1)
    staircase = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]
    found = []
    for cells in combinations(staircase, pi.length):
        d = PipeDream(cells)
        if d.is_reduced and d.permutation == pi:
            found.append(d)
    return found


def schubert(pi: Permutation) -> Polynomial:
    """Sum of x^D over the reduced pipe dreams of ``pi``."""
    return polysum(d.weight() for d in enumerate_pipe_dreams(pi))


@lru_cache(maxsize=None)
def schubert_via_transition(pi: Permutation) -> Polynomial:
    """Evaluate the transition recurrence, memoized by permutation.

    ``S_pi = x_r S_nu + sum over q < r with l(nu t_qr) = l(pi) of S_{nu t_qr}``
    where ``(r, s)`` is the lex largest inversion and ``nu = pi t_rs``.
    """
    if pi.is_identity:
        return Polynomial.one()
    r, s = pi.lex_largest_inversion()
    nu = pi.swap_positions(r, s)
    total = Polynomial.variable(r) * schubert_via_transition(nu)
    for nu_q in transition_targets(pi):
        total = total + schubert_via_transition(nu_q)
    return total


def transition_branches(pi: Permutation) -> list[tuple[int, Permutation]]:
    """Pairs ``(q, nu t_qr)`` indexing the terms of the transition recurrence.

    The first entry is ``(r, nu)``; the rest have ``q < r`` and
    ``l(nu t_qr) = l(pi)``.
    """
    r, s = pi.lex_largest_inversion()
    nu = pi.swap_positions(r, s)
    out = [(r, nu)]
    for q in range(1, r):
        candidate = nu.swap_positions(q, r)
        if candidate.length == pi.length:
            out.append((q, candidate))
    return out


def transition_targets(pi: Permutation) -> list[Permutation]:
    """The permutations ``nu t_qr`` with ``q < r`` and ``l(nu t_qr) = l(pi)``."""
    return [perm for _, perm in transition_branches(pi)[1:]]
