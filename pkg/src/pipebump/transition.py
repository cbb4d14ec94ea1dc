"""The transition map on pipe dreams and the bounded transition on bounded pairs.

Both maps start a decrement bump at the column where the wires ``r`` and ``s``
cross, ``(r, s)`` being the lex largest inversion.  A step records the branch
``(q, r)``: ``q = r`` when the bump deleted a letter, otherwise ``q`` is the
other wire crossing at the final push column.  Chains are stored most recent
first, so ``chain[0]`` is the step taken from the input itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .bump import DEC, INC, BoundedPair, Outcome, bounded_bump
from .perm import Permutation
from .pipedream import PipeDream, transition_branches
from .words import column_of_crossing, crossing_pairs, evaluate, insert, is_reduced

Branch = tuple[int, int]
Chain = tuple[Branch, ...]


@dataclass(frozen=True)
class TransitionStep:
    result: Union[PipeDream, BoundedPair]
    q: int
    r: int
    k: int

    def __post_init__(self):
        if (self.k == 0) != (self.q < self.r):
            raise ValueError(f"k={self.k} is inconsistent with branch {(self.q, self.r)}")

    @property
    def branch(self) -> Branch:
        return self.q, self.r


def _start_column(a: Sequence[int]) -> tuple[int, int]:
    pi = evaluate(a)
    if pi.is_identity:
        raise ValueError("the identity has no transition")
    r, s = pi.lex_largest_inversion()
    return r, column_of_crossing(a, (r, s))


def _decrement_step(a: Sequence[int], b: Sequence[int]) -> tuple[tuple, tuple, int, int, int]:
    """Shared core of both forward maps: ``(a', b', q, r, k)``."""
    r, t0 = _start_column(a)
    res = bounded_bump(a, b, t0, DEC)
    if res.outcome is Outcome.DELETED:
        return res.a, res.b, r, r, res.column
    pair = crossing_pairs(res.a)[res.column - 1]
    if r not in pair:
        raise AssertionError(f"final crossing {pair} does not involve wire {r}")
    q = pair[0] if pair[1] == r else pair[1]
    return res.a, res.b, q, r, 0


def transition_map(d: PipeDream) -> TransitionStep:
    """T_pi(D) for a nonempty reduced pipe dream."""
    if not len(d):
        raise ValueError("the empty pipe dream has no transition")
    if not d.is_reduced:
        raise ValueError(f"{d} is not reduced")
    r_d, j_d = d.biword
    a, b, q, r, k = _decrement_step(r_d, j_d)
    if k:
        # a deletion always happens at the last column, so this is the column count
        k = len(r_d)
    return TransitionStep(PipeDream.from_biword(a, b), q, r, k)


def inverse_transition_map(
    e: PipeDream, q: int, r: int, pi: Permutation | None = None, check: bool = True
) -> PipeDream:
    """T^{-1}: recover D from E and its branch ``(q, r)``.

    With ``check`` the result is mapped forward again and must reproduce
    ``(E, q, r)``; with ``pi`` it must also be a pipe dream for ``pi``.
    """
    if not 1 <= q <= r:
        raise ValueError(f"branch {(q, r)} must satisfy 1 <= q <= r")
    g, h = e.biword
    if q == r:
        j = len(g) + 1
        g, h = insert(g, j, r - 1), insert(h, j, 0)
    else:
        j = column_of_crossing(g, (q, r))
    res = bounded_bump(g, h, j, INC)
    try:
        d = PipeDream.from_biword(res.a, res.b)
    except ValueError as exc:
        raise ValueError(f"branch {(q, r)} is inconsistent with {e}") from exc
    if check:
        if not d.is_reduced:
            raise ValueError(f"branch {(q, r)} is inconsistent with {e}")
        if pi is not None and d.permutation != pi:
            raise ValueError(f"branch {(q, r)} from {e} does not lead to {pi}")
        step = transition_map(d)
        if (step.result, step.q, step.r) != (e, q, r):
            raise ValueError(f"branch {(q, r)} is inconsistent with {e}")
    return d


def transition_chain(d: PipeDream) -> Chain:
    """Y(D), most recent step first."""
    chain: list[Branch] = []
    while len(d):
        step = transition_map(d)
        chain.append(step.branch)
        d = step.result
    return tuple(chain)


def from_chain(chain: Sequence[Sequence[int]]) -> PipeDream:
    """Replay a chain from the empty pipe dream; inverse of :func:`transition_chain`."""
    d = PipeDream()
    for q, r in reversed(tuple(chain)):
        d = inverse_transition_map(d, q, r)
    return d


@lru_cache(maxsize=None)
def _reduced_pipe_dreams(pi: Permutation) -> tuple[PipeDream, ...]:
    if pi.is_identity:
        return (PipeDream(),)
    r, _ = pi.lex_largest_inversion()
    out = []
    for q, target in transition_branches(pi):
        for e in _reduced_pipe_dreams(target):
            out.append(inverse_transition_map(e, q, r, check=False))
    return tuple(out)


def reduced_pipe_dreams(pi: Permutation) -> list[PipeDream]:
    """RP(pi) by applying every inverse transition branch recursively."""
    return list(_reduced_pipe_dreams(pi))


def bounded_transition(a: Sequence[int], b: Sequence[int]) -> TransitionStep:
    """BT_pi(a, b); the result carries the deletion column ``k`` (0 if bumped)."""
    pair = BoundedPair(a, b)
    a2, b2, q, r, k = _decrement_step(pair.a, pair.b)
    return TransitionStep(BoundedPair(a2, b2), q, r, k)


def inverse_bounded_transition(
    e: Sequence[int], f: Sequence[int], q: int, r: int, k: int
) -> BoundedPair:
    """BT^{-1}: rebuild ``(a, b)`` from ``((e, f), k)`` and the branch ``(q, r)``.

    For ``q = r`` the letter inserted at column ``k`` is ``omega^{-1}(r) - 1``
    with ``omega = s_{e_{p-1}} ... s_{e_k}``; the first increment push raises
    it to ``omega^{-1}(r)``, the letter that the deletion removed.
    """
    e, f = tuple(e), tuple(f)
    if not 1 <= q <= r:
        raise ValueError(f"branch {(q, r)} must satisfy 1 <= q <= r")
    p = len(e) + 1
    if q == r:
        if not 1 <= k <= p:
            raise ValueError(f"deletion column k={k} must lie in 1..{p}")
        row = r
        # omega^{-1} = s_{e_k} ... s_{e_{p-1}}, so s_{e_{p-1}} acts first
        for letter in reversed(e[k - 1 :]):
            if row == letter:
                row += 1
            elif row == letter + 1:
                row -= 1
        g, h, j = insert(e, k, row - 1), insert(f, k, 0), k
    else:
        if k != 0:
            raise ValueError(f"k must be 0 on a bumped branch, got {k}")
        g, h = e, f
        j = column_of_crossing(e, (q, r))
    res = bounded_bump(g, h, j, INC)
    if not is_reduced(res.a):
        raise ValueError(f"branch {(q, r)} with k={k} is inconsistent with {(e, f)}")
    return BoundedPair(res.a, res.b)


def bounded_chain(a: Sequence[int], b: Sequence[int]) -> Chain:
    """Y'(a, b), most recent step first."""
    chain: list[Branch] = []
    a, b = tuple(a), tuple(b)
    while a:
        step = bounded_transition(a, b)
        chain.append(step.branch)
        a, b = step.result
    return tuple(chain)
