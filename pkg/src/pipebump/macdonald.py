"""The Macdonald map between bounded pairs and cD-pairs, and its inverse."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial, prod
from typing import Iterator, Sequence

from .bump import BoundedPair
from .perm import Permutation
from .pipedream import PipeDream
from .transition import (
    bounded_transition,
    from_chain,
    inverse_bounded_transition,
    transition_map,
)
from .words import Word, enumerate_reduced_words


def is_substaircase(c: Sequence[int]) -> bool:
    return all(1 <= x <= i for i, x in enumerate(c, start=1))


def substaircase_words(p: int) -> Iterator[Word]:
    """C(pi) for any pi of length ``p``, in lex order; there are ``p!``."""
    return product(*(range(1, i + 1) for i in range(1, p + 1)))


@dataclass(frozen=True)
class CDPair:
    """A sub-staircase word ``c`` with a reduced pipe dream ``D`` of the same size."""

    c: Word
    D: PipeDream

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.c) != len(self.D):
            raise ValueError(f"c has length {len(self.c)} but D has {len(self.D)} crossings")
        if not is_substaircase(self.c):
            raise ValueError(f"{self.c} is not a sub-staircase word")
        if not self.D.is_reduced:
            raise ValueError(f"{self.D} is not reduced")

    @property
    def permutation(self) -> Permutation:
        return self.D.permutation

    def to_json(self) -> dict:
        return {"c": list(self.c), "D": self.D.to_json()}


def enumerate_bounded_pairs(pi: Permutation) -> Iterator[BoundedPair]:
    """BP(pi): every reduced word of ``pi`` with every bounded word beneath it."""
    for a in enumerate_reduced_words(pi):
        for b in product(*(range(1, x + 1) for x in a)):
            yield BoundedPair(a, b)


def count_bounded_pairs(pi: Permutation) -> int:
    return sum(prod(a) for a in enumerate_reduced_words(pi))


def macdonald_map(a: Sequence[int], b: Sequence[int]) -> CDPair:
    """M(a, b) = (c, D).

    Runs the bounded transition down to the empty pair.  Each deletion at
    length ``m`` contributes ``c_m = k``; ``D`` is the pipe dream whose
    transition chain equals the recorded chain.
    """
    pair = BoundedPair(a, b)
    a, b = pair.a, pair.b
    c = [0] * len(a)
    chain = []
    while a:
        step = bounded_transition(a, b)
        if step.k:
            c[len(a) - 1] = step.k
        chain.append(step.branch)
        a, b = step.result
    return CDPair(tuple(c), from_chain(chain))


def inverse_macdonald(c: Sequence[int], d: PipeDream) -> BoundedPair:
    """M^{-1}(c, D)."""
    cd = CDPair(c, d)
    c = list(cd.c)
    steps = []
    while len(d):
        step = transition_map(d)
        k = c.pop() if step.q == step.r else 0
        steps.append((step.q, step.r, k))
        d = step.result
    e: Word = ()
    f: Word = ()
    for q, r, k in reversed(steps):
        e, f = inverse_bounded_transition(e, f, q, r, k)
    return BoundedPair(e, f)


def bound_product_sum(pi: Permutation) -> int:
    """Left side of the identity: sum of a_1 ... a_p over R(pi)."""
    return count_bounded_pairs(pi)


def macdonald_rhs(pi: Permutation) -> int:
    """Right side: p! times the number of reduced pipe dreams."""
    from .pipedream import enumerate_pipe_dreams

    return factorial(pi.length) * len(enumerate_pipe_dreams(pi))


@dataclass(frozen=True)
class MacdonaldRow:
    pi: Permutation
    p: int
    reduced_words: int
    bounded_pairs: int
    pipe_dreams: int
    lhs: int
    rhs: int
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and all(ok for _, ok in self.checks)

    def to_json(self) -> dict:
        return {
            "pi": list(self.pi.window),
            "p": self.p,
            "reduced_words": self.reduced_words,
            "bounded_pairs": self.bounded_pairs,
            "pipe_dreams": self.pipe_dreams,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "checks": dict(self.checks),
            "pass": self.passed,
        }


def verify_one(pi: Permutation) -> MacdonaldRow:
    """Counting identity plus the exhaustive bijection check for one permutation."""
    from .batch import verify_permutation
    from .pipedream import schubert_via_transition

    ones = [1] * max(len(pi), 1)
    rp = schubert_via_transition(pi).evaluate(ones)
    lhs = bound_product_sum(pi)
    rhs = factorial(pi.length) * rp
    report = verify_permutation(pi, rhs_pipe_dreams=rp)
    return MacdonaldRow(
        pi, pi.length, report.reduced_words, report.bounded_pairs, rp, lhs, rhs,
        tuple(sorted(report.checks.items())),
    )


def verify_macdonald(n: int, jobs: int = 1) -> list[MacdonaldRow]:
    """Check every permutation of S_n; rows come back in lex order of ``pi``."""
    from .perm import all_permutations

    if n < 1:
        raise ValueError("n must be at least 1")
    perms = list(all_permutations(n))
    if jobs <= 1:
        return [verify_one(pi) for pi in perms]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_one, perms))
