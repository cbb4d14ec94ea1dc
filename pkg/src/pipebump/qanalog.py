"""q-analogs: combined weights, insertion lemmas and the q-identities."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from numbers import Rational
from typing import Sequence

from .bump import INC, BoundedPair, bounded_bump
from .perm import Permutation, all_permutations
from .pipedream import schubert_via_transition, transition_branches
from .polynomial import QPoly, principal_specialization, qsum
from .transition import bounded_transition
from .words import Word, comaj, enumerate_reduced_words, evaluate, insert, is_reduced, wire_row


def q_int(k: int) -> QPoly:
    """[k] = 1 + q + ... + q^(k-1); [0] = 0."""
    if k < 0:
        raise ValueError("q-integers are defined for k >= 0")
    return QPoly([1] * k)


def q_factorial(k: int) -> QPoly:
    if k < 0:
        raise ValueError("q-factorials are defined for k >= 0")
    out = QPoly.one()
    for i in range(1, k + 1):
        out = out * q_int(i)
    return out


def combined_weight(a: Sequence[int], b: Sequence[int]) -> QPoly:
    """q^(comaj(a) + sum(a_i - b_i))."""
    pair = BoundedPair(a, b)
    return QPoly.monomial(combined_degree(pair.a, pair.b))


def combined_degree(a: Sequence[int], b: Sequence[int]) -> int:
    return comaj(a) + sum(x - y for x, y in zip(a, b))


def specialized_bpoly(pi: Permutation, method: str = "words") -> QPoly:
    """Sum of combined weights over BP(pi).

    ``words`` uses the factored form ``sum_a q^comaj(a) [a_1]...[a_p]``;
    ``pairs`` sums the combined weight of every bounded pair directly.
    """
    words = enumerate_reduced_words(pi)
    if method == "words":
        total = QPoly()
        for a in words:
            term = QPoly.monomial(comaj(a))
            for x in a:
                term = term * q_int(x)
            total = total + term
        return total
    if method == "pairs":
        degrees: dict[int, int] = {}
        for a in words:
            for b in product(*(range(1, x + 1) for x in a)):
                d = combined_degree(a, b)
                degrees[d] = degrees.get(d, 0) + 1
        return QPoly.from_degrees(degrees)
    raise ValueError(f"unknown method {method!r}")


# ---- insertion along a wire ---------------------------------------------


def _bump_inserted(a: Word, h: int, i: int) -> Word:
    """Insert h-1 at column ``i`` then increment-bump (Little bump) from ``i``.

    With ``h = 1`` the inserted letter is a transient 0 that the first push
    turns into 1.
    """
    tilde = insert(a, i, h - 1)
    return bounded_bump(tilde, tilde, i, INC).a


def insert_along_wire(a: Sequence[int], j: int, i: int) -> Word:
    """y^j_i(a): insert a crossing at column ``i`` on wire ``j``, then bump."""
    a = tuple(a)
    if not is_reduced(a):
        raise ValueError(f"{a} is not reduced")
    h = wire_row(a, j, i)
    if h < 2:
        raise ValueError(f"insertion value 0: wire {j} is in row 1 before column {i}")
    return _bump_inserted(a, h, i)


@dataclass(frozen=True)
class ComajProfile:
    a: Word
    j: int
    rows: Word
    words: tuple[Word, ...]
    values: Word

    @property
    def interval(self) -> tuple[int, int]:
        h = wire_row(self.a, self.j, len(self.a) + 1)
        return h - 1, h + len(self.a) - 1

    def is_record_permutation(self) -> bool:
        lo, hi = self.interval
        return sorted(self.values) == list(range(lo, hi + 1)) and all_records(self.values)


def all_records(values: Sequence) -> bool:
    """Every entry is larger than all earlier ones or smaller than all of them."""
    for i in range(1, len(values)):
        before = values[:i]
        if not (values[i] > max(before) or values[i] < min(before)):
            return False
    return True


def augmented_comaj_word(a: Sequence[int], j: int) -> ComajProfile:
    """v^j(a) with v_i = comaj(y^j_i(a)) - comaj(a) + h^j_i(a) - 1."""
    a = tuple(a)
    if not is_reduced(a):
        raise ValueError(f"{a} is not reduced")
    if j < 1:
        raise ValueError("wire labels are positive")
    base = comaj(a)
    rows, ys, values = [], [], []
    for i in range(1, len(a) + 2):
        h = wire_row(a, j, i)
        y = _bump_inserted(a, h, i)
        rows.append(h)
        ys.append(y)
        values.append(comaj(y) - base + h - 1)
    return ComajProfile(a, j, tuple(rows), tuple(ys), tuple(values))


def comaj_table_rows(a: Sequence[int], j: int) -> list[dict]:
    """The table behind v^j(a): columns i, h, insert, y, comaj(y), h-1, v."""
    prof = augmented_comaj_word(a, j)
    rows = []
    for i, (h, y, v) in enumerate(zip(prof.rows, prof.words, prof.values), start=1):
        rows.append(
            {
                "i": i,
                "h": h,
                "insert": insert(prof.a, i, h - 1),
                "y": y,
                "comaj_y": comaj(y),
                "h_minus_1": h - 1,
                "v": v,
            }
        )
    return rows


def half_integer_comaj(a: Sequence[int], h: int, i: int) -> int:
    """comaj of ``a`` with ``h - 1/2`` inserted at column ``i``."""
    return comaj(insert([Fraction(x) for x in a], i, Fraction(2 * h - 1, 2)))


# ---- Gupta's lemma --------------------------------------------------------


def comaj_insertion_profile(a: Sequence[Rational], j: Rational) -> tuple[int, ...]:
    """(comaj(a with j inserted at i) - comaj(a)) for i = 1..p+1.

    Values may be any exact rationals (ints or Fractions), so half-integers
    work without rounding.
    """
    a = tuple(a)
    if any(a[i] == a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"adjacent entries of {a} must differ")
    if j in a:
        raise ValueError(f"inserted value {j} must differ from every entry")
    base = comaj(a)
    return tuple(comaj(insert(a, i, j)) - base for i in range(1, len(a) + 2))


# ---- verification ----------------------------------------------------------


@dataclass(frozen=True)
class QCheck:
    pi: Permutation
    lhs: QPoly
    rhs: QPoly
    extra: tuple[tuple[str, bool], ...] = ()

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and all(ok for _, ok in self.extra)

    def to_json(self) -> dict:
        return {
            "pi": list(self.pi.window),
            "lhs": list(self.lhs.coeffs),
            "rhs": list(self.rhs.coeffs),
            "checks": dict(self.extra),
            "pass": self.passed,
        }


def q_transition_rhs(pi: Permutation) -> QPoly:
    """Right side of the q-transition recurrence, built from the smaller terms."""
    p = pi.length
    r, _ = pi.lex_largest_inversion()
    branches = transition_branches(pi)
    _, nu = branches[0]
    total = q_int(p) * QPoly.monomial(r - 1) * specialized_bpoly(nu)
    return total + qsum(specialized_bpoly(target) for _, target in branches[1:])


def weight_transfer_holds(a: Sequence[int], b: Sequence[int]) -> bool:
    """Check how BT changes the combined weight on one bounded pair."""
    pi = evaluate(a)
    step = bounded_transition(a, b)
    e, f = step.result
    before = combined_degree(a, b)
    after = combined_degree(e, f)
    if step.k == 0:
        return before == after
    j = pi(pi.lex_largest_inversion()[1])  # nu(r) = pi(s)
    h = wire_row(e, j, step.k)
    y = _bump_inserted(e, h, step.k)
    v = comaj(y) - comaj(e) + h - 1
    return tuple(a) == y and before == v + after


def verify_q_transition(pi: Permutation) -> QCheck:
    if pi.is_identity:
        raise ValueError("the recurrence needs a non-identity permutation")
    lhs = specialized_bpoly(pi)
    rhs = q_transition_rhs(pi)
    transfer = all(
        weight_transfer_holds(a, b)
        for a in enumerate_reduced_words(pi)
        for b in product(*(range(1, x + 1) for x in a))
    )
    pairs_agree = specialized_bpoly(pi, method="pairs") == lhs
    return QCheck(pi, lhs, rhs, (("pairs_sum", pairs_agree), ("weight_transfer", transfer)))


def q_macdonald_rhs(pi: Permutation) -> QPoly:
    """[p]! times the principal specialization of the Schubert polynomial."""
    return q_factorial(pi.length) * principal_specialization(schubert_via_transition(pi))


def verify_q_macdonald(n: int, sample: int | None = None, seed: int = 0) -> list[QCheck]:
    """Check the q-analog identity on all of S_n, or on ``sample`` random elements."""
    if n < 1:
        raise ValueError("n must be at least 1")
    perms = list(all_permutations(n))
    if sample is not None:
        perms = sorted(random.Random(seed).sample(perms, min(sample, len(perms))), key=lambda w: w.one_line(n))
    return [QCheck(pi, specialized_bpoly(pi), q_macdonald_rhs(pi)) for pi in perms]


@dataclass(frozen=True)
class MacMahonReport:
    n: int
    by_length: QPoly
    by_comaj: QPoly
    recursive: QPoly
    comaj_recursive: QPoly

    @property
    def passed(self) -> bool:
        return self.by_length == self.by_comaj == self.recursive == self.comaj_recursive

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "inversions": list(self.by_length.coeffs),
            "comaj": list(self.by_comaj.coeffs),
            "pass": self.passed,
        }


def _sum_over(n: int, stat) -> QPoly:
    degrees: dict[int, int] = {}
    for pi in all_permutations(n):
        d = stat(pi)
        degrees[d] = degrees.get(d, 0) + 1
    return QPoly.from_degrees(degrees)


def macmahon_check(n: int) -> MacMahonReport:
    """[n] * sum_{S_(n-1)} q^l = sum_{S_n} q^l = sum_{S_n} q^comaj, plus the comaj recursion."""
    if n < 2:
        raise ValueError("n must be at least 2")
    length = _sum_over(n, lambda w: w.length)
    cmj = _sum_over(n, lambda w: comaj(w.one_line(n)))
    rec = q_int(n) * _sum_over(n - 1, lambda w: w.length)
    cmj_rec = q_int(n) * _sum_over(n - 1, lambda w: comaj(w.one_line(n - 1)))
    return MacMahonReport(n, length, cmj, rec, cmj_rec)
