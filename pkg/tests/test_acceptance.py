"""Acceptance criteria, each run cold against its time limit.

Every criterion prints one ``PASS``/``FAIL`` line (collected in ``RESULTS`` and
shown in the pytest terminal summary).  Run directly with
``python3 -m tests.test_acceptance`` to get just those lines.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from pipebump import batch, golden, pipedream, transition, words
from pipebump.bump import DEC, INC, Outcome, bounded_bump
from pipebump.macdonald import enumerate_bounded_pairs, verify_macdonald
from pipebump.perm import Permutation, all_permutations
from pipebump.pipedream import enumerate_pipe_dreams, schubert, schubert_via_transition, transition_branches
from pipebump.polynomial import Polynomial, QPoly, polysum
from pipebump.qanalog import (
    augmented_comaj_word,
    comaj_insertion_profile,
    macmahon_check,
    q_int,
    verify_q_macdonald,
    weight_transfer_holds,
)
from pipebump.tableaux import staircase_lhs, staircase_rhs, verify_fk
from pipebump.transition import bounded_transition, inverse_bounded_transition, inverse_transition_map, transition_map
from pipebump.words import ascent_set, delete, enumerate_reduced_words, insert, is_reduced

RESULTS: list[str] = []


def cold() -> None:
    """Drop every memo table so a timing includes all the work."""
    for fn in (
        words._reduced_words,
        pipedream.schubert_via_transition,
        transition._reduced_pipe_dreams,
        batch._forward_plan,
        batch._inverse_plan,
        golden.load_golden,
    ):
        fn.cache_clear()


@dataclass
class Verdict:
    ok: bool
    detail: str


def judge(label: str, limit: float, body) -> bool:
    cold()
    start = time.perf_counter()
    result: Verdict = body()
    elapsed = time.perf_counter() - start
    passed = result.ok and elapsed <= limit
    timing = f"{elapsed:.2f}s <= {limit:g}s" if elapsed <= limit else f"{elapsed:.2f}s > {limit:g}s"
    line = f"{'PASS' if passed else 'FAIL'} {label} [{timing}] {result.detail}"
    RESULTS.append(line)
    print(line)
    return passed


# ---- criterion bodies ---------------------------------------------------------------


def _macdonald(n: int) -> Verdict:
    rows = verify_macdonald(n)
    bad = [str(r.pi) for r in rows if not r.passed]
    pairs = sum(r.bounded_pairs for r in rows)
    return Verdict(not bad and len(rows) == len(list(all_permutations(n))),
                    f"{len(rows)} permutations, {pairs} bounded pairs, failures={bad}")


def _q_identity() -> Verdict:
    s4 = verify_q_macdonald(4)
    s5 = verify_q_macdonald(5, sample=20, seed=2024)
    w = next(c for c in s4 if c.pi == Permutation([3, 2, 1]))
    target = q_int(3) * q_int(2) * QPoly.monomial(1)
    example_ok = w.lhs == w.rhs == target
    bad = [str(c.pi) for c in s4 + s5 if not c.passed]
    return Verdict(not bad and example_ok and len(s4) == 24 and len(s5) == 20,
                    f"S4 {len(s4)} + S5 sample {len(s5)}; [3,2,1] -> {w.lhs}; failures={bad}")


def _golden() -> Verdict:
    cases = golden.replay_all()
    bad = [f"{c.group}/{c.name}" for c in cases if not c.passed]
    return Verdict(not bad, f"{len(cases)} cases; failures={bad}")


def _transition_equation() -> Verdict:
    s5 = list(all_permutations(5))
    schubert_bad = []
    for pi in s5:
        # brute force over staircase subsets is independent of the transition code
        brute = polysum(d.weight() for d in enumerate_pipe_dreams(pi, strategy="brute"))
        if not brute == schubert(pi) == schubert_via_transition(pi):
            schubert_bad.append(str(pi))
    t_bad, bt_bad = [], []
    for pi in all_permutations(4):
        if pi.is_identity:
            continue
        r, _ = pi.lex_largest_inversion()
        p = pi.length
        # T: RP(pi) -> U(pi), with x^D = x_r x^E on the q = r branch
        want = {(e, q) for q, target in transition_branches(pi) for e in enumerate_pipe_dreams(target)}
        got = []
        for d in enumerate_pipe_dreams(pi):
            step = transition_map(d)
            factor = Polynomial.variable(r) if step.q == r else Polynomial.one()
            ok = d.weight() == factor * step.result.weight()
            ok &= inverse_transition_map(step.result, step.q, step.r) == d
            if not ok:
                t_bad.append(str(pi))
            got.append((step.result, step.q))
        if len(set(got)) != len(got) or set(got) != want:
            t_bad.append(str(pi))
        # BT: BP(pi) -> X(pi), with the q-weight transfer
        want_bt = set()
        for q, target in transition_branches(pi):
            ks = range(1, p + 1) if q == r else [0]
            want_bt.update((pair.a, pair.b, q, k) for pair in enumerate_bounded_pairs(target) for k in ks)
        got_bt = []
        for pair in enumerate_bounded_pairs(pi):
            step = bounded_transition(pair.a, pair.b)
            e, f = step.result
            ok = inverse_bounded_transition(e, f, step.q, step.r, step.k) == pair
            ok &= weight_transfer_holds(pair.a, pair.b)
            if not ok:
                bt_bad.append(str(pi))
            got_bt.append((e, f, step.q, step.k))
        if len(set(got_bt)) != len(got_bt) or set(got_bt) != want_bt:
            bt_bad.append(str(pi))
    ok = not (schubert_bad or t_bad or bt_bad)
    return Verdict(ok, f"schubert S5 mismatches={schubert_bad}; T failures={sorted(set(t_bad))}; "
                        f"BT failures={sorted(set(bt_bad))}")


def _lemmas() -> Verdict:
    rng = random.Random(11)
    reversible = ascents = differences = True
    bumps = 0
    for pi in all_permutations(4):
        for pair in enumerate_bounded_pairs(pi):
            a, b = pair.a, pair.b
            for t0 in range(1, len(a) + 1):
                if not is_reduced(delete(a, t0)):
                    continue
                for direction in (DEC, INC):
                    bumps += 1
                    res = bounded_bump(a, b, t0, direction)
                    diff = tuple(x - y for x, y in zip(a, b))
                    if res.outcome is Outcome.BUMPED:
                        back = bounded_bump(res.a, res.b, res.column, -direction)
                        ascents &= ascent_set(res.a) == ascent_set(a)
                    else:
                        g, h = insert(res.a, res.column, res.row), insert(res.b, res.column, 0)
                        back = bounded_bump(g, h, res.column, -direction)
                        half = Fraction(2 * res.row + 1, 2)
                        ascents &= ascent_set(insert(res.a, res.column, half)) == ascent_set(a)
                        diff = delete(diff, res.column)
                    reversible &= (back.a, back.b, back.row, back.column, back.outcome) == (
                        a, b, a[t0 - 1], t0, Outcome.BUMPED)
                    differences &= tuple(x - y for x, y in zip(res.a, res.b)) == diff
    gupta = True
    for _ in range(500):
        length = rng.randint(0, 8)
        a = []
        while len(a) < length:
            v = rng.randint(1, 9)
            if not a or v != a[-1]:
                a.append(v)
        j = Fraction(2 * rng.randint(0, 9) + 1, 2)
        gupta &= sorted(comaj_insertion_profile(a, j)) == list(range(length + 1))
    comaj_ok = True
    pool = [pi for n in (5, 6) for pi in all_permutations(n)]
    for _ in range(200):
        pi = rng.choice(pool)
        a = rng.choice(enumerate_reduced_words(pi))
        comaj_ok &= all(augmented_comaj_word(a, j).is_record_permutation() for j in range(1, 8))
    ok = reversible and ascents and differences and gupta and comaj_ok
    return Verdict(ok, f"{bumps} bumps: reversible={reversible} ascents={ascents} (deleted clause via i+1/2) "
                        f"differences={differences}; gupta(500)={gupta}; augmented comaj(200)={comaj_ok}")


FK_SHAPES = [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]


def _fomin_kirillov() -> Verdict:
    lhs, rhs = staircase_lhs(3, 1), staircase_rhs(3, 1)
    numeric = lhs == rhs == 30
    bad = []
    for shape, x in product(FK_SHAPES, range(3)):
        report = verify_fk(shape, x, bijection=True)
        if not report.passed:
            bad.append((shape, x))
    return Verdict(numeric and not bad,
                    f"n=3 x=1: {lhs} = {rhs}; {len(FK_SHAPES) * 3} (lambda, x) cases, failures={bad}")


def _macmahon() -> Verdict:
    reports = [macmahon_check(n) for n in range(2, 7)]
    bad = [r.n for r in reports if not r.passed]
    return Verdict(not bad, f"n=2..6, failures={bad}")


# ---- pytest entry points ----------------------------------------------------------------


def test_criterion_1_macdonald_s4_tier():
    assert judge("1a Macdonald identity + bijection, S4 tier", 2, lambda: _macdonald(4))


def test_criterion_1_macdonald_s5():
    assert judge("1b Macdonald identity + bijection, all of S5", 120, lambda: _macdonald(5))


def test_criterion_2_q_identity():
    assert judge("2 q-identity on S4 and 20 random S5", 60, _q_identity)


def test_criterion_3_golden_replay():
    assert judge("3 golden replay of worked examples", 1, _golden)


def test_criterion_4_transition_equation():
    assert judge("4 transition equation S5, T and BT bijections S4", 60, _transition_equation)


def test_criterion_5_lemmas():
    assert judge("5 bump, Gupta and augmented comaj lemmas", 60, _lemmas)


def test_criterion_6_fomin_kirillov():
    assert judge("6 Fomin-Kirillov identities and bijection", 120, _fomin_kirillov)


def test_criterion_7_macmahon():
    assert judge("7 MacMahon identity n <= 6", 5, _macmahon)


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failures = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
