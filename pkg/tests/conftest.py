from itertools import product

import pytest
from hypothesis import strategies as st

from pipebump.macdonald import enumerate_bounded_pairs
from pipebump.perm import Permutation, all_permutations
from pipebump.words import enumerate_reduced_words

S3 = list(all_permutations(3))
S4 = list(all_permutations(4))
S4_NONID = [pi for pi in S4 if not pi.is_identity]


@st.composite
def permutations(draw, max_n: int = 5) -> Permutation:
    n = draw(st.integers(1, max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def reduced_words(draw, max_n: int = 5, min_length: int = 0):
    pi = draw(permutations(max_n).filter(lambda w: w.length >= min_length))
    return draw(st.sampled_from(enumerate_reduced_words(pi)))


@st.composite
def bounded_pairs(draw, max_n: int = 5, min_length: int = 1):
    a = draw(reduced_words(max_n, min_length))
    b = tuple(draw(st.integers(1, x)) for x in a)
    return a, b


def all_bounded_pairs(perms):
    for pi in perms:
        for pair in enumerate_bounded_pairs(pi):
            yield pi, pair.a, pair.b


def bounded_words(a):
    return product(*(range(1, x + 1) for x in a))


@pytest.fixture(scope="session")
def s4_pairs():
    return list(all_bounded_pairs(S4))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
