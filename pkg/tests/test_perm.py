import pytest
from hypothesis import given

from pipebump.perm import (
    Permutation,
    all_permutations,
    compose,
    dominant_from_partition,
    inversion_order_cmp,
    length_and_inversions,
    precedes,
    shift_embed,
)
from pipebump.pipedream import transition_targets
from pipebump.words import enumerate_reduced_words

from .conftest import S3, S4, S4_NONID, permutations

P = Permutation


def test_compose_examples():
    assert compose(P([1, 3, 2]), P([2, 1, 3])) == P([3, 1, 2])
    pi = P([2, 4, 1, 3])
    assert compose(P.identity(), pi) == pi
    assert P.simple(1) * P.simple(2) * P.simple(1) == P([3, 2, 1])


def test_normalized_window():
    assert P([1, 2, 3]).window == ()
    assert P([2, 1, 3]).window == (2, 1)
    assert P([2, 1, 3]) == P([2, 1])
    with pytest.raises(ValueError):
        P([1, 1])


def test_length_and_inversions_examples():
    assert length_and_inversions(P([1, 4, 3, 2])) == (3, ((3, 4), (2, 4), (2, 3)))
    assert length_and_inversions(P.identity()) == (0, ())
    # direct scan: 2>1, 4>1, 4>3
    assert length_and_inversions(P([2, 4, 1, 3])) == (3, ((2, 4), (2, 3), (1, 3)))


def test_lex_largest_inversion_examples():
    assert P([1, 4, 3, 2]).lex_largest_inversion() == (3, 4)
    assert P([2, 4, 1, 3]).lex_largest_inversion() == (2, 4)
    assert P([2, 1]).lex_largest_inversion() == (1, 2)
    with pytest.raises(ValueError):
        P.identity().lex_largest_inversion()


def test_inversion_order_examples():
    assert inversion_order_cmp(P([2, 4, 1, 3]), P([1, 4, 3, 2])) < 0
    assert precedes(P([2, 4, 1, 3]), P([1, 4, 3, 2]))
    pi = P([3, 1, 2])
    assert inversion_order_cmp(pi, pi) == 0
    assert all(inversion_order_cmp(P.identity(), w) < 0 for w in S4_NONID)


def test_code_examples():
    assert P([3, 2, 1]).code == (2, 1)
    assert P.identity().code == ()
    assert P.from_code((2, 1, 0, 0)) == P([3, 2, 1, 4])


def test_dominant_examples():
    assert dominant_from_partition((2, 1)) == P([3, 2, 1])
    assert dominant_from_partition(()) == P.identity()
    assert dominant_from_partition((1,)) == P([2, 1])
    assert dominant_from_partition((2, 1)).is_dominant


def test_shift_embed_examples():
    pi = P([3, 1, 2])
    assert shift_embed(0, pi) == pi
    assert shift_embed(1, P([2, 1])) == P([1, 3, 2])
    assert shift_embed(2, P([3, 2, 1])) == P([1, 2, 5, 4, 3])


@pytest.mark.parametrize("pi", S4, ids=str)
def test_length_and_transition_drop(pi):
    length, inv = length_and_inversions(pi)
    assert length == len(inv) == len(set(inv))
    if not pi.is_identity:
        r, s = pi.lex_largest_inversion()
        assert pi.swap_positions(r, s).length == length - 1


def test_code_roundtrip_s5():
    perms = list(all_permutations(5))
    assert len(perms) == 120
    assert all(P.from_code(pi.code) == pi for pi in perms)


def test_inversion_order_is_strict_total_order():
    for a in S4:
        for b in S4:
            ab, ba = inversion_order_cmp(a, b), inversion_order_cmp(b, a)
            assert (ab == 0) == (a == b)
            assert (ab < 0) == (ba > 0)
    for a in S4:
        for b in S4:
            for c in S4:
                if precedes(a, b) and precedes(b, c):
                    assert precedes(a, c)


@pytest.mark.parametrize("pi", S4_NONID, ids=str)
def test_transition_targets_precede(pi):
    for target in transition_targets(pi):
        assert precedes(target, pi)


@pytest.mark.parametrize("x", [0, 1, 2])
def test_shift_embed_shifts_reduced_words(x):
    for pi in S3:
        shifted = shift_embed(x, pi)
        assert shifted.length == pi.length
        want = {tuple(v + x for v in a) for a in enumerate_reduced_words(pi)}
        assert set(enumerate_reduced_words(shifted)) == want


@given(permutations(6))
def test_inverse_composes_to_identity(pi):
    assert (pi * pi.inverse()).is_identity
    assert (pi.inverse() * pi).is_identity


@given(permutations(6))
def test_length_matches_code(pi):
    assert sum(pi.code) == pi.length
