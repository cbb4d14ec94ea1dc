from collections import defaultdict
from fractions import Fraction
from itertools import product
from math import factorial, prod

import pytest
from hypothesis import given

from pipebump.perm import Permutation, dominant_from_partition
from pipebump.pipedream import PipeDream, enumerate_pipe_dreams
from pipebump.polynomial import QPoly
from pipebump.qanalog import q_int
from pipebump.tableaux import (
    b_statistic,
    check_partition,
    eg_insert,
    enumerate_flagged,
    enumerate_rpp,
    fk_inverse,
    fk_map,
    fk_permutation,
    flagged_to_rpp,
    is_flagged,
    is_rpp,
    pipedream_to_flagged,
    rpp_q_weight,
    rpp_to_flagged,
    shape_of,
    staircase_lhs,
    staircase_rhs,
    transpose,
    verify_fk,
)
from pipebump.words import enumerate_reduced_words

from .conftest import S4, reduced_words

P = Permutation
PARTITIONS = [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def hook_count(shape) -> int:
    cols = [sum(1 for part in shape if part > c) for c in range(shape[0])] if shape else []
    hooks = prod(shape[u] - c + cols[c] - u - 1 for u in range(len(shape)) for c in range(shape[u]))
    return factorial(sum(shape)) // hooks


def is_standard(t) -> bool:
    entries = sorted(v for row in t for v in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    rows_ok = all(row[c] < row[c + 1] for row in t for c in range(len(row) - 1))
    cols_ok = all(t[u][c] > t[u - 1][c] for u in range(1, len(t)) for c in range(len(t[u])))
    return rows_ok and cols_ok


def test_eg_examples():
    assert eg_insert((1,)) == (((1,),), ((1,),))
    results = [eg_insert(a) for a in enumerate_reduced_words(P([3, 2, 1]))]
    assert all(shape_of(p) == (2, 1) for p, _ in results)
    assert len({q for _, q in results}) == 2
    assert eg_insert(()) == ((), ())
    with pytest.raises(ValueError):
        eg_insert((1, 1))


def test_eg_fibers_count_w0():
    fibers = defaultdict(set)
    for a in enumerate_reduced_words(P([4, 3, 2, 1])):
        p, q = eg_insert(a)
        fibers[p].add(q)
    assert sum(hook_count(shape_of(p)) for p in fibers) == 16


@pytest.mark.parametrize("pi", S4, ids=str)
def test_eg_fibers(pi):
    fibers = defaultdict(list)
    for a in enumerate_reduced_words(pi):
        p, q = eg_insert(a)
        assert shape_of(p) == shape_of(q)
        assert is_standard(q)
        fibers[p].append(q)
    for p, qs in fibers.items():
        assert len(set(qs)) == len(qs) == hook_count(shape_of(p))
    assert sum(len(qs) for qs in fibers.values()) == len(enumerate_reduced_words(pi))


def test_partition_helpers():
    assert check_partition((2, 1)) == (2, 1)
    with pytest.raises(ValueError):
        check_partition((1, 2))
    assert b_statistic((2, 1)) == 1
    assert b_statistic((3, 2, 2)) == 6
    assert transpose(((1, 2), (3,))) == ((1, 3), (2,))
    assert transpose(()) == ()


def test_flagged_examples():
    (d,) = enumerate_pipe_dreams(P([3, 2, 1]))
    t = pipedream_to_flagged(d, (2, 1), 0)
    assert t == ((1, 1), (2,))
    assert flagged_to_rpp(t, (2, 1), 0) == ((0, 0), (0,))
    assert pipedream_to_flagged(PipeDream(), (), 0) == ()
    for x in range(3):
        dreams = enumerate_pipe_dreams(fk_permutation((1,), x))
        assert len(dreams) == x + 1
        assert sorted(pipedream_to_flagged(d, (1,), x) for d in dreams) == [((v,),) for v in range(1, x + 2)]
        assert flagged_to_rpp(((1 + x,),), (1,), x) == ((x,),)
        assert rpp_to_flagged(((x,),), (1,), x) == ((1 + x,),)


def test_rpp_examples():
    for x in range(4):
        assert len(enumerate_rpp((1,), x)) == x + 1
        assert rpp_q_weight((1,), x) == q_int(x + 1)
    assert enumerate_rpp((2, 1), 0) == [((0, 0), (0,))]
    assert rpp_q_weight((2, 1), 0) == QPoly.one()
    # five 0/1 fillings: 00/0, 00/1, 01/0, 01/1, 11/1
    assert len(enumerate_rpp((2, 1), 1)) == 5
    assert len(enumerate_flagged((2, 1), 1)) == 5
    assert len(enumerate_pipe_dreams(fk_permutation((2, 1), 1))) == 5
    assert all(is_rpp(k, 1) for k in enumerate_rpp((2, 1), 1))
    assert not is_rpp(((1, 0), (0,)), 1)
    with pytest.raises(ValueError):
        rpp_to_flagged(((1, 0), (0,)), (2, 1), 1)


def test_fk_map_examples():
    assert fk_map((1,), (1,), (1,), 0) == ((1,), ((0,),))
    images = {fk_map(a, b, (2, 1), 0) for a in enumerate_reduced_words(P([3, 2, 1])) for b in product(*(range(1, v + 1) for v in a))}
    assert len(images) == 6
    assert {k for _, k in images} == {((0, 0), (0,))}
    assert {c for c, _ in images} == set(product((1,), (1, 2), (1, 2, 3)))
    with pytest.raises(ValueError):
        fk_map((1,), (3,), (1,), 1)


def test_fk_roundtrip_21_x1():
    sigma = dominant_from_partition((2, 1))
    for a in enumerate_reduced_words(sigma):
        for b in product(*(range(1, v + 2) for v in a)):
            c, k = fk_map(a, b, (2, 1), 1)
            assert fk_inverse(c, k, (2, 1), 1) == (a, b)


def test_staircase_examples():
    assert staircase_rhs(3, 0) == 6
    assert staircase_rhs(3, 1) == 30 == staircase_lhs(3, 1)
    assert staircase_rhs(1, 0) == 1
    assert isinstance(staircase_rhs(4, 1), Fraction)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [0, 1, 2])
def test_staircase_identity(n, x):
    assert staircase_lhs(n, x) == staircase_rhs(n, x)


@pytest.mark.parametrize("shape", PARTITIONS, ids=str)
@pytest.mark.parametrize("x", [0, 1, 2])
def test_flagged_bijection(shape, x):
    dreams = enumerate_pipe_dreams(fk_permutation(shape, x))
    rpps = enumerate_rpp(shape, x)
    assert len(dreams) == len(enumerate_flagged(shape, x)) == len(rpps)
    images = [flagged_to_rpp(pipedream_to_flagged(d, shape, x), shape, x) for d in dreams]
    assert sorted(images) == sorted(rpps)
    for d in dreams:
        t = pipedream_to_flagged(d, shape, x)
        assert is_flagged(t, x)
        assert rpp_to_flagged(flagged_to_rpp(t, shape, x), shape, x) == t


@pytest.mark.parametrize("shape", PARTITIONS, ids=str)
@pytest.mark.parametrize("x", [0, 1, 2])
def test_b_is_minimal_weight(shape, x):
    degrees = [sum(i - 1 for i in d.rows) for d in enumerate_pipe_dreams(fk_permutation(shape, x))]
    assert min(degrees) == b_statistic(shape)


@pytest.mark.parametrize("shape, x", [((2, 1), 0), ((1,), 2), ((2, 1), 1)], ids=str)
def test_verify_fk_examples(shape, x):
    report = verify_fk(shape, x)
    assert report.passed, report.to_json()


def test_verify_fk_single_cell_is_q_integer():
    report = verify_fk((1,), 2)
    assert report.lhs == report.schubert_side == report.rpp_side == q_int(3)


@given(reduced_words(5, min_length=1))
def test_eg_recording_tableau_is_standard(a):
    p, q = eg_insert(a)
    assert shape_of(p) == shape_of(q)
    assert is_standard(q)
    assert all(row[c] < row[c + 1] for row in p for c in range(len(row) - 1))
