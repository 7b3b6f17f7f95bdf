from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from kregular.bijection import (
    BijectionError,
    ForbiddenSizeError,
    ReducedPair,
    block_split_sizes,
    build,
    forbidden_sizes,
    forbidden_sizes_empirical,
    format_trace,
    partitions_with_word,
    reduce,
    reduce_trace,
    word_from_repeats,
)
from kregular.partitions import Partition, iter_k_regular, profile

WORKED = Partition.parse("3 6 10 10 15 19 19")
WORKED_LAMBDA = Partition.parse("2 2 2 3 3 3 3 5 5 5 6 6 7 7")
WORKED_BASE = Partition.parse("1 2 3 3 4 5 5")


def test_worked_example_reduce():
    red = reduce(WORKED, 2)
    assert red.base == WORKED_BASE
    assert red.lam == WORKED_LAMBDA
    assert red.repeat_positions == (3, 5)


def test_worked_example_trace():
    states = reduce_trace(WORKED, 2)
    expected = [
        ("1 4 8 8 13 17 17", "7 7"),
        ("1 2 6 6 11 15 15", "6 6 7 7"),
        ("1 2 3 3 8 12 12", "5 5 5 6 6 7 7"),
    ]
    for (part, lam), (want_p, want_l) in zip(states, expected):
        assert str(part) == want_p and str(lam) == want_l
    assert states[-1] == (WORKED_BASE, WORKED_LAMBDA)


def test_trace_format():
    lines = format_trace(WORKED, 2)
    assert lines[0] == "step 1: partition=1 4 8 8 13 17 17 lambda=7 7"
    assert lines[-1] == "base=1 2 3 3 4 5 5 word=1 1 2 1 2 forbidden=1 4"


def test_worked_example_build():
    assert build(ReducedPair.from_base(WORKED_BASE, WORKED_LAMBDA, 2)) == WORKED


def test_base_is_fixed_point():
    red = reduce(WORKED_BASE, 2)
    assert red.base == WORKED_BASE and red.lam == Partition()
    assert build(ReducedPair.from_base(WORKED_BASE, Partition(), 2)) == WORKED_BASE


def test_empty():
    for k in (1, 2, 5):
        red = reduce(Partition(), k)
        assert red.word == () and red.lam == Partition()
        assert build(red) == Partition()


def test_single_part():
    assert build(ReducedPair(2, (1,), Partition.parse("1 1 1"))) == Partition.parse("4")
    assert reduce(Partition.parse("4"), 2) == ReducedPair(2, (1,), Partition.parse("1 1 1"))


def test_reduce_rejects_irregular():
    with pytest.raises(BijectionError):
        reduce(Partition.parse("1 1 1"), 2)


def test_build_rejects_bad_lambda():
    with pytest.raises(ForbiddenSizeError) as info:
        build(ReducedPair.from_base(WORKED_BASE, Partition.parse("2 4 4"), 2))
    assert info.value.size == 4 and info.value.index == 1
    with pytest.raises(ForbiddenSizeError) as info:
        build(ReducedPair.from_base(WORKED_BASE, Partition.parse("8"), 2))
    assert info.value.size == 8
    with pytest.raises(BijectionError):
        ReducedPair.from_base(Partition.parse("1 3"), Partition(), 2)


def test_forbidden_sizes():
    assert forbidden_sizes(2, 3, (3, 5)) == {1, 4}
    assert forbidden_sizes(0, 4, ()) == set()
    assert forbidden_sizes(1, 0, (1,)) == {1}
    with pytest.raises(ValueError):
        forbidden_sizes(2, 1, (2, 2))
    with pytest.raises(ValueError):
        forbidden_sizes(1, 1, (3,))


def test_forbidden_single_pair_by_enumeration():
    # one pair, no singletons: partitions "c c"; reduce gives lam = 2^(c-1), never 1
    seen = set()
    for c in range(1, 12):
        seen.update(reduce(Partition((c, c)), 2).lam.parts)
    assert {1, 2} - seen == {1}


def test_forbidden_sizes_empirical():
    assert forbidden_sizes_empirical(2, (1, 1, 2, 1, 2), 60) == {1, 4}
    assert forbidden_sizes_empirical(1, (1, 1, 1), 40) == set()
    assert forbidden_sizes_empirical(1, (1, 1, 1, 1), 40) == set()


@pytest.mark.parametrize("m, n", [(m, n) for m in range(4) for n in range(4) if 0 < m + n <= 4])
def test_forbidden_law_matches_empirical(m, n):
    for reps in combinations(range(1, m + n + 1), m):
        word = word_from_repeats(m, n, reps)
        bound = comb(m + n + 1, 2) + sum(reps) + 2 * m + n + 12
        assert forbidden_sizes_empirical(2, word, bound) == forbidden_sizes(m, n, reps)
        assert block_split_sizes(word) == forbidden_sizes(m, n, reps)


@pytest.mark.parametrize("word", [(1, 3), (3, 1), (2, 3), (3, 3), (1, 3, 2)])
def test_k3_exploration(word):
    # no closed law is claimed; record that observed gaps coincide with run-splitting cuts
    found = forbidden_sizes_empirical(3, word, sum((i + 1) * c for i, c in enumerate(word)) + 14)
    assert found == block_split_sizes(word)


def test_partitions_with_word():
    got = list(partitions_with_word((2, 1), 10))
    assert all(profile(p).mults == (2, 1) and p.weight <= 10 for p in got)
    brute = [p for w in range(11) for p in iter_k_regular(w, 2) if profile(p).mults == (2, 1)]
    assert sorted(got) == sorted(brute)


def _check_round_trip(p, k):
    red = reduce(p, k)
    assert build(red) == p
    assert p.weight == red.base_weight() + red.lam.weight
    assert profile(p).mults == red.word
    assert all(x <= red.total_parts for x in red.lam.parts)
    assert not set(red.lam.parts) & block_split_sizes(red.word)
    if k == 2:
        m, n = red.pairs, red.singletons
        assert red.base_weight() == comb(m + n + 1, 2) + sum(red.repeat_positions)
        assert not set(red.lam.parts) & forbidden_sizes(m, n, red.repeat_positions)


def test_round_trip_k2_up_to_20():
    for w in range(21):
        for p in iter_k_regular(w, 2):
            _check_round_trip(p, 2)


@pytest.mark.parametrize("k", [1, 3, 4, 5])
def test_round_trip_general_k(k):
    for w in range(17):
        for p in iter_k_regular(w, k):
            _check_round_trip(p, k)


@st.composite
def reduced_pairs(draw):
    k = draw(st.integers(1, 4))
    word = tuple(draw(st.lists(st.integers(1, k), min_size=1, max_size=6)))
    allowed = sorted(set(range(1, sum(word) + 1)) - block_split_sizes(word))
    lam = draw(st.lists(st.sampled_from(allowed), max_size=10))
    return ReducedPair(k, word, Partition.from_parts(lam))


@settings(max_examples=300)
@given(reduced_pairs())
def test_every_valid_pair_builds_and_reduces_back(pair):
    p = build(pair)
    assert p.max_multiplicity() <= pair.k
    assert reduce(p, pair.k) == pair
