import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_words, perms
from fyperm.enumerator import (
    ADJACENT,
    IDENTITY,
    OTHER,
    THREE_CYCLE,
    TRANSPOSITION,
    classify_delta,
    cycle_gray_wraparound,
    delta,
    fy_step_expectation,
    gray_code_stream,
    gray_cycle_stream,
    gray_perm_stream,
    gray_stream,
    lex_stream,
    sims_factor,
)
from fyperm.perm import Permutation, compose, identity, is_full_cycle, transposition


def every_perm(n):
    return {Permutation.from_word(w) for w in all_words(n)}


def test_lex_stream_examples():
    items = list(lex_stream(4, "perm", "fy"))
    assert len(items) == 24
    assert items[0][1].compact() == "1230"
    assert items[6][1].compact() == "3201"
    assert next(iter(lex_stream(4, "perm", "inv")))[1] == identity(4)
    cycles = [p for _, p in lex_stream(4, "cycle", "fy")]
    assert len(cycles) == 6 and all(is_full_cycle(p) for p in cycles)


@pytest.mark.parametrize("encoding", ["fy", "dual", "inv"])
@pytest.mark.parametrize("n", range(1, 7))
def test_lex_streams_cover_once(encoding, n):
    perms_ = [p for _, p in lex_stream(n, "perm", encoding)]
    assert len(perms_) == math.factorial(n) and set(perms_) == every_perm(n)


@pytest.mark.parametrize("encoding", ["fy", "dual"])
@pytest.mark.parametrize("n", range(2, 7))
def test_lex_cycle_streams_cover_once(encoding, n):
    cycles = [p for _, p in lex_stream(n, "cycle", encoding)]
    assert len(cycles) == len(set(cycles)) == math.factorial(n - 1)
    assert all(is_full_cycle(p) for p in cycles)


def test_cycles_have_no_inversion_code():
    with pytest.raises(ValueError):
        list(lex_stream(4, "cycle", "inv"))


def test_gray_stream_small():
    words = [w for w, _ in gray_stream((2, 3))]
    assert words == [(0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0)]


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_gray_stream_properties(radices):
    items = list(gray_stream(radices))
    words = [w for w, _ in items]
    assert len(words) == math.prod(radices) == len(set(words))
    for (a, _), (b, step) in zip(items, items[1:]):
        diff = [i for i in range(len(a)) if a[i] != b[i]]
        assert diff == [step.position]
        assert abs(a[step.position] - b[step.position]) == 1
        assert (step.old, step.new) == (a[step.position], b[step.position])


def test_gray_perm_examples():
    inv = list(gray_perm_stream(4, "inv"))
    assert len(inv) == 24 and [k for _, k in inv[1:]] == [ADJACENT] * 23
    fy = list(gray_perm_stream(4, "fy"))
    assert len(fy) == 24
    assert all(k in (ADJACENT, TRANSPOSITION, THREE_CYCLE) for _, k in fy[1:])
    two = list(gray_perm_stream(2, "fy"))
    # the only transposition in S_2 swaps 1 and 2, which are adjacent
    assert len(two) == 2 and two[1][1] == ADJACENT


@pytest.mark.parametrize("n", range(2, 7))
def test_inv_gray_swaps_adjacent_positions(n):
    prev = None
    for p, _ in gray_perm_stream(n, "inv"):
        if prev is not None:
            diff = [i for i in range(n) if p.word[i] != prev.word[i]]
            assert len(diff) == 2 and diff[1] - diff[0] == 1
        prev = p


@pytest.mark.parametrize("n", range(2, 7))
def test_fy_gray_step_prediction(n):
    prev_code = None
    for code, perm, step in gray_code_stream(n, "perm", "fy"):
        if step is not None:
            kind, d = fy_step_expectation(prev_code, step)
            assert d == step.induced
            got = classify_delta(d)
            assert got == kind or (got, kind) == (ADJACENT, TRANSPOSITION)
        prev_code = code


def test_cycle_gray_examples():
    four = list(gray_cycle_stream(4))
    assert len(four) == 6 and [k for _, k in four[1:]] == [THREE_CYCLE] * 5
    three = list(gray_cycle_stream(3))
    assert len(three) == 2 and three[1][1] == THREE_CYCLE


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_gray_never_transposes(n):
    items = list(gray_cycle_stream(n))
    assert len({p for p, _ in items}) == math.factorial(n - 1)
    assert {k for _, k in items[1:]} == {THREE_CYCLE}


@pytest.mark.parametrize("n", range(3, 8))
def test_wraparound_is_reported(n):
    wrap = cycle_gray_wraparound(n)
    assert wrap.length == math.factorial(n - 1)
    # the reflected order returns to a single-digit change exactly when n is odd
    assert wrap.single_digit == (n % 2 == 1)
    assert wrap.closes == wrap.single_digit


def test_delta_basics(P):
    p = P(3, 1, 4, 2)
    assert delta(p, p) == identity(4)
    assert classify_delta(delta(p, p)) == IDENTITY
    with pytest.raises(ValueError):
        delta(p, identity(3))
    with pytest.raises(ValueError):
        delta(p, p, "up")


@given(perms(min_n=3, max_n=7), st.data())
def test_delta_contract(p, data):
    q = Permutation.from_word(data.draw(st.permutations(list(range(1, p.n + 1)))))
    assert compose(p, delta(p, q, "left")) == q
    assert compose(delta(p, q, "right"), p) == q


def test_classify_delta(P):
    assert classify_delta(transposition(5, 2, 3)) == ADJACENT
    assert classify_delta(transposition(5, 1, 4)) == TRANSPOSITION
    assert classify_delta(P(2, 3, 1, 4)) == THREE_CYCLE
    assert classify_delta(P(2, 1, 4, 3)) == OTHER


def test_sims_factor(P):
    assert all(f == identity(4) for f in sims_factor(identity(4)))
    assert sims_factor(P(3, 4, 2, 1), "cycle") == [
        transposition(4, 1, 2),
        transposition(4, 2, 3),
        transposition(4, 1, 4),
    ]
    with pytest.raises(ValueError):
        sims_factor(P(2, 1, 3), "cycle")


@pytest.mark.parametrize("n", range(1, 7))
def test_sims_factorisation_is_unique(n):
    factorisations = {tuple(sims_factor(p)) for p in every_perm(n)}
    assert len(factorisations) == math.factorial(n)
