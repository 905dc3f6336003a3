import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fyperm.codec import TriangularCode, fy_decode
from fyperm.generator import (
    DEFAULT_SEED,
    RandomSource,
    ScriptedSource,
    SwapTrace,
    check_trace_matches,
    fisher_yates,
    general_m,
    grow,
    sample_code,
    sample_words,
    sattolo,
)
from fyperm.perm import Permutation, classify_cycles, identity, is_full_cycle


def test_scripted_run_reproduces_worked_example():
    perm, trace = fisher_yates(5, ScriptedSource([4, 1, 3, 1]))
    assert perm.word == (2, 5, 3, 1, 4)
    assert trace.steps == ((5, 4), (4, 1), (3, 3), (2, 1), (1, 1))
    assert str(trace) == "5:4 4:1 3:3 2:1 1:1"


def test_n1():
    perm, trace = fisher_yates(1, RandomSource())
    assert perm == identity(1)
    assert trace.steps == ((1, 1),)


def test_determinism():
    a = [fisher_yates(7, RandomSource(42))[0] for _ in range(3)]
    b = [fisher_yates(7, RandomSource(42))[0] for _ in range(3)]
    assert a == b
    run = lambda s: [p for p, _ in (fisher_yates(6, r) for r in [RandomSource(s)] for _ in range(5))]
    assert run(DEFAULT_SEED) == run(DEFAULT_SEED)


def test_streams_differ():
    a = list(sample_words(8, 0, RandomSource(1, 0), 20))
    b = list(sample_words(8, 0, RandomSource(1, 1), 20))
    assert a != b
    assert RandomSource(1).substream(1).stream == 1


def test_bad_seed():
    with pytest.raises(ValueError):
        RandomSource(-1)
    with pytest.raises(ValueError):
        RandomSource(2**64)


def test_sattolo_small_cases():
    rng = RandomSource(3)
    assert all(sattolo(2, rng)[0] == Permutation.from_word((2, 1)) for _ in range(20))
    for _ in range(50):
        c = classify_cycles(sattolo(4, rng)[0])
        assert (c.kind, c.k) == ("cycle", 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_trace_decodes_to_output(n):
    rng = RandomSource(n)
    for _ in range(50):
        perm, trace = fisher_yates(n, rng)
        assert check_trace_matches(perm, trace)
        if n >= 2:
            perm, trace = sattolo(n, rng)
            assert check_trace_matches(perm, trace, strict=True)
            assert is_full_cycle(perm)


@pytest.mark.parametrize("m, algo", [(0, fisher_yates), (1, sattolo)])
@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_general_m_matches_named_algorithms(m, algo, n):
    a, b = RandomSource(11), RandomSource(11)
    for _ in range(30):
        assert general_m(n, m, a) == algo(n, b)


def test_general_m_beyond_n_is_identity():
    perm, trace = general_m(3, 5, RandomSource())
    assert perm == identity(3)
    assert trace.steps == ((1, 1),)


def test_general_m_draw_ranges():
    # m=2 on n=5 draws from 1..3, 1..2, 1..1
    perm, trace = general_m(5, 2, ScriptedSource([3, 2]))
    assert trace.steps == ((5, 3), (4, 2), (3, 1), (1, 1))
    with pytest.raises(ValueError):
        general_m(5, 2, ScriptedSource([4]))


def test_trace_validation():
    with pytest.raises(ValueError):
        SwapTrace(3, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        SwapTrace(3, ((3, 4),))


def test_grow_reaches_both_three_cycles():
    two_cycle = Permutation.from_word((2, 1))
    outs = Counter(grow(two_cycle, True, ScriptedSource([q])) for q in (1, 2))
    assert len(outs) == 2 and all(is_full_cycle(p) and p.n == 3 for p in outs)


def test_grow_degree():
    p, rng = identity(1), RandomSource(5)
    for k in range(1, 6):
        p = grow(p, False, rng)
        assert p.n == k + 1


def test_grow_paths_are_uniform():
    # every sequence of choices from degree 1 to 4 ends at a distinct permutation
    ends = Counter()
    for q2, q3, q4 in itertools.product(range(1, 3), range(1, 4), range(1, 5)):
        p = identity(1)
        for q in (q2, q3, q4):
            p = grow(p, False, ScriptedSource([q]))
        ends[p] += 1
    assert len(ends) == 24 and set(ends.values()) == {1}


def test_sattolo_frequencies_near_uniform():
    counts = Counter(sample_words(4, 1, RandomSource(9), 60_000))
    assert len(counts) == 6
    assert all(abs(c / 60_000 - 1 / 6) < 0.01 for c in counts.values())


@given(st.integers(1, 9), st.integers(0, 2**32), st.booleans())
def test_sample_code_is_valid(n, seed, strict):
    if strict and n < 2:
        return
    c = sample_code(n, RandomSource(seed), strict)
    assert isinstance(c, TriangularCode)
    p = fy_decode(c)
    assert p.n == n
    if strict:
        assert is_full_cycle(p)


@given(st.integers(1, 7), st.integers(0, 2**32))
def test_trace_code_round_trip(n, seed):
    perm, trace = fisher_yates(n, RandomSource(seed))
    assert SwapTrace.from_code(trace.code()) == trace
    assert len(trace.steps) == n
