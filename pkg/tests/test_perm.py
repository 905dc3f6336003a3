import pytest
from hypothesis import given

from conftest import all_words, perms
from fyperm.perm import (
    Permutation,
    Q_of,
    classify_cycles,
    compose,
    cycle_lengths,
    down,
    ext,
    fixed_point_count,
    identity,
    inverse,
    inversion_count,
    is_full_cycle,
    q_of,
    rest,
    transposition,
    up,
)


def apply_left_to_right(a, b):
    # oracle: i -> b(a(i)) computed from plain dicts
    fa = dict(enumerate(a.word, 1))
    fb = dict(enumerate(b.word, 1))
    return tuple(fb[fa[i]] for i in range(1, a.n + 1))


def test_identity(P):
    assert identity(1).word == (1,)
    assert identity(4) == P(1, 2, 3, 4)
    assert identity(4).compact() == "0123"


@pytest.mark.parametrize("word", [(1, 3), (2, 2, 1), (0, 1), ()])
def test_rejects_non_permutations(word):
    with pytest.raises(ValueError):
        Permutation.from_word(word)


def test_compose_pins_the_action(P):
    # tau(1,2) first, then tau(2,3): 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
    c = compose(transposition(3, 1, 2), transposition(3, 2, 3))
    assert (c(1), c(3), c(2)) == (3, 2, 1)


def test_premultiplying_swaps_positions(P):
    p = P(3, 1, 4, 2)
    assert compose(transposition(4, 1, 3), p) == P(4, 1, 3, 2)
    assert compose(p, transposition(4, 1, 3)) == P(1, 3, 4, 2)


@given(perms(), perms())
def test_compose_matches_oracle(a, b):
    if a.n != b.n:
        with pytest.raises(ValueError):
            compose(a, b)
        return
    assert compose(a, b).word == apply_left_to_right(a, b)


@given(perms())
def test_group_laws(p):
    e = identity(p.n)
    assert compose(p, e) == compose(e, p) == p
    assert compose(p, inverse(p)) == e
    assert inverse(inverse(p)) == p


def test_inverse_example(P):
    assert inverse(P(3, 4, 2, 1)) == P(4, 3, 1, 2)
    assert inverse(identity(5)) == identity(5)


def test_transpositions(P):
    assert transposition(4, 1, 2) == P(2, 1, 3, 4)
    assert transposition(4, 3, 3) == identity(4)
    t = transposition(4, 1, 4)
    assert compose(t, t) == identity(4)
    with pytest.raises(ValueError):
        transposition(3, 1, 4)


def test_ext_rest(P):
    assert ext(P(2, 1)) == P(2, 1, 3)
    assert rest(P(2, 1, 3)) == P(2, 1)
    with pytest.raises(ValueError):
        rest(P(3, 2, 1))


def test_q_and_Q(P):
    assert q_of(P(2, 3, 1)) == 2
    assert Q_of(P(2, 3, 1)) == 1
    assert q_of(identity(5)) == Q_of(identity(5)) == 5


def test_up_examples(P):
    assert up(P(2, 1), 1) == P(3, 1, 2)
    assert is_full_cycle(up(P(2, 1), 1))
    # identity(2) is not a 2-cycle, so the image is not a 3-cycle
    assert up(identity(2), 1) == P(3, 2, 1)
    assert classify_cycles(P(3, 2, 1)).kind == "cycle" and classify_cycles(P(3, 2, 1)).k == 2


def test_down_examples(P):
    assert down(P(3, 1, 2)) == (P(2, 1), 1)
    assert down(P(2, 3, 1)) == (P(2, 1), 2)
    assert down(identity(4)) == (identity(3), 4)


@pytest.mark.parametrize("n", range(1, 6))
def test_up_down_are_inverse(n):
    for w in all_words(n):
        p = Permutation.from_word(w)
        for q in range(1, n + 2):
            assert down(up(p, q)) == (p, q)
        if n >= 2:
            assert up(*down(p)) == p


@pytest.mark.parametrize("n", range(2, 7))
def test_strict_up_preserves_cycles(n):
    for w in all_words(n):
        p = Permutation.from_word(w)
        if is_full_cycle(p):
            assert all(is_full_cycle(up(p, q)) for q in range(1, n + 1))
            assert not is_full_cycle(up(p, n + 1))


@given(perms(min_n=2))
def test_down_commutes_with_inverse(p):
    assert down(inverse(p))[0] == inverse(down(p)[0])


def test_cycle_helpers(P):
    assert fixed_point_count(identity(4)) == 4
    assert inversion_count(identity(4)) == 0
    assert inversion_count(P(4, 3, 2, 1)) == 6
    c = classify_cycles(P(3, 1, 2))
    assert (c.kind, c.k) == ("cycle", 3)
    assert classify_cycles(identity(3)).kind == "identity"
    assert classify_cycles(P(2, 1, 4, 3)).kind == "general"
    assert sorted(cycle_lengths(P(2, 1, 4, 3, 5))) == [1, 2, 2]


@given(perms())
def test_inversion_count_oracle(p):
    w = p.word
    assert inversion_count(p) == sum(1 for i in range(p.n) for j in range(i + 1, p.n) if w[i] > w[j])


def test_rendering(P):
    p = P(2, 3, 4, 1)
    assert str(p) == "2 3 4 1"
    assert p.compact() == "1230"
    assert Permutation.from_compact("1230") == p
