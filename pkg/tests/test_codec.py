import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import perms
from fyperm.codec import (
    BIG_ENDIAN,
    LITTLE_ENDIAN,
    InversionCode,
    TriangularCode,
    all_codes,
    code_space_size,
    dual_decode,
    dual_encode,
    dual_table_layout,
    fy_decode,
    fy_encode,
    inc,
    inv_decode,
    inv_encode,
    parse_dual,
    rank,
    triangular_factors,
    unrank,
)
from fyperm.perm import Permutation, identity, is_full_cycle, product, transposition


def shuffle_oracle(n, draws):
    """The shuffle as usually written: for k = n..2 swap a[k] with a[j]."""
    a = list(range(1, n + 1))
    for k, j in zip(range(n, 1, -1), draws):
        a[k - 1], a[j - 1] = a[j - 1], a[k - 1]
    return tuple(a)


def inversion_oracle(p):
    # digit for value v: smaller values to its right
    w = p.word
    return tuple(sum(1 for s in w[w.index(v) + 1 :] if s < v) for v in range(1, p.n + 1))


def code(n, *digits, strict=False):
    return TriangularCode(n, digits, strict)


@pytest.mark.parametrize(
    "digits, rendered",
    [((1, 1, 1), "1230"), ((2, 1, 1), "3201"), ((4, 3, 2), "0123")],
)
def test_fy_decode_reference_entries(digits, rendered):
    assert fy_decode(code(4, *digits)).compact() == rendered


def test_fy_decode_five_symbol_example():
    assert fy_decode(code(5, 4, 1, 3, 1)).word == (2, 5, 3, 1, 4)


def test_fy_encode_examples():
    assert fy_encode(Permutation.from_compact("1230")).digits == (1, 1, 1)
    assert fy_encode(Permutation.from_word((3, 4, 2, 1)), strict=True).digits == (1, 2, 1)
    assert fy_encode(identity(4)).digits == (4, 3, 2)
    with pytest.raises(ValueError):
        fy_encode(Permutation.from_word((2, 1, 3)), strict=True)


@pytest.mark.parametrize("n", range(1, 7))
def test_fy_decode_matches_shuffle(n):
    for c in all_codes(n):
        assert fy_decode(c).word == shuffle_oracle(n, c.digits)
        assert fy_encode(fy_decode(c)) == c


@given(perms())
def test_fy_round_trip(p):
    assert fy_decode(fy_encode(p)) == p


def test_digit_bounds():
    with pytest.raises(ValueError):
        code(4, 5, 1, 1)
    with pytest.raises(ValueError):
        code(4, 4, 1, 1, strict=True)
    with pytest.raises(ValueError):
        code(4, 1, 1)


def test_triangular_factors_example():
    factors = triangular_factors(fy_encode(Permutation.from_word((3, 4, 2, 1))))
    assert factors == [transposition(4, 2, 1), transposition(4, 3, 2), transposition(4, 4, 1)]
    assert all(f == identity(4) for f in triangular_factors(code(4, 4, 3, 2)))


@pytest.mark.parametrize("n", range(1, 7))
def test_triangular_product_recovers_permutation(n):
    for c in all_codes(n):
        assert product([identity(n)] + triangular_factors(c)) == fy_decode(c)


def test_rank_and_unrank_examples():
    assert rank(code(4, 1, 1, 1)) == 0
    assert unrank(6, 4).table_layout() == "0100"
    assert fy_decode(unrank(6, 4)).compact() == "3201"
    assert fy_decode(unrank(23, 4)) == identity(4)
    with pytest.raises(ValueError):
        unrank(24, 4)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("strict", [False, True])
def test_rank_is_position_in_lex_order(n, strict):
    if strict and n < 2:
        return
    radices = [k - 1 if strict else k for k in range(n, 1, -1)]
    expected = [tuple(d + 1 for d in w) for w in itertools.product(*(range(r) for r in radices))]
    assert [c.digits for c in all_codes(n, strict)] == expected
    for r, digits in enumerate(expected):
        assert unrank(r, n, BIG_ENDIAN, strict).digits == digits
        assert rank(TriangularCode(n, digits, strict)) == r
    little = sorted(expected, key=lambda d: tuple(reversed(d)))
    for r, digits in enumerate(little):
        assert unrank(r, n, LITTLE_ENDIAN, strict).digits == digits


def test_order_aliases():
    assert unrank(5, 4, "little") == unrank(5, 4, LITTLE_ENDIAN)
    with pytest.raises(ValueError):
        unrank(0, 4, "middle")


@pytest.mark.parametrize("n", range(1, 8))
def test_code_space_size(n):
    assert code_space_size(n) == math.factorial(n)
    if n >= 2:
        assert code_space_size(n, strict=True) == math.factorial(n - 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_strict_codes_give_each_cycle_once(n):
    cycles = [fy_decode(c) for c in all_codes(n, strict=True)]
    assert len(set(cycles)) == len(cycles) == math.factorial(n - 1)
    assert all(is_full_cycle(p) for p in cycles)


def test_inc():
    assert inc(code(4, 1, 1, 1, strict=True)) == code(4, 1, 1, 1)
    assert inc(code(1, strict=True)).digits == ()
    for c in all_codes(6, strict=True):
        assert fy_decode(inc(c)) == fy_decode(c)


@pytest.mark.parametrize(
    "rendered, perm",
    [("0000", "1230"), ("0101", "2301"), ("0123", "0123")],
)
def test_dual_reference_entries(rendered, perm):
    digits = parse_dual(rendered, 4, zero_based=True)
    assert dual_decode(digits).compact() == perm
    assert dual_table_layout(dual_encode(Permutation.from_compact(perm))) == rendered


@pytest.mark.parametrize("n", range(1, 7))
def test_dual_is_bijection(n):
    seen = set()
    for digits in itertools.product(*(range(1, k + 1) for k in range(2, n + 1))):
        p = dual_decode(digits)
        assert dual_encode(p) == digits
        seen.add(p)
    assert len(seen) == math.factorial(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_strict_dual_gives_cycles(n):
    seen = set()
    for digits in itertools.product(*(range(1, k) for k in range(2, n + 1))):
        p = dual_decode(digits, strict=True)
        assert is_full_cycle(p)
        assert dual_encode(p, strict=True) == digits
        seen.add(p)
    assert len(seen) == math.factorial(n - 1)


@given(perms())
def test_dual_digits_are_the_factors(p):
    digits = dual_encode(p)
    factors = [transposition(p.n, k, c) for k, c in zip(range(2, p.n + 1), digits)]
    assert product([identity(p.n)] + factors) == p


@pytest.mark.parametrize(
    "digits, perm",
    [((0, 0, 0, 0), "0123"), ((0, 1, 0, 0), "1023"), ((0, 1, 2, 3), "3210"), ((0, 0, 0, 2), "0312")],
)
def test_inversion_reference_entries(digits, perm):
    assert inv_decode(digits).compact() == perm
    assert inv_encode(Permutation.from_compact(perm)).digits == digits


@given(perms())
def test_inversion_matches_oracle(p):
    c = inv_encode(p)
    assert c.digits == inversion_oracle(p)
    assert sum(c.digits) == sum(1 for i in range(p.n) for j in range(i + 1, p.n) if p.word[i] > p.word[j])
    assert inv_decode(c) == p


def test_inversion_digit_bounds():
    with pytest.raises(ValueError):
        InversionCode(3, (0, 2, 0))


@given(st.integers(2, 9), st.data())
def test_table_layout_round_trip(n, data):
    r = data.draw(st.integers(0, math.factorial(n) - 1))
    c = unrank(r, n)
    assert TriangularCode.parse(c.table_layout(), n, zero_based=True) == c
    assert TriangularCode.parse(str(c), n) == c
