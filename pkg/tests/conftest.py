import sys
import itertools

import pytest
from hypothesis import strategies as st

from fyperm.perm import Permutation


def all_words(n):
    return list(itertools.permutations(range(1, n + 1)))


@st.composite
def perms(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    word = draw(st.permutations(list(range(1, n + 1))))
    return Permutation.from_word(word)


@pytest.fixture
def P():
    """Shorthand constructor: P(3, 1, 2)."""
    return lambda *w: Permutation.from_word(w)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
