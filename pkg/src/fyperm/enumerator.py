"""Exhaustive generation over the code spaces: lex order and reflected Gray order.

Each Gray step changes one digit by one, and through an encoding it becomes a
small change of the permutation.  Inversion-table steps swap two adjacent word
positions.  Fisher-Yates steps are transpositions or 3-cycles, and on strict
codes they are always 3-cycles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .codec import (
    TriangularCode,
    dual_decode,
    fy_decode,
    fy_encode,
    inv_decode,
    triangular_factors,
)
from .perm import (
    Permutation,
    classify_cycles,
    compose,
    identity,
    inverse,
    product,
    transposition,
)

IDENTITY = "identity"
ADJACENT = "adjacent-transposition"
TRANSPOSITION = "transposition"
THREE_CYCLE = "three-cycle"
OTHER = "other"


@dataclass(frozen=True)
class GrayStep:
    position: int  # index into the word
    old: int
    new: int
    induced: Permutation | None = None


def delta(prev: Permutation, nxt: Permutation, side: str = "left") -> Permutation:
    """Quotient taking ``prev`` to ``nxt``.

    ``left``: ``compose(prev, d) == nxt``; ``right``: ``compose(d, prev) == nxt``.
    """
    if prev.n != nxt.n:
        raise ValueError(f"degree mismatch: {prev.n} vs {nxt.n}")
    if side == "left":
        return compose(inverse(prev), nxt)
    if side == "right":
        return compose(nxt, inverse(prev))
    raise ValueError(f"unknown side {side!r}")


def classify_delta(d: Permutation) -> str:
    c = classify_cycles(d)
    if c.kind == IDENTITY:
        return IDENTITY
    if c.kind == "cycle" and c.k == 2:
        a, b = (i for i, v in enumerate(d.word, start=1) if i != v)
        return ADJACENT if b - a == 1 else TRANSPOSITION
    if c.kind == "cycle" and c.k == 3:
        return THREE_CYCLE
    return OTHER


# -- raw code streams ---------------------------------------------------------


def gray_stream(radices: Sequence[int]) -> Iterator[tuple[tuple[int, ...], GrayStep | None]]:
    """Reflected mixed-radix Gray code over 0-based digits, last digit fastest.

    Yields ``(word, step)``; the first step is ``None``.  Constant memory:
    the state is the current word and one direction per digit.
    """
    if any(r < 1 for r in radices):
        raise ValueError("radices must be positive")
    word = [0] * len(radices)
    direction = [1] * len(radices)
    yield tuple(word), None
    while True:
        i = len(radices) - 1
        while i >= 0:
            nxt = word[i] + direction[i]
            if 0 <= nxt < radices[i]:
                break
            direction[i] = -direction[i]
            i -= 1
        if i < 0:
            return
        old = word[i]
        word[i] += direction[i]
        yield tuple(word), GrayStep(i, old, word[i])


def lex_codes(radices: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(r) for r in radices))


# -- permutation streams --------------------------------------------------------


def _radices(n: int, family: str, encoding: str) -> list[int]:
    strict = family == "cycle"
    if family not in ("perm", "cycle"):
        raise ValueError(f"unknown family {family!r}")
    if encoding == "fy":
        return [k - 1 if strict else k for k in range(n, 1, -1)]
    if encoding == "dual":
        return [k - 1 if strict else k for k in range(2, n + 1)]
    if encoding == "inv":
        if strict:
            raise ValueError("the inversion encoding does not parametrise cycles")
        return list(range(1, n + 1))
    raise ValueError(f"unknown encoding {encoding!r}")


def _decode(n: int, word: Sequence[int], family: str, encoding: str):
    """Map a 0-based digit word to (code object, permutation)."""
    strict = family == "cycle"
    if encoding == "fy":
        code = TriangularCode(n, tuple(d + 1 for d in word), strict)
        return code, fy_decode(code)
    if encoding == "dual":
        digits = tuple(d + 1 for d in word)
        return digits, dual_decode(digits, strict)
    code = tuple(word)
    return code, inv_decode(code)


def lex_stream(n: int, family: str = "perm", encoding: str = "fy") -> Iterator[tuple[object, Permutation]]:
    """Every code of the family in lex order (last digit fastest) with its permutation."""
    if n < 1:
        raise ValueError("n must be positive")
    for word in lex_codes(_radices(n, family, encoding)):
        yield _decode(n, word, family, encoding)


def natural_side(encoding: str) -> str:
    """Side on which a Gray step of this encoding acts.

    An inversion-table step swaps two word positions, which is a right
    quotient; Fisher-Yates and dual steps are left quotients.
    """
    return "right" if encoding == "inv" else "left"


def gray_code_stream(
    n: int, family: str = "perm", encoding: str = "fy", side: str | None = None
) -> Iterator[tuple[object, Permutation, GrayStep | None]]:
    """Gray order over the code space, with the induced permutation quotient on each step."""
    side = natural_side(encoding) if side is None else side
    prev = None
    for word, step in gray_stream(_radices(n, family, encoding)):
        code, perm = _decode(n, word, family, encoding)
        if step is not None:
            step = GrayStep(step.position, step.old, step.new, delta(prev, perm, side))
        yield code, perm, step
        prev = perm


def gray_perm_stream(n: int, encoding: str = "inv") -> Iterator[tuple[Permutation, str | None]]:
    if n < 2:
        raise ValueError("n must be at least 2")
    if encoding not in ("fy", "inv"):
        raise ValueError("Gray permutation streams use the fy or inv encoding")
    for _, perm, step in gray_code_stream(n, "perm", encoding):
        yield perm, None if step is None else classify_delta(step.induced)


def gray_cycle_stream(n: int) -> Iterator[tuple[Permutation, str | None]]:
    """All (n-1)! n-cycles, consecutive ones differing by a 3-cycle."""
    if n < 2:
        raise ValueError("n must be at least 2")
    for _, perm, step in gray_code_stream(n, "cycle", "fy"):
        yield perm, None if step is None else classify_delta(step.induced)


@dataclass(frozen=True)
class WrapReport:
    n: int
    length: int
    single_digit: bool
    closing_delta: str

    @property
    def closes(self) -> bool:
        return self.closing_delta == THREE_CYCLE


def cycle_gray_wraparound(n: int) -> WrapReport:
    """Whether the last cycle of :func:`gray_cycle_stream` is one 3-cycle away from the first."""
    items = list(gray_code_stream(n, "cycle", "fy"))
    first_code, first, _ = items[0]
    last_code, last, _ = items[-1]
    changed = sum(1 for a, b in zip(first_code.digits, last_code.digits) if a != b)
    closing = classify_delta(delta(last, first)) if len(items) > 1 else IDENTITY
    return WrapReport(n, len(items), changed == 1, closing)


def fy_step_expectation(prev: TriangularCode, step: GrayStep) -> tuple[str, Permutation]:
    """Predict the quotient of one Fisher-Yates Gray step from the changed digit alone.

    The digit at level k moves from j to j'; the quotient is the conjugate of
    ``tau(k, j) tau(k, j')`` by the factors above level k, a transposition when
    j or j' equals k and a 3-cycle otherwise.
    """
    n = prev.n
    k = n - step.position
    j, j2 = step.old + 1, step.new + 1
    kind = TRANSPOSITION if k in (j, j2) else THREE_CYCLE
    factors = triangular_factors(prev)
    above = product([identity(n)] + factors[k - 1 :])
    core = compose(transposition(n, k, j), transposition(n, k, j2))
    return kind, compose(compose(inverse(above), core), above)


def sims_factor(p: Permutation, family: str = "perm") -> list[Permutation]:
    """Unique factorisation with the k-th factor a transposition (k+1, j)."""
    if family not in ("perm", "cycle"):
        raise ValueError(f"unknown family {family!r}")
    return triangular_factors(fy_encode(p, strict=family == "cycle"))
