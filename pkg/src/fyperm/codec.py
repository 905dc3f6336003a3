"""Mixed-radix encodings of permutations and cycles.

Three encodings of a permutation of degree n are provided:

* the Fisher-Yates (triangular) code ``(j_n, ..., j_2)`` with ``1 <= j_k <= k``,
  i.e. the random choices of the shuffle.  Strict codes (``j_k <= k - 1``)
  are Sattolo's choices and encode n-cycles;
* the dual code ``(c_2, ..., c_n)`` read off by peeling images of the top
  symbol, with the lowest factor acting first;
* the inversion table ``(d_1, ..., d_n)`` indexed by value, ``d_v`` counting
  the smaller symbols to the right of v (so ``0 <= d_v <= v - 1``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import (
    Permutation,
    Q_of,
    down,
    identity,
    inverse,
    is_full_cycle,
    product,
    transposition,
)

BIG_ENDIAN = "big-endian-lex"
LITTLE_ENDIAN = "little-endian-lex"
ORDERS = (BIG_ENDIAN, LITTLE_ENDIAN)


def _order(order: str) -> str:
    aliases = {"big": BIG_ENDIAN, "little": LITTLE_ENDIAN}
    order = aliases.get(order, order)
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}")
    return order


@dataclass(frozen=True)
class TriangularCode:
    """Fisher-Yates choices, most significant first: ``digits = (j_n, ..., j_2)``."""

    n: int
    digits: tuple[int, ...]
    strict: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.digits) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} digits, got {len(self.digits)}")
        for k, j in zip(self.levels(), self.digits):
            top = k - 1 if self.strict else k
            if not 1 <= j <= top:
                raise ValueError(f"digit j_{k}={j} outside 1..{top}")

    def levels(self) -> range:
        return range(self.n, 1, -1)

    def radices(self) -> tuple[int, ...]:
        return tuple(k - 1 if self.strict else k for k in self.levels())

    def digit(self, k: int) -> int:
        return self.digits[self.n - k]

    def __str__(self) -> str:
        return ",".join(map(str, self.digits))

    def table_layout(self) -> str:
        """0-based string with the constant radix-1 digit in front, e.g. ``"0100"``."""
        return "0" + "".join(str(j - 1) for j in self.digits)

    @classmethod
    def parse(cls, text: str, n: int, strict: bool = False, zero_based: bool = False) -> "TriangularCode":
        digits = parse_digits(text)
        if zero_based:
            if len(digits) == n and n > 1:
                if digits[0] != 0:
                    raise ValueError("leading radix-1 digit must be 0")
                digits = digits[1:]
            digits = [d + 1 for d in digits]
        return cls(n, tuple(digits), strict)


@dataclass(frozen=True)
class InversionCode:
    n: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.digits) != self.n:
            raise ValueError(f"expected {self.n} digits, got {len(self.digits)}")
        for i, d in enumerate(self.digits, start=1):
            if not 0 <= d <= i - 1:
                raise ValueError(f"digit d_{i}={d} outside 0..{i - 1}")

    def __str__(self) -> str:
        return "".join(map(str, self.digits)) if self.n <= 10 else ",".join(map(str, self.digits))


def parse_digits(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    if "," in text or " " in text:
        return [int(tok) for tok in text.replace(",", " ").split()]
    return [int(ch) for ch in text]


# -- Fisher-Yates encoding ---------------------------------------------------


def fy_decode(code: TriangularCode) -> Permutation:
    """Replay the shuffle: for k = n..2 swap word positions ``j_k`` and ``k``."""
    w = list(range(1, code.n + 1))
    for k, j in zip(code.levels(), code.digits):
        w[j - 1], w[k - 1] = w[k - 1], w[j - 1]
    return Permutation._trusted(tuple(w))


def fy_encode(p: Permutation, strict: bool = False) -> TriangularCode:
    """Recover the shuffle choices; ``j_k`` is the image of the top symbol at each peel."""
    if strict and not is_full_cycle(p):
        raise ValueError(f"{p} is not an n-cycle")
    digits = []
    current = p
    while current.n > 1:
        digits.append(Q_of(current))
        current = down(current)[0]
    return TriangularCode(p.n, tuple(digits), strict)


def triangular_factors(code: TriangularCode) -> list[Permutation]:
    """Transpositions ``tau_1 .. tau_{n-1}`` with ``tau_{k-1} = (k, j_k)``; their product is the decode."""
    return [transposition(code.n, k, code.digit(k)) for k in range(2, code.n + 1)]


def inc(code: TriangularCode) -> TriangularCode:
    """Reinterpret a strict code in the plain radix space."""
    return TriangularCode(code.n, code.digits, strict=False)


# -- ranking -----------------------------------------------------------------


def code_space_size(n: int, strict: bool = False) -> int:
    size = 1
    for k in range(2, n + 1):
        size *= k - 1 if strict else k
    return size


def all_codes(n: int, strict: bool = False) -> Iterator[TriangularCode]:
    """Every code of degree n in big-endian lex order."""
    ranges = [range(1, (k - 1 if strict else k) + 1) for k in range(n, 1, -1)]
    for digits in itertools.product(*ranges):
        yield TriangularCode(n, digits, strict)


def rank(code: TriangularCode, order: str = BIG_ENDIAN) -> int:
    order = _order(order)
    pairs = list(zip(code.digits, code.radices()))
    if order == LITTLE_ENDIAN:
        pairs.reverse()
    r = 0
    for digit, radix in pairs:
        r = r * radix + (digit - 1)
    return r


def unrank(r: int, n: int, order: str = BIG_ENDIAN, strict: bool = False) -> TriangularCode:
    order = _order(order)
    size = code_space_size(n, strict)
    if not 0 <= r < size:
        raise ValueError(f"rank {r} outside 0..{size - 1}")
    radices = [k - 1 if strict else k for k in range(n, 1, -1)]
    positions = range(len(radices))
    if order == BIG_ENDIAN:
        positions = reversed(positions)
    digits = [0] * len(radices)
    for i in positions:
        r, digits[i] = divmod(r, radices[i])
        digits[i] += 1
    return TriangularCode(n, tuple(digits), strict)


# -- dual encoding -----------------------------------------------------------


def dual_decode(digits: Sequence[int], strict: bool = False) -> Permutation:
    """Product ``tau(2, c_2) tau(3, c_3) ... tau(n, c_n)``, lowest factor acting first."""
    n = len(digits) + 1
    factors = [identity(n)]
    for k, c in enumerate(digits, start=2):
        top = k - 1 if strict else k
        if not 1 <= c <= top:
            raise ValueError(f"dual digit c_{k}={c} outside 1..{top}")
        factors.append(transposition(n, k, c))
    return product(factors)


def dual_encode(p: Permutation, strict: bool = False) -> tuple[int, ...]:
    """Peel ``c_k`` = image of k, for k = n down to 2; returns ``(c_2, ..., c_n)``."""
    if strict and not is_full_cycle(p):
        raise ValueError(f"{p} is not an n-cycle")
    w = list(p.word)
    digits = []
    for k in range(p.n, 1, -1):
        c = w[k - 1]
        digits.append(c)
        # postmultiply by tau(k, c): swap the values k and c
        w[w.index(k)] = c
        w.pop()
    return tuple(reversed(digits))


def dual_table_layout(digits: Sequence[int]) -> str:
    return "0" + "".join(str(c - 1) for c in digits)


def parse_dual(text: str, n: int, zero_based: bool = False) -> tuple[int, ...]:
    digits = parse_digits(text)
    if zero_based:
        if len(digits) == n and n > 1:
            if digits[0] != 0:
                raise ValueError("leading radix-1 digit must be 0")
            digits = digits[1:]
        digits = [d + 1 for d in digits]
    if len(digits) != n - 1:
        raise ValueError(f"expected {n - 1} dual digits, got {len(digits)}")
    return tuple(digits)


# -- inversion encoding ------------------------------------------------------


def inv_encode(p: Permutation) -> InversionCode:
    """Digit v counts the symbols smaller than v standing to the right of v."""
    pos = inverse(p).word
    w = p.word
    digits = tuple(sum(1 for s in w[pos[v - 1] :] if s < v) for v in range(1, p.n + 1))
    return InversionCode(p.n, digits)


def inv_decode(code: InversionCode | Iterable[int]) -> Permutation:
    if not isinstance(code, InversionCode):
        digits = tuple(code)
        code = InversionCode(len(digits), digits)
    w: list[int] = []
    for v, d in enumerate(code.digits, start=1):
        # everything placed so far is smaller than v; leave d of them to its right
        w.insert(len(w) - d, v)
    return Permutation._trusted(tuple(w))


def encode_as(p: Permutation, encoding: str, strict: bool = False):
    if encoding == "fy":
        return fy_encode(p, strict)
    if encoding == "dual":
        return dual_encode(p, strict)
    if encoding == "inv":
        return inv_encode(p)
    raise ValueError(f"unknown encoding {encoding!r}")
