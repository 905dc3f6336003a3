"""Permutations of {1..n} as one-line words, under the right-action convention.

``word[i-1]`` is the image of ``i``.  ``compose(a, b)`` applies ``a`` first, so
premultiplying by a transposition ``tau(a, b)`` swaps word *positions* a and b,
while postmultiplying swaps the *values* a and b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.word)
        if n == 0:
            raise ValueError("permutation degree must be at least 1")
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"{self.word!r} is not a permutation of 1..{n}")

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "Permutation":
        return cls(tuple(word))

    @classmethod
    def from_compact(cls, text: str) -> "Permutation":
        """Parse a 0-based digit string such as ``"1230"``."""
        return cls(tuple(int(ch) + 1 for ch in text.strip()))

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> "Permutation":
        # skips validation; callers guarantee a bijection
        obj = object.__new__(cls)
        object.__setattr__(obj, "word", word)
        return obj

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    def compact(self) -> str:
        """0-based digit string, the layout used by the n=4 reference tables."""
        if self.n > 10:
            raise ValueError("compact rendering needs n <= 10")
        return "".join(str(v - 1) for v in self.word)


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be positive")
    return Permutation._trusted(tuple(range(1, n + 1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The product ``ab``: ``i`` goes to ``b(a(i))``."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    bw = b.word
    return Permutation._trusted(tuple(bw[v - 1] for v in a.word))


def product(perms: Sequence[Permutation]) -> Permutation:
    if not perms:
        raise ValueError("empty product has no degree")
    result = perms[0]
    for p in perms[1:]:
        result = compose(result, p)
    return result


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.word, start=1):
        inv[v - 1] = i
    return Permutation._trusted(tuple(inv))


def transposition(n: int, a: int, b: int) -> Permutation:
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"symbols {a}, {b} out of range 1..{n}")
    w = list(range(1, n + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return Permutation._trusted(tuple(w))


def ext(p: Permutation) -> Permutation:
    return Permutation._trusted(p.word + (p.n + 1,))


def rest(p: Permutation) -> Permutation:
    if p.word[-1] != p.n:
        raise ValueError("rest() needs a permutation fixing its top symbol")
    if p.n == 1:
        raise ValueError("cannot restrict a degree-1 permutation")
    return Permutation._trusted(p.word[:-1])


def q_of(p: Permutation) -> int:
    """Preimage of the top symbol n."""
    return p.word.index(p.n) + 1


def Q_of(p: Permutation) -> int:
    """Image of the top symbol n."""
    return p.word[-1]


def up(p: Permutation, q: int) -> Permutation:
    """Insert symbol n+1: ``tau(n+1, q) * ext(p)``, so that ``q_of(result) == q``."""
    m = p.n + 1
    if not 1 <= q <= m:
        raise ValueError(f"q={q} out of range 1..{m}")
    w = list(p.word) + [m]
    w[q - 1], w[m - 1] = w[m - 1], w[q - 1]
    return Permutation._trusted(tuple(w))


def down(p: Permutation) -> tuple[Permutation, int]:
    """Inverse of :func:`up`; returns ``(rest(tau(n, q) * p), q)``."""
    if p.n < 2:
        raise ValueError("down() needs degree >= 2")
    q = q_of(p)
    w = list(p.word)
    w[q - 1] = w[-1]
    return Permutation._trusted(tuple(w[:-1])), q


# -- cycle structure ---------------------------------------------------------


@dataclass(frozen=True)
class CycleClassification:
    kind: str  # "identity", "cycle" or "general"
    lengths: tuple[int, ...]  # all cycle lengths, descending, fixed points included
    k: int | None = None  # length of the single nontrivial orbit when kind == "cycle"

    def is_full_cycle(self, n: int) -> bool:
        return self.lengths == (n,) or (n == 1 and self.lengths == (1,))


def cycle_lengths(p: Permutation) -> list[int]:
    seen = [False] * (p.n + 1)
    lengths = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p.word[i - 1]
            length += 1
        lengths.append(length)
    return lengths


def classify_cycles(p: Permutation) -> CycleClassification:
    lengths = tuple(sorted(cycle_lengths(p), reverse=True))
    nontrivial = [c for c in lengths if c > 1]
    if not nontrivial:
        return CycleClassification("identity", lengths)
    if len(nontrivial) == 1:
        return CycleClassification("cycle", lengths, nontrivial[0])
    return CycleClassification("general", lengths)


def is_full_cycle(p: Permutation) -> bool:
    """Membership in C_n; by convention the degree-1 identity counts."""
    return p.n == 1 or len(cycle_lengths(p)) == 1


def fixed_point_count(p: Permutation) -> int:
    return sum(1 for i, v in enumerate(p.word, start=1) if i == v)


def inversion_count(p: Permutation) -> int:
    w = p.word
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

