"""Seeded shuffles (Fisher-Yates, Sattolo and the m-shifted family) and incremental growth."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Protocol

from .codec import TriangularCode, fy_decode
from .perm import Permutation, up

DEFAULT_SEED = 0xC0FFEE


class UniformSource(Protocol):
    def uniform_int(self, a: int, b: int) -> int: ...


class RandomSource:
    """Deterministic source keyed by ``(seed, stream)``.

    Backed by the stdlib Mersenne Twister; seeding from an integer and
    ``randrange`` (rejection on ``getrandbits``) are both platform
    independent, so draws are unbiased and reproducible.
    """

    def __init__(self, seed: int = DEFAULT_SEED, stream: int = 0):
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if stream < 0:
            raise ValueError("stream index must be non-negative")
        self.seed = seed
        self.stream = stream
        self._rng = random.Random((stream << 64) | seed)

    def uniform_int(self, a: int, b: int) -> int:
        if b < a:
            raise ValueError(f"empty range {a}..{b}")
        if a == b:
            return a  # no draw consumed
        return a + self._rng.randrange(b - a + 1)

    def substream(self, index: int) -> "RandomSource":
        return RandomSource(self.seed, index)


class ScriptedSource:
    """Replays a fixed sequence of draws; useful for pinning a run by hand."""

    def __init__(self, draws: Iterable[int]):
        self._draws: Iterator[int] = iter(draws)

    def uniform_int(self, a: int, b: int) -> int:
        if a == b:
            return a
        try:
            value = next(self._draws)
        except StopIteration:
            raise ValueError("scripted draws exhausted") from None
        if not a <= value <= b:
            raise ValueError(f"scripted draw {value} outside {a}..{b}")
        return value


@dataclass(frozen=True)
class SwapTrace:
    """Steps ``(k, j_k)`` for k = n down to 1, the final ``(1, 1)`` self-swap included."""

    n: int
    steps: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ks = [k for k, _ in self.steps]
        if any(b >= a for a, b in zip(ks, ks[1:])):
            raise ValueError("trace steps must have strictly decreasing k")
        for k, j in self.steps:
            if not 1 <= j <= k <= self.n:
                raise ValueError(f"invalid step ({k}, {j}) for n={self.n}")

    @classmethod
    def from_code(cls, code: TriangularCode) -> "SwapTrace":
        steps = tuple(zip(code.levels(), code.digits)) + ((1, 1),)
        return cls(code.n, steps)

    def code(self, strict: bool = False) -> TriangularCode:
        digits = tuple(j for k, j in self.steps if k >= 2)
        return TriangularCode(self.n, digits, strict)

    def __str__(self) -> str:
        return " ".join(f"{k}:{j}" for k, j in self.steps)


def _shuffle(n: int, m: int, rng: UniformSource) -> tuple[list[int], list[tuple[int, int]]]:
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be non-negative")
    w = list(range(1, n + 1))
    steps = []
    for k in range(n, m, -1):
        j = rng.uniform_int(1, k - m)
        w[j - 1], w[k - 1] = w[k - 1], w[j - 1]
        steps.append((k, j))
    if not steps or steps[-1][0] != 1:
        steps.append((1, 1))
    return w, steps


def _run(n: int, m: int, rng: UniformSource) -> tuple[Permutation, SwapTrace]:
    w, steps = _shuffle(n, m, rng)
    return Permutation._trusted(tuple(w)), SwapTrace(n, tuple(steps))


def sample_words(n: int, m: int, rng: UniformSource, count: int) -> Iterator[tuple[int, ...]]:
    """Bare output words of ``count`` runs, skipping trace bookkeeping (Monte Carlo path)."""
    for _ in range(count):
        yield tuple(_shuffle(n, m, rng)[0])


def fisher_yates(n: int, rng: UniformSource) -> tuple[Permutation, SwapTrace]:
    return _run(n, 0, rng)


def sattolo(n: int, rng: UniformSource) -> tuple[Permutation, SwapTrace]:
    return _run(n, 1, rng)


def general_m(n: int, m: int, rng: UniformSource) -> tuple[Permutation, SwapTrace]:
    """Step k draws j from 1..k-m, for k = n down to m+1.

    ``m=0`` is Fisher-Yates and ``m=1`` is Sattolo.  When ``m >= n`` no step
    runs and the identity comes back.  Levels below ``m+1`` are not recorded
    except for the closing ``(1, 1)``.
    """
    return _run(n, m, rng)


def grow(state: Permutation, strict: bool, rng: UniformSource) -> Permutation:
    """Insert the next symbol with a uniform choice; stopping anywhere leaves a uniform object."""
    top = state.n if strict else state.n + 1
    return up(state, rng.uniform_int(1, top))


def sample_code(n: int, rng: UniformSource, strict: bool = False) -> TriangularCode:
    digits = tuple(rng.uniform_int(1, k - 1 if strict else k) for k in range(n, 1, -1))
    return TriangularCode(n, digits, strict)


def check_trace_matches(perm: Permutation, trace: SwapTrace, strict: bool = False) -> bool:
    return fy_decode(trace.code(strict)) == perm
