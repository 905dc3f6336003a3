"""Per-symbol statistics of the shuffles and their exact distributions.

Two statistics are tracked for a symbol p: the number of *moves* (times p
takes part in a swap, self-swaps included) and the *distance* it travels.
:func:`chi` evaluates them by peeling the top symbol off a permutation;
:func:`trace_stat` measures them on a recorded run.  Distributions are
probability generating functions, i.e. :class:`~fyperm.poly.Poly` objects in
u whose coefficients sum to one.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .codec import all_codes, fy_decode, fy_encode
from .generator import DEFAULT_SEED, RandomSource, SwapTrace, fisher_yates, sample_words
from .perm import Permutation, down, fixed_point_count, inverse, inversion_count, q_of
from .poly import ONE, U, Poly, harmonic, rising

MOVES = "moves"
DISTANCE = "distance"
EXHAUSTIVE_BOUND = 7


def stat_kind(kind: str) -> str:
    kind = {"dist": DISTANCE}.get(kind, kind)
    if kind not in (MOVES, DISTANCE):
        raise ValueError(f"unknown statistic {kind!r}")
    return kind


# -- PGF helpers ---------------------------------------------------------


def pgf_from_counts(counts: Counter | dict, total: int | None = None) -> Poly:
    total = sum(counts.values()) if total is None else total
    return Poly({(k, 0): Fraction(v, total) for k, v in counts.items()})


def pgf_mean(pgf: Poly) -> Fraction:
    return pgf.diff_u().evaluate(1)


def is_pgf(pgf: Poly) -> bool:
    return (
        pgf.is_univariate()
        and pgf.is_polynomial()
        and pgf.total() == 1
        and all(c >= 0 for c in pgf.terms.values())
    )


# -- the statistics themselves --------------------------------------------


def chi(p: Permutation, sym: int, kind: str) -> int:
    """Moves or distance of ``sym``, by the four-case recursion on ``down``/``q_of``."""
    kind = stat_kind(kind)
    if not 1 <= sym <= p.n:
        raise ValueError(f"symbol {sym} outside 1..{p.n}")
    total = 0
    while True:
        n, q = p.n, q_of(p)
        step = 1 if kind == MOVES else n - q
        if sym == q:
            return total + step
        if sym == n:
            total += step
            sym = q
        p = down(p)[0]


def trace_stat(trace: SwapTrace, sym: int, kind: str) -> int:
    """Replay the run and follow ``sym`` through the array."""
    kind = stat_kind(kind)
    pos = sym
    moves = distance = 0
    for k, j in trace.steps:
        if pos == k or pos == j:
            moves += 1
            new = j if pos == k else k
            distance += abs(new - pos)
            pos = new
    return moves if kind == MOVES else distance


def rightward_total(trace: SwapTrace) -> int:
    return sum(k - j for k, j in trace.steps)


def exact_distribution(
    n: int, sym: int, kind: str, source: str = "chi", bound: int = EXHAUSTIVE_BOUND
) -> Poly:
    """Exact PGF over all n! runs, via the recursion or via trace replay."""
    kind = stat_kind(kind)
    if n > bound:
        raise ValueError(f"n={n} exceeds the exhaustive bound {bound}")
    counts: Counter = Counter()
    for code in all_codes(n):
        if source == "chi":
            counts[chi(fy_decode(code), sym, kind)] += 1
        elif source == "trace":
            counts[trace_stat(SwapTrace.from_code(code), sym, kind)] += 1
        else:
            raise ValueError(f"unknown source {source!r}")
    return pgf_from_counts(counts)


# -- recurrences and closed forms -------------------------------------------


def _check_np(n: int, p: int) -> None:
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got n={n}, p={p}")


@lru_cache(maxsize=None)
def phi(n: int, p: int) -> Poly:
    """PGF of the number of moves of symbol p in a run of size n."""
    _check_np(n, p)
    if n == 1:
        return U
    if p < n:
        return phi(p, p) * Fraction(p, n) + U * Fraction(n - p, n)
    inner = ONE
    for r in range(1, n):
        inner = inner + phi(n - 1, r)
    return U * inner / n


@lru_cache(maxsize=None)
def xi(n: int, p: int) -> Poly:
    """PGF of the distance travelled by symbol p in a run of size n."""
    _check_np(n, p)
    if n == 1:
        return ONE
    if p < n:
        tail = Poly.from_coeffs([1] * (n - p), start=1)  # u + ... + u^(n-p)
        return xi(p, p) * Fraction(p, n) + tail / n
    inner = ONE
    for r in range(1, n):
        inner = inner + Poly.monomial(1, u=n - r) * xi(n - 1, r)
    return inner / n


def phi_closed(n: int, p: int) -> Poly:
    _check_np(n, p)
    bracket = ONE - rising(U, p - 1) / math.factorial(p)
    try:
        ratio = (U * U * bracket).divexact(2 - U)
    except ValueError:
        raise ValueError(f"non-polynomial residue in phi_closed({n}, {p})") from None
    return U * Fraction(n - p + 1, n) + ratio * Fraction(p, n)


def xi_nn_closed(n: int) -> Poly:
    """Explicit form of ``xi(n, n)``; the 1/(1-u^2) part is divided out exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    head = ONE
    laurent = Poly()
    for j in range(1, n):
        head = head + Poly.monomial(Fraction(1, j), u=n - j)
        laurent = laurent + (Poly.monomial(1, u=1 - j) - Poly.monomial(1, u=j - 1)) / j
    cleared = laurent.shift(u=n + 1)
    if not cleared.is_polynomial():
        raise ValueError(f"negative powers survive in xi_nn_closed({n})")
    try:
        tail = cleared.divexact(1 - U * U)
    except ValueError:
        raise ValueError(f"non-polynomial residue in xi_nn_closed({n})") from None
    return (head + tail) / n


def mean_moves(n: int, p: int) -> Fraction:
    _check_np(n, p)
    return (n + 2 * p - 2 - harmonic(p - 1)) / Fraction(n)


# -- fixed points, swaps, inversions ----------------------------------------


def _all_perms(n: int) -> Iterable[Permutation]:
    return (fy_decode(code) for code in all_codes(n))


def fixed_point_distribution(n: int, method: str = "egf", bound: int = EXHAUSTIVE_BOUND) -> Poly:
    """PGF of the number of fixed points of a uniform permutation of size n."""
    if method == "egf":
        from .gflab import fixed_egf

        return fixed_egf(n).coefficient(n)
    if method == "enumerate":
        if n > bound:
            raise ValueError(f"n={n} exceeds the exhaustive bound {bound}")
        return pgf_from_counts(Counter(fixed_point_count(p) for p in _all_perms(n)))
    raise ValueError(f"unknown method {method!r}")


def moved_points_distribution(n: int, method: str = "egf") -> Poly:
    """PGF of n - f, the number of symbols a uniform permutation moves."""
    return fixed_point_distribution(n, method).map_exponents(lambda a, b: (n - a, b))


def nontrivial_swap_distribution(n: int, bound: int = EXHAUSTIVE_BOUND) -> Poly:
    """PGF of the number of steps with ``j_k != k`` in a Fisher-Yates run."""
    if n > bound:
        raise ValueError(f"n={n} exceeds the exhaustive bound {bound}")
    counts = Counter(
        sum(1 for k, j in zip(code.levels(), code.digits) if j != k) for code in all_codes(n)
    )
    return pgf_from_counts(counts)


def inversion_distribution(n: int, bound: int = EXHAUSTIVE_BOUND) -> Poly:
    if n > bound:
        raise ValueError(f"n={n} exceeds the exhaustive bound {bound}")
    return pgf_from_counts(Counter(inversion_count(p) for p in _all_perms(n)))


def rightward_distribution(n: int, bound: int = EXHAUSTIVE_BOUND) -> Poly:
    if n > bound:
        raise ValueError(f"n={n} exceeds the exhaustive bound {bound}")
    return pgf_from_counts(Counter(rightward_total(SwapTrace.from_code(c)) for c in all_codes(n)))


@dataclass(frozen=True)
class MahonianReport:
    n: int
    rightward: Poly
    inversions: Poly
    product: Poly

    @property
    def ok(self) -> bool:
        return self.rightward == self.inversions == self.product


def mahonian_check(n: int, bound: int = EXHAUSTIVE_BOUND) -> MahonianReport:
    from .gflab import mahonian_product

    return MahonianReport(
        n,
        rightward_distribution(n, bound),
        inversion_distribution(n, bound),
        mahonian_product(n) / math.factorial(n),
    )


# -- selection sort -----------------------------------------------------------


def selection_sort(word: Iterable[int]) -> tuple[list[tuple[int, ...]], list[tuple[int, int]]]:
    """Sort by placing n, n-1, ..., 2 in turn.

    Returns the list of states (initial state first) and the position pairs
    ``(k, i)`` swapped at each stage, trivial ``(k, k)`` swaps included.
    """
    w = list(word)
    states = [tuple(w)]
    swaps = []
    for k in range(len(w), 1, -1):
        i = w.index(k) + 1
        w[i - 1], w[k - 1] = w[k - 1], w[i - 1]
        swaps.append((k, i))
        states.append(tuple(w))
    return states, swaps


def selection_sort_check(p: Permutation) -> bool:
    """Selection sort on p^-1 applies the triangular factors of p in reverse."""
    code = fy_encode(p)
    expected = [(k, code.digit(k)) for k in range(p.n, 1, -1)]
    states, swaps = selection_sort(inverse(p).word)
    return swaps == expected and states[-1] == tuple(range(1, p.n + 1))


# -- Monte Carlo ------------------------------------------------------------------


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    dof: int
    threshold: float
    samples: int
    cells: int

    @property
    def ok(self) -> bool:
        return self.statistic < self.threshold


def uniformity_chi_square(
    n: int, m: int, samples: int = 1_000_000, seed: int = DEFAULT_SEED, quantile: float = 0.9999
) -> ChiSquareResult:
    """Pearson test of the shuffle output against the uniform law on its image.

    ``m=0`` is tested against all n! permutations, ``m=1`` against the
    (n-1)! n-cycles.
    """
    from scipy.stats import chi2

    if m not in (0, 1):
        raise ValueError("uniformity is only claimed for m = 0 and m = 1")
    cells = math.factorial(n) if m == 0 else math.factorial(n - 1)
    counts = Counter(sample_words(n, m, RandomSource(seed), samples))
    if len(counts) > cells:
        raise AssertionError("output outside the expected image")
    expected = samples / cells
    stat = sum((c - expected) ** 2 / expected for c in counts.values())
    stat += (cells - len(counts)) * expected
    dof = cells - 1
    return ChiSquareResult(stat, dof, float(chi2.ppf(quantile, dof)), samples, cells)


def monte_carlo_distribution(
    n: int, sym: int, kind: str, samples: int, seed: int = DEFAULT_SEED
) -> dict[int, Fraction]:
    """Empirical law of the trace statistic over ``samples`` seeded runs."""
    rng = RandomSource(seed)
    counts = Counter(trace_stat(fisher_yates(n, rng)[1], sym, kind) for _ in range(samples))
    return {k: Fraction(v, samples) for k, v in sorted(counts.items())}
