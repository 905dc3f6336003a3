"""Exhaustive verification suites, shared by the CLI and the acceptance tests.

Each suite returns a :class:`SuiteResult`: one line per check plus an overall
verdict.  Every suite is exhaustive or exact; none of them samples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .codec import all_codes, dual_decode, dual_encode, fy_decode, fy_encode, inv_decode, inv_encode
from .enumerator import (
    ADJACENT,
    THREE_CYCLE,
    TRANSPOSITION,
    classify_delta,
    cycle_gray_wraparound,
    fy_step_expectation,
    gray_code_stream,
)
from .gflab import F_moves_t1, G_moves, solve_F_dist, solve_F_moves, verify_ode_systems
from .perm import Permutation, is_full_cycle
from .poly import ZERO
from .statistics import (
    DISTANCE,
    MOVES,
    exact_distribution,
    fixed_point_distribution,
    mahonian_check,
    mean_moves,
    pgf_mean,
    phi,
    phi_closed,
    selection_sort,
    selection_sort_check,
    xi,
    xi_nn_closed,
)
from .tables import check_tables


@dataclass
class SuiteResult:
    name: str
    lines: list[str] = field(default_factory=list)
    failures: int = 0

    def check(self, ok: bool, text: str) -> bool:
        self.lines.append(f"{'ok  ' if ok else 'FAIL'} {text}")
        if not ok:
            self.failures += 1
        return ok

    def note(self, text: str) -> None:
        self.lines.append(f"     {text}")

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _all_perms(n: int) -> set[Permutation]:
    return {Permutation._trusted(w) for w in itertools.permutations(range(1, n + 1))}


# -- suites ---------------------------------------------------------------


def suite_tables(n_max: int | None = None) -> SuiteResult:
    res = SuiteResult("tables")
    entries = check_tables()
    for e in entries:
        if not e.ok:
            res.check(False, f"{e.table} {e.code} <-> {e.perm}: decoded {e.decoded}, encoded {e.encoded}")
    good = sum(e.ok for e in entries)
    res.check(good == len(entries), f"{good}/{len(entries)} entries OK")
    return res


def suite_bijection(n_max: int = 7) -> SuiteResult:
    """Plain codes for n = 1..n_max, strict codes for n = 2..n_max+1."""
    res = SuiteResult("bijection")
    for n in range(1, n_max + 1):
        perms = [fy_decode(c) for c in all_codes(n)]
        res.check(
            len(perms) == math.factorial(n) and set(perms) == _all_perms(n),
            f"n={n}: {len(perms)} plain codes cover S_n once",
        )
    for n in range(2, n_max + 2):
        cycles = [fy_decode(c) for c in all_codes(n, strict=True)]
        expected = {p for p in _all_perms(n) if is_full_cycle(p)} if n <= 8 else None
        distinct = len(set(cycles)) == len(cycles) == math.factorial(n - 1)
        covers = expected is None or set(cycles) == expected
        res.check(
            distinct and covers and all(is_full_cycle(p) for p in cycles),
            f"n={n}: {len(cycles)} strict codes cover the n-cycles once",
        )
    for n in range(1, min(n_max, 6) + 1):
        ok = all(
            fy_encode(p) == c and dual_decode(dual_encode(p)) == p and inv_decode(inv_encode(p)) == p
            for c in all_codes(n)
            for p in [fy_decode(c)]
        )
        res.check(ok, f"n={n}: fy, dual and inversion round trips")
    return res


def suite_stats(n_max: int = 6) -> SuiteResult:
    res = SuiteResult("stats")
    for kind, table in ((MOVES, phi), (DISTANCE, xi)):
        for n in range(1, n_max + 1):
            bad = [
                p
                for p in range(1, n + 1)
                if not (
                    exact_distribution(n, p, kind, "chi")
                    == exact_distribution(n, p, kind, "trace")
                    == table(n, p)
                )
            ]
            res.check(not bad, f"{kind} n={n}: recursion = trace replay = recurrence" + (f" (p={bad})" if bad else ""))
    closed_max = max(n_max, 20)
    bad_phi = [(n, p) for n in range(1, closed_max + 1) for p in range(1, n + 1) if phi_closed(n, p) != phi(n, p)]
    res.check(not bad_phi, f"phi closed form, n <= {closed_max}")
    bad_xi = [n for n in range(1, closed_max + 1) if xi_nn_closed(n) != xi(n, n)]
    res.check(not bad_xi, f"xi(n,n) closed form, n <= {closed_max}")
    bad_mean = [
        (n, p) for n in range(1, closed_max + 1) for p in range(1, n + 1) if pgf_mean(phi(n, p)) != mean_moves(n, p)
    ]
    res.check(not bad_mean, f"E[M_np] = (n+2p-2-H_(p-1))/n, n <= {closed_max}")
    res.check(mean_moves(1, 1) == 1 and mean_moves(2, 2) == Fraction(3, 2), "mean_moves(1,1)=1, mean_moves(2,2)=3/2")
    fixed_max = max(min(n_max + 2, 8), 1)
    bad_fixed = [
        n for n in range(1, fixed_max + 1)
        if fixed_point_distribution(n, "egf") != fixed_point_distribution(n, "enumerate", bound=fixed_max)
    ]
    res.check(not bad_fixed, f"fixed points: EGF = enumeration, n <= {fixed_max}")
    bad_mean_fixed = [n for n in range(1, 13) if pgf_mean(fixed_point_distribution(n)) != 1]
    res.check(not bad_mean_fixed, "expected fixed points = 1, n <= 12")
    return res


def suite_gf(n_max: int = 12) -> SuiteResult:
    res = SuiteResult("gf")
    order = n_max
    fm, fd = solve_F_moves(order), solve_F_dist(order)
    bad_m = [(n, p) for n in range(1, order + 1) for p in range(1, n + 1) if fm[n].t_coeff(p) != phi(n, p)]
    bad_d = [(n, p) for n in range(1, order + 1) for p in range(1, n + 1) if fd[n].t_coeff(p) != xi(n, p)]
    res.check(not bad_m, f"solve_F_moves matches phi at order {order}")
    res.check(not bad_d, f"solve_F_dist matches xi at order {order}")
    f1, g = F_moves_t1(order), G_moves(order)
    bad_f1 = [n for n in range(1, order + 1) if f1[n] != f1.den * sum((phi(n, p) for p in range(1, n + 1)), ZERO)]
    bad_g = [n for n in range(1, order + 1) if g[n] != g.den * phi(n, n)]
    res.check(not bad_f1, "F(u,1,x) closed form = sum_p phi_np")
    res.check(not bad_g, "G_moves closed form = phi_nn")
    report = verify_ode_systems(order)
    for line in report.lines():
        res.check(line.startswith("ok"), line[5:])
    return res


def suite_gray(n_max: int = 7) -> SuiteResult:
    res = SuiteResult("gray")
    for n in range(2, n_max + 1):
        for encoding, allowed in (("inv", {ADJACENT}), ("fy", {ADJACENT, TRANSPOSITION, THREE_CYCLE})):
            seen, kinds, predicted = [], set(), True
            prev_code = None
            for code, perm, step in gray_code_stream(n, "perm", encoding):
                seen.append(perm)
                if step is not None:
                    kind = classify_delta(step.induced)
                    kinds.add(kind)
                    if encoding == "fy":
                        want, d = fy_step_expectation(prev_code, step)
                        predicted &= d == step.induced and (kind == want or (kind, want) == (ADJACENT, TRANSPOSITION))
                prev_code = code
            ok = len(seen) == math.factorial(n) and set(seen) == _all_perms(n) and kinds <= allowed and predicted
            res.check(ok, f"n={n} {encoding}: visits S_n once, deltas {sorted(kinds)}")
        if n >= 3:
            seen, kinds = [], set()
            for _, perm, step in gray_code_stream(n, "cycle", "fy"):
                seen.append(perm)
                if step is not None:
                    kinds.add(classify_delta(step.induced))
            ok = (
                len(seen) == len(set(seen)) == math.factorial(n - 1)
                and all(is_full_cycle(p) for p in seen)
                and kinds == {THREE_CYCLE}
            )
            res.check(ok, f"n={n} cycles: visits C_n once, deltas {sorted(kinds)}")
            wrap = cycle_gray_wraparound(n)
            res.note(
                f"n={n} cycles wrap-around: {'closes' if wrap.closes else 'open'}"
                f" (last->first delta {wrap.closing_delta}, single digit {wrap.single_digit})"
            )
    return res


def suite_sort(n_max: int = 7) -> SuiteResult:
    res = SuiteResult("sort")
    for n in range(1, n_max + 1):
        bad = [c for c in all_codes(n) if not selection_sort_check(fy_decode(c))]
        res.check(not bad, f"n={n}: selection sort of pi^-1 replays the factors of pi")
    states, swaps = selection_sort((4, 3, 1, 2))
    shown = " -> ".join("".join(map(str, s)) for s in states)
    res.check(shown == "4312 -> 2314 -> 2134 -> 1234", f"sorting 4312: {shown}, swaps {swaps}")
    return res


def suite_mahonian(n_max: int = 7) -> SuiteResult:
    res = SuiteResult("mahonian")
    for n in range(1, n_max + 1):
        report = mahonian_check(n, bound=max(n_max, 7))
        res.check(report.ok, f"n={n}: rightward distance = inversions = product formula")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "tables": suite_tables,
    "bijection": suite_bijection,
    "gray": suite_gray,
    "stats": suite_stats,
    "gf": suite_gf,
    "sort": suite_sort,
    "mahonian": suite_mahonian,
}


def run_suite(name: str, n_max: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    fn = SUITES[name]
    return fn() if n_max is None else fn(n_max)
