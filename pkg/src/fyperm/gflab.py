"""Exact truncated expansions of the grand generating functions.

F(u, t, x) = sum_n x^n sum_p t^p P_np(u) and G(u, x) = sum_n x^n P_nn(u), where
P_np is the PGF of the chosen statistic of symbol p in a run of size n
(``phi`` for moves, ``xi`` for distance).  Sigma_1..Sigma_4 split F by the
four cases of the peeling recursion.  Everything here is exact; apparent
poles are divided out coefficient by coefficient and any residue raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .codec import all_codes, fy_decode
from .perm import q_of
from .poly import ONE, T, U, ZERO, Poly
from .series import (
    TruncatedSeries,
    exp_series,
    geometric,
    log_term,
    neg_binom,
    t_dilate,
)
from .statistics import DISTANCE, MOVES, chi, phi, stat_kind, xi

# -- Sigma_3 --------------------------------------------------------------


def sigma3_moves(order: int) -> TruncatedSeries:
    """``u/(1-t) [log(1-tx) - t log(1-x)]``; coefficients are polynomials in u, t."""
    num = (t_dilate(log_term(1, order)) * -1 + log_term(1, order) * T) * U
    return num.over(1 - T).cancel()


def sigma3_moves_t1(order: int) -> TruncatedSeries:
    """``u log(1-x) + u x/(1-x)``."""
    return (log_term(1, order) * -1 + geometric(1, order).shift_x(1)) * U


def sigma3_dist(order: int) -> TruncatedSeries:
    """``[u log(1-tx) - t log(1-ux)] / (u-t)``; [x^n] is ``(1/n) sum_{q<n} t^q u^(n-q)``."""
    num = t_dilate(log_term(1, order)) * (-U) + log_term(U, order) * T
    return num.over(U - T).cancel()


# -- moves: closed forms --------------------------------------------------


def F_moves_t1(order: int) -> TruncatedSeries:
    """``u/(2-u) [(1-x)^-2 - (1-x)^-u]`` with the (2 - u) kept as denominator."""
    return ((neg_binom(2, order) - neg_binom(U, order)) * U).over(2 - U)


def G_moves(order: int) -> TruncatedSeries:
    """``u^2/(2-u) [1/(1-x) + (1-x)^(1-u)/(1-u)] - u^2/(1-u) - u log(1-x)``.

    Kept over the common denominator (2 - u)(1 - u).
    """
    den = (2 - U) * (1 - U)
    bracket = geometric(1, order) * (1 - U) + neg_binom(U - 1, order)
    num = bracket * (U * U) - (U * U) * (2 - U) + log_term(1, order) * (U * (2 - U) * (1 - U))
    return num.over(den)


def solve_F_moves(order: int) -> TruncatedSeries:
    """Coefficients of F from ``(1-x) F' = u t F(u,1,tx) + u t/(1-tx) + Sigma_3'``, F(u,t,0) = 0.

    On x^n this reads ``(n+1) f_{n+1} = n f_n + u t^{n+1} (f_n(1) + 1) + (n+1) s_{n+1}``.
    """
    s = sigma3_moves(order)
    f = [ZERO]
    for n in range(order):
        at_one = f[n].set_t(1)
        rhs = f[n] * n + Poly.monomial(1, t=n + 1) * U * (at_one + 1) + s[n + 1] * (n + 1)
        f.append(rhs / (n + 1))
    return TruncatedSeries(tuple(f))


# -- distance -----------------------------------------------------------------


def F_dist_diag(order: int) -> TruncatedSeries:
    """``F(u, 1/u, ux) = [-log(1-x) + Sigma_3(u, 1/u, ux)] / (1 - ux)``.

    Sigma_3 is taken from :func:`sigma3_dist` with t -> 1/u, so the
    intermediate coefficients are Laurent; the result must be polynomial.
    """
    s = sigma3_dist(order).map(lambda c: c.t_to_u_power(-1)).scale_x(U)
    out = (log_term(1, order) + s) * geometric(U, order)
    for n, c in enumerate(out.coeffs):
        if not c.is_polynomial():
            raise ValueError(f"negative powers of u survive at x^{n}")
    return out


def F_dist_diag_closed(order: int) -> TruncatedSeries:
    """Same series from ``[log(1-u^2 x) - u^2 log(1-x)] / (1-u^2)`` in place of Sigma_3."""
    inner = (log_term(U * U, order) * -1 + log_term(1, order) * (U * U)).over(1 - U * U).cancel()
    return (log_term(1, order) + inner) * geometric(U, order)


def G_dist(order: int) -> TruncatedSeries:
    """``G(u, x) = A(u, 1/u, ux) - log(1-x)``, i.e. the integral of ``u F(u,1/u,ux)``."""
    return ((F_dist_diag(order) * U).integrate() + log_term(1, order + 1)).truncate(order)


def solve_F_dist(order: int) -> TruncatedSeries:
    """Coefficients of F from ``(1-x) F' = t G'(u,tx) + Sigma_3'`` with
    ``G'(u,x) = u F(u,1/u,ux) + 1/(1-x)``.

    On x^n: ``(n+1) f_{n+1} = n f_n + t^{n+1} (u D_n + 1) + (n+1) s_{n+1}``
    where ``D_n = u^n f_n(1/u)``.
    """
    s = sigma3_dist(order)
    f = [ZERO]
    for n in range(order):
        diag = f[n].t_to_u_power(-1).shift(u=n)
        if not diag.is_polynomial():
            raise ValueError(f"negative powers of u in the diagonal at x^{n}")
        rhs = f[n] * n + Poly.monomial(1, t=n + 1) * (U * diag + 1) + s[n + 1] * (n + 1)
        f.append(rhs / (n + 1))
    return TruncatedSeries(tuple(f))


# -- auxiliary EGFs ---------------------------------------------------------------


def fixed_egf(order: int) -> TruncatedSeries:
    """``exp((u-1) x) / (1-x)``; n! [x^n] counts permutations by fixed points."""
    return exp_series(U - 1, order) * geometric(1, order)


def mahonian_product(n: int) -> Poly:
    """``prod_{i<=n} (1-u^i)/(1-u)``, the counting polynomial (not normalised)."""
    out = ONE
    for i in range(1, n + 1):
        out = out * (1 - Poly.monomial(1, u=i)).divexact(1 - U)
    return out


# -- F assembled from the PGF tables --------------------------------------------


def _table(kind: str) -> Callable[[int, int], Poly]:
    return phi if stat_kind(kind) == MOVES else xi


def F_from_table(kind: str, order: int) -> TruncatedSeries:
    pgf = _table(kind)
    coeffs = [ZERO]
    for n in range(1, order + 1):
        acc = ZERO
        for p in range(1, n + 1):
            acc = acc + pgf(n, p).shift(t=p)
        coeffs.append(acc)
    return TruncatedSeries(tuple(coeffs))


def sigma_parts(kind: str, order: int) -> tuple[TruncatedSeries, ...]:
    """Sigma_1..Sigma_4 from the PGF tables, via the bijection pi <-> (down pi, q)."""
    kind = stat_kind(kind)
    pgf = _table(kind)

    def step(n: int, q: int) -> Poly:
        return U if kind == MOVES else Poly.monomial(1, u=n - q)

    parts: list[list[Poly]] = [[ZERO] for _ in range(4)]
    for n in range(1, order + 1):
        s1 = s2 = s3 = ZERO
        for q in range(1, n):
            prev = pgf(n - 1, q)
            s1 = s1 + prev.shift(t=q) * (n - 1)
            s2 = s2 + step(n, q) * prev
            s3 = s3 + step(n, q).shift(t=q)
        s4 = (U if kind == MOVES else ONE).shift(t=n)
        parts[0].append(s1 / n)
        parts[1].append(s2.shift(t=n) / n)
        parts[2].append(s3 / n)
        parts[3].append(s4 / n)
    return tuple(TruncatedSeries(tuple(c)) for c in parts)


def sigma_parts_enumerated(kind: str, order: int) -> tuple[TruncatedSeries, ...]:
    """Sigma_1..Sigma_4 by brute force over every permutation (small orders only)."""
    kind = stat_kind(kind)
    parts: list[list[Poly]] = [[ZERO] for _ in range(4)]
    for n in range(1, order + 1):
        acc = [ZERO] * 4
        for code in all_codes(n):
            pi = fy_decode(code)
            q = q_of(pi)
            for p in range(1, n + 1):
                case = (0 if p != q else 2) if p != n else (1 if p != q else 3)
                acc[case] = acc[case] + Poly.monomial(1, u=chi(pi, p, kind), t=p)
        for i in range(4):
            parts[i].append(acc[i] / math.factorial(n))
    return tuple(TruncatedSeries(tuple(c)) for c in parts)


# -- the ODE systems as identities --------------------------------------------


@dataclass
class OdeReport:
    order: int
    failures: dict[str, list[int]] = field(default_factory=dict)
    checked: list[str] = field(default_factory=list)

    def record(self, name: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> None:
        self.checked.append(name)
        bad = lhs.mismatches(rhs)
        if bad:
            self.failures[name] = bad

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [
            f"{'FAIL' if name in self.failures else 'ok  '} {name}"
            + (f" (x^{self.failures[name]})" if name in self.failures else "")
            for name in self.checked
        ]


def verify_ode_systems(order: int) -> OdeReport:
    """Check every identity of both systems exactly, coefficient by coefficient.

    F comes from the phi/xi recurrences, G and Sigma_3 from their closed
    forms, and Sigma_1..Sigma_4 from the bijective split of the index set.
    """
    report = OdeReport(order)
    one_minus_x = TruncatedSeries.of([1, -1] + [0] * (order - 1))
    for kind in (MOVES, DISTANCE):
        F = F_from_table(kind, order)
        s1, s2, s3, s4 = sigma_parts(kind, order)
        G = G_moves(order) if kind == MOVES else G_dist(order)
        sigma3 = sigma3_moves(order) if kind == MOVES else sigma3_dist(order)
        A = F.integrate()
        Gprime = G.differentiate()

        report.record(f"{kind}: F = S1+S2+S3+S4", F, s1 + s2 + s3 + s4)
        report.record(f"{kind}: S2+S4 = G(u,tx)", s2 + s4, t_dilate(G))
        report.record(f"{kind}: S1 = xF - A", s1, F.shift_x(1) - A)
        report.record(f"{kind}: S3 closed form", s3, sigma3)
        report.record(
            f"{kind}: (1-x)F' = tG'(u,tx) + S3'",
            one_minus_x * F.differentiate(),
            t_dilate(Gprime) * T + sigma3.differentiate(),
        )
        if kind == MOVES:
            F1 = F.map(lambda c: c.set_t(1))
            report.record(f"{kind}: G' = uF(u,1,x) + u/(1-x)", Gprime, F1 * U + geometric(1, order) * U)
            report.record(f"{kind}: F(u,1,x) closed form", F1, F_moves_t1(order))
        else:
            diag = TruncatedSeries(tuple(c.t_to_u_power(-1).shift(u=n) for n, c in enumerate(F.coeffs)))
            report.record(f"{kind}: G' = uF(u,1/u,ux) + 1/(1-x)", Gprime, diag * U + geometric(1, order))
            report.record(f"{kind}: F(u,1/u,ux) exact solution", diag, F_dist_diag(order))
        report.record(f"{kind}: G(u,0) = 0 and F(u,t,0) = 0", G.truncate(0), F.truncate(0))
    return report


GF_BUILDERS: dict[str, Callable[[int], TruncatedSeries]] = {
    "F-moves": solve_F_moves,
    "F-moves-t1": F_moves_t1,
    "G-moves": G_moves,
    "F-dist": solve_F_dist,
    "F-dist-diag": F_dist_diag,
    "G-dist": G_dist,
    "sigma3-moves": sigma3_moves,
    "sigma3-dist": sigma3_dist,
    "fixed-egf": fixed_egf,
}
