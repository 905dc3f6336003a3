"""Power series in x truncated at order N, with :class:`Poly` coefficients.

A series may carry one denominator ``den`` (a polynomial in u) shared by all
coefficients, so rational functions such as ``u / (2 - u)`` stay exact
without rational-function normalisation.  Equality is tested after clearing
denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .poly import ONE, ZERO, Poly, Scalar, rising


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Poly, ...]
    den: Poly = ONE

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def of(cls, coeffs: Sequence[Poly | Scalar], den: Poly | Scalar = ONE) -> "TruncatedSeries":
        return cls(tuple(Poly._lift(c) for c in coeffs), Poly._lift(den))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((ZERO,) * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Poly:
        """Numerator of the x**n coefficient (divide by ``den`` for the value)."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond order {self.order}")
        return self.coeffs[n]

    def coefficient(self, n: int) -> Poly:
        """The x**n coefficient itself; the denominator must divide it exactly."""
        return self[n].divexact(self.den) if self.den != ONE else self[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], self.den)

    def map(self, fn: Callable[[Poly], Poly]) -> "TruncatedSeries":
        return TruncatedSeries(tuple(fn(c) for c in self.coeffs), self.den)

    # -- ring operations --------------------------------------------------

    def _align(self, other: "TruncatedSeries") -> tuple[int, tuple[Poly, ...], tuple[Poly, ...], Poly]:
        order = min(self.order, other.order)
        if self.den == other.den:
            return order, self.coeffs[: order + 1], other.coeffs[: order + 1], self.den
        a = tuple(c * other.den for c in self.coeffs[: order + 1])
        b = tuple(c * self.den for c in other.coeffs[: order + 1])
        return order, a, b, self.den * other.den

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, (Poly, int, Fraction)):
            other = TruncatedSeries.of([other], ONE).pad(self.order)
        _, a, b, den = self._align(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(a, b)), den)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return self.map(lambda c: -c)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (Poly, int, Fraction)):
            return self.map(lambda c: c * other)
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = ZERO
            for i in range(n + 1):
                if self.coeffs[i] and other.coeffs[n - i]:
                    acc = acc + self.coeffs[i] * other.coeffs[n - i]
            out.append(acc)
        return TruncatedSeries(tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def over(self, d: Poly | Scalar) -> "TruncatedSeries":
        """Divide every coefficient by ``d`` (kept as a denominator factor)."""
        return TruncatedSeries(self.coeffs, self.den * Poly._lift(d))

    def pad(self, order: int) -> "TruncatedSeries":
        extra = max(0, order - self.order)
        return TruncatedSeries(self.coeffs + (ZERO,) * extra, self.den)

    # -- calculus and substitution ----------------------------------------

    def differentiate(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries((ZERO,), self.den)
        return TruncatedSeries(tuple(self.coeffs[n] * n for n in range(1, self.order + 1)), self.den)

    def integrate(self) -> "TruncatedSeries":
        """Antiderivative with zero constant term; its order is one higher."""
        out = [ZERO] + [self.coeffs[n] / (n + 1) for n in range(self.order + 1)]
        return TruncatedSeries(tuple(out), self.den)

    def scale_x(self, c: Poly | Scalar) -> "TruncatedSeries":
        """Substitute x -> c x."""
        c = Poly._lift(c)
        out = []
        power = ONE
        for coeff in self.coeffs:
            out.append(coeff * power)
            power = power * c
        return TruncatedSeries(tuple(out), self.den)

    def shift_x(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by x**k, keeping the order."""
        out = (ZERO,) * k + self.coeffs[: self.order + 1 - k]
        return TruncatedSeries(out, self.den)

    # -- exactness --------------------------------------------------------

    def cancel(self, d: Poly | None = None) -> "TruncatedSeries":
        """Divide every numerator exactly by ``d`` (default: the denominator).

        A nonzero remainder means an apparent pole did not cancel; that is
        reported as ``ValueError`` with the offending index.
        """
        d = self.den if d is None else d
        out = []
        for n, c in enumerate(self.coeffs):
            try:
                out.append(c.divexact(d))
            except ValueError as exc:
                raise ValueError(f"residual pole at x^{n}: {exc}") from None
        return TruncatedSeries(tuple(out), self.den.divexact(d))

    def mismatches(self, other: "TruncatedSeries", start: int = 0) -> list[int]:
        order = min(self.order, other.order)
        return [
            n
            for n in range(start, order + 1)
            if self.coeffs[n] * other.den != other.coeffs[n] * self.den
        ]

    def equals(self, other: "TruncatedSeries", start: int = 0) -> bool:
        return not self.mismatches(other, start)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "denominator": self.den.to_json(),
            "coefficients": [c.to_json() for c in self.coeffs],
        }


# -- primitive series ----------------------------------------------------


def x_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.of([0, 1] + [0] * (order - 1)) if order >= 1 else TruncatedSeries.zero(0)


def log_term(c: Poly | Scalar, order: int) -> TruncatedSeries:
    """``-log(1 - c x) = sum c**n x**n / n``."""
    c = Poly._lift(c)
    return TruncatedSeries.of([ZERO] + [c**n / n for n in range(1, order + 1)])


def geometric(c: Poly | Scalar, order: int) -> TruncatedSeries:
    """``1 / (1 - c x)``."""
    c = Poly._lift(c)
    return TruncatedSeries.of([c**n for n in range(order + 1)])


def neg_binom(e: Poly | Scalar, order: int) -> TruncatedSeries:
    """``(1 - x)**(-e) = sum rising(e, n) / n! x**n``."""
    out = []
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        out.append(rising(e, n) / fact)
    return TruncatedSeries.of(out)


def exp_series(c: Poly | Scalar, order: int) -> TruncatedSeries:
    """``exp(c x)``."""
    c = Poly._lift(c)
    out = []
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        out.append(c**n / fact)
    return TruncatedSeries.of(out)


def t_dilate(s: TruncatedSeries) -> TruncatedSeries:
    """Substitute x -> t x."""
    return s.scale_x(Poly.monomial(1, t=1))
