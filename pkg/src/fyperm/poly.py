"""Sparse Laurent polynomials in the markers u and t with exact rational coefficients.

A probability generating function is a :class:`Poly` in u alone.  Exponents
may be negative (the substitution t -> 1/u produces such terms); exact
division and most queries require an honest polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

Scalar = Union[int, Fraction]
Exp = tuple[int, int]


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, Scalar] | None = None):
        clean: dict[Exp, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = Fraction(c)
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: Scalar = 1, u: int = 0, t: int = 0) -> "Poly":
        return cls({(u, t): c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], start: int = 0) -> "Poly":
        """Univariate in u: ``coeffs[i]`` multiplies ``u**(start + i)``."""
        return cls({(start + i, 0): c for i, c in enumerate(coeffs)})

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly({e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        if not isinstance(other, (int, Fraction)):
            raise TypeError("use divexact() for polynomial division")
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            ((eu, et), c), = self.terms.items()
            return Poly({(eu * k, et * k): Fraction(1) / c ** (-k)})
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(a >= 0 and b >= 0 for a, b in self.terms)

    def is_univariate(self) -> bool:
        return all(b == 0 for _, b in self.terms)

    def coeff(self, u: int = 0, t: int = 0) -> Fraction:
        return self.terms.get((u, t), Fraction(0))

    def degree_u(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    def min_u(self) -> int:
        return min((a for a, _ in self.terms), default=0)

    def degree_t(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def coeffs_u(self) -> list[Fraction]:
        """Dense list indexed by the power of u (polynomial, t-free only)."""
        if not (self.is_polynomial() and self.is_univariate()):
            raise ValueError("dense coefficients need a polynomial in u alone")
        out = [Fraction(0)] * (self.degree_u() + 1)
        for (a, _), c in self.terms.items():
            out[a] = c
        return out

    def t_coeff(self, p: int) -> "Poly":
        """The u-polynomial multiplying ``t**p``."""
        return Poly({(a, 0): c for (a, b), c in self.terms.items() if b == p})

    def total(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    # -- transformations ------------------------------------------------

    def map_exponents(self, fn: Callable[[int, int], Exp]) -> "Poly":
        out: dict[Exp, Fraction] = {}
        for (a, b), c in self.terms.items():
            e = fn(a, b)
            out[e] = out.get(e, 0) + c
        return Poly(out)

    def set_t(self, value: int) -> "Poly":
        """Substitute t = value (an integer, typically 1)."""
        out: dict[Exp, Fraction] = {}
        for (a, b), c in self.terms.items():
            out[(a, 0)] = out.get((a, 0), 0) + c * Fraction(value) ** b
        return Poly(out)

    def t_to_u_power(self, k: int) -> "Poly":
        """Substitute t = u**k."""
        return self.map_exponents(lambda a, b: (a + k * b, 0))

    def shift(self, u: int = 0, t: int = 0) -> "Poly":
        return self.map_exponents(lambda a, b: (a + u, b + t))

    def diff_u(self) -> "Poly":
        return Poly({(a - 1, b): c * a for (a, b), c in self.terms.items() if a})

    def evaluate(self, u: Scalar, t: Scalar = 1) -> Fraction:
        u, t = Fraction(u), Fraction(t)
        return sum((c * u**a * t**b for (a, b), c in self.terms.items()), Fraction(0))

    def divexact(self, divisor: "Poly") -> "Poly":
        """Exact quotient; raises ``ValueError`` on a nonzero remainder.

        Leading-term division under lex order on (u, t) exponents, which
        terminates and is exact whenever the divisor divides the dividend.
        """
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if not (self.is_polynomial() and divisor.is_polynomial()):
            raise ValueError("divexact needs polynomials; clear negative powers first")
        lead = max(divisor.terms)
        lc = divisor.terms[lead]
        rem = dict(self.terms)
        quot: dict[Exp, Fraction] = {}
        while rem:
            top = max(rem)
            e = (top[0] - lead[0], top[1] - lead[1])
            if e[0] < 0 or e[1] < 0:
                raise ValueError(f"{divisor} does not divide {self}")
            c = rem[top] / lc
            quot[e] = quot.get(e, 0) + c
            for (a, b), d in divisor.terms.items():
                key = (a + e[0], b + e[1])
                v = rem.get(key, 0) - c * d
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return Poly(quot)

    # -- rendering ------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda e: (e[1], e[0])):
            c = self.terms[(a, b)]
            mono = []
            if a:
                mono.append("u" if a == 1 else f"u^{a}")
            if b:
                mono.append("t" if b == 1 else f"t^{b}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            elif c == -1:
                parts.append("-" + "*".join(mono))
            else:
                parts.append(f"{c}*" + "*".join(mono))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        """``[[u_exp, t_exp, "num/den"], ...]`` in ascending exponent order."""
        return [[a, b, str(c)] for (a, b), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


U = Poly.monomial(1, u=1)
T = Poly.monomial(1, t=1)
ONE = Poly.const(1)
ZERO = Poly()


def rising(e: Poly | Scalar, k: int) -> Poly:
    """Rising factorial ``e (e+1) ... (e+k-1)``; the empty product for k = 0 is 1."""
    e = Poly._lift(e)
    out = ONE
    for i in range(k):
        out = out * (e + i)
    return out


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))
