"""Univariate polynomials over the rationals, quasi-polynomials and rational functions.

Polynomials are plain tuples of :class:`Fraction` coefficients, constant term
first, with no trailing zeros (the zero polynomial is ``()``).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest

Poly = tuple[Fraction, ...]


def poly(coeffs: Sequence[int | Fraction]) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def padd(p: Poly, q: Poly) -> Poly:
    return poly([a + b for a, b in zip_longest(p, q, fillvalue=Fraction(0))])


def psub(p: Poly, q: Poly) -> Poly:
    return poly([a - b for a, b in zip_longest(p, q, fillvalue=Fraction(0))])


def pscale(p: Poly, c: int | Fraction) -> Poly:
    return poly([a * c for a in p])


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def pdeg(p: Poly) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(p) - 1


def peval(p: Poly, x: int | Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        factor = rem[-1] / q[-1]
        quo[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
        rem = list(poly(rem))
    return poly(quo), poly(rem)


def pmonic(p: Poly) -> Poly:
    return pscale(p, 1 / p[-1]) if p else p


def pgcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, pdivmod(p, q)[1]
    return pmonic(p)


def pformat(p: Poly, var: str = "n") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        sign = "-" if c < 0 else "+"
        if i == 0:
            body = str(mag)
        else:
            pw = var if i == 1 else f"{var}^{i}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class QuasiPolynomial:
    """Polynomial in an integer parameter whose coefficients depend on its residue.

    ``branches[rho]`` is the coefficient vector used when ``k % period == rho``.
    Instances are always stored with the smallest period that represents them.
    """

    period: int
    branches: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if self.period < 1 or len(self.branches) != self.period:
            raise ValueError("need exactly one branch per residue class")
        branches = tuple(poly(b) for b in self.branches)
        period = self.period
        for d in sorted(_divisors(period)):
            if all(branches[i] == branches[i % d] for i in range(period)):
                period, branches = d, branches[:d]
                break
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "branches", branches)

    @classmethod
    def polynomial(cls, coeffs: Sequence[int | Fraction]) -> QuasiPolynomial:
        return cls(1, (poly(coeffs),))

    @classmethod
    def constant(cls, c: int | Fraction) -> QuasiPolynomial:
        return cls.polynomial([c])

    @classmethod
    def periodic(cls, values: Sequence[int | Fraction]) -> QuasiPolynomial:
        """Degree-0 quasi-polynomial taking ``values[k % len(values)]``."""
        return cls(len(values), tuple(poly([v]) for v in values))

    def __call__(self, k: int) -> Fraction:
        return peval(self.branches[k % self.period], k)

    def _expand(self, period: int) -> tuple[Poly, ...]:
        return tuple(self.branches[i % self.period] for i in range(period))

    def _combine(self, other: QuasiPolynomial | int | Fraction, op) -> QuasiPolynomial:
        if not isinstance(other, QuasiPolynomial):
            other = QuasiPolynomial.constant(other)
        period = math.lcm(self.period, other.period)
        return QuasiPolynomial(
            period, tuple(op(a, b) for a, b in zip(self._expand(period), other._expand(period)))
        )

    def __add__(self, other):
        return self._combine(other, padd)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, psub)

    def __rsub__(self, other):
        return QuasiPolynomial.constant(other) - self

    def __mul__(self, other):
        return self._combine(other, pmul)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __pow__(self, e: int) -> QuasiPolynomial:
        out = QuasiPolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    @property
    def degree(self) -> int:
        return max(pdeg(b) for b in self.branches)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of ``k**i``; raises :class:`ValueError` if it depends on the residue."""
        values = {b[i] if i < len(b) else Fraction(0) for b in self.branches}
        if len(values) != 1:
            raise ValueError(f"coefficient of k^{i} depends on k mod {self.period}")
        return values.pop()

    def __repr__(self) -> str:
        if self.period == 1:
            return f"QuasiPolynomial({pformat(self.branches[0], 'k')})"
        parts = "; ".join(f"k≡{i}: {pformat(b, 'k')}" for i, b in enumerate(self.branches))
        return f"QuasiPolynomial(period={self.period}; {parts})"


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def qp_from_floor(numer: Sequence[int], divisor: int) -> QuasiPolynomial:
    """Exact quasi-polynomial for ``floor(numer(k) / divisor)``.

    ``numer`` lists integer coefficients, constant term first.  Since
    ``numer(k) mod divisor`` only depends on ``k mod divisor``, each residue
    branch is ``(numer(k) - remainder) / divisor``.
    """
    if divisor < 1:
        raise ValueError(f"divisor must be positive, got {divisor}")
    if any(not isinstance(c, int) for c in numer):
        raise ValueError("numerator must have integer coefficients")
    p = poly(numer)
    branches = []
    for rho in range(divisor):
        rem = int(peval(p, rho)) % divisor
        branches.append(pscale(psub(p, (Fraction(rem),)), Fraction(1, divisor)))
    return QuasiPolynomial(divisor, tuple(branches))


@dataclass(frozen=True)
class RationalFunctionInN:
    """Reduced ratio of polynomials in ``n`` with a monic denominator."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self) -> None:
        num, den = poly(self.numerator), poly(self.denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = pgcd(num, den)
        if pdeg(g) > 0:
            num, den = pdivmod(num, g)[0], pdivmod(den, g)[0]
        lead = den[-1]
        object.__setattr__(self, "numerator", pscale(num, 1 / lead))
        object.__setattr__(self, "denominator", pscale(den, 1 / lead))

    def __call__(self, n: int | Fraction) -> Fraction:
        den = peval(self.denominator, n)
        if den == 0:
            raise ZeroDivisionError(f"pole at n={n}")
        return peval(self.numerator, n) / den

    def limit_at_infinity(self) -> Fraction:
        dn, dd = pdeg(self.numerator), pdeg(self.denominator)
        if dn > dd:
            raise ValueError("rational function diverges as n -> infinity")
        if dn < dd:
            return Fraction(0)
        return self.numerator[-1] / self.denominator[-1]

    def __str__(self) -> str:
        return f"({pformat(self.numerator)})/({pformat(self.denominator)})"
