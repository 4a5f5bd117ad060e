"""Chern numbers of Kummer covers branched along a curve configuration.

For a configuration of ``k`` curves the Kummer cover ``Y_n`` has order
``n**(k-1)``.  Both Chern numbers are ``n**(k-3)`` times a quadratic in ``n``;
only those quadratics are ever stored.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .config import CurveConfiguration, f_moment
from .errors import (
    ConditionMismatch,
    InvalidArgument,
    InvalidSurface,
    OutOfRange,
    PencilError,
    SizeError,
    UndefinedGamma,
    Unsupported,
)


@dataclass(frozen=True)
class QuadraticInN:
    """``a n^2 + b n + c`` with exact rational coefficients."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        for name in "abc":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __call__(self, n: int | Fraction) -> Fraction:
        return (self.a * n + self.b) * n + self.c

    def __sub__(self, other: QuadraticInN) -> QuadraticInN:
        return QuadraticInN(self.a - other.a, self.b - other.b, self.c - other.c)

    def __mul__(self, s: int | Fraction) -> QuadraticInN:
        return QuadraticInN(self.a * s, self.b * s, self.c * s)

    __rmul__ = __mul__

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def as_strings(self) -> list[str]:
        return [str(x) for x in self]

    def integer_roots(self) -> list[int]:
        """All integer roots, exactly; raises if the quadratic is identically zero."""
        scale = math.lcm(*(x.denominator for x in self))
        a, b, c = (int(x * scale) for x in self)
        if a == 0:
            if b == 0:
                if c == 0:
                    raise InvalidArgument("identically zero quadratic has every integer as a root")
                return []
            return [-c // b] if c % b == 0 else []
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        s = math.isqrt(disc)
        if s * s != disc:
            return []
        roots = set()
        for num in (-b + s, -b - s):
            if num % (2 * a) == 0:
                roots.add(num // (2 * a))
        return sorted(roots)


def chern_coefficients(d, k, f0, f1, t2):
    """Coefficient triples ``(c1sq, c2)`` for a d-configuration.

    Works on any ring elements supporting ``+ - *`` with integers, so the same
    formulas serve single configurations and quasi-polynomial families.
    """
    e = d * d - 3 * d
    c2 = (
        3 + e * k + f1 - f0,
        -e * k - 2 * f1 + 2 * f0,
        f1 - t2,
    )
    c1sq = (
        9 + d * d * k - 6 * d * k + 3 * f1 - 4 * f0,
        2 * (-e * k - 2 * f1 + 2 * f0),
        3 * d * k + e * k + f1 - f0 + t2,
    )
    return c1sq, c2


def line_chern_coefficients(k, f0, f1, t2):
    # Hirzebruch's formulas for line arrangements, kept separately as a cross-check
    c2 = (3 - 2 * k + f1 - f0, 2 * (k - f1 + f0), f1 - t2)
    c1sq = (-5 * k + 9 + 3 * f1 - 4 * f0, 4 * (k - f1 + f0), f1 - f0 + k + t2)
    return c1sq, c2


@dataclass(frozen=True)
class ChernPair:
    c1sq: QuadraticInN
    c2: QuadraticInN
    source: CurveConfiguration

    @property
    def degree(self) -> int:
        return self.source.degree

    def as_dict(self) -> dict[str, Any]:
        return {"c1sq": self.c1sq.as_strings(), "c2": self.c2.as_strings()}


class GeneralTypeCondition(enum.Enum):
    STRONG = "strong"  # t_k = t_{k-1} = t_{k-2} = 0, n >= 2
    WEAK = "weak"  # t_k = t_{k-1} = 0, n >= 3

    @property
    def n_min(self) -> int:
        return 2 if self is GeneralTypeCondition.STRONG else 3

    def holds_for(self, cfg: CurveConfiguration) -> bool:
        k = cfg.count
        top = (k, k - 1, k - 2) if self is GeneralTypeCondition.STRONG else (k, k - 1)
        return all(cfg.t(r) == 0 for r in top)

    @classmethod
    def strongest_for(cls, cfg: CurveConfiguration) -> GeneralTypeCondition | None:
        for cond in (cls.STRONG, cls.WEAK):
            if cond.holds_for(cfg):
                return cond
        return None


def chern_pair(cfg: CurveConfiguration) -> ChernPair:
    cfg.require_valid()
    k = cfg.count
    if k < 4:
        raise SizeError(f"Kummer covers need k >= 4 curves, got {k}")
    if cfg.t(k) != 0:
        raise PencilError(f"{cfg.name}: all {k} curves meet in a point (t_{k} = {cfg.t(k)})")
    f0, f1, t2 = f_moment(cfg, 0), f_moment(cfg, 1), cfg.t(2)
    c1sq, c2 = chern_coefficients(cfg.degree, k, f0, f1, t2)
    if cfg.degree == 1:
        assert (c1sq, c2) == line_chern_coefficients(k, f0, f1, t2)
    return ChernPair(QuadraticInN(*c1sq), QuadraticInN(*c2), cfg)


def slope_at(pair: ChernPair, n: int) -> Fraction:
    """Chern slope ``c1^2 / c2`` of ``Y_n``."""
    if n < 2:
        raise InvalidArgument(f"cover order parameter n must be >= 2, got {n}")
    c2 = pair.c2(n)
    if c2 <= 0:
        raise InvalidSurface(f"c2(Y_{n}) = {c2} * n^(k-3) is not positive")
    return pair.c1sq(n) / c2


def characteristic_number(pair: ChernPair) -> Fraction:
    """Limit of the Chern slope as ``n -> infinity``."""
    if pair.c2.a <= 0:
        raise UndefinedGamma(
            f"{pair.source.name}: leading coefficient of c2 is {pair.c2.a}, gamma undefined"
        )
    gamma = pair.c1sq.a / pair.c2.a
    if pair.degree == 1:
        cfg = pair.source
        f0, f1, k = f_moment(cfg, 0), f_moment(cfg, 1), cfg.count
        assert gamma == Fraction(5, 2) - Fraction(3 * f0 - f1 - 3, 2 * (3 - 2 * k + f1 - f0))
    return gamma


def bmy_gap(pair: ChernPair) -> QuadraticInN:
    """``(3 c2 - c1^2) / n^(k-3)``; vanishes exactly for ball quotients."""
    if pair.degree != 1:
        raise Unsupported("the BMY gap polynomial is only provided for line configurations")
    gap = 3 * pair.c2 - pair.c1sq
    cfg = pair.source
    f0, f1, k, t2 = f_moment(cfg, 0), f_moment(cfg, 1), cfg.count, cfg.t(2)
    assert gap == QuadraticInN(f0 - k, 2 * (k - f1 + f0), 2 * f1 + f0 - k - 4 * t2)
    return gap


def shifted_gap(pair: ChernPair) -> QuadraticInN:
    """The gap polynomial in ``x = n - 1``."""
    g = bmy_gap(pair)
    shifted = QuadraticInN(g.a, 2 * g.a + g.b, g.a + g.b + g.c)
    cfg = pair.source
    f0, f1, k, t2 = f_moment(cfg, 0), f_moment(cfg, 1), cfg.count, cfg.t(2)
    assert shifted == QuadraticInN(f0 - k, -2 * (f1 - 2 * f0), 4 * (f0 - t2))
    return shifted


def ball_quotient_candidates(pair: ChernPair, cond: GeneralTypeCondition) -> list[int]:
    """Admissible ``n`` for which ``Y_n`` attains BMY equality."""
    if not cond.holds_for(pair.source):
        raise ConditionMismatch(
            f"{pair.source.name} does not satisfy the {cond.value} general-type condition"
        )
    gap = bmy_gap(pair)
    return [n for n in gap.integer_roots() if n >= cond.n_min]


def sommese_bounds(k: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on gamma for ``k >= 6`` lines."""
    if k < 6:
        raise OutOfRange(f"bounds hold for k >= 6 lines, got {k}")
    return Fraction(2 * (k - 3), k - 2), Fraction(8, 3)
