"""Parameterized families of line configurations and their asymptotic invariants.

Each family stores its line count and point counts as quasi-polynomials in
the family parameter, so every instance is computed exactly (floor terms
included) and limits are ratios of leading coefficients.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from .chern import chern_coefficients
from .config import CurveConfiguration, MultiplicitySpectrum
from .errors import DomainError, NoLimit, UnknownFamily, Unsupported
from .poly import QuasiPolynomial, RationalFunctionInN, pdeg, qp_from_floor

QP = QuasiPolynomial


@dataclass(frozen=True)
class GrowingEntry:
    """``count`` points of multiplicity ``slope * k + offset``."""

    slope: int
    offset: int
    count: QuasiPolynomial

    def multiplicity(self, k: int) -> int:
        return self.slope * k + self.offset


@dataclass(frozen=True)
class FamilySpectrum:
    name: str
    line_count: QuasiPolynomial
    fixed_entries: dict[int, QuasiPolynomial]
    growing_entries: tuple[GrowingEntry, ...] = ()
    domain: Callable[[int], str | None] = field(default=lambda k: None, compare=False)
    degree: int = 1
    instantiable: bool = True

    def check_domain(self, k: int) -> None:
        reason = self.domain(k)
        if reason:
            raise DomainError(f"{self.name}: parameter {k} not admissible ({reason})")

    def admissible(self, k: int) -> bool:
        return not self.domain(k)

    # symbolic moments in the family parameter
    def f(self, i: int) -> QuasiPolynomial:
        total = QP.constant(0)
        for r, count in self.fixed_entries.items():
            total = total + count * r**i
        for g in self.growing_entries:
            total = total + g.count * QP.polynomial([g.offset, g.slope]) ** i
        return total

    def t2(self) -> QuasiPolynomial:
        return self.fixed_entries.get(2, QP.constant(0))

    def chern_coefficients(self):
        """``(c1sq, c2)`` coefficient triples as quasi-polynomials in the parameter."""
        return chern_coefficients(self.degree, self.line_count, self.f(0), self.f(1), self.t2())


def _even_at_least(lo: int):
    def domain(k: int) -> str | None:
        if k < lo:
            return f"need k >= {lo}"
        if k % 2:
            return "k must be even"
        return None

    return domain


def _at_least(lo: int):
    def domain(k: int) -> str | None:
        return f"need parameter >= {lo}" if k < lo else None

    return domain


def boroczky() -> FamilySpectrum:
    eps = QP.periodic([0, 2, 2])
    triples = 1 + qp_from_floor([0, -3, 1], 6)
    return FamilySpectrum(
        "boroczky",
        line_count=QP.polynomial([0, 1]),
        fixed_entries={2: QP.polynomial([-3, 1]) + eps, 3: triples},
        domain=_even_at_least(6),
    )


def s_elliptic(w: int) -> FamilySpectrum:
    if w < 0:
        raise DomainError(f"s-elliptic: w must be >= 0, got {w}")
    t2 = QP.polynomial([-w, 1])
    t3 = QP.polynomial([Fraction(w, 3), Fraction(-1, 2), Fraction(1, 6)])

    def domain(k: int) -> str | None:
        if k < 3:
            return "need k >= 3"
        if t2(k) < 0:
            return f"t_2 = k - w = {t2(k)} is negative"
        if t3(k).denominator != 1:
            return f"t_3 = k(k-3)/6 + w/3 = {t3(k)} is not an integer"
        if t3(k) < 0:
            return "t_3 is negative"
        return None

    return FamilySpectrum(f"s-elliptic(w={w})", QP.polynomial([0, 1]), {2: t2, 3: t3}, domain=domain)


def polyhedral() -> FamilySpectrum:
    return FamilySpectrum(
        "polyhedral",
        line_count=QP.polynomial([0, 2]),
        fixed_entries={2: QP.polynomial([0, 1]), 3: QP.polynomial([0, Fraction(-1, 2), Fraction(1, 2)])},
        growing_entries=(GrowingEntry(1, 0, QP.constant(1)),),
        domain=_at_least(3),
    )


def fermat() -> FamilySpectrum:
    """Indexed by ``m``: ``3m`` lines, ``m^2`` triple points and three ``m``-fold points."""
    return FamilySpectrum(
        "fermat",
        line_count=QP.polynomial([0, 3]),
        fixed_entries={3: QP.polynomial([0, 0, 1])},
        growing_entries=(GrowingEntry(1, 0, QP.constant(3)),),
        domain=_at_least(3),
    )


def generic(degree: int = 1) -> FamilySpectrum:
    """Curves in general position: only ``t_2 = d^2 (k^2 - k) / 2`` double points."""
    half = Fraction(degree * degree, 2)
    return FamilySpectrum(
        "generic" if degree == 1 else f"generic {degree}-configuration",
        QP.polynomial([0, 1]),
        {2: QP.polynomial([0, -half, half])},
        domain=_at_least(2 if degree == 1 else 4),
        degree=degree,
    )


def dominant_profile(r0: int, c: int | Fraction = 1) -> FamilySpectrum:
    """Synthetic family with ``t_{r0} = c k^2`` and nothing else, for limits only."""
    if r0 < 3:
        raise DomainError(f"dominant multiplicity must be >= 3, got {r0}")
    c = Fraction(c)
    if c <= 0:
        raise DomainError(f"growth constant must be positive, got {c}")
    return FamilySpectrum(
        f"dominant t_{r0} = {c} k^2",
        QP.polynomial([0, 1]),
        {r0: QP.polynomial([0, 0, c])},
        instantiable=False,
    )


BUILTIN_NAMES = ("boroczky", "s-elliptic", "polyhedral", "fermat", "generic")


def builtin_family(name: str, w: int | None = None) -> FamilySpectrum:
    key = name.lower().replace("_", "-")
    if key == "boroczky":
        return boroczky()
    if key == "s-elliptic":
        if w is None:
            raise DomainError("s-elliptic family needs the parameter w")
        return s_elliptic(w)
    if key == "polyhedral":
        return polyhedral()
    if key == "fermat":
        return fermat()
    if key == "generic":
        return generic()
    raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def instantiate(fam: FamilySpectrum, k: int) -> CurveConfiguration:
    if not fam.instantiable:
        raise Unsupported(f"{fam.name} is a limit profile and cannot be instantiated")
    fam.check_domain(k)
    counts: dict[int, int] = {}

    def put(r: int, value: Fraction, what: str) -> None:
        if value.denominator != 1 or value < 0:
            raise DomainError(f"{fam.name}: {what} = {value} at parameter {k}")
        counts[r] = counts.get(r, 0) + int(value)

    for r, qp in fam.fixed_entries.items():
        put(r, qp(k), f"t_{r}")
    for g in fam.growing_entries:
        put(g.multiplicity(k), g.count(k), f"t_{g.multiplicity(k)}")
    lines = fam.line_count(k)
    cfg = CurveConfiguration(
        fam.degree, int(lines), MultiplicitySpectrum(counts), f"{fam.name} k={k}"
    )
    return cfg.require_valid()


def _leading(qp: QuasiPolynomial, degree: int, what: str) -> Fraction:
    try:
        return qp.coefficient(degree)
    except ValueError as exc:
        raise NoLimit(f"{what}: {exc}") from None


def asymptotic_harbourne(fam: FamilySpectrum) -> Fraction:
    """``lim (lines - f_1) / f_0`` as the parameter grows."""
    num = fam.line_count - fam.f(1)
    den = fam.f(0)
    deg = den.degree
    if deg < 1:
        raise NoLimit(f"{fam.name}: number of singular points does not grow")
    if num.degree > deg:
        raise NoLimit(f"{fam.name}: Harbourne constant diverges")
    return _leading(num, deg, "numerator") / _leading(den, deg, "f_0")


def _leading_triples(fam: FamilySpectrum):
    c1sq, c2 = fam.chern_coefficients()
    deg = max(q.degree for q in (*c1sq, *c2))
    if deg < 1:
        raise NoLimit(f"{fam.name}: Chern coefficients do not grow")
    lead1 = tuple(_leading(q, deg, "c1^2") for q in c1sq)
    lead2 = tuple(_leading(q, deg, "c2") for q in c2)
    if not any(lead2):
        raise NoLimit(f"{fam.name}: c2 has no leading term of degree {deg}")
    return lead1, lead2, deg


def k_chern_slope(fam: FamilySpectrum) -> RationalFunctionInN:
    """Limit of ``c1^2 / c2`` along the family, as a rational function of ``n``."""
    lead1, lead2, _ = _leading_triples(fam)
    # triples are (n^2, n, 1) coefficients; Poly wants constant term first
    return RationalFunctionInN(tuple(reversed(lead1)), tuple(reversed(lead2)))


def kn_chern_slope(fam: FamilySpectrum) -> Fraction:
    """Double limit in ``k`` and ``n``; both iteration orders are computed and must agree."""
    slope = k_chern_slope(fam)
    if pdeg(slope.denominator) < pdeg(slope.numerator):
        raise NoLimit(f"{fam.name}: k-Chern slope diverges in n")
    n_then_k = slope.limit_at_infinity()

    k_then_n = characteristic_number_limit(fam)
    if n_then_k != k_then_n:
        raise NoLimit(f"{fam.name}: iterated limits differ ({n_then_k} vs {k_then_n})")
    return n_then_k


def characteristic_number_limit(fam: FamilySpectrum) -> Fraction:
    """Limit of the characteristic number (ratio of ``n^2`` coefficients) along the family."""
    c1sq, c2 = fam.chern_coefficients()
    a1, a2 = c1sq[0], c2[0]
    deg = max(a1.degree, a2.degree)
    lead2 = _leading(a2, deg, "c2 n^2-coefficient")
    if lead2 == 0:
        raise NoLimit(f"{fam.name}: characteristic numbers diverge")
    return _leading(a1, deg, "c1^2 n^2-coefficient") / lead2
