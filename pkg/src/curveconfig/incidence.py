"""Exact incidence engine for line arrangements in the projective plane.

Points and lines are integer homogeneous triples in a canonical form
(coprime, first nonzero coordinate positive), so structural equality is
projective equality and points can be grouped with a plain dict.

The regular-polygon generators work numerically with interval arithmetic.
Intervals certify that two points are *different*; they never certify that
two points coincide, so those generators return a presumed spectrum that
has to be reconciled against the closed-form family spectrum.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from mpmath.ctx_iv import MPIntervalContext

from .config import CurveConfiguration, MultiplicitySpectrum
from .errors import (
    DegenerateIntersection,
    DuplicateLines,
    GenerationFailure,
    InvalidArgument,
    InvalidConfiguration,
    PrecisionExhausted,
)


def _normalize(coords: Iterable[int | Fraction]) -> tuple[int, int, int]:
    fr = [Fraction(c) for c in coords]
    if len(fr) != 3:
        raise InvalidArgument("homogeneous coordinates need exactly three entries")
    lcm = 1
    for c in fr:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in fr]
    g = math.gcd(*ints)
    if g == 0:
        raise InvalidArgument("all homogeneous coordinates are zero")
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c)
    if lead < 0:
        ints = [-c for c in ints]
    return ints[0], ints[1], ints[2]


def _cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class ProjPoint:
    x: int
    y: int
    z: int

    def __init__(self, x: int | Fraction, y: int | Fraction, z: int | Fraction) -> None:
        nx, ny, nz = _normalize((x, y, z))
        object.__setattr__(self, "x", nx)
        object.__setattr__(self, "y", ny)
        object.__setattr__(self, "z", nz)

    @property
    def coords(self) -> tuple[int, int, int]:
        return self.x, self.y, self.z


@dataclass(frozen=True)
class ProjLine:
    """The line ``a x + b y + c z = 0``."""

    a: int
    b: int
    c: int

    def __init__(self, a: int | Fraction, b: int | Fraction, c: int | Fraction) -> None:
        na, nb, nc = _normalize((a, b, c))
        object.__setattr__(self, "a", na)
        object.__setattr__(self, "b", nb)
        object.__setattr__(self, "c", nc)

    @property
    def coords(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def contains(self, p: ProjPoint) -> bool:
        return self.a * p.x + self.b * p.y + self.c * p.z == 0


@dataclass(frozen=True)
class LineArrangement:
    lines: tuple[ProjLine, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "lines", tuple(self.lines))
        seen: set[ProjLine] = set()
        for line in self.lines:
            if line in seen:
                raise DuplicateLines(f"line {line.coords} occurs more than once")
            seen.add(line)

    def __len__(self) -> int:
        return len(self.lines)

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int | Fraction]], label: str | None = None):
        return cls(tuple(ProjLine(*t) for t in triples), label)


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1 == l2:
        raise DegenerateIntersection(f"line {l1.coords} intersected with itself")
    return ProjPoint(*_cross(l1.coords, l2.coords))


def incidences(arr: LineArrangement) -> dict[ProjPoint, frozenset[int]]:
    """Map every intersection point to the set of line indices through it."""
    through: dict[ProjPoint, set[int]] = defaultdict(set)
    for i, j in itertools.combinations(range(len(arr.lines)), 2):
        p = intersect(arr.lines[i], arr.lines[j])
        through[p].update((i, j))
    return {p: frozenset(s) for p, s in through.items()}


def spectrum_of(arr: LineArrangement) -> CurveConfiguration:
    if len(arr) < 2:
        raise InvalidArgument("need at least two lines")
    counts = Counter(len(s) for s in incidences(arr).values())
    return CurveConfiguration(1, len(arr), MultiplicitySpectrum(counts), arr.label)


def generate_generic(k: int, seed: int) -> LineArrangement:
    """Random rational lines in general position (only double points).

    Deterministic in ``seed``.  Coefficients are drawn from ``[-10k, 10k]``; a
    candidate is rejected if it repeats a line or passes through an existing
    intersection point.  At most ``100 k`` candidates are drawn.
    """
    if k < 2:
        raise InvalidArgument(f"need k >= 2 lines, got {k}")
    rng = random.Random(seed)
    bound = 10 * k
    chosen: list[ProjLine] = []
    points: list[ProjPoint] = []
    for _ in range(100 * k):
        coeffs = [rng.randint(-bound, bound) for _ in range(3)]
        if not any(coeffs):
            continue
        cand = ProjLine(*coeffs)
        if cand in chosen or any(cand.contains(p) for p in points):
            continue
        points.extend(intersect(cand, other) for other in chosen)
        chosen.append(cand)
        if len(chosen) == k:
            arr = LineArrangement(tuple(chosen), f"generic k={k} seed={seed}")
            assert dict(spectrum_of(arr).spectrum) == {2: k * (k - 1) // 2}
            return arr
    raise GenerationFailure(f"no generic arrangement of {k} lines within {100 * k} draws")


def parse_arrangement(text: str, label: str | None = None) -> LineArrangement:
    """Parse ``a b c`` integer triples, one line per row; ``#`` starts a comment."""
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        row = raw.split("#", 1)[0].strip()
        if not row:
            continue
        parts = row.split()
        if len(parts) != 3:
            raise InvalidConfiguration(f"line {lineno}: expected three integers, got {row!r}")
        try:
            triples.append(tuple(int(p) for p in parts))
        except ValueError:
            raise InvalidConfiguration(f"line {lineno}: non-integer coefficient in {row!r}") from None
    try:
        return LineArrangement.from_triples(triples, label)
    except InvalidArgument as exc:
        raise InvalidConfiguration(str(exc)) from None


# -- certified-numeric generators -------------------------------------------------


@dataclass(frozen=True)
class PresumedConfiguration:
    """Numerically clustered spectrum; trustworthy only after reconciliation."""

    config: CurveConfiguration
    precision: int
    presumed: bool = True

    def reconcile(self, formula: CurveConfiguration) -> bool:
        return (
            self.config.count == formula.count
            and self.config.degree == formula.degree
            and self.config.spectrum == formula.spectrum
        )


def _polygon_lines(iv: MPIntervalContext, kind: str, k: int) -> list[tuple]:
    def vertex(j: int, m: int = k):
        theta = 2 * iv.pi * j / m
        return (iv.cos(theta), iv.sin(theta), iv.mpf(1))

    def join(u, v):
        return (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )

    if kind == "polyhedral":
        sides = [join(vertex(j), vertex((j + 1) % k)) for j in range(k)]
        axes = []
        for j in range(k):
            phi = iv.pi * j / k
            axes.append((iv.sin(phi), -iv.cos(phi), iv.mpf(0)))
        return sides + axes
    # Böröczky: join P_i with P_{k/2 - 2i}; the tangent at P_i when they coincide
    out = []
    for i in range(k):
        j = (k // 2 - 2 * i) % k
        if i == j:
            c, s, _ = vertex(i)
            out.append((c, s, iv.mpf(-1)))
        else:
            out.append(join(vertex(i), vertex(j)))
    return out


def _cluster(iv: MPIntervalContext, lines: list[tuple]) -> list[frozenset[int]] | None:
    n = len(lines)
    through: dict[tuple[int, int], frozenset[int]] = {}
    for i, j in itertools.combinations(range(n), 2):
        a, b = lines[i], lines[j]
        p = (
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )
        if all(0 in c for c in p):
            return None  # cannot even separate the two lines
        members = {i, j}
        for m in range(n):
            if m not in members:
                dot = lines[m][0] * p[0] + lines[m][1] * p[1] + lines[m][2] * p[2]
                if 0 in dot:
                    members.add(m)
        through[i, j] = frozenset(members)
    # presumed coincidence must be transitive: every pair inside a cluster sees the same cluster
    for key, members in through.items():
        for pair in itertools.combinations(sorted(members), 2):
            if through[pair] != members:
                return None
    return sorted(set(through.values()), key=sorted)


def generate_regular_polygon_family(
    kind: Literal["polyhedral", "boroczky"],
    k: int,
    precision: int = 53,
    max_refinements: int = 4,
) -> PresumedConfiguration:
    """Build the polyhedral or Böröczky arrangement numerically and cluster its points.

    ``precision`` is the starting interval precision in bits; it is doubled up
    to ``max_refinements`` times while the clustering is inconsistent.
    """
    if kind == "polyhedral":
        if k < 3:
            raise InvalidArgument(f"polyhedral family needs k >= 3, got {k}")
    elif kind == "boroczky":
        if k < 6 or k % 2:
            raise InvalidArgument(f"Böröczky family needs even k >= 6, got {k}")
    else:
        raise InvalidArgument(f"unknown polygon family {kind!r}")
    if precision < 2:
        raise InvalidArgument("precision must be at least 2 bits")

    bits = precision
    for _ in range(max_refinements + 1):
        iv = MPIntervalContext()
        iv.prec = bits
        lines = _polygon_lines(iv, kind, k)
        clusters = _cluster(iv, lines)
        if clusters is not None:
            counts = Counter(len(c) for c in clusters)
            cfg = CurveConfiguration(
                1, len(lines), MultiplicitySpectrum(counts), f"{kind} k={k} (presumed)"
            )
            if cfg.is_valid:
                return PresumedConfiguration(cfg, bits)
        bits *= 2
    raise PrecisionExhausted(
        f"{kind} k={k}: clustering still inconsistent at {bits // 2} bits"
    )
