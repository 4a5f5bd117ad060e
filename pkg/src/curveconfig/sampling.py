"""Seeded random inputs for property sweeps."""

from __future__ import annotations

import random

from .config import CurveConfiguration, MultiplicitySpectrum
from .incidence import LineArrangement, ProjLine


def random_validated_config(rng: random.Random, degree: int, count: int) -> CurveConfiguration:
    """A spectrum with ``t_k = 0`` satisfying the combinatorial identity.

    Higher multiplicities are filled first from a random subset, then double
    points absorb the remainder (every ``r^2 - r`` is even, so this is exact).
    """
    remaining = degree * degree * (count * count - count)
    counts: dict[int, int] = {}
    candidates = list(range(3, count))
    rng.shuffle(candidates)
    for r in candidates[: rng.randint(0, len(candidates))]:
        weight = r * r - r
        t = rng.randint(0, remaining // weight)
        if t:
            counts[r] = t
            remaining -= t * weight
    if remaining:
        counts[2] = remaining // 2
    cfg = CurveConfiguration(degree, count, MultiplicitySpectrum(counts))
    assert cfg.is_valid
    return cfg


def random_arrangement(rng: random.Random, max_lines: int = 8, coeff: int = 2) -> LineArrangement:
    """Lines with small integer coefficients, so that concurrences are common."""
    size = rng.randint(2, max_lines)
    lines: list[ProjLine] = []
    while len(lines) < size:
        triple = [rng.randint(-coeff, coeff) for _ in range(3)]
        if any(triple):
            line = ProjLine(*triple)
            if line not in lines:
                lines.append(line)
    return LineArrangement(tuple(lines))
