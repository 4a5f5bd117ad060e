"""Named configurations from the classical literature."""

from __future__ import annotations

from .config import CurveConfiguration, MultiplicitySpectrum, lines


def _conics(count: int, label: str, **spectrum: int) -> CurveConfiguration:
    return CurveConfiguration(2, count, MultiplicitySpectrum(**spectrum), label)


CATALOG: dict[str, CurveConfiguration] = {
    "triangle": lines(3, "triangle", t2=3),
    "t6": lines(6, "T6", t2=3, t3=4),
    "klein": lines(21, "Klein K21", t3=28, t4=21),
    "wiman": lines(45, "Wiman W45", t3=120, t4=45, t5=36),
    "dual-hesse": lines(9, "dual Hesse", t3=12),
    "ap-conics": _conics(6, "AP conics", t5=6),
    "hesse-conics": _conics(12, "Hesse conics", t2=12, t8=9),
}


def get(name: str) -> CurveConfiguration:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"no catalogued configuration {name!r}; known: {', '.join(CATALOG)}") from None


def general_configuration(degree: int, count: int) -> CurveConfiguration:
    """Only ordinary double points: ``t_2 = d^2 (k^2 - k) / 2``."""
    return CurveConfiguration(
        degree,
        count,
        MultiplicitySpectrum({2: degree * degree * (count * count - count) // 2}),
        f"general {degree}-configuration, k={count}",
    )
