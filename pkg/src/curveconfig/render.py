"""Presentation helpers: exact rationals to strings."""

from __future__ import annotations

from fractions import Fraction


def frac_str(x: Fraction | int) -> str:
    return str(Fraction(x))


def decimal_str(x: Fraction | int, digits: int = 5) -> str:
    """Round ``x`` half-to-even at ``digits`` places after the point."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    scaled = round(Fraction(x) * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def rational_json(x: Fraction | int, digits: int | None = 5) -> dict[str, str]:
    out = {"exact": frac_str(x)}
    if digits is not None:
        out["decimal"] = decimal_str(x, digits)
    return out
