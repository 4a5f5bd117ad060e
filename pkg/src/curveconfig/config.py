"""Curve configuration data: degree, curve count and multiplicity spectrum.

A configuration of ``k`` plane curves of degree ``d`` is described here purely
combinatorially by the numbers ``t_r`` of points where exactly ``r`` curves
meet.  Everything is exact; rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any

from .errors import (
    IdentityFailure,
    InvalidArgument,
    InvalidConfiguration,
    NoSingularPoints,
    UnsupportedDegree,
)


class MultiplicitySpectrum(Mapping):
    """Immutable sparse map ``r -> t_r``; absent multiplicities have count 0."""

    __slots__ = ("_items", "_hash")

    def __init__(self, counts: Mapping[int, int] | None = None, **kw: int) -> None:
        merged: dict[int, int] = {}
        for source in (counts or {}), {int(k[1:]): v for k, v in kw.items()}:
            for r, t in source.items():
                r, t = _as_int(r, "multiplicity"), _as_int(t, "count")
                if r < 2:
                    raise InvalidConfiguration(f"multiplicity {r} < 2")
                if t < 0:
                    raise InvalidConfiguration(f"negative count t_{r} = {t}")
                if t:
                    merged[r] = merged.get(r, 0) + t
        self._items = tuple(sorted(merged.items()))
        self._hash = hash(self._items)

    def __getitem__(self, r: int) -> int:
        for key, t in self._items:
            if key == r:
                return t
        raise KeyError(r)

    def get(self, r: int, default: int = 0) -> int:  # type: ignore[override]
        return dict(self._items).get(r, default)

    def __iter__(self) -> Iterator[int]:
        return (r for r, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiplicitySpectrum):
            return self._items == other._items
        if isinstance(other, Mapping):
            return self._items == MultiplicitySpectrum(other)._items
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"t_{r}={t}" for r, t in self._items)
        return f"MultiplicitySpectrum({body})"

    @property
    def max_multiplicity(self) -> int:
        return self._items[-1][0] if self._items else 0

    def moment(self, i: int) -> int:
        return sum(r**i * t for r, t in self._items)

    def to_json(self) -> dict[str, int]:
        return {str(r): t for r, t in self._items}


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise InvalidConfiguration(f"{what} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("+-").isdigit():
        return int(value)
    raise InvalidConfiguration(f"{what} must be an integer, got {value!r}")


@dataclass(frozen=True)
class ValidationReport:
    degree: int
    count: int
    lhs: int
    rhs: int
    passed: bool
    line_form: tuple[int, int] | None = None

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": "d^2(k^2-k) = sum (r^2-r) t_r",
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
        }
        if self.line_form is not None:
            out["line_form"] = {
                "identity": "k^2-k = f_2-f_1",
                "lhs": self.line_form[0],
                "rhs": self.line_form[1],
            }
        return out


@dataclass(frozen=True)
class CurveConfiguration:
    """``count`` curves of ``degree`` with the given multiplicity spectrum.

    Construction enforces the structural invariants only.  The combinatorial
    identity is checked by :func:`validate`; operations that need a genuine
    configuration call :meth:`require_valid`.
    """

    degree: int
    count: int
    spectrum: MultiplicitySpectrum = field(default_factory=MultiplicitySpectrum)
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.spectrum, MultiplicitySpectrum):
            object.__setattr__(self, "spectrum", MultiplicitySpectrum(self.spectrum))
        d = _as_int(self.degree, "degree")
        k = _as_int(self.count, "count")
        object.__setattr__(self, "degree", d)
        object.__setattr__(self, "count", k)
        if d < 1:
            raise InvalidConfiguration(f"degree must be >= 1, got {d}")
        if k < 1:
            raise InvalidConfiguration(f"curve count must be >= 1, got {k}")
        if self.spectrum.max_multiplicity > k:
            raise InvalidConfiguration(
                f"multiplicity {self.spectrum.max_multiplicity} exceeds curve count {k}"
            )

    def t(self, r: int) -> int:
        return self.spectrum.get(r, 0)

    def f(self, i: int) -> int:
        return f_moment(self, i)

    @cached_property
    def report(self) -> ValidationReport:
        return validate(self)

    @property
    def is_valid(self) -> bool:
        return self.report.passed

    def require_valid(self) -> CurveConfiguration:
        rep = self.report
        if not rep.passed:
            raise IdentityFailure(
                f"{self.name}: combinatorial identity fails ({rep.lhs} != {rep.rhs})"
            )
        return self

    @property
    def name(self) -> str:
        return self.label or f"d={self.degree}, k={self.count}"

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        if self.label is not None:
            out["label"] = self.label
        out.update(degree=self.degree, count=self.count, spectrum=self.spectrum.to_json())
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> CurveConfiguration:
        if not isinstance(data, Mapping):
            raise InvalidConfiguration("configuration must be a JSON object")
        missing = {"degree", "count", "spectrum"} - set(data)
        if missing:
            raise InvalidConfiguration(f"missing keys: {', '.join(sorted(missing))}")
        spectrum = data["spectrum"]
        if not isinstance(spectrum, Mapping):
            raise InvalidConfiguration("'spectrum' must be an object")
        for key in spectrum:
            if not (isinstance(key, str) and key.isdigit()):
                raise InvalidConfiguration(f"spectrum key {key!r} is not a decimal string")
        label = data.get("label")
        if label is not None and not isinstance(label, str):
            raise InvalidConfiguration("'label' must be a string")
        return cls(
            degree=data["degree"],
            count=data["count"],
            spectrum=MultiplicitySpectrum({int(r): t for r, t in spectrum.items()}),
            label=label,
        )

    @classmethod
    def loads(cls, text: str) -> CurveConfiguration:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidConfiguration(f"malformed JSON: {exc}") from None
        return cls.from_json(data)


def lines(count: int, label: str | None = None, **spectrum: int) -> CurveConfiguration:
    """Shorthand for a line configuration: ``lines(6, t2=3, t3=4)``."""
    return CurveConfiguration(1, count, MultiplicitySpectrum(**spectrum), label)


def f_moment(cfg: CurveConfiguration, i: int) -> int:
    """Return ``f_i = sum_r r**i * t_r`` for ``i`` in ``{0, 1, 2}``."""
    if type(i) is not int or i not in (0, 1, 2):
        raise InvalidArgument(f"moment index must be 0, 1 or 2, got {i!r}")
    return cfg.spectrum.moment(i)


def validate(cfg: CurveConfiguration) -> ValidationReport:
    """Check ``d^2 (k^2 - k) = sum (r^2 - r) t_r``; failures are reported, not raised."""
    d, k = cfg.degree, cfg.count
    lhs = d * d * (k * k - k)
    rhs = sum((r * r - r) * t for r, t in cfg.spectrum.items())
    line_form = None
    if d == 1:
        line_form = (k * k - k, f_moment(cfg, 2) - f_moment(cfg, 1))
    return ValidationReport(d, k, lhs, rhs, lhs == rhs, line_form)


def linear_harbourne(cfg: CurveConfiguration) -> Fraction:
    """Linear Harbourne constant ``(k^2 - f_2) / f_0`` at the singular locus."""
    if cfg.degree != 1:
        raise UnsupportedDegree(
            f"Harbourne constant is defined for line configurations only (d={cfg.degree})"
        )
    cfg.require_valid()
    f0, f1, f2 = (f_moment(cfg, i) for i in (0, 1, 2))
    if f0 == 0:
        raise NoSingularPoints(f"{cfg.name} has no singular points")
    k = cfg.count
    value = Fraction(k * k - f2, f0)
    assert value == Fraction(k - f1, f0)
    return value
