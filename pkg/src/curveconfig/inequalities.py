"""Exact checkers for the classical inequalities on configuration spectra.

A failing inequality is a result, not an error: a datum that violates, say,
Melchior's inequality simply cannot be realized over the reals.  Checkers
raise only when asked about a degree they do not cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .chern import chern_pair, characteristic_number
from .config import CurveConfiguration
from .errors import CurveConfigError, WrongChecker

_RELATIONS = {
    ">=": lambda s: s >= 0,
    "<": lambda s: s < 0,
}


@dataclass(frozen=True)
class InequalityVerdict:
    """Outcome of ``lhs <relation> rhs`` on one datum.

    ``holds`` is ``None`` when the hypotheses are not met; ``slack`` is always
    ``lhs - rhs``.
    """

    name: str
    lhs: Fraction | None
    rhs: Fraction | None
    relation: str = ">="
    preconditions_met: bool = True
    reasons: tuple[str, ...] = ()
    interpretation: str = ""
    holds: bool | None = field(init=False)
    slack: Fraction | None = field(init=False)

    def __post_init__(self) -> None:
        slack = None if self.lhs is None or self.rhs is None else Fraction(self.lhs) - Fraction(self.rhs)
        object.__setattr__(self, "slack", slack)
        holds = None
        if self.preconditions_met and slack is not None:
            holds = _RELATIONS[self.relation](slack)
        object.__setattr__(self, "holds", holds)

    def as_dict(self) -> dict[str, Any]:
        def s(x):
            return None if x is None else str(x)

        return {
            "name": self.name,
            "relation": self.relation,
            "lhs": s(self.lhs),
            "rhs": s(self.rhs),
            "slack": s(self.slack),
            "holds": self.holds,
            "preconditions": {"met": self.preconditions_met, "reasons": list(self.reasons)},
            "interpretation": self.interpretation,
        }


def _tail(cfg: CurveConfiguration, start: int, shift: int) -> int:
    return sum((r - shift) * t for r, t in cfg.spectrum.items() if r >= start)


def _common_reasons(cfg: CurveConfiguration, degree_ok: bool, degree_msg: str, min_k: int) -> list[str]:
    reasons = []
    if not degree_ok:
        reasons.append(degree_msg)
    if cfg.count < min_k:
        reasons.append(f"need k >= {min_k} curves, got {cfg.count}")
    if not cfg.is_valid:
        reasons.append("combinatorial identity fails")
    return reasons


def hirzebruch_lines(cfg: CurveConfiguration) -> InequalityVerdict:
    """``t_2 + 3/4 t_3 >= k + sum_{r>=5} (r-4) t_r`` for complex line arrangements."""
    k = cfg.count
    reasons = _common_reasons(cfg, cfg.degree == 1, "line configurations only (d = 1)", 4)
    if cfg.t(k) or cfg.t(k - 1):
        reasons.append(f"need t_{k} = t_{k - 1} = 0")
    return InequalityVerdict(
        "hirzebruch",
        lhs=cfg.t(2) + Fraction(3, 4) * cfg.t(3),
        rhs=Fraction(k + _tail(cfg, 5, 4)),
        preconditions_met=not reasons,
        reasons=tuple(reasons),
        interpretation="holds for every arrangement realizable over the complex numbers",
    )


def melchior(cfg: CurveConfiguration) -> InequalityVerdict:
    """``t_2 >= 3 + sum_{r>=4} (r-3) t_r`` for real line arrangements."""
    k = cfg.count
    reasons = _common_reasons(cfg, cfg.degree == 1, "line configurations only (d = 1)", 3)
    if cfg.t(k):
        reasons.append(f"need t_{k} = 0")
    return InequalityVerdict(
        "melchior",
        lhs=Fraction(cfg.t(2)),
        rhs=Fraction(3 + _tail(cfg, 4, 3)),
        preconditions_met=not reasons,
        reasons=tuple(reasons),
        interpretation="holds for arrangements realizable over the reals; failure rules out real realizability",
    )


def hirzebruch_dconfig(cfg: CurveConfiguration) -> InequalityVerdict:
    """``(7/2 d^2 - 9/2 d) k + t_2 + t_3 >= sum_{r>=4} (r-4) t_r`` for ``d >= 3``."""
    d, k = cfg.degree, cfg.count
    if d < 3:
        other = "tang_conics" if d == 2 else "hirzebruch_lines"
        raise WrongChecker(f"hirzebruch_dconfig covers d >= 3; use {other} for d = {d}")
    reasons = _common_reasons(cfg, True, "", 4)
    if cfg.t(k):
        reasons.append(f"need t_{k} = 0")
    return InequalityVerdict(
        "hirzebruch-d-configuration",
        lhs=(Fraction(7, 2) * d * d - Fraction(9, 2) * d) * k + cfg.t(2) + cfg.t(3),
        rhs=Fraction(_tail(cfg, 4, 4)),
        preconditions_met=not reasons,
        reasons=tuple(reasons),
        interpretation="holds for transversal configurations of smooth complex curves",
    )


def tang_conics(cfg: CurveConfiguration) -> InequalityVerdict:
    """``5k + t_2 + t_3 >= sum_{r>=4} (r-4) t_r`` for conic configurations."""
    if cfg.degree != 2:
        raise WrongChecker(f"tang_conics covers d = 2 only, got d = {cfg.degree}")
    k = cfg.count
    reasons = _common_reasons(cfg, True, "", 4)
    if cfg.t(k):
        reasons.append(f"need t_{k} = 0")
    return InequalityVerdict(
        "tang-conics",
        lhs=Fraction(5 * k + cfg.t(2) + cfg.t(3)),
        rhs=Fraction(_tail(cfg, 4, 4)),
        preconditions_met=not reasons,
        reasons=tuple(reasons),
        interpretation="holds for transversal configurations of smooth complex conics",
    )


def applicable_inequality(cfg: CurveConfiguration) -> InequalityVerdict:
    if cfg.degree == 1:
        return hirzebruch_lines(cfg)
    if cfg.degree == 2:
        return tang_conics(cfg)
    return hirzebruch_dconfig(cfg)


def gamma_bound(cfg: CurveConfiguration) -> InequalityVerdict:
    """Strict bound ``gamma < 8/3`` for d-configurations with ``d >= 2``."""
    reasons = []
    gamma = None
    if cfg.degree < 2:
        reasons.append("strict bound is stated for d >= 2; lines only satisfy gamma <= 8/3")
    else:
        base = applicable_inequality(cfg)
        if not base.preconditions_met:
            reasons.extend(base.reasons)
        elif not base.holds:
            reasons.append(f"{base.name} inequality fails")
    if cfg.is_valid and cfg.count >= 4 and not cfg.t(cfg.count):
        try:
            gamma = characteristic_number(chern_pair(cfg))
        except CurveConfigError as exc:
            reasons.append(str(exc))
    elif not reasons:
        reasons.append("not a d-configuration (needs a validated datum, k >= 4, t_k = 0)")
    return InequalityVerdict(
        "gamma-bound",
        lhs=gamma,
        rhs=Fraction(8, 3),
        relation="<",
        preconditions_met=not reasons,
        reasons=tuple(reasons),
        interpretation="characteristic number of a transversal configuration of smooth complex curves",
    )


def all_verdicts(cfg: CurveConfiguration, include_inapplicable: bool = False) -> list[InequalityVerdict]:
    """Run the checkers matching ``cfg.degree`` (or every checker)."""
    out: list[InequalityVerdict] = []
    checkers = [hirzebruch_lines, melchior, tang_conics, hirzebruch_dconfig, gamma_bound]
    for check in checkers:
        try:
            verdict = check(cfg)
        except WrongChecker as exc:
            if include_inapplicable:
                out.append(
                    InequalityVerdict(
                        check.__name__.replace("_", "-"),
                        None,
                        None,
                        preconditions_met=False,
                        reasons=(str(exc),),
                    )
                )
            continue
        if verdict.preconditions_met or include_inapplicable or _degree_matches(check, cfg):
            out.append(verdict)
    return out


def _degree_matches(check, cfg: CurveConfiguration) -> bool:
    if check in (hirzebruch_lines, melchior):
        return cfg.degree == 1
    return cfg.degree >= 2
