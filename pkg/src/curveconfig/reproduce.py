"""Recompute every published value and report expected vs. computed."""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import catalog
from .chern import (
    GeneralTypeCondition,
    ball_quotient_candidates,
    bmy_gap,
    characteristic_number,
    chern_coefficients,
    chern_pair,
    line_chern_coefficients,
    slope_at,
    sommese_bounds,
)
from .config import f_moment, linear_harbourne
from .families import (
    asymptotic_harbourne,
    builtin_family,
    characteristic_number_limit,
    dominant_profile,
    generic,
    instantiate,
    k_chern_slope,
    kn_chern_slope,
)
from .incidence import generate_regular_polygon_family, spectrum_of
from .inequalities import applicable_inequality, gamma_bound, hirzebruch_lines, melchior
from .poly import RationalFunctionInN
from .render import decimal_str
from .sampling import random_arrangement, random_validated_config

STRONG = GeneralTypeCondition.STRONG
COMMON_K_SLOPE = RationalFunctionInN((1, -4, Fraction(5, 2)), (Fraction(3, 2), -2, 1))
FOUR_FAMILIES = ("boroczky", "s-elliptic", "polyhedral", "fermat")


@dataclass(frozen=True)
class Claim:
    claim_id: str
    criterion: int
    source: str
    expected: str
    computed: str

    @property
    def match(self) -> bool:
        return self.expected == self.computed

    def as_dict(self) -> dict[str, Any]:
        return {
            "id": self.claim_id,
            "criterion": self.criterion,
            "source": self.source,
            "expected": self.expected,
            "computed": self.computed,
            "match": self.match,
        }


@dataclass(frozen=True)
class ReproductionReport:
    claims: tuple[Claim, ...]

    @property
    def all_match(self) -> bool:
        return all(c.match for c in self.claims)

    def as_dict(self) -> dict[str, Any]:
        return {"all_match": self.all_match, "claims": [c.as_dict() for c in self.claims]}


def _fam(name: str):
    return builtin_family(name, w=3 if name == "s-elliptic" else None)


def _triple(q) -> str:
    return "(" + ", ".join(str(x) for x in q) + ")"


def _claims(seed: int) -> list[tuple[str, int, str, str, Callable[[], str]]]:
    t6, klein, wiman = catalog.get("t6"), catalog.get("klein"), catalog.get("wiman")

    def verdict(v) -> str:
        return f"{v.lhs} vs {v.rhs}: {'holds' if v.holds else 'fails'}"

    def all_equal(values) -> str:
        values = list(values)
        return str(values[0]) if len(set(values)) == 1 else " | ".join(map(str, values))

    def never_ball_quotients() -> str:
        hits = []
        for k in range(8, 41, 2):
            pair = chern_pair(instantiate(_fam("boroczky"), k))
            hits += [f"B{k}:n={n}" for n in ball_quotient_candidates(pair, STRONG)]
        for k in range(4, 41):
            pair = chern_pair(instantiate(_fam("polyhedral"), k))
            hits += [f"P{k}:n={n}" for n in ball_quotient_candidates(pair, STRONG)]
        return "none" if not hits else ", ".join(hits)

    def general_dconfig() -> str:
        bad = []
        for d in (2, 3, 4):
            for k in range(4, 11):
                g = characteristic_number(chern_pair(catalog.general_configuration(d, k)))
                closed = Fraction(2 * (d * k - 3) ** 2, d * d * k * k + (d * d - 6 * d) * k + 6)
                if g != closed:
                    bad.append(f"d={d},k={k}")
        return "all match" if not bad else ", ".join(bad)

    def general_dconfig_limit() -> str:
        return all_equal(characteristic_number_limit(generic(d)) for d in (1, 2, 3, 4, 5))

    def identity_sweep() -> str:
        rng = random.Random(seed)
        failures = sum(not spectrum_of(random_arrangement(rng)).is_valid for _ in range(500))
        return f"{failures} failures"

    def gamma_sweep() -> str:
        rng = random.Random(seed + 1)
        tested = violations = 0
        while tested < 10_000:
            d = rng.randint(2, 5)
            cfg = random_validated_config(rng, d, rng.randint(4, 10))
            base = applicable_inequality(cfg)
            verdict = gamma_bound(cfg)
            if base.holds and verdict.preconditions_met:
                tested += 1
                violations += not verdict.holds
        return f"{violations} violations"

    def reduction_sweep() -> str:
        rng = random.Random(seed + 2)
        bad = 0
        for _ in range(1000):
            cfg = random_validated_config(rng, 1, rng.randint(4, 30))
            args = (f_moment(cfg, 0), f_moment(cfg, 1), cfg.t(2))
            bad += chern_coefficients(1, cfg.count, *args) != line_chern_coefficients(cfg.count, *args)
        return f"{bad} mismatches"

    def closed_form_sweep() -> str:
        rng = random.Random(seed + 3)
        bad = 0
        for _ in range(1000):
            cfg = random_validated_config(rng, 1, rng.randint(4, 30))
            f0, f1, k = f_moment(cfg, 0), f_moment(cfg, 1), cfg.count
            den = 3 - 2 * k + f1 - f0
            if den > 0:
                pair = chern_pair(cfg)
                closed = Fraction(5, 2) - Fraction(3 * f0 - f1 - 3, 2 * den)
                bad += pair.c1sq.a / pair.c2.a != closed
        return f"{bad} mismatches"

    def generators() -> str:
        bad = []
        for kind, ks in (("polyhedral", range(3, 13)), ("boroczky", range(6, 17, 2))):
            for k in ks:
                presumed = generate_regular_polygon_family(kind, k)
                if not presumed.reconcile(instantiate(_fam(kind), k)):
                    bad.append(f"{kind} k={k}")
        return "all match" if not bad else ", ".join(bad)

    def generic_lower_bound() -> str:
        bad = []
        fam = _fam("generic")
        for k in range(6, 21):
            g = characteristic_number(chern_pair(instantiate(fam, k)))
            if g != sommese_bounds(k)[0]:
                bad.append(str(k))
        return "attained for all k" if not bad else "fails at k=" + ",".join(bad)

    def dominant(r0: int) -> str:
        fam = dominant_profile(r0)
        return f"{asymptotic_harbourne(fam)}, {kn_chern_slope(fam)}"

    return [
        ("wiman-harbourne", 1, "Wiman W45 linear Harbourne constant", "-225/67",
         lambda: str(linear_harbourne(wiman))),
        ("wiman-harbourne-decimal", 1, "Wiman W45, approx -3.36", "-3.35821",
         lambda: decimal_str(linear_harbourne(wiman), 5)),
        ("t6-chern-pair", 2, "T6 Chern numbers / n^3", "c2=(2, -10, 15) c1sq=(5, -20, 20)",
         lambda: f"c2={_triple(chern_pair(t6).c2)} c1sq={_triple(chern_pair(t6).c1sq)}"),
        ("t6-slope-n5", 2, "T6 Chern slope at n=5", "3", lambda: str(slope_at(chern_pair(t6), 5))),
        ("t6-ball-quotient", 2, "Y_5 over T6 is a ball quotient", "[5]",
         lambda: str(ball_quotient_candidates(chern_pair(t6), STRONG))),
        ("klein-chern-pair", 3, "Klein K21 Chern numbers / n^18",
         "c1sq=(212, -392, 140) c2=(80, -196, 168)",
         lambda: f"c1sq={_triple(chern_pair(klein).c1sq)} c2={_triple(chern_pair(klein).c2)}"),
        ("klein-slope-n4", 3, "Klein K21 Chern slope at n=4", "491/166",
         lambda: str(slope_at(chern_pair(klein), 4))),
        ("klein-slope-n4-decimal", 3, "Klein K21 Chern slope at n=4", "2.95783",
         lambda: decimal_str(slope_at(chern_pair(klein), 4), 5)),
        ("klein-gamma", 3, "Klein K21 characteristic number 2.65", "53/20",
         lambda: str(characteristic_number(chern_pair(klein)))),
        ("hirzebruch-t6", 4, "Hirzebruch inequality on T6", "6 vs 6: holds",
         lambda: verdict(hirzebruch_lines(t6))),
        ("hirzebruch-klein", 4, "Hirzebruch inequality on K21", "21 vs 21: holds",
         lambda: verdict(hirzebruch_lines(klein))),
        ("melchior-t6", 4, "Melchior inequality on T6", "3 vs 3: holds", lambda: verdict(melchior(t6))),
        ("melchior-klein", 4, "Melchior inequality on K21 (not real)", "0 vs 24: fails",
         lambda: verdict(melchior(klein))),
        ("families-harbourne", 5, "asymptotic Harbourne constants of B, E, P, F", "-3",
         lambda: all_equal(asymptotic_harbourne(_fam(n)) for n in FOUR_FAMILIES)),
        ("families-k-slope", 5, "k-Chern slope of B, E, P, F", str(COMMON_K_SLOPE),
         lambda: all_equal(k_chern_slope(_fam(n)) for n in FOUR_FAMILIES)),
        ("families-kn-slope", 5, "(k,n)-Chern slope of B, E, P, F", "5/2",
         lambda: all_equal(kn_chern_slope(_fam(n)) for n in FOUR_FAMILIES)),
        ("boroczky8-gap", 6, "gap polynomial of B8 at n=2 (x=1)", "20",
         lambda: str(bmy_gap(chern_pair(instantiate(_fam("boroczky"), 8)))(2))),
        ("polyhedral4-gap", 6, "gap polynomial of P4 at n=4 (x=3)", "7",
         lambda: str(bmy_gap(chern_pair(instantiate(_fam("polyhedral"), 4)))(4))),
        ("never-ball-quotients", 6, "B_k (even 8..40) and P_k (4..40) give no ball quotients", "none",
         never_ball_quotients),
        ("dominant-triple", 7, "t_3 ~ c k^2 profile: Harbourne, (k,n)-slope", "-3, 5/2",
         lambda: dominant(3)),
        ("dominant-quadruple", 7, "t_4 ~ c k^2 profile: Harbourne, (k,n)-slope", "-4, 8/3",
         lambda: dominant(4)),
        ("dominant-quadruple-k-slope", 7, "t_4 ~ c k^2 profile: k-Chern slope",
         "(8/3*n^2 - 4*n + 1)/(n^2 - 2*n + 4/3)", lambda: str(k_chern_slope(dominant_profile(4)))),
        ("dominant-quadruple-n3", 7, "t_4 ~ c k^2 profile: k-Chern slope at n=3", "3",
         lambda: str(k_chern_slope(dominant_profile(4))(3))),
        ("gamma-ap", 8, "AP conics characteristic number 27/15", "9/5",
         lambda: str(characteristic_number(chern_pair(catalog.get("ap-conics"))))),
        ("gamma-hesse-conics", 8, "Hesse conics characteristic number", "13/6",
         lambda: str(characteristic_number(chern_pair(catalog.get("hesse-conics"))))),
        ("general-dconfig-gamma", 8, "general d-configurations, closed form, d in 2..4, k in 4..10",
         "all match", general_dconfig),
        ("general-dconfig-limit", 8, "general d-configurations (d = 1..5), k -> infinity", "2", general_dconfig_limit),
        ("identity-sweep", 9, "combinatorial identity on 500 random rational arrangements", "0 failures",
         identity_sweep),
        ("gamma-bound-sweep", 9, "gamma < 8/3 on 10^4 random d-configuration spectra", "0 violations",
         gamma_sweep),
        ("line-reduction-sweep", 9, "general-degree Chern formulas reduce to the line case",
         "0 mismatches", reduction_sweep),
        ("gamma-closed-form-sweep", 9, "closed form for gamma of line arrangements", "0 mismatches",
         closed_form_sweep),
        ("polygon-generators", 9, "numeric polyhedral (k<=12) and Böröczky (even k<=16) spectra",
         "all match", generators),
        ("sommese-dual-hesse", 10, "dual Hesse attains gamma = 8/3", "8/3",
         lambda: str(characteristic_number(chern_pair(catalog.get("dual-hesse"))))),
        ("sommese-generic", 10, "general lines attain 2(k-3)/(k-2), k in 6..20", "attained for all k",
         generic_lower_bound),
    ]


def claim_ids() -> list[str]:
    return [c[0] for c in _claims(0)]


def reproduce(seed: int = 0, only: set[str] | None = None) -> ReproductionReport:
    claims = []
    for claim_id, criterion, source, expected, compute in _claims(seed):
        if only and claim_id not in only:
            continue
        try:
            computed = compute()
        except Exception as exc:  # reported as a mismatch, never swallowed silently
            computed = f"error: {type(exc).__name__}: {exc}"
        claims.append(Claim(claim_id, criterion, source, expected, computed))
    return ReproductionReport(tuple(claims))
