import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curveconfig import catalog
from curveconfig.config import (
    CurveConfiguration,
    MultiplicitySpectrum,
    f_moment,
    lines,
    linear_harbourne,
    validate,
)
from curveconfig.errors import (
    IdentityFailure,
    InvalidArgument,
    InvalidConfiguration,
    NoSingularPoints,
    UnsupportedDegree,
)


@pytest.mark.parametrize(
    "cfg, i, expected",
    [
        (lines(6, t2=3, t3=4), 0, 7),
        (lines(6, t2=3, t3=4), 1, 18),
        (lines(6, t2=3, t3=4), 2, 48),
        (lines(45, t3=120, t4=45, t5=36), 1, 720),
        (lines(1), 0, 0),
        (lines(1), 2, 0),
    ],
)
def test_f_moment(cfg, i, expected):
    assert f_moment(cfg, i) == expected


@pytest.mark.parametrize("i", [-1, 3, True, 1.0])
def test_f_moment_rejects_bad_index(i):
    with pytest.raises(InvalidArgument):
        f_moment(lines(6, t2=3, t3=4), i)


def test_spectrum_is_sparse_and_canonical():
    s = MultiplicitySpectrum({3: 4, 2: 3, 5: 0})
    assert list(s.items()) == [(2, 3), (3, 4)]
    assert s.get(5) == 0
    assert s == {2: 3, 3: 4}
    assert hash(s) == hash(MultiplicitySpectrum(t2=3, t3=4))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(degree=0, count=3),
        dict(degree=1, count=0),
        dict(degree=1, count=3, spectrum={1: 2}),
        dict(degree=1, count=3, spectrum={2: -1}),
        dict(degree=1, count=3, spectrum={4: 1}),
        dict(degree=3, count=4, spectrum={9: 6}),
    ],
)
def test_structural_invariants(kwargs):
    with pytest.raises(InvalidConfiguration):
        CurveConfiguration(**kwargs)


@pytest.mark.parametrize(
    "cfg, lhs, rhs, passed",
    [
        (catalog.get("wiman"), 1980, 1980, True),
        (catalog.get("hesse-conics"), 528, 528, True),
        (lines(4, t2=5), 12, 10, False),
    ],
)
def test_validate(cfg, lhs, rhs, passed):
    rep = validate(cfg)
    assert (rep.lhs, rep.rhs, rep.passed) == (lhs, rhs, passed)


def test_validate_line_form():
    rep = validate(catalog.get("klein"))
    assert rep.line_form == (420, 420)
    assert validate(catalog.get("hesse-conics")).line_form is None


def test_unvalidated_datum_rejected_downstream():
    bad = lines(4, t2=5)
    assert not bad.is_valid
    with pytest.raises(IdentityFailure):
        linear_harbourne(bad)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("wiman", Fraction(-225, 67)),
        ("triangle", Fraction(-1)),
        ("dual-hesse", Fraction(-9, 4)),
    ],
)
def test_linear_harbourne(name, expected):
    assert linear_harbourne(catalog.get(name)) == expected


def test_linear_harbourne_errors():
    with pytest.raises(UnsupportedDegree):
        linear_harbourne(catalog.get("hesse-conics"))
    with pytest.raises(NoSingularPoints):
        linear_harbourne(lines(1))


@st.composite
def line_arrangement_spectra(draw):
    k = draw(st.integers(3, 40))
    remaining = k * (k - 1) // 2  # pairs of lines, each point of multiplicity r absorbs C(r, 2)
    counts = {}
    for r in draw(st.lists(st.integers(3, k), unique=True, max_size=4)):
        t = draw(st.integers(0, remaining // (r * (r - 1) // 2)))
        counts[r] = t
        remaining -= t * r * (r - 1) // 2
    counts[2] = remaining
    return lines(k, **{f"t{r}": t for r, t in counts.items()})


@given(line_arrangement_spectra())
def test_two_harbourne_forms_agree(cfg):
    assert cfg.is_valid
    f0, f1, f2 = (f_moment(cfg, i) for i in range(3))
    if f0:
        assert Fraction(cfg.count**2 - f2, f0) == Fraction(cfg.count - f1, f0)
        assert linear_harbourne(cfg) == Fraction(cfg.count - f1, f0)


@given(line_arrangement_spectra())
def test_moments_monotone(cfg):
    if len(cfg.spectrum):
        assert f_moment(cfg, 0) <= f_moment(cfg, 1) <= f_moment(cfg, 2)


def test_json_round_trip(fixtures_dir):
    cfg = CurveConfiguration.loads((fixtures_dir / "hesse_conics.json").read_text())
    assert cfg == catalog.get("hesse-conics")
    again = CurveConfiguration.from_json(json.loads(json.dumps(cfg.to_json())))
    assert again == cfg and again.label == "Hesse conics"


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        '{"degree": 1, "count": 3}',
        '{"degree": 1, "count": 3, "spectrum": {"two": 3}}',
        '{"degree": 1, "count": 3, "spectrum": []}',
        '{"degree": "x", "count": 3, "spectrum": {}}',
    ],
)
def test_malformed_json(text):
    with pytest.raises(InvalidConfiguration):
        CurveConfiguration.loads(text)


REAL_FIXTURES = [("boroczky", k) for k in range(6, 31, 2)] + [("polyhedral", k) for k in range(3, 20)]


@pytest.mark.parametrize("name, k", REAL_FIXTURES)
def test_harbourne_lower_bounds(name, k):
    from curveconfig.families import builtin_family, instantiate

    h = linear_harbourne(instantiate(builtin_family(name), k))
    assert h >= -3


@pytest.mark.parametrize("name", ["t6", "klein", "wiman", "dual-hesse", "triangle"])
def test_harbourne_above_minus_four_on_line_fixtures(name):
    assert linear_harbourne(catalog.get(name)) >= -4
