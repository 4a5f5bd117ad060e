import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curveconfig.errors import (
    DegenerateIntersection,
    DuplicateLines,
    InvalidArgument,
    InvalidConfiguration,
    PrecisionExhausted,
)
from curveconfig.families import builtin_family, instantiate
from curveconfig.incidence import (
    LineArrangement,
    ProjLine,
    ProjPoint,
    generate_generic,
    generate_regular_polygon_family,
    intersect,
    parse_arrangement,
    spectrum_of,
)
from curveconfig.sampling import random_arrangement


def det3(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def concurrent_triples(arr):
    """Brute-force oracle: triples of lines through one point have zero determinant."""
    return sum(
        det3(a.coords, b.coords, c.coords) == 0
        for a, b, c in itertools.combinations(arr.lines, 3)
    )


def test_normalization_is_projective_equality():
    assert ProjPoint(2, -4, 6) == ProjPoint(-1, 2, -3)
    assert ProjPoint(0, -3, 0).coords == (0, 1, 0)
    assert ProjLine(1, 2, 3) == ProjLine(-2, -4, -6)
    from fractions import Fraction

    assert ProjLine(Fraction(1, 2), Fraction(1, 3), 1).coords == (3, 2, 6)
    with pytest.raises(InvalidArgument):
        ProjPoint(0, 0, 0)


@pytest.mark.parametrize(
    "l1, l2, expected",
    [
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, -1, 0), (1, 1, -2), (1, 1, 1)),
    ],
)
def test_intersect(l1, l2, expected):
    p = intersect(ProjLine(*l1), ProjLine(*l2))
    assert p == ProjPoint(*expected)
    assert ProjLine(*l1).contains(p) and ProjLine(*l2).contains(p)


def test_intersect_degenerate():
    line = ProjLine(1, 2, 3)
    with pytest.raises(DegenerateIntersection):
        intersect(line, ProjLine(2, 4, 6))


triples = st.tuples(*[st.integers(-20, 20)] * 3).filter(any)


@given(triples, triples)
def test_intersect_symmetric(a, b):
    l1, l2 = ProjLine(*a), ProjLine(*b)
    if l1 != l2:
        p = intersect(l1, l2)
        assert p == intersect(l2, l1)
        assert l1.contains(p) and l2.contains(p)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("triangle.txt", {2: 3}),
        ("pencil5.txt", {5: 1}),
        ("four_generic.txt", {2: 6}),
        ("six_generic.txt", {2: 15}),
    ],
)
def test_spectrum_of_fixture_files(fixtures_dir, name, expected):
    arr = parse_arrangement((fixtures_dir / name).read_text())
    cfg = spectrum_of(arr)
    assert cfg.spectrum == expected
    assert cfg.is_valid
    assert concurrent_triples(arr) == sum(comb(r, 3) * t for r, t in expected.items())


def test_four_generic_identity(fixtures_dir):
    cfg = spectrum_of(parse_arrangement((fixtures_dir / "four_generic.txt").read_text()))
    rep = cfg.report
    assert (rep.lhs, rep.rhs) == (12, 12)


def test_parse_rejects_duplicates_and_garbage(fixtures_dir):
    with pytest.raises(DuplicateLines):
        parse_arrangement((fixtures_dir / "duplicate.txt").read_text())
    with pytest.raises(InvalidConfiguration):
        parse_arrangement("1 2\n")
    with pytest.raises(InvalidConfiguration):
        parse_arrangement("1 2 x\n")
    with pytest.raises(InvalidConfiguration):
        parse_arrangement("0 0 0\n")


def test_spectrum_needs_two_lines():
    with pytest.raises(InvalidArgument):
        spectrum_of(LineArrangement.from_triples([(1, 0, 0)]))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_spectrum_of_random_arrangements(seed):
    arr = random_arrangement(random.Random(seed))
    cfg = spectrum_of(arr)
    assert cfg.is_valid
    assert concurrent_triples(arr) == sum(comb(r, 3) * t for r, t in cfg.spectrum.items())
    shuffled = list(arr.lines)
    random.Random(seed + 1).shuffle(shuffled)
    assert spectrum_of(LineArrangement(tuple(shuffled))).spectrum == cfg.spectrum


@pytest.mark.parametrize("k", [3, 4, 6, 9])
def test_generate_generic(k):
    arr = generate_generic(k, seed=1)
    assert spectrum_of(arr).spectrum == {2: comb(k, 2)}
    assert concurrent_triples(arr) == 0
    assert generate_generic(k, seed=1) == arr


def test_generate_generic_precondition():
    with pytest.raises(InvalidArgument):
        generate_generic(1, seed=0)


@pytest.mark.parametrize(
    "kind, k, expected_lines, expected",
    [
        ("polyhedral", 3, 6, {2: 3, 3: 4}),
        ("polyhedral", 4, 8, {2: 4, 3: 6, 4: 1}),
        ("boroczky", 12, 12, {2: 9, 3: 19}),
    ],
)
def test_polygon_generators(kind, k, expected_lines, expected):
    presumed = generate_regular_polygon_family(kind, k)
    assert presumed.presumed
    assert presumed.config.count == expected_lines
    assert presumed.config.spectrum == expected


@pytest.mark.parametrize("k", range(3, 13))
def test_polyhedral_generator_matches_formula(k):
    assert generate_regular_polygon_family("polyhedral", k).reconcile(
        instantiate(builtin_family("polyhedral"), k)
    )


@pytest.mark.parametrize("k", range(6, 17, 2))
def test_boroczky_generator_matches_formula(k):
    assert generate_regular_polygon_family("boroczky", k).reconcile(
        instantiate(builtin_family("boroczky"), k)
    )


def test_generator_refines_precision():
    presumed = generate_regular_polygon_family("boroczky", 12, precision=4, max_refinements=4)
    assert presumed.precision > 4
    assert presumed.config.spectrum == {2: 9, 3: 19}


def test_generator_precision_exhausted():
    with pytest.raises(PrecisionExhausted):
        generate_regular_polygon_family("boroczky", 12, precision=4, max_refinements=0)


@pytest.mark.parametrize("kind, k", [("polyhedral", 2), ("boroczky", 7), ("boroczky", 4), ("fermat", 3)])
def test_generator_preconditions(kind, k):
    with pytest.raises(InvalidArgument):
        generate_regular_polygon_family(kind, k)
