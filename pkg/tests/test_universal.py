from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vwseries.cyclotomic import as_scalar, sqrt2, sqrt5
from vwseries.fixtures import (FixtureFormatError, available_ranks, fixture, fixture_names, format_fixture,
                               parse_fixture_text)
from vwseries.modular import t_ratio
from vwseries.puiseux import PuiseuxSeries as P
from vwseries.relations import (check_involution, check_nesting, check_reconstruction, check_subset_sum,
                                check_symmetry, check_vieta, compare_fixtures)
from vwseries.universal import (all_subsets, build_horizontal, build_vertical, leading_constants,
                                normalize_universal, pair_keys, pair_leading, subsets_from_pairs)

F = Fraction


def test_leading_table():
    assert pair_leading(2, 1, 1) == (F(1, 2), F(-1, 4))
    assert pair_leading(3, 1, 2) == (F(4, 3), F(-1, 3))
    for r in range(2, 6):
        for i in range(1, r):
            assert pair_leading(r, i, i) == (F(1, comb(r, i)), F(i * (i - r), 2 * r))


def test_rank2_closed_form():
    u = build_vertical(2, 8)
    assert u.subset(()).first_difference(P.one(), 8) is None
    assert u.subset((1,)).first_difference(t_ratio(1, 1, order=8), 8) is None


def test_rank3_closed_form():
    u = build_vertical(3, 8)
    t = t_ratio(2, 1, order=8)
    assert u.subset((1,)).first_difference(t, 8) is None
    assert u.subset((2,)).first_difference(t, 8) is None
    assert u.pair(1, 2).first_difference(4 * t, 7) is None


def test_horizontal_rank2():
    u = build_horizontal(2, 6)
    assert u.subset((1,)).first_difference(t_ratio(1, 1, dual=True, order=6), 6) is None


def test_donaldson_constants_spot():
    c4 = leading_constants(build_horizontal(4, 2))
    assert c4["D0"] == 4 + 2 * sqrt2()
    c5 = leading_constants(build_horizontal(5, 2))
    assert c5["D14"] == 6 - 2 * sqrt5()


def test_normalized_rank2():
    n = normalize_universal(build_vertical(2, 14))
    want = [1, 2, -1, -2, 3]
    assert [n["C11"].coefficient_at(k) for k in range(5)] == [as_scalar(x) for x in want]
    assert n["C0"].first_difference(P.one(), 14) is None


def test_rank4_c13_coefficient():
    n = normalize_universal(build_vertical(4, 4))
    assert n["C13"].coefficient_at(1) == as_scalar(F(2, 9))


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_normalized_vertical_is_rational(r):
    n = normalize_universal(build_vertical(r, 6))
    for s in n.values():
        assert s.is_rational()
        assert s.coefficient_at(0) == as_scalar(1)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_subset_reconstruction(r):
    u = build_vertical(r, 6)
    assert set(u.by_subset) == set(all_subsets(r))
    rebuilt = subsets_from_pairs(r, u.by_pair)
    for k, v in u.by_subset.items():
        assert rebuilt[k].first_difference(v, 4) is None
    assert check_reconstruction(r, 6)["passed"]


def test_branch_log_recorded():
    for r in (3, 4, 5):
        assert build_vertical(r, 4).branch_log


def test_symmetry_rank4_to_twelve():
    assert check_symmetry(4, 12)["passed"]


def test_subset_sum_rank2_to_fifteen():
    assert check_subset_sum(2, 0, 15)["passed"]


def test_nesting_three_two():
    reps = check_nesting(3, 2, 10)
    assert reps and all(r["passed"] for r in reps)


@pytest.mark.parametrize("r", [3, 5])
def test_vieta_and_involution(r):
    assert check_vieta(r, 6)["passed"]
    assert check_involution(r, 6)["passed"]


@pytest.mark.parametrize("r", [2, 3])
def test_fixtures_match(r):
    assert all(rep["passed"] for rep in compare_fixtures(r, 8))


def test_refined_rank5_rejected():
    with pytest.raises(Exception):
        build_vertical(5, 4, refined=True)


# ---- fixtures -------------------------------------------------------------------

def test_fixture_ranks_and_normalization():
    assert set(available_ranks()) == {2, 3, 4, 5, 6}
    for r in available_ranks():
        for name in fixture_names(r):
            fx = fixture(r, name)
            cs = fx.coefficients()
            assert cs[0] == 1
            assert all(isinstance(c, Fraction) for c in cs)


def test_fixture_text_roundtrip():
    s = fixture(3, "C12").series()
    text = format_fixture(3, "C12", s)
    parsed = parse_fixture_text(text)
    (table,) = parsed.values() if isinstance(parsed, dict) else parsed
    assert table.series().first_difference(s, s.order) is None


def test_fixture_parse_error():
    with pytest.raises(FixtureFormatError):
        parse_fixture_text("this is not a table\n1/0 x")


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=30), min_size=1, max_size=12))
def test_fixture_format_roundtrip_property(cs):
    s = P.from_list([F(1)] + cs, order=len(cs) + 1)
    parsed = parse_fixture_text(format_fixture(4, "C13", s))
    (table,) = parsed.values()
    assert table.series().first_difference(s, s.order) is None
