from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vwseries.cyclotomic import CyclotomicScalar, as_scalar
from vwseries.fixtures import fixture
from vwseries.modular import euler_product_direct, eta_series
from vwseries.puiseux import PuiseuxSeries, solve_quadratic
from vwseries.roots import field_sqrt
from vwseries.modular import t_ratio

P = PuiseuxSeries
q = P.monomial(1, 1)
F = Fraction

# Ramanujan tau(1..11), frozen from the literature tables
TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612]


def series(coeffs, shift=0, step=1, order=None):
    return P.from_list([F(c) for c in coeffs], shift, step, order)


def test_product_and_inverse():
    assert ((1 + q) * (1 - q)).agrees_with(1 - q * q)
    inv = (1 - q).invert(3)
    assert inv.agrees_with(series([1, 1, 1]), 3)
    assert inv.order == 3


def test_negative_power():
    x = series([1, 1], F(1, 4), order=10)
    y = x ** -2
    assert y.valuation == F(-1, 2)
    assert [y.coefficient_at(F(-1, 2) + k) for k in range(4)] == [as_scalar(c) for c in (1, -2, 3, -4)]


def test_sqrt_examples():
    s = series([1, -2, 1], order=10).sqrt(1)
    assert s.agrees_with(1 - q, 10)
    r = series([1, 1], F(1, 2), order=6).sqrt(1)
    assert r.valuation == F(1, 4)
    want = [F(1), F(1, 2), F(-1, 8), F(1, 16)]
    assert [r.coefficient_at(F(1, 4) + k) for k in range(4)] == [as_scalar(c) for c in want]


def test_sqrt_of_discriminant_is_eta_power():
    delta = P.from_list([F(t) for t in TAU], 1, order=12)
    root = delta.sqrt(1)
    direct = P.from_list(euler_product_direct(11), F(1, 24), order=F(11) + F(1, 24)) ** 12
    assert root.first_difference(direct, F(10)) is None
    assert root.first_difference(eta_series(1, 11) ** 12, F(10)) is None


def test_sqrt_errors():
    with pytest.raises(ValueError):
        series([1, 1], 1, order=5).sqrt(1, grid=1)
    with pytest.raises(ValueError):
        series([4, 1], order=5).sqrt(3)


def test_factorable_quadratic():
    xp, xm = solve_quadratic(1, -(2 + q), 1 + q, 1, order=8)
    roots = sorted([xp, xm], key=lambda s: s.coefficient_at(1).to_rational())
    assert roots[0].agrees_with(P.one(), 7)
    assert roots[1].agrees_with(1 + q, 7)


def test_rank3_quadratic_branches():
    t = t_ratio(2, 1, order=6)
    assert t.valuation == F(-1, 3)
    assert t.leading_coefficient() == as_scalar(F(1, 3))
    b = -4 * t * t
    c = 4 * t
    lead = b.leading_coefficient()
    xp, xm = solve_quadratic(1, b, c, -lead, order=4)
    assert (xp * xm).first_difference(c, 2) is None
    assert (xp + xm).first_difference(-b, 2) is None
    assert (xp.valuation, xp.leading_coefficient()) == (F(-2, 3), as_scalar(F(4, 9)))
    assert (xm.valuation, xm.leading_coefficient()) == (F(1, 3), as_scalar(3))


def test_rescale_and_phase_examples():
    s = P.from_terms({F(1, 2): 1, 1: 1})
    assert s.rescale_and_phase(1, 1).agrees_with(P.from_terms({F(1, 2): -1, 1: 1}))
    assert eta_series(1, 10).rescale_and_phase(2, 0).first_difference(eta_series(2, 20), 20) is None
    x = P.monomial(1, F(1, 4))
    for k in range(4):
        assert x.rescale_and_phase(1, 2 * k).leading_coefficient() == as_scalar((-1) ** k)


def test_coefficient_at():
    assert fixture(2, "A").series().coefficient_at(2) == as_scalar(12)
    assert series([1, 1], order=10).coefficient_at(5) == as_scalar(0)
    assert fixture(5, "C23").series().coefficient_at(1) == as_scalar(F(9, 4))
    with pytest.raises(Exception):
        series([1, 1], order=3).coefficient_at(4)


def test_invert_zero_raises():
    with pytest.raises(Exception):
        P.zero(5).invert()


def test_log_exp_roundtrip():
    s = series([1, 3, -2, 5], order=8)
    assert s.log().exp().first_difference(s, 8) is None


# ---- properties ------------------------------------------------------------------

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def unit_series(draw, step=None):
    step = step or draw(st.sampled_from([1, 2, 3]))
    cs = draw(st.lists(coeff, min_size=1, max_size=6))
    lead = draw(st.sampled_from([1, -1, 2, F(1, 2)]))
    shift = F(draw(st.integers(-3, 3)), step)
    return P.from_list([lead] + cs, shift, step, order=shift + 4)


@st.composite
def scalar_or_zeta(draw):
    k = draw(st.integers(0, 11))
    return CyclotomicScalar.zeta(12, k) * draw(st.sampled_from([1, 2, F(1, 3)]))


@given(unit_series(), unit_series(), unit_series())
def test_ring_axioms(a, b, c):
    o = min(x.order for x in (a * b * c, a * (b + c)))
    assert ((a * b) * c).first_difference(a * (b * c), o) is None
    assert (a * (b + c)).first_difference(a * b + a * c, o) is None
    assert (a * b).first_difference(b * a, o) is None


@given(unit_series())
def test_double_inverse(a):
    back = a.invert().invert()
    assert back.first_difference(a, back.order) is None


@given(unit_series(step=2))
def test_sqrt_squares_back(a):
    a = (a * a).truncate(a.order)
    lead = a.leading_coefficient()
    root = field_sqrt(lead)
    s = a.sqrt(root)
    assert (s * s).first_difference(a, s.order + s.valuation) is None
    assert a.sqrt(-root).first_difference(-s, s.order) is None


@given(unit_series(), scalar_or_zeta(), st.sampled_from([5, 7, 11]))
def test_galois_commutes_with_arithmetic(a, z, k):
    b = a.scale(z)
    o = (a * b).order
    lhs = (a * b + b).galois_apply(k)
    rhs = a.galois_apply(k) * b.galois_apply(k) + b.galois_apply(k)
    assert lhs.first_difference(rhs, o) is None


@given(unit_series(), scalar_or_zeta())
def test_json_roundtrip(a, z):
    b = a.scale(z)
    back = P.from_json(b.to_json())
    assert back.order == b.order
    assert back.first_difference(b, b.order) is None
