from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vwseries.cyclotomic import as_scalar, sqrt2
from vwseries.lattice import a_gram, a_gram_inverse, enumerate_short_vectors, is_positive_definite
from vwseries.modular import (J_series, cf_convergent, continued_fraction, cubic_cf, euler_product_direct,
                              euler_product_pentagonal, eta_series, hauptmodul, rogers_ramanujan_cf, t_ratio,
                              theta_identity_check, theta_series, u_series, weak_jacobi_phi)
from vwseries.puiseux import PuiseuxSeries as P
from vwseries.ratfunc import YFunc

F = Fraction


def coeffs(s, start, n, step=1):
    return [s.coefficient_at(start + F(k, step)).to_rational() for k in range(n)]


def product_series(factors, lead, order):
    """q^lead prod_n prod_{(a, e) in factors} (1 - q^(m n + a))^e for residues a mod m."""
    m, table = factors
    s = P.one().truncate(order)
    for n in range(0, int(order) + 1):
        for a, e in table:
            k = m * n + a
            if 0 < k <= order:
                s = (s * (1 - P.monomial(1, k, order)) ** e).truncate(order)
    return s.shift_by(lead).truncate(order + lead)


# ---- eta and lattices -------------------------------------------------------------

def test_eta_examples():
    e = eta_series(1, 10)
    assert e.coefficient_at(1 + F(1, 24)) == as_scalar(-1)
    d = (e ** 24).shift_by(-1)
    assert d.coefficient_at(1) == as_scalar(-24)
    assert eta_series(2, 4).valuation == F(1, 12)


def test_eta_two_algorithms_agree():
    assert euler_product_pentagonal(50) == euler_product_direct(50)


def test_gram_shape():
    for m in range(1, 6):
        g = a_gram(m)
        for i in range(m):
            for j in range(m):
                assert g[i][j] == (2 if i == j else -1 if abs(i - j) == 1 else 0)
        assert is_positive_definite(g)
        inv = a_gram_inverse(m)
        for i in range(m):
            row = [sum(g[i][k] * inv[k][j] for k in range(m)) for j in range(m)]
            assert row == [1 if j == i else 0 for j in range(m)]


def test_theta_a1():
    t0 = theta_series(1, 0, order=17)
    assert coeffs(t0, 0, 17) == [1 if n == 0 else 2 if int(n ** 0.5) ** 2 == n else 0 for n in range(17)]
    t1 = theta_series(1, 1, order=10)
    assert t1.valuation == F(1, 4)
    want = {F(1, 4) + k * (k + 1): 2 for k in range(3)}
    assert t1.first_difference(P.from_terms(want), 7) is None


def test_theta_a2_against_divisor_formula():
    # r_{A2}(n) = 6 sum_{d | n} chi_{-3}(d)
    def chi3(d):
        return 0 if d % 3 == 0 else 1 if d % 3 == 1 else -1
    want = [1] + [6 * sum(chi3(d) for d in range(1, n + 1) if n % d == 0) for n in range(1, 20)]
    assert coeffs(theta_series(2, 0, order=20), 0, 20) == want
    assert want[:8] == [1, 6, 0, 6, 6, 0, 0, 12]


def test_enumeration_counts_match_theta():
    vecs = list(enumerate_short_vectors(a_gram(3), 6))  # bound is on <v, v>
    total = sum(c.to_rational() for e, c in theta_series(3, 0, order=4).terms().items() if e <= 3)
    assert len(vecs) == total


def test_t_ratio_leading_terms():
    t1 = t_ratio(1, 1, order=4)
    assert (t1.valuation, t1.leading_coefficient()) == (F(-1, 4), as_scalar(F(1, 2)))
    t2 = t_ratio(2, 1, order=4)
    assert (t2.valuation, t2.leading_coefficient()) == (F(-1, 3), as_scalar(F(1, 3)))
    for m in range(1, 5):
        assert t_ratio(m, 0, order=5).first_difference(P.one(), 5) is None


@given(st.integers(1, 4), st.integers(-6, 6))
def test_theta_shift_symmetry(m, ell):
    a = theta_series(m, ell, order=6)
    assert a.first_difference(theta_series(m, -ell, order=6), 6) is None
    assert a.first_difference(theta_series(m, ell + m + 1, order=6), 6) is None
    for e, c in a.terms().items():
        x = c.to_rational()
        assert x.denominator == 1 and x > 0


@given(st.integers(1, 4), st.integers(0, 4))
def test_refined_theta_at_one(m, ell):
    r = theta_series(m, ell, refined=True, order=5)
    assert r.at_y_one().first_difference(theta_series(m, ell, order=5), 5) is None


# ---- continued fractions and Hauptmoduln ---------------------------------------------

def test_continued_fraction_leading_terms():
    u = u_series(4)
    assert (u.valuation, u.leading_coefficient()) == (F(1, 8), sqrt2())
    c = cubic_cf(4)
    assert (c.valuation, c.leading_coefficient()) == (F(1, 3), as_scalar(1))
    r = rogers_ramanujan_cf(6)
    assert coeffs(r, F(1, 5), 5) == [1, -1, 1, 0, -1]


def test_rogers_ramanujan_against_product():
    order = 20
    prod = product_series((5, [(1, 1), (4, 1), (2, -1), (3, -1)]), F(1, 5), order)
    assert rogers_ramanujan_cf(order).first_difference(prod, order) is None


def test_cubic_against_product():
    order = 20
    prod = product_series((6, [(1, 1), (5, 1), (3, -2)]), F(1, 3), order)
    assert cubic_cf(order).first_difference(prod, order) is None


def test_convergents_stabilize():
    for name, f in (("c", cubic_cf), ("r", rogers_ramanujan_cf)):
        s, d = f(12, with_depth=True)
        assert cf_convergent(name, d, 12).first_difference(s, 12) is None
        assert cf_convergent(name, d + 2, 12).first_difference(s, 12) is None


def test_hauptmodul_identities():
    o = 15
    u, c, r = u_series(o + 2), cubic_cf(o + 4), rogers_ramanujan_cf(o + 6)
    assert (u ** -2).first_difference(t_ratio(1, 1, order=o), o) is None
    assert (c ** -1 + 4 * c ** 2).first_difference(3 * t_ratio(2, 1, order=o), o) is None
    assert (c ** -3 - 15 + 48 * c ** 3 + 64 * c ** 6).first_difference(hauptmodul(3, o), o) is None
    assert (16 * u ** -8 - 16).first_difference(hauptmodul(4, o), o) is None
    assert (r ** -5 - 11 - r ** 5).first_difference(hauptmodul(5, o), o) is None


def test_j4_identity_to_twenty():
    assert hauptmodul(4, 3).valuation == -1
    assert (16 * u_series(22) ** -8 - 16).first_difference(hauptmodul(4, 20), 20) is None


def test_unknown_names():
    with pytest.raises(ValueError):
        continued_fraction("x")
    with pytest.raises(ValueError):
        hauptmodul(11)


# ---- Jacobi forms -----------------------------------------------------------------

def test_weak_jacobi_phi():
    phi = weak_jacobi_phi(order=6)
    assert phi.at_y_one().is_zero()
    assert phi.first_difference(phi.invert_y(), 6) is None
    # YFunc exponents count Y = y^(1/2)
    assert phi.coefficient_at(0) == YFunc.laurent({2: 1, 0: -2, -2: 1})


def test_J_at_one():
    J = J_series(20)
    assert J.valuation == 1
    assert J.at_y_one().first_difference(u_series(10).rescale_and_phase(2) ** 4, 20) is None
    assert J.first_difference(J.invert_y(), 20) is None


# ---- discrete identities ------------------------------------------------------------

def test_keysum_rank_one_to_twenty():
    assert theta_identity_check("keysum", 1, 20)["passed"]
    assert theta_identity_check("thlk", 1, 20, 0, 0)["passed"]
    assert theta_identity_check("thlk", 2, 10, 1, 1)["passed"]


@given(st.integers(1, 4), st.integers(0, 2), st.integers(0, 4))
def test_thlk_property(m, k, ell):
    assert theta_identity_check("thlk", m, 6, k, ell % (m + 1))["passed"]
