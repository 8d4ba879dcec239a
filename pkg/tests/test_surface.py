from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vwseries.cyclotomic import as_scalar
from vwseries.modular import delta_series, t_ratio
from vwseries.puiseux import PuiseuxSeries as P
from vwseries.surface import (SurfaceError, SurfaceSpec, blow_up, evir_predictions, galois_invariance_check,
                              integrality_check, k3_like, minimal_general_type, phi_series,
                              prefactor_identity_check, psi_series, refined_reduction_check, root_of_unity_average,
                              surface_blowup_check, surface_validate, z_full, z_horizontal, z_vertical, evir_exponent)

F = Fraction


def _series(x):
    return x.series if hasattr(x, "series") else x


# ---- specs ---------------------------------------------------------------------------

def test_presets_validate():
    S = minimal_general_type(3, 9)
    rep = surface_validate(S)
    assert rep["valid"] and len(S.basic_classes) == 2
    K3 = k3_like()
    assert surface_validate(K3)["valid"]
    assert K3.basic_classes == (((0, 0), 1),)


def test_duality_violation():
    S = SurfaceSpec(chi=3, gram=((1, 0), (0, -1)), K=(1, 1), basic_classes=(((0, 0), 1),))
    with pytest.raises(SurfaceError):
        surface_validate(S)
    assert not surface_validate(S, strict=False)["valid"]


def test_json_roundtrip():
    S = minimal_general_type(2, 3, 1)
    assert SurfaceSpec.from_json(S.to_json()) == S


def test_blow_up_lattice():
    S = minimal_general_type(2, 1)
    B = blow_up(S, 1)
    assert B.K2 == S.K2 - 1
    assert len(B.basic_classes) == 2 * len(S.basic_classes)
    assert surface_validate(B, strict=False)["valid"]


# ---- Phi and Psi ------------------------------------------------------------------------

def test_phi_rank2():
    S = minimal_general_type(3, 2)
    assert _series(phi_series(2, S, (0, 0), 6)).first_difference(P.one(), 6) is None
    want = t_ratio(1, 1, order=6) ** S.K2 * (-1) ** S.chi
    assert _series(phi_series(2, S, S.K, 6)).first_difference(want, 5) is None


def test_phi_rank3_vanishes_off_basic():
    S = minimal_general_type(3, 2)
    assert _series(phi_series(3, S, (0, 1), 5)).is_zero()


def test_psi_rank2():
    for kc1 in (0, 1):
        S = minimal_general_type(3, 2, kc1)
        psi = psi_series(2, S, None, 6, with_prefactors=False).series
        want = 1 + (-1) ** (S.chi + kc1) * t_ratio(1, 1, dual=True, order=6) ** S.K2
        assert psi.first_difference(want, 5) is None


@pytest.mark.parametrize("r", [2, 3])
def test_prefactor_identity(r):
    assert prefactor_identity_check(r, minimal_general_type(2, 1), 6)["passed"]


def test_vertical_k3_like():
    z = z_vertical(2, k3_like(), None, 6).series
    want = delta_series(2, 10).invert(6) * F(1, 4)
    assert z.first_difference(want, 6) is None


def test_vertical_depends_only_on_chi_when_k2_zero():
    a = z_vertical(3, k3_like(), None, 5).series
    b = z_vertical(3, SurfaceSpec(chi=2, gram=((0, 1), (1, 0)), K=(0, 0), basic_classes=(((0, 0), 1),),
                                  c1=(0, 0)), None, 5).series
    assert a.first_difference(b, 5) is None


@given(st.sampled_from([2, 3, 5]), st.integers(-12, 12), st.integers(0, 30))
def test_root_of_unity_filter_on_monomials(r, n, phase0):
    out = root_of_unity_average(r, P.monomial(1, F(n, 2 * r)), phase0)
    if (n + phase0) % r == 0:
        assert out.agrees_with(P.monomial(1, F(n, 2 * r)))
    else:
        assert out.is_zero()


def test_horizontal_k3_support():
    # phase0 = (r-1)c1^2 + (r^2-1)chi is even for both classes, so only q^(n/4) with n even survive
    for c1 in ((0, 0), (1, 1)):
        z = z_horizontal(2, k3_like(c1), None, 6).series
        assert z.terms() and all((2 * e).denominator == 1 for e in z.terms())


def test_full_rank_restrictions():
    S = minimal_general_type(2, 1)
    assert z_full(2, S, None, 4).series.order is not None
    assert z_full(3, S, None, 4).series.order is not None
    with pytest.raises(ValueError):
        z_full(4, S, None, 4)


# ---- evir, rationality, integrality ------------------------------------------------------

@pytest.mark.parametrize("r", [2, 3])
def test_k3_predictions(r):
    d = delta_series(F(1, r), 8).invert(6)
    for c1 in ((0, 0), (1, 1), (1, 2)):
        S = k3_like(c1)
        for c2, v, flags in evir_predictions(r, S, None, range(0, 5)):
            assert not flags
            assert as_scalar(v) == d.coefficient_at(evir_exponent(r, S, c1, c2))


def test_k3_sequence():
    vals = [v for _, v, _ in evir_predictions(2, k3_like((1, 1)), None, range(2, 6))]
    assert vals == [1, 324, 25650, 1073720]


def test_mgt_rank3_predictions_rational():
    S = minimal_general_type(2, 1, 0)
    for _, v, flags in evir_predictions(3, S, None, range(0, 6)):
        assert "irrational" not in flags
    assert integrality_check(3, S, None, 5)["passed"]


@pytest.mark.parametrize("r", [3, 4, 5])
def test_galois_checks(r):
    reps = galois_invariance_check(r, minimal_general_type(3, 2, 1), None, 4)
    assert all(rep["passed"] for rep in reps), reps


@pytest.mark.parametrize("r,ell", [(2, 0), (2, 1), (3, 0), (3, 1)])
def test_surface_blowup(r, ell):
    assert surface_blowup_check(r, minimal_general_type(2, 1, 1), ell, 6)["passed"]


@pytest.mark.parametrize("r", [2, 3])
def test_refined_reduction(r):
    assert refined_reduction_check(r, minimal_general_type(2, 1), None, 4)["passed"]


@given(st.sampled_from([2, 3]), st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 2))
def test_phi_periodic_in_c1(r, a, b, kc1):
    S = minimal_general_type(2, 1, kc1)
    c1 = S.c1
    shifted = (c1[0] + r * a, c1[1] + r * b)
    x = _series(phi_series(r, S, c1, 4))
    y = _series(phi_series(r, S, shifted, 4))
    assert x.first_difference(y, 4) is None


@given(st.sampled_from([3, 4, 5]), st.integers(2, 4), st.integers(0, 3), st.integers(-2, 2))
def test_integrality(r, chi, extra, kc1):
    S = minimal_general_type(chi, chi - 3 + extra if chi - 3 + extra > 0 else 1, kc1)
    assert integrality_check(r, S, None, 3)["passed"]
