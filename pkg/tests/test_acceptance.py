"""The fourteen acceptance criteria, one test each.

Every test records a PASS/FAIL line in RESULTS; conftest prints them in the
terminal summary, and running this file directly prints them as well.
Criterion 3 contains the rank-7 relation set, for which no data exists: its
line reads FAIL and the test is a strict xfail, while the attainable parts
of the criterion are asserted separately.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vwseries.cyclotomic import as_scalar, sqrt2, sqrt5
from vwseries.donaldson import flux_sum, rank5_identity_check
from vwseries.fixtures import fixture
from vwseries.localization import compare_with_fixtures, extract_universal
from vwseries.localization.oracle import default_configurations
from vwseries.modular import (J_series, cubic_cf, delta_series, hauptmodul, rogers_ramanujan_cf, t_ratio,
                              theta_identity_check, u_series)
from vwseries.relations import (check_abar, check_blowup, check_nesting, check_rank5_extra, check_rank6_set,
                                check_rank7_set, check_subset_sum, check_symmetry, check_y_one, check_y_symmetry,
                                compare_fixtures)
from vwseries.surface import (evir_exponent, evir_predictions, galois_invariance_check, integrality_check,
                              k3_like, minimal_general_type, surface_blowup_check)
from vwseries.universal import build_horizontal, leading_constants

F = Fraction
RESULTS = {}


def record(n, title, reports):
    failed = [r for r in reports if not r.get("passed")]
    status = "PASS" if not failed else "FAIL"
    detail = f"{len(reports) - len(failed)}/{len(reports)} checks"
    if failed:
        first = failed[0]
        detail += f"; first failure: {first.get('relation') or first.get('check') or first.get('name')}"
        if first.get("first_difference") is not None:
            detail += f" at {first['first_difference']}"
    RESULTS[n] = f"criterion {n:2d} {status}  {title} ({detail})"
    return failed


def ok(name, passed, diff=None, **extra):
    return dict(name=name, passed=bool(passed), first_difference=None if diff is None else str(diff), **extra)


# 1 ------------------------------------------------------------------------------------------

def test_01_fixture_reproduction():
    start = time.time()
    reps = []
    need = {2: 14, 3: 10, 4: 12, 5: 12}
    for r, top in need.items():
        for rep in compare_fixtures(r):
            reps.append(dict(rep, passed=rep["passed"] and F(rep["order"]) > top))
    elapsed = time.time() - start
    reps.append(ok("runtime under two minutes", elapsed < 120))
    assert not record(1, "closed-form C-bar series equal the printed tables", reps)


# 2 ------------------------------------------------------------------------------------------

def test_02_abar_identity():
    reps = [check_abar(r) for r in (2, 3, 4, 5)]
    assert not record(2, "A-bar equals the normalized (-1)^(r-1)/(r Delta(q^r)^(1/2))", reps)


# 3 ------------------------------------------------------------------------------------------

def _criterion3_attainable():
    reps = []
    for r in (2, 3, 4, 5):
        reps.append(check_symmetry(r, 10))
        for ell in range(r // 2 + 1):
            reps.append(check_subset_sum(r, ell, 10))
    reps += check_rank6_set(10)
    reps += check_nesting(3, 2, 10)
    return reps


def test_03a_relation_suites_without_rank7():
    assert not [r for r in _criterion3_attainable() if not r["passed"]]


@pytest.mark.xfail(strict=True, reason="no rank-7 universal series are available to test the rank-7 relations")
def test_03_relation_suites():
    reps = _criterion3_attainable() + check_rank7_set(10)
    assert not record(3, "symmetry, subset sums, rank-6 and rank-7 sets, nesting", reps)


# 4 ------------------------------------------------------------------------------------------

def test_04_blowup():
    reps = []
    for r in (2, 3, 4, 5):
        for ell in range(r // 2 + 1):
            reps.append(check_blowup(r, ell, 8))
    reps += check_rank5_extra(8, "horizontal")
    S = minimal_general_type(2, 1, 1)
    for r in (2, 3):
        for ell in (0, 1):
            reps.append(surface_blowup_check(r, S, ell, 8))
    assert not record(4, "blow-up relations for D-sets and at surface level", reps)


# 5 ------------------------------------------------------------------------------------------

def test_05_hauptmodul_identities():
    o = F(15)
    u, c, rr = u_series(o + 2), cubic_cf(o + 4), rogers_ramanujan_cf(o + 6)
    checks = [
        ("u^-2 = t_{A1,1}", u ** -2, t_ratio(1, 1, order=o)),
        ("c^-1 + 4c^2 = 3 t_{A2,1}", c ** -1 + 4 * c ** 2, 3 * t_ratio(2, 1, order=o)),
        ("c^-3 - 15 + 48c^3 + 64c^6 = j3", c ** -3 - 15 + 48 * c ** 3 + 64 * c ** 6, hauptmodul(3, o)),
        ("16u^-8 - 16 = j4", 16 * u ** -8 - 16, hauptmodul(4, o)),
        ("r^-5 - 11 - r^5 = j5", rr ** -5 - 11 - rr ** 5, hauptmodul(5, o)),
    ]
    reps = []
    for name, lhs, rhs in checks:
        d = lhs.first_difference(rhs, o)
        reps.append(ok(name, d is None and lhs.order >= o and rhs.order >= o, d))
    assert not record(5, "continued-fraction and Hauptmodul identities to q^15", reps)


# 6 ------------------------------------------------------------------------------------------

def test_06_theta_identities():
    reps = []
    for m in (1, 2, 3, 4):
        reps.append(dict(theta_identity_check("keysum", m, 10), name="keysum"))
        for k in (0, 1, 2):
            for ell in range(m + 1):
                reps.append(dict(theta_identity_check("thlk", m, 10, k, ell), name="thlk"))
    assert not record(6, "keysum and thlk(k, l) for lattice ranks 1..4", reps)


# 7 ------------------------------------------------------------------------------------------

S2, S5 = sqrt2(), sqrt5()
DONALDSON_CONSTANTS = {
    2: {"D0": 1, "D11": 1},
    3: {"D0": 2, "D11": F(1, 2), "D22": F(1, 2), "D12": 4},
    4: {"D0": 4 + 2 * S2, "D11": 1 - S2 / 2, "D33": 1 - S2 / 2, "D22": 3 - 2 * S2,
        "D12": 3 + 2 * S2, "D23": 3 + 2 * S2, "D13": 2},
    5: {"D0": 20 + 8 * S5, "D11": F(3, 4) - S5 / 4, "D44": F(3, 4) - S5 / 4,
        "D22": F(7, 4) - 3 * S5 / 4, "D33": F(7, 4) - 3 * S5 / 4,
        "D12": F(7, 2) + 3 * S5 / 2, "D34": F(7, 2) + 3 * S5 / 2,
        "D13": F(3, 2) + S5 / 2, "D24": F(3, 2) + S5 / 2, "D23": 6 + 2 * S5, "D14": 6 - 2 * S5},
}


def test_07_donaldson_constants():
    reps = []
    for r, want in DONALDSON_CONSTANTS.items():
        got = leading_constants(build_horizontal(r, 2))
        assert set(got) == set(want)
        for name, value in want.items():
            reps.append(ok(f"r={r} {name}(0)", got[name] == as_scalar(value), None if got[name] == as_scalar(value)
                           else got[name]))
    assert not record(7, "D0(0), D_ij(0) from the built horizontal sets", reps)


# 8 ------------------------------------------------------------------------------------------

def test_08_galois_rationality():
    reps = []
    for r in (3, 4, 5):
        for kc1 in (0, 1, 2, 3):
            reps += galois_invariance_check(r, minimal_general_type(3, 2, kc1), None, 5)
    assert not record(8, "Psi rational and generators permute the vacua", reps)


# 9 ------------------------------------------------------------------------------------------

INTEGRALITY = []


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 4, 5]), st.integers(2, 5), st.integers(0, 3), st.integers(-3, 3))
def _integrality_property(r, chi, extra, kc1):
    k2 = max(1, chi - 3 + extra)
    rep = integrality_check(r, minimal_general_type(chi, k2, kc1), None, 5)
    INTEGRALITY.append(rep)
    assert rep["passed"], rep


def test_09_integrality():
    INTEGRALITY.clear()
    # a fixed grid first, then hypothesis sampling
    for r, chi, k2 in itertools.product((3, 4, 5), (2, 3), (1, 2)):
        if k2 >= chi - 3:
            INTEGRALITY.append(integrality_check(r, minimal_general_type(chi, k2, 1), None, 5))
    failures = [r for r in INTEGRALITY if not r["passed"]]
    if not failures:
        try:
            _integrality_property()
        except AssertionError:
            pass
    assert not record(9, "r^(2+K^2-chi) Psi integral to q^5", INTEGRALITY)


# 10 -----------------------------------------------------------------------------------------

def test_10_flux_sums():
    rng = random.Random(10)
    reps = []
    for r in (3, 5):
        for b2 in (1, 2, 3, 4):
            for neg in range(b2 + 1):
                sig = b2 - 2 * neg
                cs = [(0,) * b2] + [tuple(rng.randrange(r) for _ in range(b2)) for _ in range(10)]
                for c in cs:
                    for m in [None] + list(range(1, r)):
                        a = flux_sum(r, "closed_form", b2, sig, None, c, m)
                        b = flux_sum(r, "brute_force", b2, sig, None, c, m)
                        reps.append(ok(f"r={r} b2={b2} sigma={sig} c={c} m={m}", a == b))
    assert not record(10, "flux sums: closed form equals brute force", reps)


# 11 -----------------------------------------------------------------------------------------

def test_11_rank5_identities():
    rep = rank5_identity_check()
    reps = [ok(f"identity {k + 1}", v) for k, v in enumerate(rep["identities"])]
    assert not record(11, "rank-5 polynomial identities vanish", reps)


# 12 -----------------------------------------------------------------------------------------

def test_12_refined_suite():
    J = J_series(20)
    d = J.at_y_one().first_difference(u_series(10).rescale_and_phase(2) ** 4, 20)
    reps = [ok("J(q,1) = u(q^2)^4", d is None and J.order >= 20, d)]
    for r in (2, 3, 4):
        reps.append(check_y_one(r, 8))
        reps.append(check_y_symmetry(r, 8))
        for ell in range(r // 2 + 1):
            reps.append(check_subset_sum(r, ell, 8, refined=True))
    assert not record(12, "refined J, y = 1 reduction, y <-> 1/y, refined subset sums", reps)


# 13 -----------------------------------------------------------------------------------------

def test_13_localization_oracle():
    start = time.time()
    reps = []
    for r, order, names in ((2, 4, ("A", "B", "C11")), (3, 3, ("A", "B", "C11", "C12", "C22"))):
        res = extract_universal(r, order, seed=0)
        again = extract_universal(r, order, seed=1)
        cmp = {name: (passed, diff) for name, passed, diff in compare_with_fixtures(res)}
        for name in names:
            passed, diff = cmp[name]
            reps.append(ok(f"r={r} {name} through q^{order - 1}", passed, diff))
        same = all(res.series[k].first_difference(again.series[k], order) is None for k in res.series)
        reps.append(ok(f"r={r} seeds 0 and 1 agree", same))
        reps.append(ok(f"r={r} spare rows fitted with zero residual", res.residual_rows >= 1,
                       configurations=len(default_configurations(r))))
    reps.append(ok("runtime under fifteen minutes", time.time() - start < 900))
    assert not record(13, "localization oracle reproduces the tables at desk scale", reps)


# 14 -----------------------------------------------------------------------------------------

def test_14_k3_evir():
    reps = []
    for r in (2, 3):
        target = delta_series(F(1, r), 10).invert(8)
        for c1 in ((0, 0), (1, 0), (1, 1), (1, 2), (2, 3)):
            S = k3_like(c1)
            for c2, value, flags in evir_predictions(r, S, None, range(0, 6)):
                want = target.coefficient_at(evir_exponent(r, S, c1, c2))
                reps.append(ok(f"r={r} c1={c1} c2={c2}", not flags and as_scalar(value) == want))
    seq = [v for _, v, _ in evir_predictions(2, k3_like((1, 1)), None, range(2, 6))]
    reps.append(ok("1, 324, 25650, 1073720 for r=2, c1^2=2", seq == [1, 324, 25650, 1073720]))
    assert not record(14, "K3 predictions are coefficients of Delta(q^(1/r))^(-1)", reps)


if __name__ == "__main__":
    code = pytest.main([__file__, "-q"])
    print()
    for k in sorted(RESULTS):
        print(RESULTS[k])
    sys.exit(code)
