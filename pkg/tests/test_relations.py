import pytest

from vwseries.relations import (check_abar, check_blowup, check_nesting, check_rank5_extra, check_rank6_set,
                                check_rank7_set, check_subset_sum, check_symmetry, check_y_one,
                                check_y_symmetry, verify_relations)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_symmetry_and_subset_sums(r):
    assert check_symmetry(r, 8)["passed"]
    assert check_symmetry(r, 6, "horizontal")["passed"]
    for ell in range(r // 2 + 1):
        assert check_subset_sum(r, ell, 8)["passed"]


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_blowup(r):
    for ell in range(r // 2 + 1):
        assert check_blowup(r, ell, 6)["passed"]


def test_rank5_extra():
    reps = check_rank5_extra(6)
    assert reps and all(rep["passed"] for rep in reps)


def test_rank6_set():
    reps = check_rank6_set(10)
    assert reps and all(rep["passed"] for rep in reps)


def test_rank7_has_no_data():
    reps = check_rank7_set(10)
    assert reps and not any(rep["passed"] for rep in reps)
    assert all(rep["first_difference"] == "no data" for rep in reps)


def test_nesting_needs_pairs():
    assert all(rep["passed"] for rep in check_nesting(2, 2, 8))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_refined_reduction_and_symmetry(r):
    assert check_y_one(r, 6)["passed"]
    assert check_y_symmetry(r, 6)["passed"]
    assert check_y_one(r, 5, "horizontal")["passed"]
    assert check_y_symmetry(r, 5, "horizontal")["passed"]


@pytest.mark.parametrize("r", [2, 3])
def test_refined_subset_sum(r):
    assert check_subset_sum(r, 0, 6, refined=True)["passed"]


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_abar(r):
    assert check_abar(r)["passed"]


def test_dispatcher():
    assert verify_relations("symmetry", 3, 6)[0]["passed"]
    with pytest.raises(ValueError):
        verify_relations("nonsense")
