"""Smoke tests for the pardes Python extension."""

import math

import pytest

import pardes


def test_permutation_primitives():
    assert pardes.red([5, 2, 7, 8]) == [2, 1, 3, 4]
    assert pardes.complement([2, 5, 3, 1, 4]) == [4, 1, 3, 5, 2]
    assert pardes.reverse([1, 2, 3]) == [3, 2, 1]
    assert pardes.insert_at([1, 2], 1) == [1, 3, 2]
    assert pardes.remove_max([1, 3, 2]) == ([1, 2], 1)
    assert pardes.rotate_to_front([5, 4, 1, 3, 2], 1) == [1, 3, 2, 5, 4]
    assert len(pardes.all_perms(4)) == 24
    with pytest.raises(ValueError):
        pardes.red([1, 1])


def test_statistics():
    assert pardes.descent_set([2, 5, 3, 1, 4], "right_odd") == [2, 3]
    assert pardes.descent_count([2, 5, 3, 1, 4], "left_even") == 0
    assert pardes.first_parity_flag([2, 5, 3, 1, 4], "even") == 1


def test_patterns():
    assert pardes.count_matches([2, 5, 3, 1, 4], "1o2e") == 1
    assert pardes.count_matches([2, 5, 3, 1, 4], "2e1*") == 0
    assert pardes.avoids([2, 1, 3], ["1e2*", "2o1*"])
    assert not pardes.avoids([1, 2, 3], ["1e2*", "2o1*"])
    assert pardes.parity_k_tau_avoiding([1, 3, 2], [2, 1], 2)
    assert not pardes.parity_k_tau_avoiding([3, 2, 4, 5, 1], [2, 1], 1)


def test_polynomials_and_closed_forms():
    assert pardes.family_poly("R", 3) == {(0, 0): 4, (0, 1): 2}
    assert pardes.family_poly("P", 4) == {(0, 0): 4, (1, 0): 8, (0, 1): 8, (1, 1): 4}
    assert pardes.closed_form_poly("Q", 5) == pardes.family_poly("Q", 5)
    assert pardes.coeff("R", 2, 8) == 20736
    assert pardes.coeff("P", 2, 8, j=1) == 6912
    # values far beyond machine integers stay exact
    assert pardes.coeff("R", 0, 50) == math.factorial(25) ** 2
    assert sum(pardes.family_poly("M", 10).values()) == math.factorial(10)
    assert pardes.apply_operator("xi", 0, pardes.family_poly("P", 6)) == pardes.family_poly("Q", 6)
    assert pardes.differential_form_check("Q", 7)


def test_genocchi():
    assert pardes.genocchi_sequence(6) == [1, 1, 3, 17, 155, 2073]
    assert pardes.dumont_count(7) == 17
    assert pardes.avoidance_count(4, "conj") == 3
    assert pardes.avoidance_count(2, "def1") == 2


def test_bijections():
    assert pardes.r_symmetry([1, 2, 3, 4]) == [4, 3, 2, 1]
    assert pardes.r_symmetry_inverse([4, 3, 2, 1]) == [1, 2, 3, 4]
    assert pardes.r_split([2, 1]) == ("P1", [2, 1])
    assert pardes.r_split_inverse("P1", [2, 1]) == [2, 1]
    assert pardes.alpha([3, 1, 2]) == [1, 3, 2]
    assert pardes.alpha_inverse([1, 3, 2]) == [3, 1, 2]
    assert pardes.beta([2, 1]) == [2, 1]
    assert pardes.p_complement([1, 2]) == [2, 1]
    assert ([1, 2], [1, 2]) in pardes.alpha_pairs(2)
    with pytest.raises(ValueError):
        pardes.p_complement([2, 1])


def test_verification():
    report = pardes.run_suite("xi_transfer", 8)
    assert report["passed"]
    assert report["suite"] == "xi_transfer"
    assert pardes.brute_distribution(3, "R") == pardes.family_poly("R", 3)
    assert "paper_tables" in pardes.registered_suites()
    deviations = [
        r for r in pardes.run_suite("paper_table_p8")["records"] if r["expected_deviation"]
    ]
    assert len(deviations) == 2
    assert all(r["left"] == "6912" for r in deviations)
