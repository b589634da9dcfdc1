"""Smoke tests for the _museq extension module."""

import math

import pytest

import museq


def test_build_greedy_mu4():
    res = museq.build_sequence(4, 3)
    assert res["complete"]
    assert res["terms"] == [1, 2, 4, 7]
    assert [s["s_n"] for s in res["steps"]] == [2, 4, 7]
    assert all(s["s_n"] <= s["f"] + 1 <= s["bound_first"] for s in res["steps"])


def test_build_greedy_mu3_is_arithmetic():
    assert museq.build_sequence(3, 6)["terms"] == [1, 2, 3, 4, 5, 6, 7]


def test_validate_pass_and_fail():
    assert museq.validate(4, [1, 2, 4, 7])["pass"]
    bad = museq.validate(3, [1, 1])
    assert not bad["pass"]
    assert bad["failing_prefix_len"] == 2
    assert bad["minimum_found"] == 2


def test_forbidden_values_and_greedy_extend():
    f = museq.forbidden_values(4, [1, 2])
    assert f["values"] == [1, 2, 3]
    assert museq.greedy_extend(4, [1, 2, 4])["s_n"] == 7


def test_shortest_vector():
    minimum, witness = museq.shortest_vector([1, 2, 3])
    assert minimum == 3
    assert witness == [1, 1, -1]
    assert sum(w * s for w, s in zip(witness, [1, 2, 3])) == 0


def test_count_norm_le():
    assert museq.count_norm_le(2, 4) == 13
    assert museq.count_norm_le(1, 9) == 7


def test_density_values():
    assert math.isclose(museq.unit_ball_volume(2), math.pi, rel_tol=1e-12)
    assert abs(museq.theta_constant() - 23.1388) < 1e-3
    first, second = museq.theorem_bound_sn(3, 2)
    assert math.isclose(first, 1 + 2.5 * math.pi, rel_tol=1e-12)
    assert first <= second
    assert math.isclose(
        museq.corollary_density_bound(3, 2), (6.0 / 7.0) / 12.0, rel_tol=1e-12
    )


def test_approximate_a2():
    res = museq.approximate([[2, 1], [1, 2]], 10)
    assert res["s"] == [1, 14, 161]
    assert (res["error_num"], res["error_den"]) == (1, 10)
    res100 = museq.approximate([[2, 1], [1, 2]], 100)
    assert res100["error"] < res["error"]


def test_approximate_rejects_bad_input():
    with pytest.raises(Exception):
        museq.approximate([[1, 2], [2, 1]], 10)  # not positive definite
