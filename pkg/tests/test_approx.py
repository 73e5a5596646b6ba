"""The deterministic seed construction and its observed quality."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cedsenum import (
    approx_min_ceds,
    brute_force_minimal_ceds,
    is_minimal_ceds,
    min_ceds_is_singleton,
)
from cedsenum.corpus import random_connected_graph

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


def test_path_seed_is_optimal(p5):
    report = approx_min_ceds(p5)
    assert report.solution.canonical_key == (1, 2)
    assert report.lower_bound == 2
    assert report.observed_ratio_bound == 1


def test_cycle_seed(c5):
    report = approx_min_ceds(c5)
    assert report.solution.size == 3
    assert report.lower_bound == 2
    assert report.observed_ratio_bound == Fraction(3, 2)


def test_complete_bipartite_seed(k23):
    report = approx_min_ceds(k23)
    assert report.solution.size == 2
    assert report.observed_ratio_bound == 1


def test_seed_is_certified(c5, k23):
    for g in (c5, k23):
        sol = approx_min_ceds(g).solution
        assert is_minimal_ceds(g, sol.edges)


def test_seed_is_deterministic(c5):
    assert approx_min_ceds(c5) == approx_min_ceds(c5)


def test_trivial_instances_are_rejected(star3, triangle):
    for g in (star3, triangle):
        with pytest.raises(ValueError, match="trivial"):
            approx_min_ceds(g)


@given(st.integers(min_value=0, max_value=199), st.integers(min_value=6, max_value=8))
@PROPERTY_SETTINGS
def test_seed_stays_within_twice_the_optimum(seed, n):
    g = random_connected_graph(n, 0.5, seed)
    if min_ceds_is_singleton(g) is not None:
        return
    report = approx_min_ceds(g)
    optimum = brute_force_minimal_ceds(g)[0].size
    assert report.solution.size <= 2 * optimum
    assert report.lower_bound <= optimum
    assert report.observed_ratio_bound == Fraction(report.solution.size, report.lower_bound)
