"""The three local moves and the combined neighbor batch."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cedsenum import (
    NotPendantError,
    TypeI,
    TypeII,
    TypeIII,
    all_neighbors,
    brute_force_minimal_ceds,
    is_minimal_ceds,
    is_tree,
    min_ceds_is_singleton,
    solution_from_edges,
    type1_neighbors,
    type2_neighbors,
    type3_neighbor,
    w_set,
)
from cedsenum.corpus import random_connected_graph

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@pytest.fixture
def c5_solution(c5):
    return solution_from_edges(c5, [0, 1, 2])


# ---------------------------------------------------------------------------
# W-sets


def test_w_set_frozen_values(c5, p5, c5_solution):
    assert w_set(c5, c5_solution, 0).vertices == {4}
    assert w_set(c5, c5_solution, 2).vertices == {4}
    assert w_set(p5, solution_from_edges(p5, [1, 2]), 1).vertices == frozenset()


def test_w_set_requires_a_pendant_edge(c5, c5_solution):
    with pytest.raises(NotPendantError):
        w_set(c5, c5_solution, 1)


# ---------------------------------------------------------------------------
# Individual move families on the five-cycle


def test_type1_moves(c5, c5_solution):
    results = type1_neighbors(c5, c5_solution)
    keys = {sol.canonical_key for sol, _ in results}
    assert keys == {(0, 1, 2), (2, 3, 4)}  # self-restatements plus one shift
    traces = {prov.trace() for sol, prov in results if sol != c5_solution}
    assert traces == {"TYPE1 e=1 f=4 g=3", "TYPE1 e=1 f=3 g=4"}
    assert all(isinstance(prov, TypeI) for _, prov in results)


def test_type2_moves(c5, c5_solution):
    results = type2_neighbors(c5, c5_solution)
    arrivals = {
        (sol.canonical_key, prov.trace())
        for sol, prov in results
        if sol != c5_solution
    }
    assert arrivals == {
        ((2, 3, 4), "TYPE2 e=0 path=4,3"),
        ((0, 3, 4), "TYPE2 e=2 path=3,4"),
    }
    assert all(isinstance(prov, TypeII) for _, prov in results)


def test_type2_moves_on_a_path_only_restate_the_solution(p5):
    x = solution_from_edges(p5, [1, 2])
    results = type2_neighbors(p5, x)
    assert results
    assert {sol.canonical_key for sol, _ in results} == {(1, 2)}


def test_type3_move(c5, p5, c5_solution):
    got = type3_neighbor(c5, c5_solution, 0)
    assert got is not None
    sol, prov = got
    assert isinstance(prov, TypeIII)
    assert sol.canonical_key == (1, 2, 3)
    assert prov.e == 0
    assert prov.bundle == (3,)
    assert prov.trace() == "TYPE3 e=0 F=3"
    # empty W-set on the path: no third-type move exists
    assert type3_neighbor(p5, solution_from_edges(p5, [1, 2]), 1) is None


# ---------------------------------------------------------------------------
# Combined batches


def test_all_neighbors_on_the_five_cycle(c5, c5_solution):
    batch = all_neighbors(c5, c5_solution)
    assert batch.origin == c5_solution
    assert len(batch) == 4
    assert [sol.canonical_key for sol in batch.solutions()] == [
        (2, 3, 4),
        (0, 3, 4),
        (1, 2, 3),
        (0, 1, 4),
    ]
    kinds = [type(prov) for _, prov in batch.items]
    assert kinds == [TypeI, TypeII, TypeIII, TypeIII]
    assert [prov.trace() for _, prov in batch.items] == [
        "TYPE1 e=1 f=4 g=3",
        "TYPE2 e=2 path=3,4",
        "TYPE3 e=0 F=3",
        "TYPE3 e=2 F=4",
    ]


def test_all_neighbors_excludes_origin_and_duplicates(c5, c5_solution):
    batch = all_neighbors(c5, c5_solution)
    keys = [sol.canonical_key for sol in batch.solutions()]
    assert c5_solution.canonical_key not in keys
    assert len(keys) == len(set(keys))


def test_all_neighbors_is_empty_for_lone_solutions_and_singletons(p5, star3):
    assert len(all_neighbors(p5, solution_from_edges(p5, [1, 2]))) == 0
    assert len(all_neighbors(star3, solution_from_edges(star3, [0]))) == 0


@given(st.integers(min_value=0, max_value=10_000))
@PROPERTY_SETTINGS
def test_neighbors_are_minimal_trees(seed):
    g = random_connected_graph(6, 0.5, seed)
    if min_ceds_is_singleton(g) is not None:
        return
    for x in brute_force_minimal_ceds(g)[:3]:
        batch = all_neighbors(g, x)
        keys = [sol.canonical_key for sol in batch.solutions()]
        assert x.canonical_key not in keys
        assert len(keys) == len(set(keys))
        for sol in batch.solutions():
            assert is_minimal_ceds(g, sol.edges)
            assert is_tree(g, sol.edges)
