"""Approximate minimum CEDS used to seed k-best enumeration.

The construction: internal vertices of a depth-first search tree form a
connected vertex cover, so the DFS-tree edges joining two internal vertices
are a CEDS; minimalizing that set gives the seed.  The reported ratio bound
divides the seed size by a cheap combinatorial lower bound on the optimum;
tests compare against the brute-force optimum as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ceds import Solution, min_ceds_is_singleton, minimalize
from .graph import EdgeSet, Graph


@dataclass(frozen=True)
class SeedReport:
    solution: Solution
    lower_bound: int
    observed_ratio_bound: Fraction


def _greedy_matching_size(g: Graph) -> int:
    used = 0
    count = 0
    for vm in g.edge_vmask:
        if not vm & used:
            used |= vm
            count += 1
    return count


def _lower_bound(g: Graph) -> int:
    # any CEDS F induces a tree whose |F|+1 vertices are a vertex cover,
    # so |F| >= (matching size) - 1 and |F| >= m/max_degree - 1; a graph
    # with no single-edge CEDS needs at least 2 edges
    matching = _greedy_matching_size(g)
    by_degree = -(-g.m // g.max_degree)  # ceil
    return max(2, matching - 1, by_degree - 1)


def approx_min_ceds(g: Graph) -> SeedReport:
    """Deterministic seed solution for a graph with no single-edge CEDS.

    Depth-first search from vertex 0 exploring incident edges in ascending
    index order; the tree edges whose child endpoint is internal span the
    internal vertices, form a CEDS, and are then minimalized.
    """
    if min_ceds_is_singleton(g) is not None:
        raise ValueError("trivial instance: all solutions come from enumerate_trivial")
    parent_edge = [-1] * g.n
    has_child = [False] * g.n
    visited = 1
    stack = [(0, iter(g.adjacency[0]))]
    while stack:
        v, it = stack[-1]
        for w, e in it:
            if not visited >> w & 1:
                visited |= 1 << w
                parent_edge[w] = e
                has_child[v] = True
                stack.append((w, iter(g.adjacency[w])))
                break
        else:
            stack.pop()
    mask = 0
    for w in range(g.n):
        if parent_edge[w] >= 0 and has_child[w]:
            mask |= 1 << parent_edge[w]
    # a depth-1 DFS tree would leave the mask empty, but that means the
    # graph is a star, which is trivial and was rejected above
    sol = minimalize(g, EdgeSet.from_mask(mask))
    lb = _lower_bound(g)
    return SeedReport(sol, lb, Fraction(sol.size, lb))
