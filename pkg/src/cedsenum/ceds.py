"""Connected edge dominating sets: predicates, minimalization, trivial instances.

An edge set F of a connected graph G is a CEDS when G[F] is connected and
every edge of G shares an endpoint with some edge of F.  F is minimal when
no proper subset is again a CEDS; every minimal CEDS induces a tree.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import (
    EdgeSet,
    Graph,
    _bits,
    _is_connected_mask,
    _mask_of,
    _pendant_items,
    _spanning_tree_mask,
    _vertices_mask,
)


class NotCedsError(ValueError):
    """The given edge set is not a connected edge dominating set."""


@dataclass(frozen=True)
class Solution:
    """A certified minimal CEDS.

    ``canonical_key`` is the ascending edge-index tuple; it is the dedup key
    and the deterministic tie-breaker everywhere.
    """

    edges: EdgeSet
    canonical_key: tuple[int, ...]

    @classmethod
    def _of_mask(cls, mask: int) -> Solution:
        es = EdgeSet.from_mask(mask)
        return cls(es, es.indices())

    @property
    def mask(self) -> int:
        return self.edges.mask

    @property
    def size(self) -> int:
        return len(self.canonical_key)

    def __lt__(self, other: Solution) -> bool:
        return (self.size, self.canonical_key) < (other.size, other.canonical_key)

    def __repr__(self) -> str:
        return f"Solution({list(self.canonical_key)})"


def dominates(g: Graph, e: int, f: int) -> bool:
    """True iff edges e and f share an endpoint; every edge dominates itself."""
    return bool(g.edge_vmask[e] & g.edge_vmask[f])


def _is_ceds_mask(g: Graph, mask: int) -> bool:
    return mask != 0 and g._dominates_all(mask) and _is_connected_mask(g, mask)


def is_ceds(g: Graph, s: EdgeSet | Iterable[int]) -> bool:
    """True iff s is nonempty, G[s] is connected, and s dominates every edge."""
    return _is_ceds_mask(g, _mask_of(s))


def private_edges(g: Graph, s: EdgeSet | Iterable[int], f: int) -> EdgeSet:
    """Edges outside s whose only incident s-edge (over both endpoints) is f.

    ``f`` must be a member of ``s``.
    """
    mask = _mask_of(s)
    if not mask >> f & 1:
        raise ValueError(f"edge {f} is not in the given set")
    out = 0
    u, v = g.edges[f]
    # a private edge must share an endpoint with f, so scanning the
    # neighborhood of f's endpoints sees every candidate
    for h in _bits((g.incident_mask[u] | g.incident_mask[v]) & ~mask):
        if g.dominator_mask[h] & mask == 1 << f:
            out |= 1 << h
    return EdgeSet.from_mask(out)


def _pendant_has_private(g: Graph, mask: int, e: int, pendant_vertex: int) -> bool:
    # for a pendant edge of a set with >= 2 edges, the private edges are
    # exactly the edges joining the pendant vertex to vertices outside V(s)
    for w, h in g.adjacency[pendant_vertex]:
        if h != e and not g.incident_mask[w] & mask:
            return True
    return False


def is_minimal_ceds(g: Graph, s: EdgeSet | Iterable[int]) -> bool:
    """True iff s is a CEDS and no proper subset of s is one.

    Decided structurally: a minimal CEDS induces a tree, a single-edge CEDS
    is always minimal, and a multi-edge tree CEDS is minimal exactly when
    each of its pendant edges has a private edge.
    """
    mask = _mask_of(s)
    if not _is_ceds_mask(g, mask):
        return False
    if mask.bit_count() == 1:
        return True
    # connectivity is known, so tree-ness is the edge/vertex count identity
    if mask.bit_count() != _vertices_mask(g, mask).bit_count() - 1:
        return False
    return all(
        _pendant_has_private(g, mask, e, ell) for e, ell in _pendant_items(g, mask)
    )


def _minimalize_mask(g: Graph, mask: int) -> int:
    """Prune a CEDS mask to a minimal one; assumes the input is a CEDS."""
    tree = _spanning_tree_mask(g, mask)
    vdeg: dict[int, int] = {}
    for e in _bits(tree):
        u, v = g.edges[e]
        vdeg[u] = vdeg.get(u, 0) + 1
        vdeg[v] = vdeg.get(v, 0) + 1
    heap = [e for e, _ in _pendant_items(g, tree)]
    heapq.heapify(heap)
    queued = set(heap)
    while heap:
        e = heapq.heappop(heap)
        if tree == 1 << e:
            break  # a single edge is always minimal; never remove it
        u, v = g.edges[e]
        ell = u if vdeg[u] == 1 else v
        if _pendant_has_private(g, tree, e, ell):
            continue  # private edges survive later removals, so e is settled
        tree ^= 1 << e
        vdeg[u] -= 1
        vdeg[v] -= 1
        other = v if ell == u else u
        if vdeg[other] == 1:
            f = (g.incident_mask[other] & tree).bit_length() - 1
            if f not in queued:
                queued.add(f)
                heapq.heappush(heap, f)
    return tree


def minimalize(g: Graph, x: EdgeSet | Iterable[int]) -> Solution:
    """Extract a minimal CEDS contained in the CEDS ``x`` (deterministically).

    Takes the canonical spanning tree of G[x], then repeatedly removes the
    smallest-index pendant edge that has no private edge, re-enqueueing edges
    that become pendant.  Raises :class:`NotCedsError` if x is not a CEDS.
    """
    mask = _mask_of(x)
    if not _is_ceds_mask(g, mask):
        raise NotCedsError(f"not a connected edge dominating set: {EdgeSet.from_mask(mask)!r}")
    return Solution._of_mask(_minimalize_mask(g, mask))


def min_ceds_is_singleton(g: Graph) -> int | None:
    """Smallest edge e={a,b} with d(a)+d(b)-1 = m, if any.

    Such an edge's endpoints touch every edge, so {e} is a CEDS; the count
    identity holds because e is the only edge incident to both a and b.
    """
    for e, (u, v) in enumerate(g.edges):
        if g.degrees[u] + g.degrees[v] - 1 == g.m:
            return e
    return None


def enumerate_trivial(g: Graph) -> list[Solution]:
    """All minimal CEDS of a graph that has a single-edge CEDS.

    With a witness edge {a, b} every edge of the graph touches a or b, and a
    case split on how a minimal solution meets the two hubs leaves only four
    shapes: a singleton whose endpoints cover all edges, a two-edge path
    a-w-b through a common neighbor w, or the full star from one hub onto
    the common neighborhood (possible only when the other hub has no private
    neighbor, and never smaller than the whole star, since each spoke is the
    sole dominator of the opposite hub's edge to that neighbor).
    """
    e_star = min_ceds_is_singleton(g)
    if e_star is None:
        raise ValueError("graph has no single-edge CEDS; use the general enumerator")
    masks: list[int] = []
    for e, (u, v) in enumerate(g.edges):
        if g.degrees[u] + g.degrees[v] - 1 == g.m:
            masks.append(1 << e)
    a, b = g.edges[e_star]
    star_a = star_b = 0
    for w in range(g.n):
        if w == a or w == b:
            continue
        ea = g.edge_between(a, w)
        eb = g.edge_between(b, w)
        if ea is not None and eb is not None:
            masks.append((1 << ea) | (1 << eb))
            star_a |= 1 << ea
            star_b |= 1 << eb
    only_a = only_b = False
    for w, _ in g.adjacency[a]:
        if w != b and g.edge_between(b, w) is None:
            only_a = True
            break
    for w, _ in g.adjacency[b]:
        if w != a and g.edge_between(a, w) is None:
            only_b = True
            break
    if star_a and not only_b:
        masks.append(star_a)
    if star_b and not only_a:
        masks.append(star_b)
    uniq: dict[int, Solution] = {}
    for mask in masks:
        if mask not in uniq and is_minimal_ceds(g, EdgeSet.from_mask(mask)):
            uniq[mask] = Solution._of_mask(mask)
    return sorted(uniq.values())


# ---------------------------------------------------------------------------
# Solution line format: space-separated `u-v` pairs in ascending edge index


def solution_line(g: Graph, s: Solution | EdgeSet | Iterable[int]) -> str:
    edges = s.edges if isinstance(s, Solution) else EdgeSet(s)
    return " ".join(f"{g.edges[e][0]}-{g.edges[e][1]}" for e in edges)


def parse_solution_line(g: Graph, line: str) -> EdgeSet:
    """Inverse of :func:`solution_line`; raises ValueError on unknown edges."""
    mask = 0
    for token in line.split():
        try:
            a, b = token.split("-")
            u, v = int(a), int(b)
        except ValueError:
            raise ValueError(f"malformed endpoint pair {token!r}") from None
        e = g.edge_between(u, v)
        if e is None:
            raise ValueError(f"no edge {u}-{v} in the graph")
        mask |= 1 << e
    return EdgeSet.from_mask(mask)


def solution_from_edges(g: Graph, s: EdgeSet | Iterable[int]) -> Solution:
    """Certify an edge set as a minimal CEDS and wrap it as a Solution."""
    es = EdgeSet(s) if not isinstance(s, EdgeSet) else s
    if not is_minimal_ceds(g, es):
        raise NotCedsError(f"not a minimal connected edge dominating set: {es!r}")
    return Solution(es, es.indices())
