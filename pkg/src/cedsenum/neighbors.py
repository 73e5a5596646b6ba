"""Neighbor moves between minimal CEDS: the arcs of the solution supergraph.

Each move removes one edge from a solution, adds a small reconnecting set,
and re-minimalizes.  Three move families cover internal edges (Type I) and
pendant edges (Types II and III); together they make the supergraph strongly
connected, which is what lets a plain traversal reach every solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ceds import Solution, _is_ceds_mask, _minimalize_mask, is_minimal_ceds, private_edges
from .graph import (
    Graph,
    _bits,
    _components_masks,
    _pendant_items,
    _vertices_mask,
)


class NotPendantError(ValueError):
    pass


@dataclass(frozen=True)
class TypeI:
    """Removed internal edge ``e``; added ``f`` and ``g`` (equal when f bridges)."""

    e: int
    f: int
    g: int

    def trace(self) -> str:
        return f"TYPE1 e={self.e} f={self.f} g={self.g}"


@dataclass(frozen=True)
class TypeII:
    """Removed pendant edge ``e``; added a path of one or two edges."""

    e: int
    path: tuple[int, ...]

    def trace(self) -> str:
        return f"TYPE2 e={self.e} path={','.join(map(str, self.path))}"


@dataclass(frozen=True)
class TypeIII:
    """Removed pendant edge ``e``; added one reconnecting edge per W-vertex."""

    e: int
    bundle: tuple[int, ...]

    def trace(self) -> str:
        return f"TYPE3 e={self.e} F={','.join(map(str, self.bundle))}"


Provenance = TypeI | TypeII | TypeIII


@dataclass(frozen=True)
class WSet:
    vertices: frozenset[int]


@dataclass
class NeighborBatch:
    origin: Solution
    items: list[tuple[Solution, Provenance]]

    def solutions(self) -> list[Solution]:
        return [sol for sol, _ in self.items]

    def __len__(self) -> int:
        return len(self.items)


_UNSET = object()


def _consider(g: Graph, cand: int, prov: Provenance, out: list, cache: dict) -> None:
    """Validate a candidate mask, minimalize it, and append (Solution, prov).

    Candidates that are not CEDS are skipped; the move constructions make
    them CEDS by design, so this is a safety net, not a filter.
    """
    res = cache.get(cand, _UNSET)
    if res is _UNSET:
        res = Solution._of_mask(_minimalize_mask(g, cand)) if _is_ceds_mask(g, cand) else None
        cache[cand] = res
    if res is not None:
        out.append((res, prov))


def w_set(g: Graph, x: Solution, e: int) -> WSet:
    """Vertices off ``e`` incident to a private edge of ``e`` that is not a
    pendant edge of the whole graph.  ``e`` must be pendant in G[x]."""
    pend = dict(_pendant_items(g, x.mask))
    if e not in pend:
        raise NotPendantError(f"edge {e} is not a pendant edge of the solution")
    priv = private_edges(g, x.edges, e)
    assert priv or x.size == 1, "pendant edge of a minimal CEDS must have a private edge"
    everts = g.edge_vmask[e]
    verts = set()
    for h in priv:
        hu, hv = g.edges[h]
        if g.degrees[hu] == 1 or g.degrees[hv] == 1:
            continue  # pendant in G
        for w in (hu, hv):
            if not everts >> w & 1:
                verts.add(w)
    assert all(g.degrees[w] >= 2 for w in verts)
    return WSet(frozenset(verts))


def type1_neighbors(
    g: Graph, x: Solution, _cache: dict | None = None
) -> list[tuple[Solution, TypeI]]:
    """Moves that replace an internal edge of G[x].

    Removing internal edge e leaves components C1, C2 (each with an edge).
    For every edge f with exactly one endpoint in V(C_i) and outside
    endpoint v, and every edge from v into V(C_j), the pair rejoins the
    components; f alone suffices when it bridges them (then g = f).
    """
    cache = {} if _cache is None else _cache
    out: list[tuple[Solution, TypeI]] = []
    mask = x.mask
    for e in x.canonical_key:
        rest = mask ^ (1 << e)
        comps = _components_masks(g, rest)
        if len(comps) != 2:
            continue  # pendant edges are handled by Types II and III
        vmasks = [_vertices_mask(g, c) for c in comps]
        for i in (0, 1):
            vi, vj = vmasks[i], vmasks[1 - i]
            for f, fverts in enumerate(g.edge_vmask):
                inside = fverts & vi
                if not inside or inside == fverts:
                    continue  # need exactly one endpoint in V(C_i)
                v = (fverts ^ inside).bit_length() - 1
                for w, g2 in g.adjacency[v]:
                    if vj >> w & 1 or (g2 == f and vj >> v & 1):
                        _consider(g, rest | (1 << f) | (1 << g2), TypeI(e, f, g2), out, cache)
    return out


def type2_neighbors(
    g: Graph, x: Solution, _cache: dict | None = None
) -> list[tuple[Solution, TypeII]]:
    """Moves that replace a pendant edge by a short escape path.

    For pendant edge e with pendant vertex v, every path of length one or
    two from v back to a vertex of G[x - e] is patched in; the path may
    reuse e itself, which yields the origin again (dropped later).
    """
    cache = {} if _cache is None else _cache
    out: list[tuple[Solution, TypeII]] = []
    mask = x.mask
    for e, v in _pendant_items(g, mask):
        rest = mask ^ (1 << e)
        rest_verts = _vertices_mask(g, rest)
        for z, h in g.adjacency[v]:
            if rest_verts >> z & 1:
                _consider(g, rest | (1 << h), TypeII(e, (h,)), out, cache)
        for w, h1 in g.adjacency[v]:
            for z, h2 in g.adjacency[w]:
                if h2 == h1 or z == v:
                    continue
                if rest_verts >> z & 1:
                    _consider(g, rest | (1 << h1) | (1 << h2), TypeII(e, (h1, h2)), out, cache)
    return out


def type3_neighbor(
    g: Graph, x: Solution, e: int, _cache: dict | None = None
) -> tuple[Solution, TypeIII] | None:
    """The unique move that drops pendant edge e and re-covers its W-vertices.

    Returns None when the pendant vertex touches a pendant edge of the
    whole graph (the move is undefined there).  Each W-vertex contributes
    its smallest-index edge back to V(G[x - e]).
    """
    cache = {} if _cache is None else _cache
    pend = dict(_pendant_items(g, x.mask))
    if e not in pend:
        raise NotPendantError(f"edge {e} is not a pendant edge of the solution")
    v = pend[e]
    for _, h in g.adjacency[v]:
        hu, hv = g.edges[h]
        if g.degrees[hu] == 1 or g.degrees[hv] == 1:
            return None
    ws = w_set(g, x, e)
    if not ws.vertices:
        # empty W would mean x - e is already a CEDS, contradicting the
        # minimality of x; reaching this line is a bug
        raise RuntimeError(f"empty W-set for pendant edge {e} of {x!r}")
    rest = x.mask ^ (1 << e)
    rest_verts = _vertices_mask(g, rest)
    fmask = 0
    for w in sorted(ws.vertices):
        f = next((h for z, h in g.adjacency[w] if rest_verts >> z & 1), None)
        if f is None:
            raise RuntimeError(f"no edge reconnects W-vertex {w} for pendant edge {e}")
        fmask |= 1 << f
    assert fmask.bit_count() == len(ws.vertices)
    out: list[tuple[Solution, TypeIII]] = []
    _consider(g, rest | fmask, TypeIII(e, tuple(_bits(fmask))), out, cache)
    return out[0] if out else None


def all_neighbors(g: Graph, x: Solution) -> NeighborBatch:
    """All moves from x, deduplicated by canonical key, origin removed.

    Order is generation order: Type I, then II, then III, each internally
    deterministic, keeping the first provenance for a repeated solution.
    """
    if x.size < 2:
        # a single-edge solution only occurs in graphs handled by the
        # trivial-instance path, which never consults the supergraph
        return NeighborBatch(x, [])
    cache: dict = {}
    raw: list[tuple[Solution, Provenance]] = []
    raw.extend(type1_neighbors(g, x, _cache=cache))
    raw.extend(type2_neighbors(g, x, _cache=cache))
    for e, _ in _pendant_items(g, x.mask):
        hit = type3_neighbor(g, x, e, _cache=cache)
        if hit is not None:
            raw.append(hit)
    seen = {x.canonical_key}
    items: list[tuple[Solution, Provenance]] = []
    for sol, prov in raw:
        if sol.canonical_key not in seen:
            seen.add(sol.canonical_key)
            items.append((sol, prov))
    assert all(is_minimal_ceds(g, sol.edges) for sol, _ in items)
    return NeighborBatch(x, items)
