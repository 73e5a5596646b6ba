"""Immutable simple connected graphs with indexed edges, and edge-subset utilities.

Vertices and edges are dense integer indices.  Edge subsets are represented
by :class:`EdgeSet`, an immutable set of edge indices backed by an int
bitmask; iteration is always in ascending index order, which keeps every
downstream computation deterministic.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable, Iterator
from pathlib import Path


class GraphError(ValueError):
    """Base class for graph construction and structure errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class NotConnectedError(GraphError):
    """Raised when an operation requires a connected edge subset."""


class ParseError(ValueError):
    """Input text could not be parsed; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class EdgeSet:
    """Immutable set of edge indices backed by an int bitmask."""

    __slots__ = ("_mask",)

    def __init__(self, edges: EdgeSet | Iterable[int] = ()):
        if isinstance(edges, EdgeSet):
            self._mask = edges._mask
            return
        mask = 0
        for e in edges:
            if e < 0:
                raise ValueError(f"edge index must be nonnegative, got {e}")
            mask |= 1 << e
        self._mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> EdgeSet:
        s = cls.__new__(cls)
        s._mask = mask
        return s

    @property
    def mask(self) -> int:
        return self._mask

    def indices(self) -> tuple[int, ...]:
        """Member edge indices in ascending order (the canonical encoding)."""
        return tuple(_bits(self._mask))

    def __contains__(self, e: int) -> bool:
        return e >= 0 and bool(self._mask >> e & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self._mask)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EdgeSet):
            return self._mask == other._mask
        if isinstance(other, (set, frozenset)):
            return self._mask == EdgeSet(other)._mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._mask)

    def __or__(self, other: EdgeSet | Iterable[int]) -> EdgeSet:
        return EdgeSet.from_mask(self._mask | EdgeSet(other)._mask)

    def __and__(self, other: EdgeSet | Iterable[int]) -> EdgeSet:
        return EdgeSet.from_mask(self._mask & EdgeSet(other)._mask)

    def __sub__(self, other: EdgeSet | Iterable[int]) -> EdgeSet:
        return EdgeSet.from_mask(self._mask & ~EdgeSet(other)._mask)

    def __le__(self, other: EdgeSet | Iterable[int]) -> bool:
        om = EdgeSet(other)._mask
        return self._mask & ~om == 0

    def __repr__(self) -> str:
        return f"EdgeSet({list(self)})"


EdgeSetLike = "EdgeSet | Iterable[int]"


def _mask_of(s: EdgeSet | Iterable[int]) -> int:
    return s.mask if isinstance(s, EdgeSet) else EdgeSet(s).mask


class Graph:
    """Immutable undirected simple connected graph.

    Vertices are 0..n-1, edges are 0..m-1; both index sets are stable for
    the lifetime of the object.  Construct via :meth:`from_edge_list` or the
    parsers below; the constructor itself trusts its arguments.
    """

    __slots__ = (
        "n", "m", "edges", "labels", "adjacency", "degrees", "max_degree",
        "incident_mask", "edge_vmask", "dominator_mask", "all_edges_mask",
        "_edge_index", "_vc_table",
    )

    def __init__(self, n: int, edges: list[tuple[int, int]], labels: tuple | None = None):
        self.n = n
        self.m = len(edges)
        self.edges = tuple((u, v) if u < v else (v, u) for u, v in edges)
        self.labels = labels if labels is not None else tuple(range(n))
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        incident = [0] * n
        for idx, (u, v) in enumerate(self.edges):
            adjacency[u].append((v, idx))
            adjacency[v].append((u, idx))
            incident[u] |= 1 << idx
            incident[v] |= 1 << idx
        self.adjacency = tuple(tuple(a) for a in adjacency)  # already in ascending edge order
        self.degrees = tuple(len(a) for a in adjacency)
        self.max_degree = max(self.degrees) if n else 0
        self.incident_mask = tuple(incident)
        self.edge_vmask = tuple((1 << u) | (1 << v) for u, v in self.edges)
        self.dominator_mask = tuple(incident[u] | incident[v] for u, v in self.edges)
        self.all_edges_mask = (1 << self.m) - 1
        self._edge_index = {uv: i for i, uv in enumerate(self.edges)}
        self._vc_table: list[bool] | None = None

    @classmethod
    def from_edge_list(cls, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, relabeling vertices 0..n-1 by first appearance.

        Raises :class:`SelfLoopError`, :class:`DuplicateEdgeError`, or
        :class:`DisconnectedError` for inputs that are not simple connected
        graphs; the message names the offending pair or vertex.
        """
        label: dict = {}
        edges: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for a, b in pairs:
            if a == b:
                raise SelfLoopError(f"self-loop at vertex {a!r}")
            for x in (a, b):
                if x not in label:
                    label[x] = len(label)
            u, v = label[a], label[b]
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge ({a!r}, {b!r})")
            seen.add(key)
            edges.append(key)
        if not edges:
            raise DisconnectedError("no edges: graph has no connected edge structure")
        g = cls(len(label), edges, labels=tuple(label))
        reach = g._reachable_from(0)
        if reach.bit_count() != g.n:
            missing = next(v for v in range(g.n) if not reach >> v & 1)
            raise DisconnectedError(
                f"graph is disconnected: vertex {g.labels[missing]!r} is not reachable "
                f"from vertex {g.labels[0]!r}"
            )
        return g

    def _reachable_from(self, start: int) -> int:
        seen = 1 << start
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in self.adjacency[v]:
                if not seen >> w & 1:
                    seen |= 1 << w
                    stack.append(w)
        return seen

    def edge_between(self, u: int, v: int) -> int | None:
        """Index of edge {u, v}, or None."""
        return self._edge_index.get((u, v) if u < v else (v, u))

    def _dominates_all(self, mask: int) -> bool:
        """True iff every edge of the graph shares an endpoint with ``mask``.

        Equivalent to: the endpoints of ``mask`` form a vertex cover.
        """
        vm = 0
        rest = mask
        while rest:
            low = rest & -rest
            vm |= self.edge_vmask[low.bit_length() - 1]
            rest ^= low
        table = self._vc_table
        if table is None and self.n <= 14:
            table = self._build_vc_table()
        if table is not None:
            return table[vm]
        return all(ev & vm for ev in self.edge_vmask)

    def _build_vc_table(self) -> list[bool]:
        evs = self.edge_vmask
        table = [all(ev & vm for ev in evs) for vm in range(1 << self.n)]
        self._vc_table = table
        return table

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# Edge-subset structure, bitmask engine


def _vertices_mask(g: Graph, mask: int) -> int:
    vm = 0
    for e in _bits(mask):
        vm |= g.edge_vmask[e]
    return vm


def _components_masks(g: Graph, mask: int) -> list[int]:
    """Edge masks of the connected components of G[mask].

    Ordered by smallest contained edge index.
    """
    if not mask:
        return []
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    edge_list = list(_bits(mask))
    for e in edge_list:
        u, v = g.edges[e]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
    comps: dict[int, int] = {}
    for e in edge_list:  # ascending, so insertion order = smallest-edge order
        comps.setdefault(find(g.edges[e][0]), 0)
        comps[find(g.edges[e][0])] |= 1 << e
    return list(comps.values())


def _is_connected_mask(g: Graph, mask: int) -> bool:
    """True iff mask is nonempty and G[mask] has a single component."""
    if not mask:
        return False
    e0 = (mask & -mask).bit_length() - 1
    frontier = g.edge_vmask[e0]
    seen_e = 1 << e0
    seen_v = 0
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        seen_v |= 1 << v
        new_e = mask & g.incident_mask[v] & ~seen_e
        seen_e |= new_e
        for e in _bits(new_e):
            frontier |= g.edge_vmask[e] & ~seen_v
    return seen_e == mask


def _pendant_items(g: Graph, mask: int) -> list[tuple[int, int]]:
    """(edge, pendant vertex) for each pendant edge of G[mask], ascending.

    An isolated edge reports its smaller endpoint.
    """
    deg: dict[int, int] = {}
    for e in _bits(mask):
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    out = []
    for e in _bits(mask):
        u, v = g.edges[e]  # u < v
        if deg[u] == 1:
            out.append((e, u))
        elif deg[v] == 1:
            out.append((e, v))
    return out


def _spanning_tree_mask(g: Graph, mask: int) -> int:
    """Deterministic DFS spanning tree of G[mask]; raises NotConnectedError."""
    if not mask:
        raise NotConnectedError("empty edge set has no spanning tree")
    vm = _vertices_mask(g, mask)
    root = (vm & -vm).bit_length() - 1
    visited = 1 << root
    tree = 0
    stack = [iter(g.adjacency[root])]
    while stack:
        advanced = False
        for w, e in stack[-1]:
            if mask >> e & 1 and not visited >> w & 1:
                visited |= 1 << w
                tree |= 1 << e
                stack.append(iter(g.adjacency[w]))
                advanced = True
                break
        if not advanced:
            stack.pop()
    if visited != vm:
        raise NotConnectedError("edge set induces a disconnected subgraph")
    return tree


# ---------------------------------------------------------------------------
# Public operations on edge subsets


def induced_vertices(g: Graph, s: EdgeSet | Iterable[int]) -> set[int]:
    """Endpoints of the edges in ``s``."""
    return set(_bits(_vertices_mask(g, _mask_of(s))))


def components_of(g: Graph, s: EdgeSet | Iterable[int]) -> list[EdgeSet]:
    """Partition of ``s`` into edge sets of connected components of G[s]."""
    return [EdgeSet.from_mask(c) for c in _components_masks(g, _mask_of(s))]


def is_tree(g: Graph, s: EdgeSet | Iterable[int]) -> bool:
    """True iff G[s] is connected and acyclic; the empty set is not a tree."""
    mask = _mask_of(s)
    if not mask:
        return False
    if not _is_connected_mask(g, mask):
        return False
    return mask.bit_count() == _vertices_mask(g, mask).bit_count() - 1


def pendant_edges(g: Graph, s: EdgeSet | Iterable[int]) -> list[tuple[int, int]]:
    """Edges of ``s`` with a degree-1 endpoint in G[s], with that endpoint."""
    return _pendant_items(g, _mask_of(s))


def spanning_tree_of(g: Graph, s: EdgeSet | Iterable[int]) -> EdgeSet:
    """Spanning tree of G[s] by depth-first search.

    The search starts from the smallest vertex of G[s] and explores incident
    edges in ascending edge-index order, so the result is deterministic.
    """
    return EdgeSet.from_mask(_spanning_tree_mask(g, _mask_of(s)))


# ---------------------------------------------------------------------------
# Text formats


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    """Parse `u v` pairs, one per line; `#` starts a comment."""
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected 'u v', got {raw.strip()!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(line_no, f"vertex ids must be integers, got {raw.strip()!r}") from None
    return pairs


def parse_dimacs(text: str) -> list[tuple[int, int]]:
    """Parse DIMACS `p edge n m` / `e u v` lines (1-indexed vertices)."""
    pairs = []
    declared_n = None
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(line_no, f"expected 'p edge n m', got {raw.strip()!r}")
            declared_n = int(parts[2])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ParseError(line_no, f"expected 'e u v', got {raw.strip()!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(line_no, f"vertex ids must be integers, got {raw.strip()!r}") from None
            if u < 1 or v < 1:
                raise ParseError(line_no, "DIMACS vertices are 1-indexed")
            pairs.append((u - 1, v - 1))
        else:
            raise ParseError(line_no, f"unrecognized line {raw.strip()!r}")
    if declared_n is not None:
        touched = {x for p in pairs for x in p}
        if len(touched) < declared_n:
            isolated = sorted(set(range(declared_n)) - touched)[0]
            raise DisconnectedError(f"graph is disconnected: vertex {isolated + 1} has no edges")
    return pairs


def to_edge_list_text(g: Graph) -> str:
    """Canonical `u v` serialization; `from_edge_list` inverts it."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def read_graph(source: str | Path, fmt: str = "edgelist") -> Graph:
    """Read a graph from a file path or `-` for standard input."""
    if str(source) == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text()
    pairs = parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)
    return Graph.from_edge_list(pairs)
