"""Traversal of the solution supergraph: full and k-best enumeration.

Both algorithms walk the directed supergraph whose vertices are the minimal
CEDS and whose arcs come from :func:`cedsenum.neighbors.all_neighbors`.
Full enumeration is a FIFO breadth-first search; k-best replaces the queue
with a priority queue ordered by (size, canonical key) and stops after k
outputs.  Graphs that admit a single-edge CEDS bypass the supergraph
entirely via the closed-form trivial enumeration.
"""

from __future__ import annotations

import heapq
from collections import deque
from collections.abc import Callable
from dataclasses import asdict, dataclass
from time import perf_counter

from .approx import approx_min_ceds
from .ceds import Solution, enumerate_trivial, min_ceds_is_singleton, minimalize
from .graph import EdgeSet, Graph
from .neighbors import NeighborBatch, Provenance, all_neighbors

Sink = Callable[[Solution], None]
InsertHook = Callable[[Solution, Provenance], None]


class MaxVisitedExceeded(RuntimeError):
    """The visited-solution guard tripped; enumeration was aborted."""

    def __init__(self, limit: int):
        super().__init__(f"visited-solution limit of {limit} exceeded")
        self.limit = limit


class VisitedIndex:
    """Membership index over canonical keys.

    A hash set of the key tuples: insert and lookup cost is proportional to
    the key length (hashing the tuple), with no false answers either way.
    """

    __slots__ = ("_keys",)

    def __init__(self) -> None:
        self._keys: set[tuple[int, ...]] = set()

    def insert(self, key: tuple[int, ...]) -> None:
        self._keys.add(key)

    def __contains__(self, key: tuple[int, ...]) -> bool:
        return key in self._keys

    def __len__(self) -> int:
        return len(self._keys)


@dataclass
class EnumerationStats:
    outputs: int = 0
    expansions: int = 0
    duplicates: int = 0
    max_delay_s: float = 0.0
    mean_delay_s: float = 0.0
    peak_visited: int = 0

    def to_json_dict(self) -> dict:
        return asdict(self)


def initial_solution(g: Graph) -> Solution:
    """Minimalize the full edge set; the start node for full enumeration."""
    return minimalize(g, EdgeSet.from_mask(g.all_edges_mask))


def _run(
    g: Graph,
    sink: Sink,
    *,
    kbest: bool,
    k: int | None,
    max_visited: int | None,
    neighbor_cache: dict | None,
    on_insert: InsertHook | None,
) -> EnumerationStats:
    stats = EnumerationStats()
    t_last = perf_counter()
    delays: list[float] = []

    def emit(sol: Solution) -> None:
        nonlocal t_last
        now = perf_counter()
        delays.append(now - t_last)
        t_last = now
        sink(sol)
        stats.outputs += 1

    def finalize() -> EnumerationStats:
        if delays:
            stats.max_delay_s = max(delays)
            stats.mean_delay_s = sum(delays) / len(delays)
        return stats

    if min_ceds_is_singleton(g) is not None:
        sols = enumerate_trivial(g)
        if kbest and k is not None:
            sols = sols[:k]
        for sol in sols:
            emit(sol)
            stats.expansions += 1  # each output is produced directly, no batches
        return finalize()

    start = approx_min_ceds(g).solution if kbest else initial_solution(g)
    visited = VisitedIndex()
    visited.insert(start.canonical_key)
    heap: list[Solution] = []
    queue: deque[Solution] = deque()
    if kbest:
        heap.append(start)
    else:
        queue.append(start)
    while heap or queue:
        sol = heapq.heappop(heap) if kbest else queue.popleft()
        emit(sol)
        if kbest and k is not None and stats.outputs >= k:
            break
        stats.expansions += 1
        key = sol.canonical_key
        batch: NeighborBatch | None = None
        if neighbor_cache is not None:
            batch = neighbor_cache.get(key)
        if batch is None:
            batch = all_neighbors(g, sol)
            if neighbor_cache is not None:
                neighbor_cache[key] = batch
        for nb, prov in batch.items:
            if nb.canonical_key in visited:
                stats.duplicates += 1
                continue
            if max_visited is not None and len(visited) >= max_visited:
                raise MaxVisitedExceeded(max_visited)
            visited.insert(nb.canonical_key)
            if on_insert is not None:
                on_insert(nb, prov)
            if kbest:
                heapq.heappush(heap, nb)
            else:
                queue.append(nb)
    stats.peak_visited = len(visited)
    return finalize()


def enumerate_all(
    g: Graph,
    sink: Sink,
    *,
    max_visited: int | None = None,
    neighbor_cache: dict | None = None,
    on_insert: InsertHook | None = None,
) -> EnumerationStats:
    """Feed every minimal CEDS of g to ``sink`` exactly once.

    Breadth-first from ``initial_solution``; deterministic output order.
    ``neighbor_cache`` (a plain dict) lets callers reuse neighbor batches
    across runs on the same graph.  Raises :class:`MaxVisitedExceeded` when
    the optional ``max_visited`` guard trips; sink errors propagate.
    """
    return _run(
        g, sink, kbest=False, k=None, max_visited=max_visited,
        neighbor_cache=neighbor_cache, on_insert=on_insert,
    )


def enumerate_kbest(
    g: Graph,
    k: int | None,
    sink: Sink,
    *,
    max_visited: int | None = None,
    neighbor_cache: dict | None = None,
    on_insert: InsertHook | None = None,
) -> EnumerationStats:
    """Feed up to ``k`` minimal CEDS to ``sink``, smallest sizes first.

    Best-first from the approximation seed, ordered by (size, canonical
    key).  Every emitted prefix satisfies the size guarantee checked in the
    oracle module: emitted sizes stay within a constant factor of the
    smallest solution not yet emitted.  ``k=None`` removes the output cap,
    which yields exactly the full solution set in best-first order.
    """
    if k is not None and k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return _run(
        g, sink, kbest=True, k=k, max_visited=max_visited,
        neighbor_cache=neighbor_cache, on_insert=on_insert,
    )
