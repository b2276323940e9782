"""Immutable undirected graphs on dense integer vertices.

Vertices are the integers ``0 .. order-1``.  Loops are allowed and a loop is
stored as the vertex appearing once in its own sorted neighbor tuple; it
counts as one edge and contributes two to the degree.  Parallel edges do not
exist.  Graphs are value objects: equality and hashing follow the adjacency
structure, and every mutation-like operation returns a new graph, so
instances can be shared freely across concurrent work.

Besides the core type this module provides the named family constructors
(paths, cycles, complete graphs with or without loops, complete multipartite
graphs, and the path-plus-clique / path-plus-cycle families), seeded random
generation, and exhaustive enumeration of small labeled graphs.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator

ENUM_CAP_LOOPLESS = 5
ENUM_CAP_LOOPED = 4


class Graph:
    """Undirected graph with loops allowed and no parallel edges."""

    __slots__ = ("_neighbors",)

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if order < 1:
            raise ValueError("graph order must be at least 1")
        adjacency: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._neighbors = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    @property
    def order(self) -> int:
        return len(self._neighbors)

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Sorted neighbors of ``u``; contains ``u`` itself iff ``u`` has a loop."""
        return self._neighbors[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbors[u]

    def has_loop(self, u: int) -> bool:
        return u in self._neighbors[u]

    @property
    def loop_flags(self) -> tuple[bool, ...]:
        return tuple(u in nbrs for u, nbrs in enumerate(self._neighbors))

    def degree(self, u: int) -> int:
        nbrs = self._neighbors[u]
        return len(nbrs) + (1 if u in nbrs else 0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u <= v``; a loop is ``(u, u)``."""
        for u, nbrs in enumerate(self._neighbors):
            for v in nbrs:
                if v >= u:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def remove_vertex(self, v: int) -> Graph:
        """New graph without ``v``; higher labels shift down by one."""
        if self.order < 2:
            raise ValueError("cannot remove the last vertex")
        if not 0 <= v < self.order:
            raise ValueError(f"vertex {v} out of range")
        kept = [
            (a - (a > v), b - (b > v))
            for a, b in self.edges()
            if a != v and b != v
        ]
        return Graph(self.order - 1, kept)

    def remove_edge(self, u: int, v: int) -> Graph:
        """New graph without the edge ``{u, v}``."""
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        lo, hi = min(u, v), max(u, v)
        kept = [e for e in self.edges() if e != (lo, hi)]
        return Graph(self.order, kept)

    def validate(self) -> None:
        """Re-check the structural invariants; raises ValueError on violation."""
        for u, nbrs in enumerate(self._neighbors):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbor tuple of {u} not sorted and duplicate-free")
            for v in nbrs:
                if not 0 <= v < self.order:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if u not in self._neighbors[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._neighbors == other._neighbors

    def __hash__(self) -> int:
        return hash(self._neighbors)

    def __repr__(self) -> str:
        return f"Graph({self.order}, {list(self.edges())!r})"


def make_path(n: int) -> Graph:
    """Path on ``n`` vertices, labeled 0..n-1 along the path."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices, labeled in cyclic order."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int, with_loops: bool = False) -> Graph:
    """Complete graph on ``n`` vertices, optionally with a loop on every vertex."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if with_loops:
        edges.extend((v, v) for v in range(n))
    return Graph(n, edges)


def make_complete_multipartite(part_sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive label blocks."""
    sizes = list(part_sizes)
    if len(sizes) < 2:
        raise ValueError("need at least two parts")
    if any(s < 1 for s in sizes):
        raise ValueError("every part needs at least one vertex")
    part_of: list[int] = []
    for index, size in enumerate(sizes):
        part_of.extend([index] * size)
    n = len(part_of)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    return Graph(n, edges)


def _family(n: int, p: int, attachment: Graph) -> Graph:
    # Path vertices first (0 .. n-p-1), attachment block after, one bridge edge.
    edges = [(i, i + 1) for i in range(n - p - 1)]
    edges.append((n - p - 1, n - p))
    edges.extend((n - p + a, n - p + b) for a, b in attachment.edges())
    return Graph(n, edges)


def make_h_family(n: int, p: int) -> Graph:
    """Path on ``n - p`` vertices joined by one edge to a complete graph on ``p``."""
    if p < 1:
        raise ValueError("clique part needs at least one vertex")
    if n <= p:
        raise ValueError("order must exceed the clique size")
    return _family(n, p, make_complete(p))


def make_f_family(n: int, p: int) -> Graph:
    """Path on ``n - p`` vertices joined by one edge to a cycle on ``p``."""
    if p < 3:
        raise ValueError("cycle part needs at least three vertices")
    if n <= p:
        raise ValueError("order must exceed the cycle size")
    return _family(n, p, make_cycle(p))


def random_graph(n: int, edge_prob: float, loop_prob: float, seed: int) -> Graph:
    """Independent-edge random graph, deterministic for a fixed seed.

    Pairs are decided in lexicographic order, then loops vertex by vertex,
    so the same seed reproduces the same graph on any platform.
    """
    if n < 1:
        raise ValueError("graph order must be at least 1")
    for name, prob in (("edge_prob", edge_prob), ("loop_prob", loop_prob)):
        if not 0 <= prob <= 1:
            raise ValueError(f"{name} must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    edges.extend((v, v) for v in range(n) if rng.random() < loop_prob)
    return Graph(n, edges)


def enumerate_graphs(
    n: int, allow_loops: bool = False, cap: int | None = None
) -> Iterator[Graph]:
    """Yield every labeled graph on ``n`` vertices exactly once.

    There are ``2**C(n, 2)`` graphs, times ``2**n`` when loops are allowed,
    so ``n`` is refused above ``cap`` (default 5 loopless, 4 with loops).
    """
    if cap is None:
        cap = ENUM_CAP_LOOPED if allow_loops else ENUM_CAP_LOOPLESS
    if n < 1:
        raise ValueError("graph order must be at least 1")
    if n > cap:
        raise ValueError(f"order {n} above enumeration cap {cap}")
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if allow_loops:
        slots.extend((v, v) for v in range(n))
    for mask in range(1 << len(slots)):
        yield Graph(n, [slot for i, slot in enumerate(slots) if mask >> i & 1])


def is_k_plus(g: Graph) -> bool:
    """True iff every vertex has a loop and all vertex pairs are adjacent."""
    n = g.order
    return all(len(g.neighbors(u)) == n and g.has_loop(u) for u in range(n))
