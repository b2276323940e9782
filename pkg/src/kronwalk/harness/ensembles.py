"""Deterministic graph ensembles for verification campaigns.

Every generator is a pure function of an :class:`EnsembleSpec` and a seeded
``random.Random``, so a campaign with the same spec and seed always visits
the same instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from ..graphs import Graph, enumerate_graphs, random_graph
from ..walks import is_connected


@dataclass(frozen=True)
class EnsembleSpec:
    """Caps for exhaustive sweeps and sizes for randomized ones."""

    exhaustive_order: int = 4  # labeled graphs with loops up to this order
    exhaustive_loopless_order: int = 5
    random_count: int = 500  # random instances per claim
    random_order: int = 6  # largest random factor in pair claims
    random_single_order: int = 8  # largest random graph in single-graph claims


def connected_graphs(
    max_order: int, allow_loops: bool, min_order: int = 1
) -> Iterator[Graph]:
    """All connected labeled graphs with orders in ``[min_order, max_order]``."""
    for n in range(min_order, max_order + 1):
        for g in enumerate_graphs(n, allow_loops, cap=n):
            if is_connected(g):
                yield g


def random_connected(
    rng: random.Random,
    max_order: int,
    min_order: int = 2,
    loops: bool = True,
    accept: Callable[[Graph], bool] | None = None,
) -> Graph:
    """Rejection-sample a connected random graph, optionally filtered."""
    while True:
        n = rng.randint(min_order, max_order)
        edge_prob = rng.uniform(0.3, 0.9)
        loop_prob = rng.uniform(0.0, 0.6) if loops else 0.0
        g = random_graph(n, edge_prob, loop_prob, seed=rng.randrange(2**60))
        if is_connected(g) and (accept is None or accept(g)):
            return g


def with_all_loops(g: Graph) -> Graph:
    return Graph(g.order, list(g.edges()) + [(v, v) for v in range(g.order)])
