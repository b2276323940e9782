"""Campaign driver: run claim checkers, collect and shrink counterexamples.

A campaign is deterministic in (claims, ensemble, seed): the random stream
of each claim is seeded from the campaign seed and the claim id, so adding
or removing claims never shifts another claim's instances.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from ..extlen import to_json
from ..graphs import Graph
from .claims import CLAIM_IDS, REGISTRY, Claim, Instance
from .ensembles import EnsembleSpec


@dataclass(frozen=True)
class Counterexample:
    graphs: tuple[Graph, ...]
    expected: object
    actual: object
    detail: str


@dataclass(frozen=True)
class CheckOutcome:
    claim_id: str
    instances_checked: int
    counterexample: Counterexample | None
    elapsed: float


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise ValueError(
            f"unknown claim {claim_id!r}; known: {', '.join(CLAIM_IDS)}"
        ) from None


def run_campaign(
    claim_ids: list[str], ensemble: EnsembleSpec, seed: int
) -> list[CheckOutcome]:
    """Check each claim over its ensemble, stopping a claim at its first failure."""
    outcomes = []
    for claim_id in claim_ids:
        claim = get_claim(claim_id)
        rng = random.Random(f"{seed}:{claim_id}")
        start = time.perf_counter()
        checked = 0
        counterexample = None
        for instance in claim.instances(ensemble, rng):
            checked += 1
            failure = claim.check(instance)
            if failure is not None:
                counterexample = Counterexample(
                    graphs=instance,
                    expected=failure.expected,
                    actual=failure.actual,
                    detail=failure.detail,
                )
                break
        outcomes.append(
            CheckOutcome(
                claim_id=claim_id,
                instances_checked=checked,
                counterexample=counterexample,
                elapsed=time.perf_counter() - start,
            )
        )
    return outcomes


def minimize_counterexample(claim: Claim, instance: Instance) -> Instance:
    """Greedy shrink: drop vertices, then edges, while the claim still fails.

    A non-failing instance is returned unchanged.  The result is locally
    minimal: no single vertex or edge deletion keeps it failing.
    """
    if claim.check(instance) is None:
        return instance
    graphs = list(instance)
    shrunk = True
    while shrunk:
        shrunk = False
        for i, g in enumerate(graphs):
            for v in range(g.order):
                if g.order < 2:
                    break
                candidate = graphs[:i] + [g.remove_vertex(v)] + graphs[i + 1 :]
                if claim.check(tuple(candidate)) is not None:
                    graphs = candidate
                    shrunk = True
                    break
            if shrunk:
                break
            for u, v in g.edges():
                candidate = graphs[:i] + [g.remove_edge(u, v)] + graphs[i + 1 :]
                if claim.check(tuple(candidate)) is not None:
                    graphs = candidate
                    shrunk = True
                    break
            if shrunk:
                break
    return tuple(graphs)


def graph_to_json(g: Graph) -> dict:
    return {"order": g.order, "edges": [list(edge) for edge in g.edges()]}


def counterexample_to_json(cx: Counterexample) -> dict:
    def value(obj: object) -> object:
        return to_json(obj) if isinstance(obj, (int, float)) else obj

    return {
        "graphs": [graph_to_json(g) for g in cx.graphs],
        "expected": value(cx.expected),
        "actual": value(cx.actual),
        "detail": cx.detail,
    }
