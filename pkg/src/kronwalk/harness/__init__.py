"""Verification harness: claim checkers, ensembles, and campaign driver."""

from .campaign import (
    CheckOutcome,
    Counterexample,
    counterexample_to_json,
    get_claim,
    graph_to_json,
    minimize_counterexample,
    run_campaign,
)
from .claims import CLAIM_IDS, REGISTRY, Claim, Failure
from .ensembles import EnsembleSpec, connected_graphs, random_connected, with_all_loops

__all__ = [
    "CLAIM_IDS",
    "CheckOutcome",
    "Claim",
    "Counterexample",
    "EnsembleSpec",
    "Failure",
    "REGISTRY",
    "connected_graphs",
    "counterexample_to_json",
    "get_claim",
    "graph_to_json",
    "minimize_counterexample",
    "random_connected",
    "run_campaign",
    "with_all_loops",
]
