"""Command-line front door.

Commands: ``metrics`` (walk metrics of one graph), ``product`` (build a
Kronecker product, compare predicted and measured diameter), ``predict``
(closed-form prediction only), ``verify`` (run claim checkers), and
``generate`` (construct a graph and write it out).

Graphs are given either as an edge-list file path or as a family
expression: ``path:n``, ``cycle:n``, ``complete:n``, ``complete+:n``,
``multipartite:a,b,c``, ``H:n,p``, ``F:n,p``.

All stdout output is a single JSON document (infinite values appear as the
string "inf"); progress and diagnostics go to stderr.  Exit codes: 0 ok,
1 usage or input error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cycles import DEFAULT_CYCLE_CAP, l_o_bound
from .edgelist import read_graph, write_graph
from .extlen import to_json
from .graphs import (
    Graph,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_f_family,
    make_h_family,
    make_path,
    random_graph,
)
from .harness import (
    CLAIM_IDS,
    Counterexample,
    EnsembleSpec,
    counterexample_to_json,
    get_claim,
    minimize_counterexample,
    run_campaign,
)
from .kronecker import kronecker_product
from .predict import (
    DiameterPrediction,
    predict_diameter,
    predict_with_trivial_factor,
    summarize,
)
from .walks import diameter, exponent, is_bipartite, is_connected, odd_girth


class SpecError(ValueError):
    """Unparseable or invalid graph specification."""


_FAMILIES = {
    "path": (make_path, 1),
    "cycle": (make_cycle, 1),
    "complete": (lambda n: make_complete(n, with_loops=False), 1),
    "complete+": (lambda n: make_complete(n, with_loops=True), 1),
    "H": (make_h_family, 2),
    "F": (make_f_family, 2),
}


def parse_graph_spec(spec: str) -> Graph:
    """Family expression or edge-list file path."""
    head, sep, rest = spec.partition(":")
    if sep and head in _FAMILIES:
        builder, arity = _FAMILIES[head]
        args = _int_args(spec, rest, arity)
        try:
            return builder(*args)
        except ValueError as exc:
            raise SpecError(f"{spec}: {exc}") from None
    if sep and head == "multipartite":
        args = _int_args(spec, rest, None)
        try:
            return make_complete_multipartite(args)
        except ValueError as exc:
            raise SpecError(f"{spec}: {exc}") from None
    try:
        return read_graph(spec)
    except OSError as exc:
        raise SpecError(f"cannot read graph file {spec!r}: {exc}") from None
    except ValueError as exc:
        raise SpecError(f"{spec}: {exc}") from None


def _int_args(spec: str, rest: str, arity: int | None) -> list[int]:
    parts = rest.split(",") if rest else []
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise SpecError(f"{spec}: parameters must be integers") from None
    if arity is not None and len(values) != arity:
        raise SpecError(f"{spec}: expected {arity} parameter(s)")
    return values


def _emit(document: dict) -> None:
    print(json.dumps(document, sort_keys=True, indent=2, allow_nan=False))


def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def _prediction_json(pred: DiameterPrediction) -> dict:
    bounds = None
    if pred.bounds is not None:
        bounds = {"lower": to_json(pred.bounds.lower), "upper": to_json(pred.bounds.upper)}
    return {
        "predicted": to_json(pred.value),
        "case": pred.case,
        "bounds": bounds,
        "gamma1": to_json(pred.gamma1),
        "gamma2": to_json(pred.gamma2),
        "d1": to_json(pred.d1),
        "d2": to_json(pred.d2),
    }


def _predict_pair(g1: Graph, g2: Graph) -> DiameterPrediction:
    if g1.order == 1:
        return predict_with_trivial_factor(summarize(g2), g1)
    if g2.order == 1:
        return predict_with_trivial_factor(summarize(g1), g2)
    return predict_diameter(summarize(g1), summarize(g2))


def cmd_metrics(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    rep = exponent(g)
    connected = is_connected(g)
    document = {
        "order": g.order,
        "edges": g.edge_count,
        "connected": connected,
        "bipartite": is_bipartite(g),
        "odd_girth": to_json(odd_girth(g)),
        "diameter": to_json(diameter(g)),
        "exponent": to_json(rep.gamma),
        "witness_pair": list(rep.witness_pair) if rep.witness_pair else None,
        "l_o": None,
        "l_o_exact": None,
    }
    if connected:
        bound = l_o_bound(g, cap=args.cap_cycles)
        document["l_o"] = to_json(bound.l_o)
        document["l_o_exact"] = bound.exact
    _emit(document)
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    g1 = parse_graph_spec(args.graph1)
    g2 = parse_graph_spec(args.graph2)
    product = kronecker_product(g1, g2)
    prediction = _predict_pair(g1, g2)
    measured = diameter(product)
    if args.out:
        _write_output(args.out, product, args.format)
    document = {
        "order": product.order,
        "edges": product.edge_count,
        "measured": to_json(measured),
        "match": prediction.value == measured,
        "out": args.out,
        **_prediction_json(prediction),
    }
    _emit(document)
    if prediction.value != measured:
        _progress(
            f"prediction {to_json(prediction.value)} disagrees with "
            f"measured diameter {to_json(measured)}"
        )
        return 2
    return 0


def cmd_predict(args: argparse.Namespace) -> int:
    g1 = parse_graph_spec(args.graph1)
    g2 = parse_graph_spec(args.graph2)
    _emit(_prediction_json(_predict_pair(g1, g2)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.claims == "all":
        claim_ids = list(CLAIM_IDS)
    else:
        claim_ids = [c.strip() for c in args.claims.split(",") if c.strip()]
    for claim_id in claim_ids:
        get_claim(claim_id)  # fail fast on unknown ids
    ensemble = EnsembleSpec(
        exhaustive_order=args.exhaustive,
        exhaustive_loopless_order=args.exhaustive + 1,
        random_count=args.random,
    )
    results = []
    failed = False
    for outcome in run_campaign(claim_ids, ensemble, args.seed):
        entry = {
            "claim_id": outcome.claim_id,
            "description": get_claim(outcome.claim_id).description,
            "instances_checked": outcome.instances_checked,
            "pass": outcome.counterexample is None,
            "counterexample": None,
        }
        _progress(
            f"{outcome.claim_id}: {outcome.instances_checked} instances "
            f"in {outcome.elapsed:.2f}s"
        )
        if outcome.counterexample is not None:
            failed = True
            claim = get_claim(outcome.claim_id)
            minimized = minimize_counterexample(claim, outcome.counterexample.graphs)
            failure = claim.check(minimized)
            entry["counterexample"] = counterexample_to_json(
                Counterexample(
                    graphs=minimized,
                    expected=failure.expected,
                    actual=failure.actual,
                    detail=failure.detail,
                )
            )
        results.append(entry)
    _emit(
        {
            "seed": args.seed,
            "claims": results,
            "pass": not failed,
        }
    )
    return 2 if failed else 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.spec.startswith("random:"):
        params = _int_args(args.spec, args.spec.partition(":")[2], 1)
        try:
            g = random_graph(params[0], args.edge_prob, args.loop_prob, args.seed)
        except ValueError as exc:
            raise SpecError(f"{args.spec}: {exc}") from None
    else:
        g = parse_graph_spec(args.spec)
    if args.out:
        _write_output(args.out, g, args.format)
        _emit({"order": g.order, "edges": g.edge_count, "out": args.out})
    else:
        _emit(
            {
                "order": g.order,
                "edges": [list(e) for e in g.edges()],
                "out": None,
            }
        )
    return 0


def _write_output(path: str, g: Graph, fmt: str) -> None:
    if fmt == "edgelist":
        write_graph(path, g)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(
                {"order": g.order, "edges": [list(e) for e in g.edges()]},
                handle,
                sort_keys=True,
            )
            handle.write("\n")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # verification mismatches here, so remap usage errors to 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="kronwalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    metrics = sub.add_parser("metrics", help="walk metrics of one graph")
    metrics.add_argument("graph", help="edge-list file or family expression")
    metrics.add_argument("--cap-cycles", type=int, default=DEFAULT_CYCLE_CAP)
    metrics.set_defaults(func=cmd_metrics)

    product = sub.add_parser("product", help="build a product and check its diameter")
    product.add_argument("graph1")
    product.add_argument("graph2")
    product.add_argument("--out", help="write the product to this path")
    product.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    product.set_defaults(func=cmd_product)

    predict = sub.add_parser("predict", help="closed-form diameter prediction")
    predict.add_argument("graph1")
    predict.add_argument("graph2")
    predict.set_defaults(func=cmd_predict)

    verify = sub.add_parser("verify", help="run claim checkers")
    verify.add_argument("--claims", default="all", help="comma-separated ids or 'all'")
    verify.add_argument("--exhaustive", type=int, default=4, metavar="N",
                        help="exhaustive cap with loops (loopless cap is N+1)")
    verify.add_argument("--random", type=int, default=500, metavar="COUNT")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)

    generate = sub.add_parser("generate", help="construct a graph and write it out")
    generate.add_argument("spec", help="family expression or random:n")
    generate.add_argument("--out")
    generate.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    generate.add_argument("--edge-prob", type=float, default=0.5)
    generate.add_argument("--loop-prob", type=float, default=0.0)
    generate.add_argument("--seed", type=int, default=0)
    generate.set_defaults(func=cmd_generate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        _progress(f"error: {exc}")
        return 1
    except ValueError as exc:
        _progress(f"error: {exc}")
        return 1
    except OSError as exc:
        _progress(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
