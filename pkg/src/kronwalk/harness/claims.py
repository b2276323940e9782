"""Checker registry: one executable checker per verified claim.

Each claim pairs a deterministic instance stream with a self-contained
check.  A check derives every hypothesis from the instance graphs
themselves (connectivity, primitivity, family shape, ...) and returns
``None`` both when the instance passes and when it falls outside the
claim's hypotheses; that makes counterexample minimization safe, because a
mutation that breaks a hypothesis simply stops failing.

Ground truth for product claims is always breadth-first search on the
explicitly constructed product, never the formula under test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from ..boolmat import adjacency, bool_mul
from ..extlen import is_finite
from ..graphs import (
    Graph,
    is_k_plus,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_f_family,
    make_h_family,
    make_path,
)
from ..kronecker import kronecker_product, product_is_connected
from ..predict import (
    predict_all_loops,
    predict_diameter,
    predict_family_product,
    predict_k_plus_factor,
    predict_multipartite_factor,
    summarize,
)
from ..walks import (
    diameter,
    distance_matrix,
    exponent,
    is_connected,
    is_primitive,
    odd_girth,
    parity_distances,
)
from ..cycles import l_o_bound
from .ensembles import EnsembleSpec, connected_graphs, random_connected, with_all_loops

Instance = tuple[Graph, ...]


@dataclass(frozen=True)
class Failure:
    expected: object
    actual: object
    detail: str


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    instances: Callable[[EnsembleSpec, random.Random], Iterator[Instance]]
    check: Callable[[Instance], Failure | None]


REGISTRY: dict[str, Claim] = {}


def _claim(claim_id: str, description: str, instances) -> Callable:
    def register(check: Callable[[Instance], Failure | None]) -> Callable:
        REGISTRY[claim_id] = Claim(claim_id, description, instances, check)
        return check

    return register


# ---------------------------------------------------------------------------
# Structure recognizers (hypothesis gates work on the graphs alone)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism by degree-guided backtracking; meant for small orders."""
    n = g.order
    if n != h.order:
        return False

    def signature(graph: Graph, v: int) -> tuple[int, bool]:
        return (graph.degree(v), graph.has_loop(v))

    if sorted(signature(g, v) for v in range(n)) != sorted(
        signature(h, v) for v in range(n)
    ):
        return False
    order_g = sorted(range(n), key=lambda v: (-g.degree(v), v))
    mapping = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order_g[i]
        for w in range(n):
            if used[w] or signature(h, w) != signature(g, v):
                continue
            if any(
                g.has_edge(v, prev) != h.has_edge(w, mapping[prev])
                for prev in order_g[:i]
            ):
                continue
            mapping[v] = w
            used[w] = True
            if place(i + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return place(0)


def clique_number(g: Graph) -> int:
    """Largest set of pairwise-adjacent distinct vertices (loops ignored)."""
    best = 1

    def extend(size: int, candidates: list[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(candidates):
            if size + len(candidates) - i <= best:
                return
            extend(size + 1, [w for w in candidates[i + 1 :] if g.has_edge(v, w)])

    extend(0, list(range(g.order)))
    return best


def complete_multipartite_parts(g: Graph) -> list[int] | None:
    """Part sizes if ``g`` is complete multipartite and loopless, else None."""
    n = g.order
    if any(g.has_loop(v) for v in range(n)):
        return None
    part = [-1] * n
    count = 0
    for start in range(n):
        if part[start] != -1:
            continue
        part[start] = count
        stack = [start]
        while stack:
            v = stack.pop()
            for w in range(n):
                if w != v and not g.has_edge(v, w) and part[w] == -1:
                    part[w] = count
                    stack.append(w)
        count += 1
    for u in range(n):
        for v in range(u + 1, n):
            if part[u] == part[v] and g.has_edge(u, v):
                return None
    sizes = [0] * count
    for v in range(n):
        sizes[part[v]] += 1
    return sizes


def _is_cycle_graph(g: Graph) -> bool:
    return (
        g.order >= 3
        and is_connected(g)
        and all(g.degree(v) == 2 and not g.has_loop(v) for v in range(g.order))
    )


def _is_path_graph(g: Graph) -> bool:
    if g.order < 2 or not is_connected(g):
        return False
    if any(g.has_loop(v) for v in range(g.order)):
        return False
    degrees = sorted(g.degree(v) for v in range(g.order))
    return degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:])


def _has_all_loops(g: Graph) -> bool:
    return all(g.has_loop(v) for v in range(g.order))


# ---------------------------------------------------------------------------
# Instance streams


def _exhaustive_pairs(spec: EnsembleSpec) -> list[Graph]:
    return list(
        connected_graphs(min(3, spec.exhaustive_order), allow_loops=True, min_order=2)
    )


def _pair_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    pool = _exhaustive_pairs(spec)
    for g1 in pool:
        for g2 in pool:
            yield (g1, g2)
    for _ in range(spec.random_count):
        yield (
            random_connected(rng, spec.random_order),
            random_connected(rng, spec.random_order),
        )


def _main_formula_instances(
    spec: EnsembleSpec, rng: random.Random
) -> Iterator[Instance]:
    pool = list(
        connected_graphs(
            min(4, spec.exhaustive_loopless_order), allow_loops=False, min_order=2
        )
    )
    for g1 in pool:
        for g2 in pool:
            yield (g1, g2)
    for _ in range(spec.random_count):
        yield (
            random_connected(rng, spec.random_order),
            random_connected(rng, spec.random_order),
        )


def _single_instances(
    spec: EnsembleSpec,
    rng: random.Random,
    loops: bool = True,
    max_random_order: int | None = None,
) -> Iterator[Instance]:
    for g in connected_graphs(spec.exhaustive_loopless_order, allow_loops=False):
        yield (g,)
    if loops:
        for g in connected_graphs(spec.exhaustive_order, allow_loops=True):
            yield (g,)
    cap = max_random_order if max_random_order is not None else spec.random_order
    for _ in range(spec.random_count):
        yield (random_connected(rng, cap, loops=loops),)


def _family_grid(kinds: str = "HF", span: int = 4) -> list[Graph]:
    grid: list[Graph] = []
    if "H" in kinds:
        for p in (3, 4, 5):
            grid.extend(make_h_family(p + k, p) for k in range(1, span + 1))
    if "F" in kinds:
        for p in (3, 5):
            grid.extend(make_f_family(p + k, p) for k in range(1, span + 1))
    return grid


def _bipartite_pool() -> list[Graph]:
    pool = [make_path(n) for n in range(2, 6)]
    pool.extend(make_cycle(n) for n in (4, 6))
    pool.append(make_complete_multipartite([1, 3]))
    return pool


# ---------------------------------------------------------------------------
# Checkers


@_claim(
    "Prop1.1",
    "exponent of a product of primitive factors is the larger factor exponent",
    _pair_instances,
)
def _check_product_exponent(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if not is_primitive(g1) or not is_primitive(g2):
        return None
    expected = max(exponent(g1).gamma, exponent(g2).gamma)
    actual = exponent(kronecker_product(g1, g2)).gamma
    if actual != expected:
        return Failure(expected, actual, "product exponent differs from max of factors")
    return None


def _lem22_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    yield from _single_instances(spec, rng, max_random_order=spec.random_order)


@_claim(
    "Lem2.2",
    "per-pair exponent marks the onset of all-ones entries in adjacency powers",
    _lem22_instances,
)
def _check_local_exponent_onset(instance: Instance) -> Failure | None:
    (g,) = instance
    n = g.order
    cap = 2 * n + 2
    a = adjacency(g)
    powers = [a]
    for _ in range(cap - 1):
        powers.append(bool_mul(powers[-1], a))
    pd = parity_distances(g)
    for u in range(n):
        for v in range(n):
            local = max(pd.odd[u][v], pd.even[u][v]) - 1
            bits = [p.bit(u, v) for p in powers]  # bits[k-1] is the k-th power
            if is_finite(local):
                local = int(local)
                if local >= 2 and bits[local - 2]:
                    return Failure(
                        False,
                        True,
                        f"walk of length {local - 1} exists below the "
                        f"local exponent at pair ({u}, {v})",
                    )
                if not all(bits[k - 1] for k in range(max(local, 1), cap + 1)):
                    return Failure(
                        True,
                        False,
                        f"missing walk length above the local exponent at ({u}, {v})",
                    )
            elif bits[cap - 1] and bits[cap - 2]:
                return Failure(
                    False,
                    True,
                    f"pair ({u}, {v}) has walks of both parities but "
                    "infinite local exponent",
                )
    return None


@_claim(
    "Lem2.4",
    "product of connected factors is connected iff a factor has an odd cycle",
    _pair_instances,
)
def _check_product_connectivity(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if not is_connected(g1) or not is_connected(g2):
        return None
    expected = product_is_connected(g1, g2)
    actual = is_connected(kronecker_product(g1, g2))
    if actual != expected:
        return Failure(expected, actual, "odd-cycle criterion disagrees with BFS")
    return None


@_claim(
    "Lem2.5",
    "same-parity factor walks combine into a product walk of the longer length",
    _pair_instances,
)
def _check_walk_combination(instance: Instance) -> Failure | None:
    g1, g2 = instance
    pd1, pd2 = parity_distances(g1), parity_distances(g2)
    pdp = parity_distances(kronecker_product(g1, g2))
    n2 = g2.order
    for x1 in range(g1.order):
        for y1 in range(g1.order):
            for x2 in range(n2):
                for y2 in range(n2):
                    x, y = x1 * n2 + x2, y1 * n2 + y2
                    for fac1, fac2, prod in (
                        (pd1.odd, pd2.odd, pdp.odd),
                        (pd1.even, pd2.even, pdp.even),
                    ):
                        bound = max(fac1[x1][y1], fac2[x2][y2])
                        if is_finite(bound) and prod[x][y] > bound:
                            return Failure(
                                f"<= {bound}",
                                prod[x][y],
                                f"no short same-parity product walk for "
                                f"({x1},{x2}) -> ({y1},{y2})",
                            )
    return None


@_claim(
    "Lem2.6",
    "a primitive graph has parity-extremal pairs at its exponent",
    lambda spec, rng: _single_instances(spec, rng, max_random_order=spec.random_order),
)
def _check_parity_extremal_pairs(instance: Instance) -> Failure | None:
    (g,) = instance
    if g.order < 2 or not is_primitive(g):
        return None
    gamma = exponent(g).gamma
    pd = parity_distances(g)
    n = g.order
    pairs = [(u, v) for u in range(n) for v in range(n)]
    if int(gamma) % 2 == 1:
        hit_at = any(pd.odd[u][v] == gamma for u, v in pairs)
        hit_next = any(pd.even[u][v] == gamma + 1 for u, v in pairs if u != v)
        parity = "odd"
    else:
        hit_at = any(pd.even[u][v] == gamma for u, v in pairs if u != v)
        hit_next = any(pd.odd[u][v] == gamma + 1 for u, v in pairs)
        parity = "even"
    if not hit_at:
        return Failure(True, False, f"no shortest {parity} walk of length {gamma}")
    if not hit_next:
        return Failure(True, False, f"no opposite-parity walk of length {gamma + 1}")
    return None


@_claim(
    "Lem2.7",
    "product distance is at least the smaller mixed-parity factor walk length",
    _pair_instances,
)
def _check_mixed_parity_lower_bound(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if not is_primitive(g1) or not is_primitive(g2):
        return None
    pd1, pd2 = parity_distances(g1), parity_distances(g2)
    dist = distance_matrix(kronecker_product(g1, g2))
    n2 = g2.order
    for x1 in range(g1.order):
        for y1 in range(g1.order):
            for x2 in range(n2):
                for y2 in range(n2):
                    x, y = x1 * n2 + x2, y1 * n2 + y2
                    if x == y:
                        continue
                    bound = max(
                        min(pd1.odd[x1][y1], pd2.even[x2][y2]),
                        min(pd1.even[x1][y1], pd2.odd[x2][y2]),
                    )
                    if dist[x][y] < bound:
                        return Failure(
                            f">= {bound}",
                            dist[x][y],
                            f"product pair ({x1},{x2}) -> ({y1},{y2}) too close",
                        )
    return None


@_claim(
    "Thm3.1",
    "exponent is at most the odd-cycle eccentricity bound",
    lambda spec, rng: _single_instances(
        spec, rng, max_random_order=spec.random_single_order
    ),
)
def _check_cycle_bound(instance: Instance) -> Failure | None:
    (g,) = instance
    # A lone looped vertex has exponent 1 but cycle bound 0; the claim is
    # about nontrivial graphs.
    if g.order < 2 or not is_connected(g):
        return None
    gamma = exponent(g).gamma
    report = l_o_bound(g)
    # Truncated enumeration still yields a valid upper bound.
    if gamma > report.l_o:
        return Failure(f"<= {report.l_o}", gamma, "exponent exceeds the cycle bound")
    return None


@_claim(
    "Cor2.10",
    "a connected graph with a loop has exponent at most twice its diameter",
    lambda spec, rng: _single_instances(spec, rng, max_random_order=spec.random_order),
)
def _check_loop_diameter_bound(instance: Instance) -> Failure | None:
    (g,) = instance
    if g.order < 2:
        return None  # the lone looped vertex has exponent 1 and diameter 0
    if not is_connected(g) or not any(g.has_loop(v) for v in range(g.order)):
        return None
    gamma = exponent(g).gamma
    bound = 2 * diameter(g)
    if gamma > bound:
        return Failure(f"<= {bound}", gamma, "exponent exceeds twice the diameter")
    return None


def _cor31_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    for g in _family_grid(kinds="F"):
        yield (g,)
    for g in connected_graphs(spec.exhaustive_loopless_order, allow_loops=False):
        yield (g,)
    for _ in range(spec.random_count):
        yield (random_connected(rng, spec.random_order, loops=False),)


@_claim(
    "Cor3.1",
    "exponent <= 2n - p - 1 for odd girth p, extremal only for the "
    "path-plus-odd-cycle family",
    _cor31_instances,
)
def _check_odd_girth_bound(instance: Instance) -> Failure | None:
    (g,) = instance
    if not is_primitive(g):
        return None
    p = odd_girth(g)
    if not is_finite(p) or p < 3:
        return None
    p = int(p)
    n = g.order
    gamma = exponent(g).gamma
    bound = 2 * n - p - 1
    if gamma > bound:
        return Failure(f"<= {bound}", gamma, "exponent exceeds 2n - p - 1")
    if gamma == bound:
        extremal = make_cycle(p) if n == p else make_f_family(n, p)
        if not are_isomorphic(g, extremal):
            return Failure(
                "isomorphic to the path-plus-odd-cycle family",
                "not isomorphic",
                "equality attained off the extremal family",
            )
    return None


def _cor32_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    for g in _family_grid(kinds="H"):
        yield (g,)
    for g in connected_graphs(spec.exhaustive_loopless_order, allow_loops=False):
        yield (g,)


@_claim(
    "Cor3.2",
    "the path-plus-clique family has exponent 2n - 2p + 2",
    _cor32_instances,
)
def _check_clique_family_exponent(instance: Instance) -> Failure | None:
    (g,) = instance
    if not is_primitive(g) or any(g.has_loop(v) for v in range(g.order)):
        return None
    p = clique_number(g)
    n = g.order
    if p < 3 or n <= p or not are_isomorphic(g, make_h_family(n, p)):
        return None
    expected = 2 * n - 2 * p + 2
    actual = exponent(g).gamma
    if actual != expected:
        return Failure(expected, actual, "family exponent formula violated")
    return None


@_claim(
    "Thm3.2",
    "product diameter lies within the exponent and diameter sandwich bounds",
    _pair_instances,
)
def _check_sandwich_bounds(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if not is_connected(g1) or not is_connected(g2):
        return None
    if g1.order < 2 or g2.order < 2:
        return None
    s1, s2 = summarize(g1), summarize(g2)
    if s1.bipartite and not s2.bipartite:
        s1, s2 = s2, s1  # the product is the same up to coordinate swap
    if s1.bipartite:
        return None  # no odd cycle anywhere: hypotheses unmet
    d = diameter(kronecker_product(g1, g2))
    if d < max(s1.diameter, s2.diameter):
        return Failure(f">= {max(s1.diameter, s2.diameter)}", d, "part 1 violated")
    if is_finite(s1.exponent) and is_finite(s2.exponent):
        low = (
            s1.exponent
            if s1.exponent == s2.exponent
            else min(s1.exponent, s2.exponent) + 1
        )
        if d < low:
            return Failure(f">= {low}", d, "part 2 violated")
        if d > max(s1.exponent, s2.exponent):
            return Failure(
                f"<= {max(s1.exponent, s2.exponent)}", d, "part 3 violated"
            )
    part4 = min(
        max(s1.exponent + 1, s2.diameter), max(s2.exponent + 1, s1.diameter)
    )
    if d > part4:
        return Failure(f"<= {part4}", d, "part 4 violated")
    if s2.bipartite and d != max(s1.exponent + 1, s2.diameter):
        return Failure(
            max(s1.exponent + 1, s2.diameter),
            d,
            "part 4 equality with a bipartite factor violated",
        )
    return None


@_claim(
    "Thm3.3",
    "product diameter equals the three-case exponent formula",
    _main_formula_instances,
)
def _check_main_formula(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if g1.order < 2 or g2.order < 2:
        return None
    if not is_connected(g1) or not is_connected(g2):
        return None
    predicted = predict_diameter(summarize(g1), summarize(g2))
    actual = diameter(kronecker_product(g1, g2))
    if predicted.value != actual:
        return Failure(
            predicted.value, actual, f"formula case {predicted.case} is wrong"
        )
    return None


def _thm34_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    pool = _exhaustive_pairs(spec)
    for g1 in pool:
        for g2 in pool:
            yield (g1, g2)


@_claim(
    "Thm3.4",
    "product diameter is 1 exactly when both factors are complete with all loops",
    _thm34_instances,
)
def _check_diameter_one(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if g1.order < 2 or g2.order < 2:
        return None
    if not is_connected(g1) or not is_connected(g2):
        return None
    both_k_plus = is_k_plus(g1) and is_k_plus(g2)
    actual = diameter(kronecker_product(g1, g2)) == 1
    if actual != both_k_plus:
        return Failure(both_k_plus, actual, "diameter-one characterization violated")
    return None


def _thm35_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    others = _exhaustive_pairs(spec)
    for m in (2, 3, 4):
        for g in others:
            yield (make_complete(m, with_loops=True), g)
    for _ in range(spec.random_count):
        yield (
            make_complete(rng.randint(2, 4), with_loops=True),
            random_connected(rng, spec.random_order),
        )


@_claim(
    "Thm3.5",
    "a complete-all-loops factor gives diameter d(G), or 2 when d(G) = 1",
    _thm35_instances,
)
def _check_k_plus_factor(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if not is_k_plus(g1) or g1.order < 2:
        return None
    if g2.order < 2 or not is_connected(g2) or is_k_plus(g2):
        return None
    expected = predict_k_plus_factor(summarize(g1), summarize(g2)).value
    actual = diameter(kronecker_product(g1, g2))
    if actual != expected:
        return Failure(expected, actual, "complete-with-loops closed form violated")
    return None


_PART_LISTS = (
    [1, 1, 1],
    [2, 1, 1],
    [2, 2, 1],
    [2, 2, 2],
    [3, 1, 1],
    [1, 1, 1, 1],
    [2, 1, 1, 1],
)


def _multipartite_instances(
    spec: EnsembleSpec, rng: random.Random
) -> Iterator[Instance]:
    factors = _exhaustive_pairs(spec)
    for parts in _PART_LISTS:
        h = make_complete_multipartite(parts)
        for g in factors:
            yield (g, h)
    for _ in range(spec.random_count):
        parts = list(rng.choice(_PART_LISTS))
        yield (
            random_connected(rng, spec.random_order),
            make_complete_multipartite(parts),
        )


@_claim(
    "ThmMultipartite",
    "a complete multipartite factor on three or more parts follows the "
    "small-diameter closed form",
    _multipartite_instances,
)
def _check_multipartite_factor(instance: Instance) -> Failure | None:
    g, h = instance
    parts = complete_multipartite_parts(h)
    if parts is None or len(parts) < 3:
        return None
    if g.order < 2 or not is_connected(g):
        return None
    expected = predict_multipartite_factor(summarize(g), parts).value
    actual = diameter(kronecker_product(g, h))
    if actual != expected:
        return Failure(expected, actual, "multipartite closed form violated")
    return None


def _hf_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    families = _family_grid(span=3)
    for g in families:
        for h in _bipartite_pool():
            yield (g, h)
    for g in families:
        for h in families:
            yield (g, h)


@_claim(
    "CorHF",
    "factors with exponent exactly twice their diameter follow the family "
    "closed form",
    _hf_instances,
)
def _check_family_products(instance: Instance) -> Failure | None:
    g, h = instance
    s1, s2 = summarize(g), summarize(h)
    if not s1.connected or s1.bipartite or s1.exponent != 2 * s1.diameter:
        return None
    if s1.diameter < 1 or s2.diameter < 1 or not s2.connected:
        return None
    if not s2.bipartite and s2.exponent != 2 * s2.diameter:
        return None
    expected = predict_family_product(s1, s2).value
    actual = diameter(kronecker_product(g, h))
    if actual != expected:
        return Failure(expected, actual, "family closed form violated")
    return None


def _all_loops_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    pool = [with_all_loops(g) for g in _exhaustive_pairs(spec)]
    for g1 in pool:
        for g2 in pool:
            yield (g1, g2)
    for _ in range(spec.random_count):
        yield (
            with_all_loops(random_connected(rng, spec.random_order)),
            with_all_loops(random_connected(rng, spec.random_order)),
        )


@_claim(
    "CorLoops",
    "product of all-loops factors has diameter max(d1, d2)",
    _all_loops_instances,
)
def _check_all_loops(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if g1.order < 2 or g2.order < 2:
        return None
    if not _has_all_loops(g1) or not _has_all_loops(g2):
        return None
    if not is_connected(g1) or not is_connected(g2):
        return None
    expected = predict_all_loops(g1, g2).value
    actual = diameter(kronecker_product(g1, g2))
    if actual != expected:
        return Failure(expected, actual, "all-loops closed form violated")
    return None


@_claim(
    "CorK2",
    "exponent equals the diameter of the product with a single edge, minus one",
    lambda spec, rng: _single_instances(spec, rng, max_random_order=spec.random_order),
)
def _check_double_cover_exponent(instance: Instance) -> Failure | None:
    (g,) = instance
    if g.order < 2 or not is_primitive(g):
        return None
    expected = exponent(g).gamma
    actual = diameter(kronecker_product(g, make_complete(2))) - 1
    if actual != expected:
        return Failure(expected, actual, "double-cover diameter identity violated")
    return None


def _cycle_instances(spec: EnsembleSpec, rng: random.Random) -> Iterator[Instance]:
    for m in (3, 5, 7):
        for n in (3, 4, 5, 6, 7):
            yield (make_cycle(m), make_cycle(n))
        for n in range(2, 8):
            yield (make_cycle(m), make_path(n))


@_claim(
    "CorCycles",
    "products of odd cycles with cycles and paths match the closed forms",
    _cycle_instances,
)
def _check_cycle_products(instance: Instance) -> Failure | None:
    g1, g2 = instance
    if not _is_cycle_graph(g1) or g1.order % 2 == 0:
        return None
    m = g1.order
    if _is_cycle_graph(g2):
        n = g2.order
        if n % 2 == 0:
            expected = max(m, n // 2)
        elif m == n:
            expected = m - 1
        elif m > n:
            expected = max(n, (m - 1) // 2)
        else:
            expected = max(m, (n - 1) // 2)
    elif _is_path_graph(g2):
        expected = max(m, g2.order - 1)
    else:
        return None
    actual = diameter(kronecker_product(g1, g2))
    if actual != expected:
        return Failure(expected, actual, "cycle/path closed form violated")
    return None


CLAIM_IDS: tuple[str, ...] = tuple(REGISTRY)
