"""Closed-form diameter prediction for Kronecker products.

The main predictor maps two factor summaries to the exact product diameter:
the common exponent when the exponents agree, otherwise the larger of the
smaller exponent plus one and the other factor's diameter.  A bipartite
factor has infinite exponent and infinity compares greater than any finite
value, which folds the bipartite case into the same trichotomy; two
bipartite (or any disconnected) factors give a disconnected product.

Alongside the general formula this module evaluates the special closed
forms: products of complete-with-loops factors, a complete multipartite
factor, factors whose exponent is exactly twice their diameter (the
path-plus-clique and path-plus-odd-cycle families), and all-loops factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .extlen import INF, ExtLen, is_finite
from .graphs import Graph, is_k_plus
from .walks import diameter, exponent, is_bipartite, is_connected

CASE_EQUAL_EXPONENTS = "EqualExponents"
CASE_GAMMA1_GREATER = "Gamma1Greater"
CASE_GAMMA2_GREATER = "Gamma2Greater"
CASE_DISCONNECTED = "Disconnected"
CASE_ORDER_ONE = "OrderOneFactor"


@dataclass(frozen=True)
class FactorSummary:
    """Everything the predictors need to know about one factor."""

    order: int
    diameter: ExtLen
    exponent: ExtLen
    bipartite: bool
    connected: bool
    is_k_plus: bool


@dataclass(frozen=True)
class Bounds:
    lower: ExtLen
    upper: ExtLen


@dataclass(frozen=True)
class DiameterPrediction:
    value: ExtLen
    case: str
    bounds: Bounds | None
    gamma1: ExtLen
    gamma2: ExtLen
    d1: ExtLen
    d2: ExtLen


def summarize(g: Graph) -> FactorSummary:
    return FactorSummary(
        order=g.order,
        diameter=diameter(g),
        exponent=exponent(g).gamma,
        bipartite=is_bipartite(g),
        connected=is_connected(g),
        is_k_plus=is_k_plus(g),
    )


def diameter_bounds(s1: FactorSummary, s2: FactorSummary) -> Bounds:
    """Sandwich bounds on the product diameter.

    Lower: the larger factor diameter, raised to the common exponent (equal
    case) or the smaller exponent plus one when both factors have finite
    exponents.  Upper: the smaller of ``max(g1 + 1, d2)``, ``max(g2 + 1,
    d1)`` and ``max(g1, g2)`` (the last is vacuous when an exponent is
    infinite).
    """
    g1, g2 = s1.exponent, s2.exponent
    lower = max(s1.diameter, s2.diameter)
    if is_finite(g1) and is_finite(g2):
        lower = max(lower, g1 if g1 == g2 else min(g1, g2) + 1)
    upper = min(max(g1 + 1, s2.diameter), max(g2 + 1, s1.diameter), max(g1, g2))
    return Bounds(lower=lower, upper=upper)


def predict_diameter(s1: FactorSummary, s2: FactorSummary) -> DiameterPrediction:
    """Exact product diameter from the factor exponents and diameters.

    Requires both factors to have order at least two; an order-one factor
    takes the dedicated path in :func:`predict_with_trivial_factor`.
    Disconnected factors, or two bipartite ones, yield a Disconnected
    prediction with infinite value.
    """
    for label, s in (("first", s1), ("second", s2)):
        if s.order < 2:
            raise ValueError(
                f"{label} factor has order 1; use predict_with_trivial_factor"
            )
    g1, g2 = s1.exponent, s2.exponent
    d1, d2 = s1.diameter, s2.diameter
    if not s1.connected or not s2.connected or (s1.bipartite and s2.bipartite):
        return DiameterPrediction(
            value=INF,
            case=CASE_DISCONNECTED,
            bounds=diameter_bounds(s1, s2),
            gamma1=g1,
            gamma2=g2,
            d1=d1,
            d2=d2,
        )
    bounds = diameter_bounds(s1, s2)
    if g1 == g2:
        value: ExtLen = g1
        case = CASE_EQUAL_EXPONENTS
    elif g1 > g2:
        value = max(g2 + 1, d1)
        case = CASE_GAMMA1_GREATER
    else:
        value = max(g1 + 1, d2)
        case = CASE_GAMMA2_GREATER
    return DiameterPrediction(
        value=value, case=case, bounds=bounds, gamma1=g1, gamma2=g2, d1=d1, d2=d2
    )


def predict_with_trivial_factor(
    s_big: FactorSummary, g_small: Graph
) -> DiameterPrediction:
    """Product with an order-one factor.

    A looped single vertex is a multiplicative identity, so the product
    keeps the other factor's diameter.  A bare single vertex has no edges,
    so the product is edgeless: disconnected for order two or more,
    a single vertex (diameter 0) otherwise.
    """
    if g_small.order != 1:
        raise ValueError("small factor must have order 1")
    s_small = summarize(g_small)
    if g_small.has_loop(0):
        value: ExtLen = s_big.diameter
        case = CASE_ORDER_ONE
    elif s_big.order >= 2:
        value = INF
        case = CASE_DISCONNECTED
    else:
        value = 0
        case = CASE_ORDER_ONE
    return DiameterPrediction(
        value=value,
        case=case,
        bounds=None,
        gamma1=s_big.exponent,
        gamma2=s_small.exponent,
        d1=s_big.diameter,
        d2=s_small.diameter,
    )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def predict_k_plus_pair(s1: FactorSummary, s2: FactorSummary) -> DiameterPrediction:
    """Both factors complete with all loops: the product has diameter 1."""
    for label, s in (("first", s1), ("second", s2)):
        _require(s.order >= 2, f"{label} factor: order must be at least 2")
        _require(s.is_k_plus, f"{label} factor: not complete with a loop everywhere")
    return DiameterPrediction(
        value=1,
        case=CASE_EQUAL_EXPONENTS,
        bounds=diameter_bounds(s1, s2),
        gamma1=s1.exponent,
        gamma2=s2.exponent,
        d1=s1.diameter,
        d2=s2.diameter,
    )


def predict_k_plus_factor(
    s_kp: FactorSummary, s_other: FactorSummary
) -> DiameterPrediction:
    """Complete-with-loops factor times anything else connected.

    The product diameter is the other factor's, except that diameter 1
    becomes 2.
    """
    _require(s_kp.order >= 2, "first factor: order must be at least 2")
    _require(s_kp.is_k_plus, "first factor: not complete with a loop everywhere")
    _require(s_other.order >= 2, "second factor: order must be at least 2")
    _require(s_other.connected, "second factor: must be connected")
    _require(
        not s_other.is_k_plus,
        "second factor: must not be complete with a loop everywhere",
    )
    d = s_other.diameter
    value: ExtLen = 2 if d == 1 else d
    return DiameterPrediction(
        value=value,
        case=CASE_GAMMA2_GREATER,
        bounds=diameter_bounds(s_kp, s_other),
        gamma1=s_kp.exponent,
        gamma2=s_other.exponent,
        d1=s_kp.diameter,
        d2=s_other.diameter,
    )


def predict_multipartite_factor(
    s_g: FactorSummary, part_sizes: Sequence[int]
) -> DiameterPrediction:
    """Connected factor times a complete multipartite graph on 3+ parts."""
    _require(len(part_sizes) >= 3, "multipartite factor: need at least 3 parts")
    _require(all(s >= 1 for s in part_sizes), "multipartite factor: empty part")
    _require(s_g.connected, "first factor: must be connected")
    _require(s_g.diameter >= 1, "first factor: diameter must be at least 1")
    d, gam = s_g.diameter, s_g.exponent
    if d >= 3:
        value: ExtLen = d
    elif gam <= 2:
        value = 2
    else:
        value = 3
    # The multipartite factor always has exponent 2.
    if gam == 2:
        case = CASE_EQUAL_EXPONENTS
    elif gam > 2:
        case = CASE_GAMMA1_GREATER
    else:
        case = CASE_GAMMA2_GREATER
    d2 = 1 if all(s == 1 for s in part_sizes) else 2
    return DiameterPrediction(
        value=value,
        case=case,
        bounds=None,
        gamma1=gam,
        gamma2=2,
        d1=d,
        d2=d2,
    )


def predict_family_product(
    s1: FactorSummary, s2: FactorSummary
) -> DiameterPrediction:
    """Product where the first factor's exponent is exactly twice its diameter.

    The path-plus-clique and path-plus-odd-cycle families have this
    property.  Against a bipartite factor the diameter is
    ``max(2 d1 + 1, d2)``; against another such factor it follows the
    diameter trichotomy.
    """
    _require(s1.connected, "first factor: must be connected")
    _require(not s1.bipartite, "first factor: must contain an odd cycle")
    _require(s1.diameter >= 1, "first factor: diameter must be at least 1")
    _require(
        s1.exponent == 2 * s1.diameter,
        "first factor: exponent must equal twice the diameter",
    )
    _require(s2.connected, "second factor: must be connected")
    _require(s2.diameter >= 1, "second factor: diameter must be at least 1")
    d1, d2 = s1.diameter, s2.diameter
    if s2.bipartite:
        value: ExtLen = max(2 * d1 + 1, d2)
        case = CASE_GAMMA2_GREATER
    else:
        _require(
            s2.exponent == 2 * s2.diameter,
            "second factor: exponent must equal twice the diameter",
        )
        if d1 == d2:
            value = 2 * d1
            case = CASE_EQUAL_EXPONENTS
        elif d1 > d2:
            value = max(d1, 2 * d2 + 1)
            case = CASE_GAMMA1_GREATER
        else:
            value = max(d2, 2 * d1 + 1)
            case = CASE_GAMMA2_GREATER
    return DiameterPrediction(
        value=value,
        case=case,
        bounds=diameter_bounds(s1, s2),
        gamma1=s1.exponent,
        gamma2=s2.exponent,
        d1=d1,
        d2=d2,
    )


def predict_all_loops(g1: Graph, g2: Graph) -> DiameterPrediction:
    """Product of two connected factors with a loop on every vertex.

    Loops give walks of every length at least the distance, so each
    exponent equals the diameter and the product diameter is the larger
    factor diameter.
    """
    summaries = []
    for label, g in (("first", g1), ("second", g2)):
        _require(g.order >= 2, f"{label} factor: order must be at least 2")
        _require(is_connected(g), f"{label} factor: must be connected")
        _require(
            all(g.has_loop(v) for v in range(g.order)),
            f"{label} factor: every vertex must have a loop",
        )
        summaries.append(summarize(g))
    s1, s2 = summaries
    d1, d2 = s1.diameter, s2.diameter
    if d1 == d2:
        case = CASE_EQUAL_EXPONENTS
    elif d1 > d2:
        case = CASE_GAMMA1_GREATER
    else:
        case = CASE_GAMMA2_GREATER
    return DiameterPrediction(
        value=max(d1, d2),
        case=case,
        bounds=diameter_bounds(s1, s2),
        gamma1=s1.exponent,
        gamma2=s2.exponent,
        d1=d1,
        d2=d2,
    )
