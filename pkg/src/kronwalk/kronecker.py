"""Kronecker (tensor) product of graphs.

The product of graphs on n1 and n2 vertices lives on n1 * n2 vertices;
vertex ``(a, b)`` is encoded row-major as ``a * n2 + b``.  Two product
vertices are adjacent exactly when both coordinate pairs are adjacent in
their factors, so each pair of factor edges contributes the two cross
pairings (which coincide when a factor edge is a loop), and a product
vertex carries a loop iff both coordinates do.
"""

from __future__ import annotations

from .graphs import Graph
from .walks import is_bipartite, is_connected


def encode_product_vertex(first: int, second: int, order2: int) -> int:
    return first * order2 + second


def decode_product_vertex(code: int, order2: int) -> tuple[int, int]:
    return divmod(code, order2)


def kronecker_product(g1: Graph, g2: Graph) -> Graph:
    """The tensor product of ``g1`` and ``g2`` under the row-major encoding."""
    n2 = g2.order
    edges = []
    for u1, v1 in g1.edges():
        for u2, v2 in g2.edges():
            edges.append((u1 * n2 + u2, v1 * n2 + v2))
            edges.append((u1 * n2 + v2, v1 * n2 + u2))
    return Graph(g1.order * n2, edges)


def product_is_connected(g1: Graph, g2: Graph) -> bool:
    """Connectivity of the product of two connected factors.

    The product is connected exactly when at least one factor contains an
    odd cycle, so no product needs to be built.
    """
    if not is_connected(g1) or not is_connected(g2):
        raise ValueError("both factors must be connected")
    return not is_bipartite(g1) or not is_bipartite(g2)
