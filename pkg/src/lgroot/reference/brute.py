"""Exhaustive root search for small matrices."""

from __future__ import annotations

from ..graph import (Graph, SymBitMatrix, connected_components, connected_graphs_with_edges,
                     isomorphic_small, line_graph)

__all__ = ["brute_force_root", "BRUTE_FORCE_LIMIT"]

BRUTE_FORCE_LIMIT = 8


def _root_of_connected(h: Graph) -> Graph | None:
    if h.node_count == 1:
        return Graph(2, ((0, 1),))
    target = sorted(h.degrees())
    for r in connected_graphs_with_edges(h.node_count):
        lg = line_graph(r)
        if lg.edge_count != h.edge_count or sorted(lg.degrees()) != target:
            continue
        if isomorphic_small(lg, h):
            return r
    return None


def brute_force_root(c: SymBitMatrix) -> Graph | None:
    """Some graph whose line graph is isomorphic to the graph of ``c``, or ``None``.

    Searches every connected graph with as many edges as each component of
    ``c`` has nodes; the result is the disjoint union of component roots.
    Limited to matrices of order ``BRUTE_FORCE_LIMIT``.
    """
    if c.order > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to order {BRUTE_FORCE_LIMIT}, got {c.order}")
    root = Graph(0)
    for comp in connected_components(c.to_graph()):
        r = _root_of_connected(comp.graph)
        if r is None:
            return None
        root = root.disjoint_union(r)
    return root
