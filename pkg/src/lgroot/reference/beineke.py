"""Forbidden induced subgraph recognizer for line graphs."""

from __future__ import annotations

import hashlib
import itertools
import re
from functools import lru_cache
from importlib import resources

from ..graph import Graph
from ..io import read_sections

__all__ = ["beineke_graphs", "find_beineke_subgraph", "is_line_graph_beineke", "BEINEKE_NODE_LIMIT"]

BEINEKE_NODE_LIMIT = 64
DATA_SHA256 = "2d092d1d3f49c7571cd59801f0ce395dc3689c6cb58873e3b1f7c00ef0284327"


def _data_text() -> str:
    return resources.files("lgroot.reference").joinpath("data/beineke.el").read_text()


@lru_cache(maxsize=None)
def beineke_graphs() -> tuple[tuple[str, Graph], ...]:
    """The nine graphs as ``(name, graph)`` pairs, checksum-verified."""
    text = _data_text()
    digest = hashlib.sha256(text.encode()).hexdigest()
    if digest != DATA_SHA256:
        raise RuntimeError(f"beineke.el checksum mismatch: {digest}")
    names = [line[1:].strip() for line in text.splitlines()
             if re.match(r"# B\d ", line)]
    graphs = read_sections(text, "beineke.el")
    if len(graphs) != 9 or len(names) != 9:
        raise RuntimeError("beineke.el must hold nine sections")
    return tuple(zip(names, graphs))


def _pair_index(k: int) -> dict[tuple[int, int], int]:
    return {pair: n for n, pair in enumerate(itertools.combinations(range(k), 2))}


@lru_cache(maxsize=None)
def _lookup() -> dict[int, dict[int, int]]:
    """For each pattern order, every labeled edge mask of every pattern -> pattern index."""
    table: dict[int, dict[int, int]] = {}
    for idx, (_, g) in enumerate(beineke_graphs()):
        k = g.node_count
        pairs = _pair_index(k)
        masks = table.setdefault(k, {})
        for perm in itertools.permutations(range(k)):
            mask = 0
            for u, v in g.edges:
                a, b = perm[u], perm[v]
                mask |= 1 << pairs[(a, b) if a < b else (b, a)]
            masks.setdefault(mask, idx)
    return table


def _connected_subsets(nb: list[int], max_size: int):
    """Every connected node set of size <= max_size exactly once (ESU enumeration)."""
    n = len(nb)

    def extend(sub: list[int], closed: int, ext: int, root: int):
        yield sub
        if len(sub) == max_size:
            return
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            fresh = nb[w] & ~closed & ~((1 << (root + 1)) - 1)
            yield from extend(sub + [w], closed | nb[w] | low, ext | fresh, root)

    for v in range(n):
        higher = nb[v] & ~((1 << (v + 1)) - 1)
        yield from extend([v], nb[v] | (1 << v), higher, v)


def find_beineke_subgraph(g: Graph):
    """``(pattern_index, nodes)`` of the first forbidden induced subgraph found, else ``None``."""
    if g.node_count > BEINEKE_NODE_LIMIT:
        raise ValueError(f"Beineke scan limited to {BEINEKE_NODE_LIMIT} nodes")
    table = _lookup()
    nb = g.neighbor_masks()
    pair_tables = {k: _pair_index(k) for k in table}
    for sub in _connected_subsets(nb, max(table)):
        k = len(sub)
        if k not in table:
            continue
        nodes = sorted(sub)
        pairs = pair_tables[k]
        mask = 0
        for a in range(k):
            row = nb[nodes[a]]
            for b in range(a + 1, k):
                if row >> nodes[b] & 1:
                    mask |= 1 << pairs[(a, b)]
        hit = table[k].get(mask)
        if hit is not None:
            return hit, tuple(nodes)
    return None


def is_line_graph_beineke(g: Graph) -> bool:
    """True iff none of the nine graphs occurs as an induced subgraph of ``g``."""
    return find_beineke_subgraph(g) is None
