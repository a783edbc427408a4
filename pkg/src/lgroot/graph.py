"""Simple undirected graphs, link adjacency matrices and small-graph utilities.

Node and link labels are 0-based throughout.  A :class:`SymBitMatrix` keeps
only its strict upper triangle: row ``i`` is a Python ``int`` whose bit ``j``
(``j > i``) holds entry ``(i, j)``; reads below the diagonal are mirrored.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "SymBitMatrix",
    "Component",
    "incidence_matrix",
    "line_graph",
    "lam_of",
    "SplitMix64",
    "generate_er",
    "connected_components",
    "canonical_form",
    "isomorphic_small",
    "connected_graphs_with_edges",
    "connected_graphs_on_nodes",
    "ISO_NODE_LIMIT",
]

ISO_NODE_LIMIT = 10


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph given by a node count and an edge sequence.

    Edges are normalized to ``(u, v)`` with ``u < v``; their order is kept,
    because edge ``i`` of a root graph is node ``i`` of its line graph.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be non-negative")
        norm = []
        seen = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.node_count:
                raise ValueError(f"edge ({u}, {v}) out of range for {self.node_count} nodes")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbor_masks(self) -> list[int]:
        """Per-node neighbour sets as bit masks."""
        nb = [0] * self.node_count
        for u, v in self.edges:
            nb[u] |= 1 << v
            nb[v] |= 1 << u
        return nb

    def adjacency(self) -> "SymBitMatrix":
        return SymBitMatrix.from_edges(self.node_count, self.edges)

    def relabeled(self, mapping: Sequence[int]) -> "Graph":
        """Graph with node ``v`` renamed to ``mapping[v]``; edge order kept."""
        return Graph(self.node_count, tuple((mapping[u], mapping[v]) for u, v in self.edges))

    def sorted(self) -> "Graph":
        return Graph(self.node_count, tuple(sorted(self.edges)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(itertools.combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 nodes")
        return cls(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))

    def disjoint_union(self, other: "Graph") -> "Graph":
        off = self.node_count
        return Graph(off + other.node_count,
                     self.edges + tuple((u + off, v + off) for u, v in other.edges))


class SymBitMatrix:
    """Symmetric 0/1 matrix with zero diagonal, stored as its strict upper triangle."""

    __slots__ = ("order", "rows")

    def __init__(self, order: int, rows: Iterable[int] | None = None):
        self.order = order
        if rows is None:
            self.rows = [0] * order
        else:
            self.rows = list(rows)
            if len(self.rows) != order:
                raise ValueError("row count does not match order")
            for i, r in enumerate(self.rows):
                if r & ((1 << (i + 1)) - 1) or r >> order:
                    raise ValueError(f"row {i} has bits outside the strict upper triangle")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "SymBitMatrix":
        rows = [0] * order
        for u, v in edges:
            if u > v:
                u, v = v, u
            rows[u] |= 1 << v
        return cls(order, rows)

    @classmethod
    def from_dense(cls, a) -> "SymBitMatrix":
        """Build from a square array-like; raises ValueError unless symmetric 0/1 with zero diagonal."""
        arr = np.asarray(a)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("matrix must be square")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("matrix entries must be 0 or 1")
        if not (arr == arr.T).all():
            i, j = np.argwhere(arr != arr.T)[0]
            raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        if np.diagonal(arr).any():
            raise ValueError("matrix diagonal must be zero")
        n = arr.shape[0]
        iu, ju = np.nonzero(np.triu(arr, 1))
        return cls.from_edges(n, zip(iu.tolist(), ju.tolist()))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.order, self.order), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in _iter_bits(r):
                out[i, j] = out[j, i] = 1
        return out

    def get(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return (self.rows[i] >> j) & 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.get(*ij)

    def set(self, i: int, j: int, value: int) -> None:
        if i == j:
            if value:
                raise ValueError("diagonal entries are fixed at 0")
            return
        if i > j:
            i, j = j, i
        if value:
            self.rows[i] |= 1 << j
        else:
            self.rows[i] &= ~(1 << j)

    def row_sum(self, k: int, lo: int, hi: int) -> int:
        """Number of 1-entries ``(k, i)`` for ``lo <= i < hi``; all indices must exceed ``k``."""
        if hi <= lo:
            return 0
        return ((self.rows[k] >> lo) & ((1 << (hi - lo)) - 1)).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in _iter_bits(r)]

    def ones(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def neighbor_masks(self) -> list[int]:
        nb = list(self.rows)
        for i, r in enumerate(self.rows):
            for j in _iter_bits(r):
                nb[j] |= 1 << i
        return nb

    def to_graph(self) -> Graph:
        return Graph(self.order, tuple(self.edges()))

    def component_masks(self) -> list[int]:
        """Node sets of the connected pieces as bit masks, ordered by smallest node."""
        nb = self.neighbor_masks()
        left = (1 << self.order) - 1
        out = []
        while left:
            seen = frontier = left & -left
            while frontier:
                grow = 0
                for v in _iter_bits(frontier):
                    grow |= nb[v]
                frontier = grow & ~seen
                seen |= frontier
            out.append(seen)
            left &= ~seen
        return out

    def submatrix(self, nodes: Sequence[int]) -> "SymBitMatrix":
        """Principal submatrix on ``nodes`` (ascending), relabeled 0..k-1."""
        pos = {v: k for k, v in enumerate(nodes)}
        rows = [0] * len(nodes)
        for k, v in enumerate(nodes):
            r = self.rows[v]
            for j in _iter_bits(r):
                t = pos.get(j)
                if t is not None:
                    rows[k] |= 1 << t
        out = SymBitMatrix.__new__(SymBitMatrix)
        out.order = len(nodes)
        out.rows = rows
        return out

    def permuted(self, order: Sequence[int]) -> "SymBitMatrix":
        """Matrix whose entry ``(a, b)`` is ``self[order[a], order[b]]``."""
        n = self.order
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation")
        pos = [0] * n
        for new, old in enumerate(order):
            pos[old] = new
        return SymBitMatrix.from_edges(n, ((pos[i], pos[j]) for i, j in self.edges()))

    def copy(self) -> "SymBitMatrix":
        out = SymBitMatrix.__new__(SymBitMatrix)
        out.order = self.order
        out.rows = list(self.rows)
        return out

    def __eq__(self, other):
        if not isinstance(other, SymBitMatrix):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self):
        return hash((self.order, tuple(self.rows)))

    def __repr__(self):
        return f"SymBitMatrix(order={self.order}, ones={self.ones()})"


def incidence_matrix(g: Graph) -> np.ndarray:
    """Node-by-link 0/1 matrix: entry ``(i, j)`` is 1 iff node ``i`` is an endpoint of edge ``j``."""
    r = np.zeros((g.node_count, g.edge_count), dtype=np.int64)
    for j, (u, v) in enumerate(g.edges):
        r[u, j] = 1
        r[v, j] = 1
    return r


def lam_of(g: Graph) -> SymBitMatrix:
    """Link adjacency matrix of ``g``: links ``i`` and ``j`` adjacent iff they share an endpoint."""
    at_node = [0] * g.node_count
    for i, (u, v) in enumerate(g.edges):
        at_node[u] |= 1 << i
        at_node[v] |= 1 << i
    rows = []
    for i, (u, v) in enumerate(g.edges):
        rows.append(((at_node[u] | at_node[v]) >> (i + 1)) << (i + 1))
    return SymBitMatrix(g.edge_count, rows)


def line_graph(g: Graph) -> Graph:
    """Line graph of ``g``; node ``i`` of the result is edge ``i`` of ``g``."""
    return lam_of(g).to_graph()


class SplitMix64:
    """SplitMix64 pseudo-random generator.

    State update and output, all arithmetic modulo 2**64::

        state += 0x9E3779B97F4A7C15
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        out = z ^ (z >> 31)

    ``random()`` maps an output to ``(out >> 11) * 2**-53`` in ``[0, 1)``.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        m = self._MASK
        self.state = (self.state + 0x9E3779B97F4A7C15) & m
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & m
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & m
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def generate_er(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi graph G(n, p) driven by :class:`SplitMix64`.

    Candidate pairs are visited in lexicographic order ``(0,1), (0,2), ...``
    and pair ``(u, v)`` is kept iff the next draw is below ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError("node count must be non-negative")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, tuple(edges))


@dataclass(frozen=True)
class Component:
    """Connected piece of a graph; ``nodes[k]`` is the parent label of local node ``k``."""

    graph: Graph
    nodes: tuple[int, ...]
    edge_ids: tuple[int, ...] = field(default=())


def connected_components(g: Graph) -> list[Component]:
    """Maximal connected pieces, ordered by their smallest node, relabeled 0..k-1 in ascending order."""
    nb = [[] for _ in range(g.node_count)]
    for eid, (u, v) in enumerate(g.edges):
        nb[u].append((v, eid))
        nb[v].append((u, eid))
    comp = [-1] * g.node_count
    groups = []
    for s in range(g.node_count):
        if comp[s] >= 0:
            continue
        cid = len(groups)
        comp[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in nb[x]:
                if comp[y] < 0:
                    comp[y] = cid
                    members.append(y)
                    queue.append(y)
        groups.append(sorted(members))
    local = [0] * g.node_count
    for members in groups:
        for k, v in enumerate(members):
            local[v] = k
    comp_edges = [[] for _ in groups]
    comp_eids = [[] for _ in groups]
    for eid, (u, v) in enumerate(g.edges):
        cid = comp[u]
        comp_edges[cid].append((local[u], local[v]))
        comp_eids[cid].append(eid)
    return [Component(Graph(len(m), tuple(es)), tuple(m), tuple(ids))
            for m, es, ids in zip(groups, comp_edges, comp_eids)]


def _refine(n: int, nb: list[int]) -> list[int]:
    """Label-invariant colour refinement seeded with degrees."""
    colors = [nb[v].bit_count() for v in range(n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in _iter_bits(nb[v])))) for v in range(n)]
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant certificate by exhaustive search over refined colour classes.

    Exponential by design; guarded to graphs of at most ``ISO_NODE_LIMIT`` nodes.
    """
    n = g.node_count
    if n > ISO_NODE_LIMIT:
        raise ValueError(f"canonical_form is limited to {ISO_NODE_LIMIT} nodes, got {n}")
    nb = g.neighbor_masks()
    colors = _refine(n, nb)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    pair_bit = {}
    for a in range(n):
        for b in range(a + 1, n):
            pair_bit[(a, b)] = 1 << (a * n + b)
    best = -1
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        pos = [0] * n
        k = 0
        for part in parts:
            for v in part:
                pos[v] = k
                k += 1
        code = 0
        for u, v in g.edges:
            a, b = pos[u], pos[v]
            code |= pair_bit[(a, b) if a < b else (b, a)]
        if code > best:
            best = code
    signature = tuple(len(c) for c in cells)
    return n, g.edge_count, signature, best


def isomorphic_small(g1: Graph, g2: Graph) -> bool:
    """True iff ``g1`` and ``g2`` are isomorphic; both must have at most ``ISO_NODE_LIMIT`` nodes."""
    for g in (g1, g2):
        if g.node_count > ISO_NODE_LIMIT:
            raise ValueError(f"isomorphic_small is limited to {ISO_NODE_LIMIT} nodes")
    if g1.node_count != g2.node_count or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def _graph_from_code(n: int, code: int) -> Graph:
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if code >> (a * n + b) & 1:
                edges.append((a, b))
    return Graph(n, tuple(edges))


_BY_EDGES: dict[int, list[Graph]] = {}


def connected_graphs_with_edges(m: int) -> list[Graph]:
    """All connected simple graphs with exactly ``m`` edges, one per isomorphism class.

    Grown edge by edge from smaller classes; ``m`` is limited by ``ISO_NODE_LIMIT``.
    """
    if m + 1 > ISO_NODE_LIMIT:
        raise ValueError(f"enumeration limited to {ISO_NODE_LIMIT - 1} edges")
    if m in _BY_EDGES:
        return _BY_EDGES[m]
    if m == 0:
        out = [Graph(1)]
    elif m == 1:
        out = [Graph(2, ((0, 1),))]
    else:
        seen = {}
        for g in connected_graphs_with_edges(m - 1):
            present = set(g.edges)
            n = g.node_count
            extensions = [Graph(n, g.edges + ((a, b),))
                          for a in range(n) for b in range(a + 1, n) if (a, b) not in present]
            extensions += [Graph(n + 1, g.edges + ((a, n),)) for a in range(n)]
            for h in extensions:
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = _graph_from_code(h.node_count, key[3])
        out = sorted(seen.values(), key=lambda h: (h.node_count, h.edges))
    _BY_EDGES[m] = out
    return out


_BY_NODES: dict[int, list[Graph]] = {}


def connected_graphs_on_nodes(n: int) -> list[Graph]:
    """All connected simple graphs on exactly ``n`` nodes, one per isomorphism class."""
    if n > ISO_NODE_LIMIT or n < 1:
        raise ValueError(f"node count must lie in 1..{ISO_NODE_LIMIT}")
    if n in _BY_NODES:
        return _BY_NODES[n]
    if n == 1:
        out = [Graph(1)]
    else:
        seen = {}
        for g in connected_graphs_on_nodes(n - 1):
            for subset in range(1, 1 << (n - 1)):
                new = tuple((a, n - 1) for a in _iter_bits(subset))
                h = Graph(n, g.edges + new)
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = _graph_from_code(n, key[3])
        out = sorted(seen.values(), key=lambda h: (h.edge_count, h.edges))
    _BY_NODES[n] = out
    return out
