"""Krausz clique partitions and a Roussopoulos-style root reconstructor.

The baseline follows the outline of Roussopoulos's method: choose a
starting edge, use its triangles to fix the starting cell, then peel off
cliques one at a time while stamping every node with its group numbers.
Gaps in that outline are filled as follows:

* the starting edge joins the lowest unassigned node to its lowest neighbour;
* the starting cell is that edge plus its common neighbours, less at most
  one of them (a common neighbour may close a triangle in the root instead);
  candidates are tried in that order and the first complete partition wins;
* the frontier is processed lowest label first; a node with one group and
  uncovered edges gets a greedy maximal clique (ascending labels) as its
  second group, and any edge that clique leaves behind forces a rejection.

This is a baseline for timing comparisons, not a port of the classic linear-time method.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from ..errors import NotALineGraph
from ..graph import Graph, SymBitMatrix, _iter_bits, lam_of

__all__ = ["KrauszPartition", "krausz_partition", "roussopoulos_root"]


@dataclass(frozen=True)
class KrauszPartition:
    """Cliques covering every edge once; ``cell_membership[v]`` lists the cells holding node ``v``."""

    cells: tuple[frozenset[int], ...]
    cell_membership: tuple[tuple[int, ...], ...]


class _State:
    def __init__(self, nb: list[int]):
        self.uncovered = list(nb)
        self.cells: list[int] = []
        self.member: list[list[int]] = [[] for _ in nb]

    def clone(self) -> "_State":
        s = _State.__new__(_State)
        s.uncovered = list(self.uncovered)
        s.cells = list(self.cells)
        s.member = [list(m) for m in self.member]
        return s

    def stamp(self, cell: int) -> bool:
        """Add a clique whose edges must all be uncovered; False on conflict."""
        for v in _iter_bits(cell):
            rest = cell & ~(1 << v)
            if self.uncovered[v] & rest != rest:
                return False
            if len(self.member[v]) == 2:
                return False
        cid = len(self.cells)
        self.cells.append(cell)
        for v in _iter_bits(cell):
            self.uncovered[v] &= ~cell
            self.member[v].append(cid)
        return True


def _greedy_clique(uncovered: list[int], v: int) -> int:
    """Maximal clique of uncovered edges through ``v``, adding neighbours by ascending label."""
    cell = 1 << v
    for u in _iter_bits(uncovered[v]):
        if uncovered[u] & cell == cell:
            cell |= 1 << u
    return cell


def _grow(state: _State, first: int) -> bool:
    if not state.stamp(first):
        return False
    frontier = list(_iter_bits(first))
    heapq.heapify(frontier)
    while frontier:
        v = heapq.heappop(frontier)
        rest = state.uncovered[v]
        if not rest:
            continue
        if len(state.member[v]) >= 2:
            return False
        cell = _greedy_clique(state.uncovered, v)
        if not state.stamp(cell):
            return False
        for u in _iter_bits(cell & ~(1 << v)):
            heapq.heappush(frontier, u)
    return True


def _first_cells(nb: list[int], x: int, y: int) -> list[int]:
    base = (1 << x) | (1 << y)
    common = nb[x] & nb[y]
    if not common:
        return [base]

    def is_clique(mask: int) -> bool:
        return all(nb[v] & mask == mask & ~(1 << v) for v in _iter_bits(mask))

    out = []
    if is_clique(common):
        out.append(base | common)
    for w in _iter_bits(common):
        rest = common & ~(1 << w)
        if is_clique(rest):
            out.append(base | rest)
    return out


def krausz_partition(g: Graph) -> KrauszPartition | None:
    """A clique partition with every node in at most two cells, or ``None`` if none exists."""
    nb = g.neighbor_masks()
    state = _State(nb)
    for x in range(g.node_count):
        if state.member[x] or not nb[x]:
            continue
        y = (nb[x] & -nb[x]).bit_length() - 1
        for first in _first_cells(nb, x, y):
            trial = state.clone()
            if _grow(trial, first) and not any(trial.uncovered[v] for v in range(g.node_count)
                                               if trial.member[v]):
                state = trial
                break
        else:
            return None
    if any(state.uncovered):
        return None
    cells = tuple(frozenset(_iter_bits(c)) for c in state.cells)
    return KrauszPartition(cells, tuple(tuple(m) for m in state.member))


def roussopoulos_root(c: SymBitMatrix) -> Graph:
    """Root graph via a Krausz partition; edge ``i`` of the result is input node ``i``.

    Raises :class:`NotALineGraph` when no partition exists or the rebuilt
    line graph differs from the input.
    """
    part = krausz_partition(c.to_graph())
    if part is None:
        raise NotALineGraph("no clique partition with at most two cells per node")
    next_node = len(part.cells)
    edges = []
    for groups in part.cell_membership:
        ends = list(groups)
        while len(ends) < 2:
            ends.append(next_node)
            next_node += 1
        edges.append((ends[0], ends[1]))
    root = Graph(next_node, tuple(edges))
    if lam_of(root) != c:
        raise NotALineGraph("rebuilt line graph differs from input")
    return root
