import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from lgroot import Graph, SplitMix64, SymBitMatrix, connected_components, generate_er, lam_of, line_graph
from lgroot.graph import (canonical_form, connected_graphs_on_nodes, connected_graphs_with_edges,
                          incidence_matrix, isomorphic_small)
from oracles import bfs_components, lam_from_incidence
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges)
    return h


class TestGraph:
    def test_normalizes_and_keeps_order(self):
        g = Graph(3, ((2, 0), (1, 2)))
        assert g.edges == ((0, 2), (1, 2))

    @pytest.mark.parametrize("edges", [((0, 0),), ((0, 1), (1, 0)), ((0, 3),), ((-1, 1),)])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            Graph(3, edges)

    def test_families(self):
        assert Graph.complete(4).edge_count == 6
        assert Graph.path(4).edges == ((0, 1), (1, 2), (2, 3))
        assert Graph.cycle(5).degrees() == [2] * 5
        assert Graph.star(3).degrees() == [3, 1, 1, 1]

    def test_disjoint_union_offsets(self):
        u = Graph.path(2).disjoint_union(Graph.path(3))
        assert u.node_count == 5 and u.edges == ((0, 1), (2, 3), (3, 4))


class TestSymBitMatrix:
    def test_rejects_lower_bits(self):
        with pytest.raises(ValueError):
            SymBitMatrix(2, [0, 1])

    @pytest.mark.parametrize("dense", [
        [[0, 1], [0, 0]],
        [[1, 0], [0, 0]],
        [[0, 2], [2, 0]],
        [[0, 1, 0]],
    ])
    def test_from_dense_validates(self, dense):
        with pytest.raises(ValueError):
            SymBitMatrix.from_dense(dense)

    @given(graphs())
    def test_dense_round_trip(self, g):
        c = g.adjacency()
        d = c.to_dense()
        assert (d == d.T).all() and not np.diagonal(d).any()
        assert SymBitMatrix.from_dense(d) == c
        for i in range(c.order):
            for j in range(c.order):
                assert c[i, j] == d[i, j]

    def test_row_sum_window(self):
        c = SymBitMatrix.from_edges(5, [(0, 1), (0, 3), (0, 4), (1, 2)])
        assert c.row_sum(0, 1, 5) == 3
        assert c.row_sum(0, 2, 4) == 1
        assert c.row_sum(0, 4, 4) == 0

    def test_set_mirrors(self):
        c = SymBitMatrix(3)
        c.set(2, 0, 1)
        assert c[0, 2] == c[2, 0] == 1
        with pytest.raises(ValueError):
            c.set(1, 1, 1)

    @given(graphs(), graphs())
    def test_permuted_matches_dense_indexing(self, g, _):
        c = g.adjacency()
        order = list(reversed(range(c.order)))
        d = c.to_dense()
        assert (c.permuted(order).to_dense() == d[np.ix_(order, order)]).all()

    @given(graphs())
    def test_component_masks_and_submatrix(self, g):
        c = g.adjacency()
        comps = [sorted(b for b in range(c.order) if m >> b & 1) for m in c.component_masks()]
        assert comps == bfs_components(c.to_dense())
        for nodes in comps:
            assert (c.submatrix(nodes).to_dense() == c.to_dense()[np.ix_(nodes, nodes)]).all()


class TestLineGraph:
    @given(graphs())
    def test_lam_matches_incidence_product(self, g):
        expect = lam_from_incidence(g.node_count, g.edges) if g.edges else np.zeros((0, 0))
        assert (lam_of(g).to_dense() == expect).all()

    @given(graphs())
    def test_incidence_matrix_shape(self, g):
        r = incidence_matrix(g)
        assert r.shape == (g.node_count, g.edge_count)
        assert (r.sum(axis=0) == 2).all()

    @given(graphs(max_nodes=8))
    def test_agrees_with_networkx(self, g):
        lg = line_graph(g)
        ref = nx.line_graph(to_nx(g))
        idx = {e: i for i, e in enumerate(g.edges)}
        expected = {tuple(sorted((idx[tuple(sorted(a))], idx[tuple(sorted(b))]))) for a, b in ref.edges}
        assert set(lg.edges) == expected

    def test_small_cases(self):
        assert line_graph(Graph.path(3)).edges == ((0, 1),)
        k3 = line_graph(Graph.star(3))
        assert k3.node_count == 3 and k3.edge_count == 3


class TestRandom:
    def test_splitmix_reference_values(self):
        # reference SplitMix64 outputs for seed 1234567
        rng = SplitMix64(1234567)
        assert [rng.next_u64() for _ in range(3)] == [
            6457827717110365317, 3203168211198807973, 9817491932198370423]

    def test_random_unit_interval(self):
        rng = SplitMix64(9)
        xs = [rng.random() for _ in range(1000)]
        assert all(0.0 <= x < 1.0 for x in xs)

    def test_er_deterministic(self):
        assert generate_er(30, 0.4, 5) == generate_er(30, 0.4, 5)
        assert generate_er(30, 0.4, 5) != generate_er(30, 0.4, 6)

    def test_er_extremes(self):
        assert generate_er(5, 1.0, 7).edge_count == 10
        assert generate_er(5, 0.0, 7).edge_count == 0
        with pytest.raises(ValueError):
            generate_er(5, 1.5, 0)

    def test_er_mean_edges(self):
        mean = sum(generate_er(10, 0.3, s).edge_count for s in range(1000)) / 1000
        assert abs(mean - 13.5) <= 0.5


class TestComponents:
    @given(graphs())
    def test_partition_matches_bfs(self, g):
        comps = connected_components(g)
        assert [list(c.nodes) for c in comps] == bfs_components(g.adjacency().to_dense())
        assert sorted(e for c in comps for e in c.edge_ids) == list(range(g.edge_count))
        for c in comps:
            for local, eid in zip(c.graph.edges, c.edge_ids):
                u, v = g.edges[eid]
                assert (c.nodes[local[0]], c.nodes[local[1]]) == (u, v)


class TestIsomorphism:
    @given(graphs(max_nodes=7), graphs(max_nodes=7))
    def test_agrees_with_networkx(self, a, b):
        assert isomorphic_small(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))

    @given(graphs(max_nodes=8))
    def test_canonical_form_invariant_under_relabeling(self, g):
        perm = list(range(g.node_count))[::-1]
        assert canonical_form(g) == canonical_form(g.relabeled(perm))

    def test_guard(self):
        with pytest.raises(ValueError):
            canonical_form(Graph.path(11))

    @pytest.mark.parametrize("m,count", list(enumerate([1, 1, 1, 3, 5, 12, 30, 79, 227])))
    def test_connected_by_edges_counts(self, m, count):
        gs = connected_graphs_with_edges(m)
        assert len(gs) == count
        assert all(g.edge_count == m for g in gs)

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
    def test_connected_by_nodes_counts(self, n, count):
        gs = connected_graphs_on_nodes(n)
        assert len(gs) == count
        assert all(nx.is_connected(to_nx(g)) for g in gs[:50])
