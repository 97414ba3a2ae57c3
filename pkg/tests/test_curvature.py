import networkx as nx
import numpy as np
import pytest
from scipy.stats import spearmanr

from curvflow import (
    CurvatureField,
    WeightedNetwork,
    bochner_laplacian,
    curvature_map,
    directed_curvature,
    edge_curvatures,
    forman_edge_curvature,
    forman_node_curvature,
    node_curvatures,
    node_in_out_curvature,
)
from curvflow.backend import get_kernels
from curvflow.errors import (
    UndirectedNetworkError,
    UnknownEdgeError,
    UnknownNodeError,
)

from conftest import (
    brute_edge_curvature,
    dense_box_operator,
    net_from_nx,
    random_weighted_net,
)


def complete(n):
    return net_from_nx(nx.complete_graph(n))


class TestEdgeCurvature:
    def test_isolated_edge_unit_weights(self):
        g = WeightedNetwork.build(2, [(0, 1)])
        assert forman_edge_curvature(g, 0) == pytest.approx(2.0, abs=1e-15)

    def test_triangle_unit_weights(self):
        ric = edge_curvatures(complete(3))
        assert np.allclose(ric, 0.0, atol=1e-15)

    def test_k4_unit_weights(self):
        ric = edge_curvatures(complete(4))
        assert np.allclose(ric, -2.0, atol=1e-14)

    def test_matches_brute_force_on_random_weighted_graphs(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            g = random_weighted_net(rng, n_max=20)
            assert np.allclose(
                edge_curvatures(g), brute_edge_curvature(g), rtol=0, atol=1e-10
            )

    def test_unit_weight_identity(self):
        rng = np.random.default_rng(3)
        g = random_weighted_net(rng, n_max=30)
        g = g.with_node_weights(np.ones(g.n_nodes)).with_edge_weights(np.ones(g.n_edges))
        deg = g.degrees
        expected = 4.0 - deg[g.edges[:, 0]] - deg[g.edges[:, 1]]
        assert np.allclose(edge_curvatures(g), expected, atol=1e-12)

    def test_scale_covariance(self):
        rng = np.random.default_rng(7)
        g = random_weighted_net(rng)
        c = 3.7
        scaled = g.with_node_weights(c * g.node_weight).with_edge_weights(
            c * g.edge_weight
        )
        assert np.allclose(
            edge_curvatures(scaled), c * edge_curvatures(g), rtol=1e-12, atol=1e-12
        )

    def test_degree_sum_anticorrelation(self):
        # with unit weights, curvature is strictly decreasing in the
        # endpoint degree sum
        g = net_from_nx(nx.gnp_random_graph(60, 0.12, seed=5))
        ric = edge_curvatures(g)
        degsum = g.degrees[g.edges[:, 0]] + g.degrees[g.edges[:, 1]]
        rho, _ = spearmanr(ric, degsum)
        assert rho == pytest.approx(-1.0, abs=1e-12)

    def test_unknown_edge(self):
        with pytest.raises(UnknownEdgeError):
            forman_edge_curvature(WeightedNetwork.build(2, [(0, 1)]), 5)

    def test_backends_agree(self):
        rng = np.random.default_rng(11)
        g = random_weighted_net(rng)
        args = (g.edges[:, 0], g.edges[:, 1], g.node_weight, g.edge_weight)
        a = get_kernels("numpy").edge_curvature(*args)
        b = get_kernels("numba").edge_curvature(*args)
        assert np.allclose(a, b, rtol=0, atol=1e-13)


class TestNodeCurvature:
    def test_isolated_edge_endpoint(self):
        g = WeightedNetwork.build(2, [(0, 1)])
        assert forman_node_curvature(g, 0) == pytest.approx(2.0, abs=1e-15)

    def test_k4_node(self):
        assert forman_node_curvature(complete(4), 0) == pytest.approx(-6.0, abs=1e-13)

    def test_star_center_zero(self):
        g = WeightedNetwork.build(4, [(0, 1), (0, 2), (0, 3)])
        assert forman_node_curvature(g, 0) == pytest.approx(0.0, abs=1e-15)

    def test_sums_incident_edge_curvatures(self):
        rng = np.random.default_rng(8)
        g = random_weighted_net(rng)
        ric = edge_curvatures(g)
        nodal = node_curvatures(g)
        for v in range(g.n_nodes):
            inc = [i for i, (a, b) in enumerate(g.edges) if v in (a, b)]
            assert nodal[v] == pytest.approx(sum(ric[i] for i in inc), abs=1e-12)

    def test_unknown_node(self):
        with pytest.raises(UnknownNodeError):
            forman_node_curvature(WeightedNetwork.build(2, [(0, 1)]), 9)


class TestDirectedCurvature:
    def test_single_edge(self):
        g = WeightedNetwork.build(2, [(0, 1)], directed=True)
        head, tail, total = directed_curvature(g, 0)
        assert (head, tail, total) == (1.0, 1.0, 2.0)

    def test_chain(self):
        # a -> b -> c, looking at a -> b: nothing comes into the head a,
        # one edge leaves the tail b
        g = WeightedNetwork.build(3, [(0, 1), (1, 2)], directed=True)
        head, tail, total = directed_curvature(g, 0)
        assert head == pytest.approx(1.0, abs=1e-15)
        assert tail == pytest.approx(0.0, abs=1e-15)
        assert total == pytest.approx(1.0, abs=1e-15)

    def test_extra_incoming_edge_decrements_head_term(self):
        base = WeightedNetwork.build(3, [(0, 2)], directed=True)
        more = WeightedNetwork.build(3, [(0, 2), (1, 0)], directed=True)
        h0, _, _ = directed_curvature(base, 0)
        h1, _, _ = directed_curvature(more, 0)
        assert h1 == pytest.approx(h0 - 1.0, abs=1e-15)

    def test_requires_directed(self):
        with pytest.raises(UndirectedNetworkError):
            directed_curvature(WeightedNetwork.build(2, [(0, 1)]), 0)

    def test_backends_agree(self):
        rng = np.random.default_rng(13)
        nxg = nx.gnp_random_graph(25, 0.2, directed=True, seed=2)
        edges = np.asarray([e for e in nxg.edges()], dtype=np.int64)
        g = WeightedNetwork.build(
            25,
            edges,
            directed=True,
            node_weight=rng.uniform(0.3, 2.0, 25),
            edge_weight=rng.uniform(0.3, 2.0, len(edges)),
        )
        args = (g.edges[:, 0], g.edges[:, 1], g.node_weight, g.edge_weight)
        ha, ta = get_kernels("numpy").directed_edge_curvature(*args)
        hb, tb = get_kernels("numba").directed_edge_curvature(*args)
        assert np.allclose(ha, hb, atol=1e-13) and np.allclose(ta, tb, atol=1e-13)


class TestNodeInOutCurvature:
    def test_source_has_zero_in(self):
        g = WeightedNetwork.build(3, [(0, 1), (0, 2)], directed=True)
        cin, _, _ = node_in_out_curvature(g, 0)
        assert cin == 0.0

    def test_symmetric_node_nets_zero(self):
        g = WeightedNetwork.build(3, [(0, 1), (1, 2)], directed=True)
        cin, cout, net = node_in_out_curvature(g, 1)
        assert net == pytest.approx(cin - cout, abs=1e-15)
        assert cin == pytest.approx(cout, abs=1e-15)

    def test_chain_composes_edge_terms(self):
        g = WeightedNetwork.build(3, [(0, 1), (1, 2)], directed=True)
        _, tail01, _ = directed_curvature(g, 0)
        head12, _, _ = directed_curvature(g, 1)
        cin, cout, net = node_in_out_curvature(g, 1)
        assert cin == pytest.approx(tail01, abs=1e-15)
        assert cout == pytest.approx(head12, abs=1e-15)
        assert net == pytest.approx(tail01 - head12, abs=1e-15)

    def test_far_node_convention_differs(self):
        g = WeightedNetwork.build(4, [(0, 1), (1, 2), (1, 3)], directed=True)
        at = node_in_out_curvature(g, 1, convention="at-node")
        far = node_in_out_curvature(g, 1, convention="far-node")
        assert at != far

    def test_bad_convention(self):
        g = WeightedNetwork.build(2, [(0, 1)], directed=True)
        with pytest.raises(ValueError):
            node_in_out_curvature(g, 0, convention="sideways")


class TestBochnerLaplacian:
    def test_single_edge_diagonal(self):
        op = bochner_laplacian(WeightedNetwork.build(2, [(0, 1)]))
        assert op.matrix.toarray()[0, 0] == pytest.approx(2.0, abs=1e-15)

    def test_shared_node_off_diagonal(self):
        op = bochner_laplacian(WeightedNetwork.build(3, [(0, 1), (1, 2)]))
        assert abs(op.matrix.toarray()[0, 1]) == pytest.approx(1.0, abs=1e-15)

    def test_disjoint_edges_uncoupled(self):
        op = bochner_laplacian(WeightedNetwork.build(4, [(0, 1), (2, 3)]))
        assert op.matrix.toarray()[0, 1] == 0.0

    def test_matches_dense_oracle(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            g = random_weighted_net(rng, n_max=15)
            got = bochner_laplacian(g).matrix.toarray()
            assert np.allclose(got, dense_box_operator(g), atol=1e-12)

    def test_symmetric(self):
        rng = np.random.default_rng(22)
        g = random_weighted_net(rng)
        mat = bochner_laplacian(g).matrix.toarray()
        assert np.array_equal(mat, mat.T)

    def test_rough_decomposition(self):
        rng = np.random.default_rng(23)
        g = random_weighted_net(rng)
        op = bochner_laplacian(g)
        expected = op.matrix.toarray() - np.diag(edge_curvatures(g))
        assert np.allclose(op.rough.toarray(), expected, atol=1e-13)

    def test_orientation_signs_enter_off_diagonal(self):
        g = WeightedNetwork.build(3, [(0, 1), (1, 2)])
        flipped = WeightedNetwork.build(
            3, [(0, 1), (1, 2)], orientation=[1.0, -1.0]
        )
        a = bochner_laplacian(g).matrix.toarray()
        b = bochner_laplacian(flipped).matrix.toarray()
        assert a[0, 1] == -b[0, 1]
        assert a[0, 0] == b[0, 0]


class TestCurvatureMap:
    def test_triangle_symmetric_zeros(self):
        g = complete(3)
        mat = curvature_map(g)
        assert np.allclose(mat[~np.isnan(mat)], 0.0, atol=1e-15)
        assert np.array_equal(np.isnan(mat), np.isnan(mat.T))

    def test_directed_single_edge(self):
        g = WeightedNetwork.build(2, [(0, 1)], directed=True)
        mat = curvature_map(g)
        assert not np.isnan(mat[0, 1]) and np.isnan(mat[1, 0])

    def test_empty_graph_all_absent(self):
        mat = curvature_map(WeightedNetwork.build(3, np.zeros((0, 2))))
        assert np.all(np.isnan(mat))

    def test_undirected_map_equals_transpose(self):
        rng = np.random.default_rng(31)
        g = random_weighted_net(rng)
        mat = curvature_map(g)
        filled = ~np.isnan(mat)
        assert np.array_equal(mat[filled], mat.T[filled])


class TestCurvatureFieldCompute:
    def test_field_consistency(self):
        rng = np.random.default_rng(33)
        g = random_weighted_net(rng)
        field = CurvatureField.compute(g)
        assert np.array_equal(field.edge_curvature, edge_curvatures(g))
        assert np.array_equal(field.node_curvature, node_curvatures(g))
        assert field.directed_parts is None
