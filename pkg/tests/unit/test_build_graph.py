import unittest
from typing import List

from enums.dilation_mode import DilationMode
from enums.edge_kind import EdgeKind
from errors import ArgumentError, ConfigurationError, UnknownNameError
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.layer_graph import GraphEdgeModel, GraphNodeModel, LayerGraph
from models.reduction import ReductionPolicy
from services.analyzer.helpers.build_graph import build_graph
from services.analyzer.helpers.coverage import coverage


class TestBuildGraph(unittest.TestCase):
    # ───────────────────────────────────────────────────────────
    # D2 GRAPHS
    # ───────────────────────────────────────────────────────────
    def test_build_graph_d2_dense_edges(self) -> None:
        """Verify layer l receives one conv edge per earlier source."""
        graph = build_graph(D2Config(L=3, k=2))

        assert graph.input_id == "x0"
        assert graph.output_id == "layer3"
        assert graph.sources("layer3") == ["x0", "layer1", "layer2"]
        assert [edge.dilation for edge in graph.incoming("layer3")] == [1, 2, 4]
        assert all(edge.kind is EdgeKind.CONV for edge in graph.edges)

    def test_coverage_standard_mode_aliases_x0(self) -> None:
        """Verify the standard-dilated layer 3 sees x0 only at {-4, 0, 4}."""
        graph = build_graph(D2Config(L=3, k=1, mode=DilationMode.STANDARD))

        assert coverage(graph, "layer3", via="x0").to_list() == [-4, 0, 4]

    def test_coverage_multi_mode_is_dense(self) -> None:
        """Verify multidilated layers cover every offset up to 2^l - 1."""
        graph = build_graph(D2Config(L=4, k=1))

        for layer in range(1, 5):
            with self.subTest(layer=layer):
                radius = 2**layer - 1
                assert coverage(graph, f"layer{layer}").to_list() == list(range(-radius, radius + 1))

    def test_coverage_via_requires_direct_source(self) -> None:
        """Verify `via` must name a direct source of the node."""
        graph = build_graph(D2Config(L=2, k=1))

        with self.assertRaises(ArgumentError):
            coverage(graph, "layer1", via="layer2")

        with self.assertRaises(UnknownNameError):
            coverage(graph, "layer9")

    # ───────────────────────────────────────────────────────────
    # D3 GRAPHS
    # ───────────────────────────────────────────────────────────
    def test_build_graph_d3_pointwise_joins(self) -> None:
        """Verify block inputs join all earlier outputs and LastN keeps the trailing layers."""
        config = D3Config(M=2, inner=D2Config(L=3, k=2, in_channels=4), reduction=ReductionPolicy.last_n(2))

        graph = build_graph(config)

        assert graph.output_id == "block2.out"
        assert graph.sources("block2.x0") == ["input", "block1.out"]
        assert graph.sources("block1.out") == ["block1.layer2", "block1.layer3"]
        assert all(edge.kind is EdgeKind.POINTWISE for edge in graph.incoming("block2.x0"))

    def test_build_graph_d3_restarts_dilation_per_block(self) -> None:
        """Verify the chain through each block's latest layer runs 1, 2, 4 in both blocks."""
        graph = build_graph(D3Config(M=2, inner=D2Config(L=3, k=2)))
        chain: List[int] = []

        for block in (1, 2):
            previous = f"block{block}.x0"
            for layer in (1, 2, 3):
                node = f"block{block}.layer{layer}"
                chain += [edge.dilation for edge in graph.incoming(node) if edge.source == previous]
                previous = node

        assert chain == [1, 2, 4, 1, 2, 4]

    # ───────────────────────────────────────────────────────────
    # STRUCTURE
    # ───────────────────────────────────────────────────────────
    def test_layer_graph_rejects_malformed_structure(self) -> None:
        """Verify duplicate nodes, unknown endpoints and unreachable nodes are rejected."""
        graph = LayerGraph(input_id="a", output_id="c")
        graph.add_node(GraphNodeModel(id="a"))
        graph.add_node(GraphNodeModel(id="b"))
        graph.add_node(GraphNodeModel(id="c"))
        graph.add_edge(GraphEdgeModel(source="a", target="c", kind=EdgeKind.CONV, kernel=3))

        with self.assertRaises(ConfigurationError):
            graph.add_node(GraphNodeModel(id="b"))

        with self.assertRaises(UnknownNameError):
            graph.add_edge(GraphEdgeModel(source="a", target="z", kind=EdgeKind.CONV))

        with self.assertRaises(ConfigurationError):
            graph.validate_structure()

    def test_graph_edge_taps(self) -> None:
        """Verify tap offsets per edge kind in input pixels."""
        test_cases = [
            (GraphEdgeModel(source="a", target="b", kind=EdgeKind.CONV, kernel=3, dilation=2), 1, [-2, 0, 2]),
            (GraphEdgeModel(source="a", target="b", kind=EdgeKind.CONV, kernel=3, dilation=2), 4, [-8, 0, 8]),
            (GraphEdgeModel(source="a", target="b", kind=EdgeKind.POOL), 2, [0, 2]),
            (GraphEdgeModel(source="a", target="b", kind=EdgeKind.UPSAMPLE), 4, [-4, 0, 4]),
            (GraphEdgeModel(source="a", target="b", kind=EdgeKind.POINTWISE), 8, [0]),
        ]

        for edge, stride, expected in test_cases:
            with self.subTest(kind=edge.kind, stride=stride):
                assert edge.taps(stride) == expected
