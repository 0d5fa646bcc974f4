from __future__ import annotations

from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from enums.edge_kind import EdgeKind
from errors import ConfigurationError, UnknownNameError


class GraphNodeModel(BaseModel):
    """
    Feature slice of the network.

    Attributes:
        id: Unique node name, e.g. "block2.layer3".
        layer: Layer index inside its D2 block, 0 for block inputs.
        block: 1-based D2 block index, 0 outside D3 blocks.
        channel_start: First channel of the slice inside its concatenation.
        channel_end: One past the last channel.
        stride: Input pixels per feature pixel.
    """

    model_config = ConfigDict(frozen=True)

    id: str
    layer: int = Field(default=0, ge=0)
    block: int = Field(default=0, ge=0)
    channel_start: int = Field(default=0, ge=0)
    channel_end: int = Field(default=0, ge=0)
    stride: int = Field(default=1, ge=1)


class GraphEdgeModel(BaseModel):
    """Directed dependency; CONV edges carry the tap geometry the forward pass applies."""

    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    kind: EdgeKind
    kernel: int = Field(default=1, ge=1)
    dilation: int = Field(default=1, ge=1)

    def taps(self, stride: int) -> List[int]:
        """Offsets in input pixels contributed by this edge at a source of the given stride."""
        if self.kind is EdgeKind.CONV:
            radius = (self.kernel - 1) // 2
            return [tap * self.dilation * stride for tap in range(-radius, radius + 1)]

        if self.kind is EdgeKind.POOL:
            return [0, stride]

        if self.kind is EdgeKind.UPSAMPLE:
            return [-stride, 0, stride]

        return [0]


class LayerGraph(BaseModel):
    """
    Acyclic feature graph. Nodes are stored in topological order.

    Raises:
        ConfigurationError: From `validate_structure` on cycles, dangling edges
            or nodes unreachable from the input.
    """

    input_id: str
    output_id: str
    nodes: List[GraphNodeModel] = Field(default_factory=list)
    edges: List[GraphEdgeModel] = Field(default_factory=list)

    _index: Dict[str, int] = PrivateAttr(default_factory=dict)

    def add_node(self, node: GraphNodeModel) -> GraphNodeModel:
        if node.id in self._lookup():
            raise ConfigurationError(f"Duplicate graph node {node.id}")

        self._index[node.id] = len(self.nodes)
        self.nodes.append(node)
        return node

    def add_edge(self, edge: GraphEdgeModel) -> GraphEdgeModel:
        self.node(edge.source)
        self.node(edge.target)
        self.edges.append(edge)
        return edge

    def node(self, node_id: str) -> GraphNodeModel:
        index = self._lookup()

        if node_id not in index:
            raise UnknownNameError(f"Unknown graph node {node_id}")

        return self.nodes[index[node_id]]

    def incoming(self, node_id: str) -> List[GraphEdgeModel]:
        self.node(node_id)
        return [edge for edge in self.edges if edge.target == node_id]

    def sources(self, node_id: str) -> List[str]:
        return [edge.source for edge in self.incoming(node_id)]

    def validate_structure(self) -> None:
        position = {node.id: index for index, node in enumerate(self.nodes)}

        for edge in self.edges:
            if edge.source not in position or edge.target not in position:
                raise ConfigurationError(f"Edge {edge.source} -> {edge.target} references a missing node")

            if position[edge.source] >= position[edge.target]:
                raise ConfigurationError(f"Edge {edge.source} -> {edge.target} breaks topological order")

        reached = {self.input_id}

        for node in self.nodes:
            if node.id != self.input_id and any(edge.source in reached for edge in self.incoming(node.id)):
                reached.add(node.id)

        missing = [node.id for node in self.nodes if node.id not in reached]

        if missing:
            raise ConfigurationError(f"Nodes unreachable from {self.input_id}: {missing}")

        if self.output_id not in position:
            raise ConfigurationError(f"Output node {self.output_id} is missing")

    def to_dict(self) -> Dict[str, object]:
        return {
            "input": self.input_id,
            "output": self.output_id,
            "nodes": [node.model_dump(mode="json") for node in self.nodes],
            "edges": [edge.model_dump(mode="json") for edge in self.edges],
        }

    def _lookup(self) -> Dict[str, int]:
        if len(self._index) != len(self.nodes):
            self._index = {node.id: index for index, node in enumerate(self.nodes)}

        return self._index
