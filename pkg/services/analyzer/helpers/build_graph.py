from typing import List, Union

from configs.constants import TRANSITION_COMPRESSION
from enums.edge_kind import EdgeKind
from enums.reduction_kind import ReductionKind
from helpers.get_layer_path import get_layer_path
from models.backbone_config import SCALE_COUNT, BackboneConfig
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.layer_graph import GraphEdgeModel, GraphNodeModel, LayerGraph

INPUT = "input"


def build_graph(config: Union[D2Config, D3Config, BackboneConfig]) -> LayerGraph:
    """
    Feature graph carrying the tap geometry the forward pass applies.

    D2 graphs use the block input as the graph input ("x0") and the last layer
    as output. D3 graphs add a "blockM.x0" node standing for the concatenation
    (and bottleneck) feeding each D2 block and a "blockM.out" node for its
    reduced output. Backbones chain the stem, the scales, transitions and the
    fusion head, tracking the stride of every node. Analysis runs along the
    height axis, so edges use kernel[0].

    Raises:
        ConfigurationError: If the resulting graph is malformed or a D3 plan is infeasible.
    """
    if isinstance(config, D2Config):
        graph = LayerGraph(input_id="x0", output_id=f"layer{config.L}")
        graph.add_node(GraphNodeModel(id="x0", channel_end=config.in_channels))
        add_d2(graph, config, prefix="", x0="x0", block=0, stride=1)
    elif isinstance(config, D3Config):
        graph = LayerGraph(input_id=INPUT, output_id="")
        graph.add_node(GraphNodeModel(id=INPUT, channel_end=config.in_channels))
        graph.output_id = add_d3(graph, config, prefix="", source=INPUT, stride=1)
    else:
        graph = _build_backbone(config)

    graph.validate_structure()
    return graph


def add_d2(graph: LayerGraph, config: D2Config, prefix: str, x0: str, block: int, stride: int) -> List[str]:
    """Add the layers of one D2 block reading from node `x0`; returns [x0, layer1 .. layerL]."""
    sources = [x0]
    kernel_size = config.kernel[0]

    for index in range(1, config.L + 1):
        node_id = get_layer_path(prefix, f"layer{index}")
        start = config.in_channels + (index - 1) * config.k
        graph.add_node(
            GraphNodeModel(
                id=node_id,
                layer=index,
                block=block,
                channel_start=start,
                channel_end=start + config.k,
                stride=stride,
            )
        )

        for source, dilation in zip(sources, config.mode.dilations(index), strict=True):
            graph.add_edge(
                GraphEdgeModel(
                    source=source,
                    target=node_id,
                    kind=EdgeKind.CONV,
                    kernel=kernel_size,
                    dilation=dilation,
                )
            )

        sources.append(node_id)

    return sources


def add_d3(graph: LayerGraph, config: D3Config, prefix: str, source: str, stride: int) -> str:
    """Add a D3 block reading from node `source`; returns the id of its output node."""
    sources = [source]

    for plan in config.plan():
        block_prefix = get_layer_path(prefix, f"block{plan.index}")
        x0 = get_layer_path(block_prefix, "x0")
        graph.add_node(GraphNodeModel(id=x0, block=plan.index, channel_end=plan.d2_in_channels, stride=stride))

        for block_source in sources:
            graph.add_edge(GraphEdgeModel(source=block_source, target=x0, kind=EdgeKind.POINTWISE))

        layers = add_d2(graph, config.block_config(plan), block_prefix, x0, plan.index, stride)

        if config.reduction.kind is ReductionKind.LAST_N:
            layers = layers[-(config.reduction.n or 0) :]

        out = get_layer_path(block_prefix, "out")
        graph.add_node(GraphNodeModel(id=out, block=plan.index, channel_end=plan.out_channels, stride=stride))

        for layer in layers:
            graph.add_edge(GraphEdgeModel(source=layer, target=out, kind=EdgeKind.POINTWISE))

        sources.append(out)

    return sources[-1]


def _build_backbone(config: BackboneConfig) -> LayerGraph:
    graph = LayerGraph(input_id=INPUT, output_id="fusion")
    graph.add_node(GraphNodeModel(id=INPUT, channel_end=config.stem.in_channels))
    current = INPUT
    stride = 1

    for index, (channels, conv_stride) in enumerate(zip(config.stem.channels, config.stem.strides, strict=True), 1):
        conv = f"stem.conv{index}"
        graph.add_node(GraphNodeModel(id=conv, layer=index, channel_end=channels, stride=stride))
        graph.add_edge(GraphEdgeModel(source=current, target=conv, kind=EdgeKind.CONV, kernel=config.stem.kernel))
        current = conv

        if conv_stride > 1:
            stride *= conv_stride
            subsample = f"{conv}.subsample"
            graph.add_node(GraphNodeModel(id=subsample, layer=index, channel_end=channels, stride=stride))
            graph.add_edge(GraphEdgeModel(source=current, target=subsample, kind=EdgeKind.SUBSAMPLE))
            current = subsample

    top_stride = stride
    extracted: List[str] = []

    for index, d3_config in enumerate(config.d3_configs(), start=1):
        scale = f"scale{index}"
        output = add_d3(graph, d3_config, scale, current, stride)
        width = d3_config.out_channels

        extract = f"{scale}.extract"
        graph.add_node(GraphNodeModel(id=extract, channel_end=config.extract[index - 1], stride=stride))
        graph.add_edge(GraphEdgeModel(source=output, target=extract, kind=EdgeKind.POINTWISE))

        if stride != top_stride:
            upsample = f"{scale}.upsample"
            graph.add_node(GraphNodeModel(id=upsample, channel_end=config.extract[index - 1], stride=top_stride))
            graph.add_edge(GraphEdgeModel(source=extract, target=upsample, kind=EdgeKind.UPSAMPLE))
            extract = upsample

        extracted.append(extract)

        if index < SCALE_COUNT:
            transition = f"{scale}.transition"
            graph.add_node(GraphNodeModel(id=transition, channel_end=width // TRANSITION_COMPRESSION, stride=stride))
            graph.add_edge(GraphEdgeModel(source=output, target=transition, kind=EdgeKind.POINTWISE))

            stride *= 2
            pool = f"{scale}.pool"
            graph.add_node(GraphNodeModel(id=pool, channel_end=width // TRANSITION_COMPRESSION, stride=stride))
            graph.add_edge(GraphEdgeModel(source=transition, target=pool, kind=EdgeKind.POOL))
            current = pool

    graph.add_node(GraphNodeModel(id="fusion", channel_end=config.fusion_channels, stride=top_stride))

    for extract in extracted:
        graph.add_edge(GraphEdgeModel(source=extract, target="fusion", kind=EdgeKind.POINTWISE))

    return graph
