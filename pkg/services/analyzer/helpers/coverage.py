from typing import Dict, List, Optional

import numpy as np

from errors import ArgumentError
from models.coverage_set import CoverageSet
from models.layer_graph import LayerGraph


def coverage(graph: LayerGraph, node: str, via: Optional[str] = None) -> CoverageSet:
    """
    Input offsets that influence `node` at position 0.

    Coverage is propagated in topological order by set convolution: a node's
    set is the union over incoming edges of (source set ⊕ edge taps). With
    `via`, only the direct edges from that source into `node` contribute.

    Args:
        graph: Feature graph.
        node: Target node id.
        via: Optional direct source of `node`.

    Returns:
        Sorted coverage set.

    Raises:
        UnknownNameError: If `node` or `via` does not exist.
        ArgumentError: If `via` is not a direct source of `node`.

    Example:
        >>> coverage(build_graph(D2Config(L=3, k=1, mode=DilationMode.STANDARD)), "layer3", via="x0").offsets
        (-4, 0, 4)
    """
    graph.node(node)
    sets = coverage_map(graph)

    if via is None:
        return CoverageSet.of(sets[node].tolist())

    source = graph.node(via)
    edges = [edge for edge in graph.incoming(node) if edge.source == via]

    if not edges:
        raise ArgumentError(f"{via} is not a direct source of {node}")

    parts = [_dilate(sets[via], edge.taps(source.stride)) for edge in edges]
    return CoverageSet.of(np.unique(np.concatenate(parts)).tolist())


def coverage_map(graph: LayerGraph) -> Dict[str, np.ndarray]:
    """Coverage of every node as sorted unique int64 arrays."""
    sets: Dict[str, np.ndarray] = {}

    for node in graph.nodes:
        if node.id == graph.input_id:
            sets[node.id] = np.zeros(1, dtype=np.int64)
            continue

        parts = [
            _dilate(sets[edge.source], edge.taps(graph.node(edge.source).stride))
            for edge in graph.incoming(node.id)
            if edge.source in sets
        ]
        sets[node.id] = np.unique(np.concatenate(parts)) if parts else np.zeros(0, dtype=np.int64)

    return sets


def _dilate(offsets: np.ndarray, taps: List[int]) -> np.ndarray:
    return np.unique((offsets[:, None] + np.asarray(taps, dtype=np.int64)[None, :]).ravel())
