"""Tree-cut decompositions and FPT solvers for capacitated covering, domination and imbalance."""

from treecut.graph import Graph, MultiGraph, CapacitatedGraph, consolidate, suppress, three_center
from treecut.decomposition import TreeCutDecomposition, NodeMetrics, validate, metrics, torso

__all__ = [
    "Graph",
    "MultiGraph",
    "CapacitatedGraph",
    "consolidate",
    "suppress",
    "three_center",
    "TreeCutDecomposition",
    "NodeMetrics",
    "validate",
    "metrics",
    "torso",
]

__version__ = "0.1.0"
