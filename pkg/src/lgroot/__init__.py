"""Root graph reconstruction from line graph adjacency matrices."""

from .errors import DisconnectedInput, MalformedInput, NotALineGraph
from .graph import (Graph, SplitMix64, SymBitMatrix, connected_components, generate_er,
                    incidence_matrix, lam_of, line_graph)
from .reconstruct import ReconstructionReport, format_mapping, reconstruct
from .relabel import LabeledLam, RelabelResult, matrix_relabeling

__version__ = "0.1.0"

__all__ = [
    "DisconnectedInput",
    "MalformedInput",
    "NotALineGraph",
    "Graph",
    "SplitMix64",
    "SymBitMatrix",
    "connected_components",
    "generate_er",
    "incidence_matrix",
    "lam_of",
    "line_graph",
    "ReconstructionReport",
    "format_mapping",
    "reconstruct",
    "LabeledLam",
    "RelabelResult",
    "matrix_relabeling",
]
