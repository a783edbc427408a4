"""Independent recognizers and the baseline reconstructor."""

from .beineke import beineke_graphs, find_beineke_subgraph, is_line_graph_beineke
from .brute import brute_force_root
from .krausz import KrauszPartition, krausz_partition, roussopoulos_root
from .spectral import jacobi_eigenvalues, smallest_eigenvalue, spectral_reject

__all__ = [
    "beineke_graphs",
    "find_beineke_subgraph",
    "is_line_graph_beineke",
    "brute_force_root",
    "KrauszPartition",
    "krausz_partition",
    "roussopoulos_root",
    "jacobi_eigenvalues",
    "smallest_eigenvalue",
    "spectral_reject",
]
