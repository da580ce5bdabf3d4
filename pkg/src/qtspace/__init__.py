"""Finite topologies, entanglement-augmented spaces and tensor-network contraction."""

from .augmentation import AugmentedSpace, EntanglementLink, augment, collapse_link, swap_links
from .finite_topology import (
    FiniteSpace,
    closure,
    connected_components,
    discrete,
    enumerate_opens,
    from_subbasis,
    indiscrete,
    interior,
    is_connected,
    is_open,
    non_hausdorff_pairs,
)
from .graph_spaces import Edge, Graph, face_model, graph_topology, is_continuous
from .heyting import HeytingAlgebra, interval_model

__version__ = "0.1.0"

__all__ = [
    "AugmentedSpace",
    "Edge",
    "EntanglementLink",
    "FiniteSpace",
    "Graph",
    "HeytingAlgebra",
    "augment",
    "closure",
    "collapse_link",
    "connected_components",
    "discrete",
    "enumerate_opens",
    "face_model",
    "from_subbasis",
    "graph_topology",
    "indiscrete",
    "interior",
    "interval_model",
    "is_connected",
    "is_continuous",
    "is_open",
    "non_hausdorff_pairs",
    "swap_links",
]
