"""Resonance graphs of plane elementary bipartite graphs."""

from .corpus import builtin, load_corpus
from .decomposition import find_rfd, is_forcing_face, reducible_faces
from .lattice import build_resonance_graph, structure
from .matchings import enumerate_perfect_matchings, extremes, phi
from .median import is_median_graph, theta_classes, theta_induced_graph
from .planar import PlaneGraph, load_graph, parse_plane_graph
from .verify import verify_graph

__version__ = "0.1.0"

__all__ = [
    "PlaneGraph",
    "build_resonance_graph",
    "builtin",
    "enumerate_perfect_matchings",
    "extremes",
    "find_rfd",
    "is_forcing_face",
    "is_median_graph",
    "load_corpus",
    "load_graph",
    "parse_plane_graph",
    "phi",
    "reducible_faces",
    "structure",
    "theta_classes",
    "theta_induced_graph",
    "verify_graph",
]
