"""Chinese Postman walks and contigs on bi-directed de Bruijn graphs."""

from .bigraph import (BiEdge, BiGraph, BiWalk, DanglingEdgeError, DisconnectedGraphError,
                      ImbalanceSets, Orientation, Spin, components, degrees, imbalance_sets,
                      is_connected, spin_at, validate_walk)
from .cpp import (BalancingBipartite, CppSolution, MultiBiGraph, SolutionKind,
                  build_balancing_bipartite, euler_tour, extract_contigs, is_eulerian,
                  overlay_matching, solve_contigs, solve_cpp_exact, solve_cpp_greedy)
from .debruijn import KMolecule, build_graph, canonical, reverse_complement, spell_walk
from .matching import Matching, greedy_match, hungarian_min_perfect, max_match_min_cost
from .shortest import (DistLabels, Sign, bfs_unit_weights, shortest_bidirected,
                       terminal_shortest)

__version__ = "0.1.0"

__all__ = [
    "BiEdge",
    "BiGraph",
    "BiWalk",
    "DanglingEdgeError",
    "DisconnectedGraphError",
    "ImbalanceSets",
    "Orientation",
    "Spin",
    "components",
    "degrees",
    "imbalance_sets",
    "is_connected",
    "spin_at",
    "validate_walk",
    "BalancingBipartite",
    "CppSolution",
    "MultiBiGraph",
    "SolutionKind",
    "build_balancing_bipartite",
    "euler_tour",
    "extract_contigs",
    "is_eulerian",
    "overlay_matching",
    "solve_contigs",
    "solve_cpp_exact",
    "solve_cpp_greedy",
    "KMolecule",
    "build_graph",
    "canonical",
    "reverse_complement",
    "spell_walk",
    "Matching",
    "greedy_match",
    "hungarian_min_perfect",
    "max_match_min_cost",
    "DistLabels",
    "Sign",
    "bfs_unit_weights",
    "shortest_bidirected",
    "terminal_shortest",
]
