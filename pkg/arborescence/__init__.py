from .helly import canonical_m_path, helly_min_point, staircase
from .steiner import SteinerBackend, SteinerCaps, SteinerTree, steiner_tree, euler_order
from .shortcut import (
    ALL_ORTHANT, PER_ORTHANT, Arborescence, RsaInstance,
    build_arborescence, rsa_per_orthant, rsa_shortcut, solve_rsa,
)
from .exact import ExactRsaCaps, exact_rsa, rsa_pairs

__all__ = [
    "canonical_m_path", "helly_min_point", "staircase",
    "SteinerBackend", "SteinerCaps", "SteinerTree", "steiner_tree", "euler_order",
    "ALL_ORTHANT", "PER_ORTHANT", "Arborescence", "RsaInstance",
    "build_arborescence", "rsa_per_orthant", "rsa_shortcut", "solve_rsa",
    "ExactRsaCaps", "exact_rsa", "rsa_pairs",
]
