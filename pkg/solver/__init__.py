from .config import ALGORITHMS, IMPROVED_2D, RECURSIVE_D, SolverConfig
from .split import SplitResult, median_split
from .separated import solve_d_separated
from .improved import (
    AxisComponent, ComponentTrace, XSeparatedTrace,
    build_x_separated, connected_components_on_axis, solve_x_separated_improved, split_low_high,
)
from .pipeline import D_SEPARATED, X_SEPARATED, LeafTask, decompose, self_check, solve_gmmn, solve_leaf

__all__ = [
    "ALGORITHMS", "IMPROVED_2D", "RECURSIVE_D", "SolverConfig",
    "SplitResult", "median_split",
    "solve_d_separated",
    "AxisComponent", "ComponentTrace", "XSeparatedTrace",
    "build_x_separated", "connected_components_on_axis", "solve_x_separated_improved", "split_low_high",
    "D_SEPARATED", "X_SEPARATED", "LeafTask", "decompose", "self_check", "solve_gmmn", "solve_leaf",
]
