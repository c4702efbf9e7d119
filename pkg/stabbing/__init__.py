from .piercing import (
    Interval, IntervalSet, Piercing,
    minimal_piercing, pierces, prune_piercing, witness_intervals,
)
from .sweep import (
    HalfplaneSweep, Stabbing, SweepEvent,
    reflect_x, stab_both, sweep_halfplane, sweep_stab_halfplane, unstabbed,
)
from .exact import exact_min_stabbing

__all__ = [
    "Interval", "IntervalSet", "Piercing",
    "minimal_piercing", "pierces", "prune_piercing", "witness_intervals",
    "HalfplaneSweep", "Stabbing", "SweepEvent",
    "reflect_x", "stab_both", "sweep_halfplane", "sweep_stab_halfplane", "unstabbed",
    "exact_min_stabbing",
]
