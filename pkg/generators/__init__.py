from .base import BaseGenerator, GeneratedInstance
from .tight_generator import DEFAULT_EPSILON, TightGenerator, gen_tight
from .random_generator import RandomGenerator, gen_random
from .mmn_generator import MmnGenerator, mmn_from_points, random_points

__all__ = [
    "BaseGenerator", "GeneratedInstance",
    "DEFAULT_EPSILON", "TightGenerator", "gen_tight",
    "RandomGenerator", "gen_random",
    "MmnGenerator", "mmn_from_points", "random_points",
]
