from .rational import format_rational, parse_rational, approx_decimal
from .metrics import manhattan_distance, max_pair_distance
from .network import canonicalize, network_length, union_networks
from .transform import transform
from .hanan import HananGrid

__all__ = [
    "format_rational", "parse_rational", "approx_decimal",
    "manhattan_distance", "max_pair_distance",
    "canonicalize", "network_length", "union_networks",
    "transform", "HananGrid",
]
