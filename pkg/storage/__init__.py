from .instance_file import INSTANCE_HEADER, dump_instance, parse_instance, read_instance, write_instance
from .network_file import (
    NETWORK_HEADER, NetworkFile,
    dump_network, parse_network, parse_network_file, read_network, read_network_file, write_network,
)

__all__ = [
    "INSTANCE_HEADER", "dump_instance", "parse_instance", "read_instance", "write_instance",
    "NETWORK_HEADER", "NetworkFile",
    "dump_network", "parse_network", "parse_network_file", "read_network", "read_network_file", "write_network",
]
